/*
 * Copyright 2026 The whakit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef WHAKIT_CONSTRUCTORS_HPP
#define WHAKIT_CONSTRUCTORS_HPP

#include <string>
#include <utility>
#include <vector>

#include "whakit/algebra.hpp"
#include "whakit/groupoid.hpp"

namespace whakit {

/**
 * @brief A separable algebra B with its symmetric separability idempotent
 * e = e^(1) (x) e^(2) (packed on B.n * B.n) and the functional omega with
 * (omega (x) id)e = (id (x) omega)e = 1.
 */
struct SeparableAlgebraData {
    Algebra B;
    SparseVec e;
    Functional omega;

    /// Throws when e or omega fail their defining identities.
    void validate() const {
        B.validate();
        const int d = B.n;
        Vec me(d, Scalar(0));
        for (const auto& [p, c] : e) {
            auto [s, t] = unpack2(d, p);
            for (const auto& [r, m] : B.mult_basis(s, t)) me[r] += c * m;
        }
        if (!detail::vec_eq(me, B.unit))
            throw math_error("separable algebra: m(e) is not the unit");
        for (int b = 0; b < d; ++b) {
            SparseVec lhs, rhs;
            for (const auto& [p, c] : e) {
                auto [s, t] = unpack2(d, p);
                for (const auto& [r, m] : B.mult_basis(b, s)) sv::add_term(lhs, pack2(d, r, t), c * m);
                for (const auto& [r, m] : B.mult_basis(t, b)) sv::add_term(rhs, pack2(d, s, r), c * m);
            }
            if (!sv::eq(lhs, rhs))
                throw math_error("separable algebra: e is not a Casimir element");
        }
        Vec lw(d, Scalar(0)), rw(d, Scalar(0));
        for (const auto& [p, c] : e) {
            auto [s, t] = unpack2(d, p);
            if (!omega[s].is_zero()) lw[t] += c * omega[s];
            if (!omega[t].is_zero()) rw[s] += c * omega[t];
        }
        if (!detail::vec_eq(lw, B.unit) || !detail::vec_eq(rw, B.unit))
            throw math_error("separable algebra: omega normalization fails");
    }
};

/**
 * Computes the canonical separability data of B: omega is the trace of the
 * left regular representation and e the Casimir element of the dual bases
 * for the induced symmetric form.  Throws when the form degenerates, which
 * over a characteristic zero field means B is not separable.
 */
inline SeparableAlgebraData separable_algebra_data(const Algebra& B) {
    B.validate();
    const int d = B.n;
    SeparableAlgebraData out;
    out.B = B;
    out.omega.assign(d, Scalar(0));
    std::vector<Matrix> lm;
    lm.reserve(d);
    for (int i = 0; i < d; ++i) {
        lm.push_back(left_mult_matrix(B, B.basis_vec(i)));
        for (int s = 0; s < d; ++s) out.omega[i] += lm[i][s][s];
    }
    Matrix gram(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Scalar tr(0);
            for (int s = 0; s < d; ++s)
                for (int t = 0; t < d; ++t)
                    if (!lm[i][s][t].is_zero() && !lm[j][t][s].is_zero())
                        tr += lm[i][s][t] * lm[j][t][s];
            gram[i][j] = tr;
        }
    auto gi = try_inverse(gram);
    if (!gi) throw math_error("separable_algebra_data: regular trace form degenerates");
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) sv::add_term(out.e, pack2(d, k, i), (*gi)[i][k]);
    sv::normalize(out.e);
    out.validate();
    return out;
}

/// The algebra k^d of functions on d points.
inline Algebra functions_algebra(int d) {
    Algebra A;
    A.n = d;
    A.mult.assign(static_cast<size_t>(d) * d, {});
    for (int i = 0; i < d; ++i) A.mult[pack2(d, i, i)] = {{i, Scalar(1)}};
    A.unit.assign(d, Scalar(1));
    for (int i = 0; i < d; ++i) A.labels.push_back("p" + std::to_string(i + 1));
    A.validate();
    return A;
}

/// Full matrix algebra of size m on the basis of matrix units.
inline Algebra matrix_algebra(int m) {
    Algebra A;
    A.n = m * m;
    A.mult.assign(static_cast<size_t>(A.n) * A.n, {});
    auto ix = [m](int i, int j) { return i * m + j; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    if (j == k) A.mult[pack2(A.n, ix(i, j), ix(k, l))] = {{ix(i, l), Scalar(1)}};
    A.unit.assign(A.n, Scalar(0));
    for (int i = 0; i < m; ++i) A.unit[ix(i, i)] = Scalar(1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            A.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    A.validate();
    return A;
}

/**
 * @brief The elementary quantum groupoid H_q on B^op (x) B.
 *
 * Delta(b (x) c) = (b (x) e^(1) q^{-1}) (x) (e^(2) (x) c), eps(b (x) c) =
 * omega(q b c), S(b (x) c) = q^{-1} c q (x) b.  Requires q invertible with
 * e^(1) q e^(2) = 1; S^2 is then implemented by q (x) q.
 */
inline QuantumGroupoid elementary_wha(const SeparableAlgebraData& sep, const Vec& q) {
    sep.validate();
    const Algebra& B = sep.B;
    const int d = B.n;
    auto qinv = algebra_inverse(B, q);
    if (!qinv) throw input_error("elementary_wha: q is not invertible");
    // coproduct multiplicativity forces the normalization on the element
    // e^(1) q^{-1} appearing inside Delta, not on q itself
    {
        Vec eqe(d, Scalar(0));
        for (const auto& [p, c] : sep.e) {
            auto [s, t] = unpack2(d, p);
            Vec term = B.mul(B.mul(B.basis_vec(s), *qinv), B.basis_vec(t));
            for (int r = 0; r < d; ++r) eqe[r] += c * term[r];
        }
        if (!detail::vec_eq(eqe, B.unit))
            throw input_error("elementary_wha: e^(1) q^{-1} e^(2) is not the unit");
    }

    const int n = d * d;
    QuantumGroupoid H;
    H.n = n;
    H.mult.assign(static_cast<size_t>(n) * n, {});
    // (b (x) c)(b' (x) c') = b'b (x) cc', the first leg carrying B^op
    for (int b1 = 0; b1 < d; ++b1)
        for (int c1 = 0; c1 < d; ++c1)
            for (int b2 = 0; b2 < d; ++b2)
                for (int c2 = 0; c2 < d; ++c2) {
                    SparseVec& out = H.mult[pack2(n, pack2(d, b1, c1), pack2(d, b2, c2))];
                    for (const auto& [r1, m1] : B.mult_basis(b2, b1))
                        for (const auto& [r2, m2] : B.mult_basis(c1, c2))
                            sv::add_term(out, pack2(d, r1, r2), m1 * m2);
                    sv::normalize(out);
                }
    H.unit.assign(n, Scalar(0));
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t)
            if (!B.unit[s].is_zero() && !B.unit[t].is_zero())
                H.unit[pack2(d, s, t)] = B.unit[s] * B.unit[t];

    H.comult.assign(n, {});
    for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) {
            SparseVec& out = H.comult[pack2(d, b, c)];
            for (const auto& [p, f] : sep.e) {
                auto [s, t] = unpack2(d, p);
                Vec sq = B.mul(B.basis_vec(s), *qinv);
                for (int r = 0; r < d; ++r)
                    if (!sq[r].is_zero())
                        sv::add_term(out, pack2(n, pack2(d, b, r), pack2(d, t, c)), f * sq[r]);
            }
            sv::normalize(out);
        }

    H.counit.assign(n, Scalar(0));
    for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) {
            Vec qbc = B.mul(B.mul(q, B.basis_vec(b)), B.basis_vec(c));
            Scalar acc(0);
            for (int r = 0; r < d; ++r)
                if (!qbc[r].is_zero() && !sep.omega[r].is_zero()) acc += sep.omega[r] * qbc[r];
            H.counit[pack2(d, b, c)] = acc;
        }

    H.antipode = Matrix(n, n);
    for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) {
            Vec qcq = B.mul(B.mul(*qinv, B.basis_vec(c)), q);
            Vec col(n, Scalar(0));
            for (int r = 0; r < d; ++r)
                if (!qcq[r].is_zero()) col[pack2(d, r, b)] += qcq[r];
            H.antipode.set_column(pack2(d, b, c), col);
        }

    for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) H.labels.push_back(B.label(b) + "(x)" + B.label(c));
    H.finalize();
    return H;
}

/**
 * @brief Action data for a quantum transformation groupoid: an ordinary
 * Hopf algebra acting on a separable algebra from the right.
 * act[h * B.n + b] expands the basis action e_b . e_h.
 */
struct HopfActionData {
    QuantumGroupoid hopf;
    SeparableAlgebraData mod;
    std::vector<SparseVec> act;

    /// b . h for arbitrary elements.
    Vec apply(const Vec& bv, const Vec& hv) const {
        Vec out(mod.B.n, Scalar(0));
        for (int h = 0; h < hopf.n; ++h) {
            if (hv[h].is_zero()) continue;
            for (int b = 0; b < mod.B.n; ++b) {
                if (bv[b].is_zero()) continue;
                Scalar f = hv[h] * bv[b];
                for (const auto& [t, c] : act[static_cast<size_t>(h) * mod.B.n + b])
                    out[t] += f * c;
            }
        }
        return out;
    }
};

namespace detail {

inline void validate_hopf_action(const HopfActionData& D) {
    const QuantumGroupoid& U = D.hopf;
    const Algebra& B = D.mod.B;
    D.mod.validate();
    if (!U.finalized()) throw input_error("transformation_wha: Hopf algebra not finalized");
    SparseVec one_one;
    for (int s = 0; s < U.n; ++s)
        for (int t = 0; t < U.n; ++t)
            sv::add_term(one_one, pack2(U.n, s, t), U.unit[s] * U.unit[t]);
    if (!sv::eq(U.delta_one(), one_one))
        throw input_error("transformation_wha: coproduct of 1 must be 1 (x) 1");
    if (static_cast<int>(D.act.size()) != U.n * B.n)
        throw input_error("transformation_wha: action table size");
    for (int b = 0; b < B.n; ++b) {
        if (!vec_eq(D.apply(B.basis_vec(b), U.unit), B.basis_vec(b)))
            throw math_error("transformation_wha: action of 1 is not the identity");
        for (int h = 0; h < U.n; ++h)
            for (int g = 0; g < U.n; ++g)
                if (!vec_eq(D.apply(D.apply(B.basis_vec(b), U.basis_vec(h)), U.basis_vec(g)),
                            D.apply(B.basis_vec(b), U.mul(U.basis_vec(h), U.basis_vec(g)))))
                    throw math_error("transformation_wha: action is not a right module");
    }
    for (int h = 0; h < U.n; ++h) {
        Vec eps_one(B.n, Scalar(0));
        for (int r = 0; r < B.n; ++r) eps_one[r] = U.counit[h] * B.unit[r];
        if (!vec_eq(D.apply(B.unit, U.basis_vec(h)), eps_one))
            throw math_error("transformation_wha: unit is not sent to eps(h) 1");
        for (int a = 0; a < B.n; ++a)
            for (int b = 0; b < B.n; ++b) {
                Vec lhs = D.apply(B.mul(B.basis_vec(a), B.basis_vec(b)), U.basis_vec(h));
                Vec rhs(B.n, Scalar(0));
                for (const auto& [uv, c] : U.delta_basis(h)) {
                    auto [u, v] = unpack2(U.n, uv);
                    Vec term = B.mul(D.apply(B.basis_vec(a), U.basis_vec(u)),
                                     D.apply(B.basis_vec(b), U.basis_vec(v)));
                    for (int r = 0; r < B.n; ++r)
                        if (!term[r].is_zero()) rhs[r] += c * term[r];
                }
                if (!vec_eq(lhs, rhs))
                    throw math_error("transformation_wha: action is not by module algebra maps");
            }
    }
    // omega((h . a) b) = omega(a (b . h)) with h . a = a . S(h)
    for (int h = 0; h < U.n; ++h)
        for (int a = 0; a < B.n; ++a) {
            Vec ha = D.apply(B.basis_vec(a), U.apply_S(U.basis_vec(h)));
            for (int b = 0; b < B.n; ++b) {
                Scalar lhs(0), rhs(0);
                Vec l = B.mul(ha, B.basis_vec(b));
                Vec r = B.mul(B.basis_vec(a), D.apply(B.basis_vec(b), U.basis_vec(h)));
                for (int t = 0; t < B.n; ++t) {
                    if (!D.mod.omega[t].is_zero() && !l[t].is_zero()) lhs += D.mod.omega[t] * l[t];
                    if (!D.mod.omega[t].is_zero() && !r[t].is_zero()) rhs += D.mod.omega[t] * r[t];
                }
                if (lhs != rhs) throw math_error("transformation_wha: omega identity fails");
            }
        }
    for (int h = 0; h < U.n; ++h) {
        SparseVec lhs, rhs;
        for (const auto& [p, c] : D.mod.e) {
            auto [s, t] = unpack2(B.n, p);
            Vec he = D.apply(B.basis_vec(t), U.apply_S(U.basis_vec(h)));
            for (int r = 0; r < B.n; ++r)
                if (!he[r].is_zero()) sv::add_term(lhs, pack2(B.n, s, r), c * he[r]);
            Vec eh = D.apply(B.basis_vec(s), U.basis_vec(h));
            for (int r = 0; r < B.n; ++r)
                if (!eh[r].is_zero()) sv::add_term(rhs, pack2(B.n, r, t), c * eh[r]);
        }
        if (!sv::eq(lhs, rhs))
            throw math_error("transformation_wha: e is not invariant under the action");
    }
}

}  // namespace detail

/**
 * @brief Quantum transformation groupoid: the double crossed product on
 * B^op (x) U (x) B with
 *   (a, h, b)(a', h', b') = (h_(1) . a') a (x) h_(2) h'_(1) (x) (b . h'_(2)) b',
 *   Delta(a, h, b) = (a, h_(1), e^(1)) (x) (h_(2) . e^(2), h_(3), b),
 *   eps(a, h, b) = omega(a (b . S(h))), S(a, h, b) = (b, S(h), a),
 * where h . x abbreviates x . S(h).
 */
inline QuantumGroupoid transformation_wha(const HopfActionData& D) {
    detail::validate_hopf_action(D);
    const QuantumGroupoid& U = D.hopf;
    const Algebra& B = D.mod.B;
    const int d = B.n, m = U.n;
    const int n = d * m * d;
    auto ix = [d, m](int a, int h, int b) { return (a * m + h) * d + b; };

    QuantumGroupoid H;
    H.n = n;
    H.mult.assign(static_cast<size_t>(n) * n, {});
    for (int a1 = 0; a1 < d; ++a1)
        for (int h1 = 0; h1 < m; ++h1)
            for (int b1 = 0; b1 < d; ++b1)
                for (int a2 = 0; a2 < d; ++a2)
                    for (int h2 = 0; h2 < m; ++h2)
                        for (int b2 = 0; b2 < d; ++b2) {
                            SparseVec& out =
                                H.mult[pack2(n, ix(a1, h1, b1), ix(a2, h2, b2))];
                            for (const auto& [uv, c1] : U.delta_basis(h1)) {
                                auto [u, v] = unpack2(m, uv);
                                Vec first = B.mul(
                                    D.apply(B.basis_vec(a2), U.apply_S(U.basis_vec(u))),
                                    B.basis_vec(a1));
                                for (const auto& [uv2, c2] : U.delta_basis(h2)) {
                                    auto [u2, v2] = unpack2(m, uv2);
                                    Vec third =
                                        B.mul(D.apply(B.basis_vec(b1), U.basis_vec(v2)),
                                              B.basis_vec(b2));
                                    Scalar f0 = c1 * c2;
                                    for (const auto& [w, cm] : U.mult_basis(v, u2)) {
                                        Scalar f = f0 * cm;
                                        for (int r1 = 0; r1 < d; ++r1) {
                                            if (first[r1].is_zero()) continue;
                                            Scalar f1 = f * first[r1];
                                            for (int r3 = 0; r3 < d; ++r3)
                                                if (!third[r3].is_zero())
                                                    sv::add_term(out, ix(r1, w, r3),
                                                                 f1 * third[r3]);
                                        }
                                    }
                                }
                            }
                            sv::normalize(out);
                        }
    H.unit.assign(n, Scalar(0));
    for (int a = 0; a < d; ++a)
        for (int h = 0; h < m; ++h)
            for (int b = 0; b < d; ++b) {
                Scalar f = B.unit[a] * U.unit[h] * B.unit[b];
                if (!f.is_zero()) H.unit[ix(a, h, b)] = f;
            }

    H.comult.assign(n, {});
    for (int a = 0; a < d; ++a)
        for (int h = 0; h < m; ++h)
            for (int b = 0; b < d; ++b) {
                SparseVec& out = H.comult[ix(a, h, b)];
                for (const auto& [uv, c1] : U.delta_basis(h)) {
                    auto [g1, rest] = unpack2(m, uv);
                    for (const auto& [uv2, c2] : U.delta_basis(rest)) {
                        auto [g2, g3] = unpack2(m, uv2);
                        for (const auto& [p, ce] : D.mod.e) {
                            auto [s, t] = unpack2(d, p);
                            Vec ge = D.apply(B.basis_vec(t), U.apply_S(U.basis_vec(g2)));
                            Scalar f0 = c1 * c2 * ce;
                            for (int r = 0; r < d; ++r)
                                if (!ge[r].is_zero())
                                    sv::add_term(out,
                                                 pack2(n, ix(a, g1, s), ix(r, g3, b)),
                                                 f0 * ge[r]);
                        }
                    }
                }
                sv::normalize(out);
            }

    H.counit.assign(n, Scalar(0));
    for (int a = 0; a < d; ++a)
        for (int h = 0; h < m; ++h)
            for (int b = 0; b < d; ++b) {
                Vec inner = B.mul(B.basis_vec(a),
                                  D.apply(B.basis_vec(b), U.apply_S(U.basis_vec(h))));
                Scalar acc(0);
                for (int r = 0; r < d; ++r)
                    if (!inner[r].is_zero() && !D.mod.omega[r].is_zero())
                        acc += D.mod.omega[r] * inner[r];
                H.counit[ix(a, h, b)] = acc;
            }

    H.antipode = Matrix(n, n);
    for (int a = 0; a < d; ++a)
        for (int h = 0; h < m; ++h)
            for (int b = 0; b < d; ++b) {
                Vec col(n, Scalar(0));
                for (int t = 0; t < m; ++t)
                    if (!U.antipode[t][h].is_zero()) col[ix(b, t, a)] += U.antipode[t][h];
                H.antipode.set_column(ix(a, h, b), col);
            }

    for (int a = 0; a < d; ++a)
        for (int h = 0; h < m; ++h)
            for (int b = 0; b < d; ++b) {
                std::string lh = h < static_cast<int>(U.labels.size()) ? U.labels[h]
                                                                       : "h" + std::to_string(h);
                H.labels.push_back(B.label(a) + "(x)" + lh + "(x)" + B.label(b));
            }
    H.finalize();
    return H;
}

/// The one dimensional Hopf algebra k.
inline QuantumGroupoid trivial_hopf() {
    QuantumGroupoid H;
    H.n = 1;
    H.mult = {{{0, Scalar(1)}}};
    H.unit = {Scalar(1)};
    H.comult = {{{0, Scalar(1)}}};
    H.counit = {Scalar(1)};
    H.antipode = Matrix::identity(1);
    H.star = Matrix::identity(1);
    H.labels = {"1"};
    H.finalize();
    return H;
}

}  // namespace whakit

#endif  // WHAKIT_CONSTRUCTORS_HPP
