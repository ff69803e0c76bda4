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

#ifndef WHAKIT_SMASH_HPP
#define WHAKIT_SMASH_HPP

#include <string>
#include <utility>
#include <vector>

#include "whakit/algebra.hpp"
#include "whakit/structure.hpp"

namespace whakit {

/**
 * @brief A left module-algebra datum: H acts on the algebra A.
 *
 * act[h * A.n + a] expands e_h . e_a in the basis of A.  The laws
 * h.(ab) = (h_(1).a)(h_(2).b) and h.1 = eps_t(h).1 are not assumed here;
 * check_module_algebra verifies them.
 */
struct ModuleAlgebraAction {
    QuantumGroupoid H;
    Algebra A;
    std::vector<SparseVec> act;

    Vec apply_basis(int h, int a) const {
        Vec out = A.zero();
        for (const auto& [k, c] : act[static_cast<size_t>(h) * A.n + a]) out[k] += c;
        return out;
    }

    Vec apply(const Vec& hv, const Vec& av) const {
        Vec out = A.zero();
        for (int h = 0; h < H.n; ++h) {
            if (hv[h].is_zero()) continue;
            for (int a = 0; a < A.n; ++a) {
                if (av[a].is_zero()) continue;
                Scalar f = hv[h] * av[a];
                for (const auto& [k, c] : act[static_cast<size_t>(h) * A.n + a]) out[k] += f * c;
            }
        }
        return out;
    }
};

struct ModuleAlgebraReport {
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> failures;

    std::string summary() const {
        if (pass) return "module algebra: all laws hold";
        std::string s = "module algebra violations:";
        for (const auto& [name, witness] : failures) s += "\n  " + name + ": " + witness;
        return s;
    }
};

/// Verifies the module axioms and both module-algebra laws on all basis tuples.
inline ModuleAlgebraReport check_module_algebra(const ModuleAlgebraAction& M) {
    const auto& H = M.H;
    const auto& A = M.A;
    if (static_cast<int>(M.act.size()) != H.n * A.n)
        throw input_error("check_module_algebra: action tensor shape mismatch");
    ModuleAlgebraReport rep;
    auto fail = [&](const std::string& name, const std::string& witness) {
        rep.pass = false;
        rep.failures.emplace_back(name, witness);
    };

    for (int a = 0; a < A.n; ++a)
        if (!detail::vec_eq(M.apply(H.unit, A.basis_vec(a)), A.basis_vec(a))) {
            fail("module_unit", "1.e_" + std::to_string(a));
            break;
        }

    bool ok = true;
    for (int i = 0; i < H.n && ok; ++i)
        for (int j = 0; j < H.n && ok; ++j) {
            Vec hij = H.mul(H.basis_vec(i), H.basis_vec(j));
            for (int a = 0; a < A.n && ok; ++a) {
                Vec lhs = M.apply(hij, A.basis_vec(a));
                Vec rhs = M.apply(H.basis_vec(i), M.apply_basis(j, a));
                if (!detail::vec_eq(lhs, rhs)) {
                    fail("module_associativity", "(e_" + std::to_string(i) + " e_" +
                                                     std::to_string(j) + ").e_" + std::to_string(a));
                    ok = false;
                }
            }
        }

    ok = true;
    for (int h = 0; h < H.n && ok; ++h)
        for (int a = 0; a < A.n && ok; ++a)
            for (int b = 0; b < A.n && ok; ++b) {
                Vec lhs = M.apply(H.basis_vec(h), A.mul(A.basis_vec(a), A.basis_vec(b)));
                Vec rhs = A.zero();
                for (const auto& [uv, c] : H.delta_basis(h)) {
                    auto [u, v] = unpack2(H.n, uv);
                    Vec term = A.mul(M.apply_basis(u, a), M.apply_basis(v, b));
                    for (int k = 0; k < A.n; ++k)
                        if (!term[k].is_zero()) rhs[k] += c * term[k];
                }
                if (!detail::vec_eq(lhs, rhs)) {
                    fail("multiplicativity", "e_" + std::to_string(h) + ".(e_" + std::to_string(a) +
                                                 " e_" + std::to_string(b) + ")");
                    ok = false;
                }
            }

    for (int h = 0; h < H.n; ++h) {
        Vec lhs = M.apply(H.basis_vec(h), A.unit);
        Vec rhs = M.apply(H.counital_t(H.basis_vec(h)), A.unit);
        if (!detail::vec_eq(lhs, rhs)) {
            fail("unit_law", "e_" + std::to_string(h) + ".1");
            break;
        }
    }

    // right H_t-structure used by the balanced tensor: S^{-1}(z).a = a(z.1)
    if (H.antipode_invertible()) {
        Subspace ht = Subspace::from_columns(H.counital_target_matrix());
        bool okc = true;
        for (int b = 0; b < ht.dim() && okc; ++b) {
            Vec z = ht.basis_vector(b);
            Vec z1 = M.apply(z, A.unit);
            Vec sz = H.apply_S_inv(z);
            for (int a = 0; a < A.n && okc; ++a) {
                Vec lhs = M.apply(sz, A.basis_vec(a));
                Vec rhs = A.mul(A.basis_vec(a), z1);
                if (!detail::vec_eq(lhs, rhs)) {
                    fail("target_module_consistency",
                         "z_" + std::to_string(b) + ", e_" + std::to_string(a));
                    okc = false;
                }
            }
        }
    }
    return rep;
}

/// H acting on its target subalgebra by h.z = eps_t(h z).
inline ModuleAlgebraAction trivial_action(const QuantumGroupoid& H) {
    ModuleAlgebraAction M;
    M.H = H;
    SubalgebraModel sub = subalgebra(algebra_of(H), H.counital_target_matrix(), "z");
    M.A = sub.algebra;
    int d = M.A.n;
    M.act.assign(static_cast<size_t>(H.n) * d, {});
    for (int h = 0; h < H.n; ++h)
        for (int a = 0; a < d; ++a) {
            Vec r = H.counital_t(H.mul(H.basis_vec(h), sub.embed.column(a)));
            Vec c = sub.coords(r);
            SparseVec sv;
            for (int k = 0; k < d; ++k)
                if (!c[k].is_zero()) sv.emplace_back(k, c[k]);
            M.act[static_cast<size_t>(h) * d + a] = std::move(sv);
        }
    return M;
}

/// The dual quantum groupoid acting on H by phi -> h = h_(1) phi(h_(2)).
inline ModuleAlgebraAction dual_module_algebra(const QuantumGroupoid& H) {
    ModuleAlgebraAction M;
    M.H = dual(H);
    M.A = algebra_of(H);
    int n = H.n;
    M.act.assign(static_cast<size_t>(n) * n, {});
    for (int h = 0; h < n; ++h)
        for (const auto& [uv, c] : H.delta_basis(h)) {
            auto [u, v] = unpack2(n, uv);
            M.act[static_cast<size_t>(v) * n + h].emplace_back(u, c);
        }
    return M;
}

/// H acting on the centralizer of H_s by the adjoint action h_(1) a S(h_(2)).
inline ModuleAlgebraAction adjoint_action(const QuantumGroupoid& H) {
    ModuleAlgebraAction M;
    M.H = H;
    SubalgebraModel sub =
        subalgebra(algebra_of(H), centralizer_columns(H, Side::source), "c");
    M.A = sub.algebra;
    int d = M.A.n;
    M.act.assign(static_cast<size_t>(H.n) * d, {});
    for (int h = 0; h < H.n; ++h)
        for (int a = 0; a < d; ++a) {
            Vec r = H.zero();
            for (const auto& [uv, c] : H.delta_basis(h)) {
                auto [u, v] = unpack2(H.n, uv);
                Vec term = H.mul(H.mul(H.basis_vec(u), sub.embed.column(a)),
                                 H.apply_S(H.basis_vec(v)));
                for (int k = 0; k < H.n; ++k)
                    if (!term[k].is_zero()) r[k] += c * term[k];
            }
            Vec c = sub.coords(r);
            SparseVec sv;
            for (int k = 0; k < d; ++k)
                if (!c[k].is_zero()) sv.emplace_back(k, c[k]);
            M.act[static_cast<size_t>(h) * d + a] = std::move(sv);
        }
    return M;
}

/**
 * @brief The smash product A#H on the balanced tensor A (x)_{H_t} H.
 *
 * Carrier is a quotient of A (x) H (ambient index a*H.n + h) by the
 * relations (a.z) (x) h - a (x) zh; multiplication is
 * (a#h)(b#g) = a(h_(1).b) # h_(2)g with unit 1#1.
 */
struct SmashAlgebra {
    ModuleAlgebraAction source;
    Quotient carrier;
    Algebra algebra;
    Matrix embed_a{0, 0};  // a -> a#1
    Matrix embed_h{0, 0};  // h -> 1#h

    int dim() const { return algebra.n; }

    Vec ambient_of(const Vec& a, const Vec& h) const {
        int nh = source.H.n;
        Vec amb(static_cast<size_t>(source.A.n) * nh, Scalar(0));
        for (int i = 0; i < source.A.n; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; j < nh; ++j)
                if (!h[j].is_zero()) amb[static_cast<size_t>(i) * nh + j] = a[i] * h[j];
        }
        return amb;
    }

    /// Class of a (x) h in the quotient basis.
    Vec class_of(const Vec& a, const Vec& h) const { return carrier.project(ambient_of(a, h)); }
};

inline SmashAlgebra smash_product(const ModuleAlgebraAction& M) {
    ModuleAlgebraReport pre = check_module_algebra(M);
    if (!pre.pass) throw input_error("smash_product: " + pre.summary());
    const auto& H = M.H;
    const auto& A = M.A;
    int nh = H.n, na = A.n;
    int amb = na * nh;

    SmashAlgebra sm;
    sm.source = M;

    Subspace ht = Subspace::from_columns(H.counital_target_matrix());
    std::vector<Vec> za1;
    for (int b = 0; b < ht.dim(); ++b) za1.push_back(M.apply(ht.basis_vector(b), A.unit));

    std::vector<Vec> rels;
    rels.reserve(static_cast<size_t>(na) * nh * ht.dim());
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < ht.dim(); ++b) {
            Vec az = A.mul(A.basis_vec(a), za1[b]);
            for (int h = 0; h < nh; ++h) {
                Vec rel(amb, Scalar(0));
                for (int t = 0; t < na; ++t)
                    if (!az[t].is_zero()) rel[static_cast<size_t>(t) * nh + h] += az[t];
                Vec zh = H.mul(ht.basis_vector(b), H.basis_vec(h));
                for (int t = 0; t < nh; ++t)
                    if (!zh[t].is_zero()) rel[static_cast<size_t>(a) * nh + t] -= zh[t];
                rels.push_back(std::move(rel));
            }
        }
    sm.carrier = Quotient(Subspace::from_rows(Matrix::from_rows(std::move(rels), amb)));
    int q = sm.carrier.dim();

    auto prod_ambient = [&](int a, int h, int b, int g) {
        Vec out(amb, Scalar(0));
        for (const auto& [uv, c] : H.delta_basis(h)) {
            auto [u, v] = unpack2(nh, uv);
            Vec left = A.mul(A.basis_vec(a), M.apply_basis(u, b));
            for (const auto& [t2, c2] : H.mult_basis(v, g)) {
                Scalar f = c * c2;
                for (int t1 = 0; t1 < na; ++t1)
                    if (!left[t1].is_zero()) out[static_cast<size_t>(t1) * nh + t2] += f * left[t1];
            }
        }
        return out;
    };

    sm.algebra.n = q;
    sm.algebra.mult.assign(static_cast<size_t>(q) * q, {});
    for (int k1 = 0; k1 < q; ++k1) {
        int s1 = sm.carrier.section_index(k1);
        int a1 = s1 / nh, h1 = s1 % nh;
        for (int k2 = 0; k2 < q; ++k2) {
            int s2 = sm.carrier.section_index(k2);
            Vec p = sm.carrier.project(prod_ambient(a1, h1, s2 / nh, s2 % nh));
            SparseVec sv;
            for (int t = 0; t < q; ++t)
                if (!p[t].is_zero()) sv.emplace_back(t, p[t]);
            sm.algebra.mult[static_cast<size_t>(k1) * q + k2] = std::move(sv);
        }
    }
    sm.algebra.unit = sm.class_of(A.unit, H.unit);
    for (int k = 0; k < q; ++k) {
        int s = sm.carrier.section_index(k);
        std::string la = A.label(s / nh);
        std::string lh = (s % nh) < static_cast<int>(H.labels.size()) ? H.labels[s % nh]
                                                                      : "e" + std::to_string(s % nh);
        sm.algebra.labels.push_back(la + "#" + lh);
    }
    sm.algebra.validate();

    sm.embed_a = Matrix(q, na);
    for (int a = 0; a < na; ++a) sm.embed_a.set_column(a, sm.class_of(A.basis_vec(a), H.unit));
    sm.embed_h = Matrix(q, nh);
    for (int h = 0; h < nh; ++h) sm.embed_h.set_column(h, sm.class_of(A.unit, H.basis_vec(h)));
    return sm;
}

/// The dual action of H^ on A#H: phi.(a#h) = a#(phi -> h).
inline ModuleAlgebraAction dual_action(const SmashAlgebra& sm) {
    const auto& H = sm.source.H;
    int n = H.n, q = sm.dim(), nh = H.n;
    ModuleAlgebraAction out;
    out.H = dual(H);
    out.A = sm.algebra;
    out.act.assign(static_cast<size_t>(n) * q, {});
    for (int k = 0; k < q; ++k) {
        int s = sm.carrier.section_index(k);
        int a = s / nh, h = s % nh;
        std::vector<Vec> acc(n);
        for (const auto& [uv, c] : H.delta_basis(h)) {
            auto [u, v] = unpack2(nh, uv);
            Vec amb(static_cast<size_t>(sm.source.A.n) * nh, Scalar(0));
            amb[static_cast<size_t>(a) * nh + u] = c;
            Vec p = sm.carrier.project(amb);
            if (acc[v].empty()) acc[v] = Vec(q, Scalar(0));
            for (int t = 0; t < q; ++t)
                if (!p[t].is_zero()) acc[v][t] += p[t];
        }
        for (int v = 0; v < n; ++v) {
            if (acc[v].empty()) continue;
            SparseVec sv;
            for (int t = 0; t < q; ++t)
                if (!acc[v][t].is_zero()) sv.emplace_back(t, acc[v][t]);
            out.act[static_cast<size_t>(v) * q + k] = std::move(sv);
        }
    }
    return out;
}

struct DualityReport {
    bool pass = false;
    int smash_dim = 0;
    int double_dim = 0;
    int commutant_dim = 0;
    bool end_semisimple = false;
    std::vector<std::pair<std::string, std::string>> failures;

    std::string summary() const {
        std::string s = "duality: A#H dim " + std::to_string(smash_dim) + ", (A#H)#H^ dim " +
                        std::to_string(double_dim) + ", End(A#H)_A dim " +
                        std::to_string(commutant_dim);
        s += pass ? "; isomorphism verified" : "; FAILED";
        for (const auto& [name, witness] : failures) s += "\n  " + name + ": " + witness;
        return s;
    }
};

/**
 * Verifies the duality theorem for the action: builds (A#H)#H^ and the
 * commutant End(A#H)_A, materializes alpha((x#h)#phi)(y#g) = (x#h)(y#(phi->g))
 * and the inverse beta, and checks that alpha is an algebra isomorphism.
 */
inline DualityReport verify_duality(const ModuleAlgebraAction& M) {
    DualityReport rep;
    auto fail = [&](const std::string& name, const std::string& witness) {
        rep.failures.emplace_back(name, witness);
    };

    SmashAlgebra sm = smash_product(M);
    int q1 = sm.dim();
    rep.smash_dim = q1;
    const auto& H = M.H;
    int n = H.n;

    ModuleAlgebraAction da = dual_action(sm);
    ModuleAlgebraReport darep = check_module_algebra(da);
    if (!darep.pass) {
        fail("dual_action_valid", darep.summary());
        return rep;
    }

    SmashAlgebra dsm = smash_product(da);
    int q2 = dsm.dim();
    rep.double_dim = q2;

    std::vector<Matrix> gens;
    for (int a = 0; a < M.A.n; ++a) {
        Matrix r(q1, q1);
        for (int k = 0; k < q1; ++k)
            r.set_column(k, sm.algebra.mul(sm.algebra.basis_vec(k), sm.embed_a.column(a)));
        gens.push_back(std::move(r));
    }
    MatrixSubalgebra cm = commutant(q1, gens);
    int m = cm.algebra.n;
    rep.commutant_dim = m;
    rep.end_semisimple = is_semisimple_algebra(cm.algebra);

    // alpha on the basis of (A#H)#H^
    std::vector<Matrix> op(q2, Matrix(q1, q1));
    for (int d = 0; d < q2; ++d) {
        int s = dsm.carrier.section_index(d);
        int i = s / n, p = s % n;
        for (int j = 0; j < q1; ++j) {
            int sj = sm.carrier.section_index(j);
            int y = sj / n, g = sj % n;
            Vec w(q1, Scalar(0));
            for (const auto& [uv, c] : H.delta_basis(g)) {
                auto [u, v] = unpack2(n, uv);
                if (v != p) continue;
                Vec amb(static_cast<size_t>(M.A.n) * n, Scalar(0));
                amb[static_cast<size_t>(y) * n + u] = c;
                Vec pr = sm.carrier.project(amb);
                for (int t = 0; t < q1; ++t)
                    if (!pr[t].is_zero()) w[t] += pr[t];
            }
            op[d].set_column(j, sm.algebra.mul(sm.algebra.basis_vec(i), w));
        }
    }

    Matrix alpha(m, q2);
    bool lands = true;
    for (int d = 0; d < q2 && lands; ++d) {
        auto c = cm.span.coords(MatrixSubalgebra::vec_of(op[d]));
        if (!c) {
            fail("alpha_lands_in_commutant", "basis " + std::to_string(d));
            lands = false;
        } else {
            alpha.set_column(d, *c);
        }
    }
    if (!lands) return rep;

    auto combine = [&](const SparseVec& sv) {
        Matrix acc(q1, q1);
        for (const auto& [t, c] : sv)
            for (int i = 0; i < q1; ++i)
                for (int j = 0; j < q1; ++j)
                    if (!op[t][i][j].is_zero()) acc[i][j] += c * op[t][i][j];
        return acc;
    };
    bool hom = true;
    for (int d1 = 0; d1 < q2 && hom; ++d1)
        for (int d2 = 0; d2 < q2 && hom; ++d2) {
            Matrix lhs = combine(dsm.algebra.mult_basis(d1, d2));
            Matrix rhs = op[d1] * op[d2];
            if (!(lhs == rhs)) {
                fail("alpha_homomorphism",
                     "pair (" + std::to_string(d1) + "," + std::to_string(d2) + ")");
                hom = false;
            }
        }
    {
        SparseVec usv;
        for (int t = 0; t < q2; ++t)
            if (!dsm.algebra.unit[t].is_zero()) usv.emplace_back(t, dsm.algebra.unit[t]);
        if (!(combine(usv) == Matrix::identity(q1))) fail("alpha_unit", "alpha(1#1#eps) != id");
    }

    if (q2 != m) fail("dims_match", std::to_string(q2) + " vs " + std::to_string(m));
    bool bij = (q2 == m) && try_inverse(alpha).has_value();
    if (!bij) fail("alpha_bijective", "rank defect");

    // beta: T -> sum_i T(1#f_i_(2)) (1#S^{-1}(f_i_(1))) # xi^i
    Matrix beta(q2, m);
    std::vector<Vec> sinv_embed;
    for (int u = 0; u < n; ++u)
        sinv_embed.push_back(sm.embed_h.apply(H.apply_S_inv(H.basis_vec(u))));
    for (int b = 0; b < m; ++b) {
        const Matrix& t = cm.basis[b];
        Vec amb(static_cast<size_t>(q1) * n, Scalar(0));
        for (int i = 0; i < n; ++i) {
            Vec ri(q1, Scalar(0));
            for (const auto& [uv, c] : H.delta_basis(i)) {
                auto [u, v] = unpack2(n, uv);
                Vec term = sm.algebra.mul(t.apply(sm.embed_h.column(v)), sinv_embed[u]);
                for (int k = 0; k < q1; ++k)
                    if (!term[k].is_zero()) ri[k] += c * term[k];
            }
            for (int k = 0; k < q1; ++k)
                if (!ri[k].is_zero()) amb[static_cast<size_t>(k) * n + i] += ri[k];
        }
        beta.set_column(b, dsm.carrier.project(amb));
    }
    if (!(beta * alpha == Matrix::identity(q2))) fail("beta_alpha_identity", "beta.alpha != id");
    if (!(alpha * beta == Matrix::identity(m))) fail("alpha_beta_identity", "alpha.beta != id");

    rep.pass = rep.failures.empty();
    return rep;
}

}  // namespace whakit

#endif  // WHAKIT_SMASH_HPP
