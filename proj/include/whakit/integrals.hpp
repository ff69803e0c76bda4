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

#ifndef WHAKIT_INTEGRALS_HPP
#define WHAKIT_INTEGRALS_HPP

#include <optional>
#include <string>
#include <utility>

#include "whakit/structure.hpp"

namespace whakit {

/**
 * @brief Basis of the space of left integrals (h l = eps_t(h) l) or right
 * integrals (r h = r eps_s(h)).
 */
inline Subspace integral_space(const QuantumGroupoid& H, Side side) {
    const int n = H.n;
    Matrix basis = Matrix::identity(n);
    const Matrix& proj =
        side == Side::target ? H.counital_target_matrix() : H.counital_source_matrix();
    for (int j = 0; j < n && basis.cols() > 0; ++j) {
        Matrix con = side == Side::target
                         ? left_mult_matrix(H, j) - left_mult_matrix(H, proj.column(j))
                         : right_mult_matrix(H, j) - right_mult_matrix(H, proj.column(j));
        Matrix restricted = con * basis;
        if (restricted.is_zero()) continue;
        basis = basis * kernel(restricted);
    }
    return Subspace::from_columns(basis);
}

namespace detail {

inline Matrix basis_columns(const Subspace& s) {
    std::vector<Vec> cols;
    for (int i = 0; i < s.dim(); ++i) cols.push_back(s.basis_vector(i));
    return Matrix::from_columns(cols, s.ambient_dim());
}

}  // namespace detail

/// A normalized integral on the given side (eps_t(l) = 1 resp. eps_s(r) = 1).
inline std::optional<Vec> normalized_integral(const QuantumGroupoid& H, Side side) {
    Subspace space = integral_space(H, side);
    Matrix b = detail::basis_columns(space);
    const Matrix& proj =
        side == Side::target ? H.counital_target_matrix() : H.counital_source_matrix();
    auto sol = solve_affine(proj * b, H.unit);
    if (!sol.consistent) return std::nullopt;
    return b.apply(sol.particular);
}

/**
 * @brief The Haar integral: the unique two-sided integral with
 * eps_t(h) = eps_s(h) = 1, when one exists.  The returned element is checked
 * to be S-invariant and idempotent.
 */
inline std::optional<Vec> haar_integral(const QuantumGroupoid& H) {
    Subspace two_sided =
        Subspace::intersect(integral_space(H, Side::target), integral_space(H, Side::source));
    Matrix b = detail::basis_columns(two_sided);
    const int n = H.n;
    Matrix norm(2 * n, b.cols());
    Matrix et_b = H.counital_target_matrix() * b;
    Matrix es_b = H.counital_source_matrix() * b;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < b.cols(); ++j) {
            norm[i][j] = et_b[i][j];
            norm[n + i][j] = es_b[i][j];
        }
    Vec rhs(2 * n);
    for (int i = 0; i < n; ++i) {
        rhs[i] = H.unit[i];
        rhs[n + i] = H.unit[i];
    }
    auto sol = solve_affine(norm, rhs);
    if (!sol.consistent) return std::nullopt;
    Vec h = b.apply(sol.particular);
    if (!detail::vec_eq(H.apply_S(h), h) || !detail::vec_eq(H.mul(h, h), h))
        throw math_error("haar_integral: solution fails S-invariance or idempotence");
    return h;
}

/**
 * @brief Maschke: semisimplicity is equivalent to the existence of a
 * normalized left integral; the separability element l_(1) (x) S(l_(2)) is
 * materialized and checked along the way.
 */
inline bool is_semisimple(const QuantumGroupoid& H) {
    auto l = normalized_integral(H, Side::target);
    if (!l) return false;
    // separability element e = l_(1) (x) S(l_(2))
    SparseVec e;
    for (const auto& [pq, c] : H.delta(*l)) {
        auto [p, q] = unpack2(H.n, pq);
        for (int t = 0; t < H.n; ++t)
            if (!H.antipode[t][q].is_zero()) sv::add_term(e, pack2(H.n, p, t), c * H.antipode[t][q]);
    }
    sv::normalize(e);
    if (!detail::vec_eq(ten2_contract_mul(H, e), H.unit))
        throw math_error("is_semisimple: separability element fails m(e) = 1");
    SparseVec one = sv::from_dense(H.unit);
    for (int x = 0; x < H.n; ++x) {
        SparseVec xe = ten2_mul(H, kron(SparseVec{{x, Scalar(1)}}, one, H.n), e);
        SparseVec ex = ten2_mul(H, e, kron(one, SparseVec{{x, Scalar(1)}}, H.n));
        if (xe != ex) throw math_error("is_semisimple: separability element not H-central");
    }
    return true;
}

struct ChiReport {
    Functional chi;
    bool nondegenerate = false;
    Matrix gram{0, 0};  // chi(e_a e_b)
};

/**
 * @brief The canonical functional chi = sum_i (xi^i <- S^{-2}(f_i)) over dual
 * bases; a left integral in the dual whose nondegeneracy is equivalent to the
 * existence of the Haar integral.
 */
inline ChiReport canonical_chi(const QuantumGroupoid& H) {
    const int n = H.n;
    const Matrix& sinv = H.antipode_inverse();
    Matrix sinv2 = sinv * sinv;
    ChiReport rep;
    rep.chi.assign(n, Scalar(0));
    for (int a = 0; a < n; ++a) {
        Scalar acc(0);
        for (int i = 0; i < n; ++i) {
            // coefficient of e_i in S^{-2}(e_i) e_a
            for (int t = 0; t < n; ++t) {
                if (sinv2[t][i].is_zero()) continue;
                for (const auto& [k, c] : H.mult_basis(t, a))
                    if (k == i) acc += sinv2[t][i] * c;
            }
        }
        rep.chi[a] = acc;
    }
    rep.gram = Matrix(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Scalar acc(0);
            for (const auto& [k, c] : H.mult_basis(a, b))
                if (!rep.chi[k].is_zero()) acc += c * rep.chi[k];
            rep.gram[a][b] = acc;
        }
    rep.nondegenerate = try_inverse(rep.gram).has_value();
    return rep;
}

struct QuasiBasisReport {
    Functional f;
    SparseVec quasi_basis;  // packed element of H (x) H
    Vec index;
};

/**
 * @brief Quasi-basis of a nondegenerate functional f: the element
 * sum x_i (x) y_i with f(m x_i) y_i = m = x_i f(y_i m), plus its index
 * sum x_i y_i.
 */
inline QuasiBasisReport quasi_basis_and_index(const QuantumGroupoid& H, const Functional& f) {
    const int n = H.n;
    Matrix gram(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Scalar acc(0);
            for (const auto& [k, c] : H.mult_basis(a, b))
                if (!f[k].is_zero()) acc += c * f[k];
            gram[a][b] = acc;
        }
    auto w = try_inverse(gram);
    if (!w) throw input_error("quasi_basis_and_index: functional is degenerate");
    QuasiBasisReport rep;
    rep.f = f;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(*w)[i][j].is_zero()) rep.quasi_basis.emplace_back(pack2(n, i, j), (*w)[i][j]);
    sv::normalize(rep.quasi_basis);
    rep.index = ten2_contract_mul(H, rep.quasi_basis);
    return rep;
}

struct S2Report {
    Subspace space;                  // all g with g x = S^2(x) g
    std::vector<Vec> invertible;     // invertible members found among candidates
    std::optional<Vec> group_like;   // invertible group-like solution with S(g)=g^{-1}
};

namespace detail {

/// If a = c*b entrywise for one scalar c (b nonzero), return c.
inline std::optional<Scalar> scalar_ratio(const SparseVec& a, const SparseVec& b) {
    if (b.empty()) return std::nullopt;
    if (a.empty()) return Scalar(0);
    if (a.size() != b.size()) return std::nullopt;
    Scalar c = a[0].second * b[0].second.inverse();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].first != b[i].first) return std::nullopt;
        if (a[i].second != c * b[i].second) return std::nullopt;
    }
    return c;
}

inline std::optional<Vec> algebra_inverse(const QuantumGroupoid& H, const Vec& v) {
    Matrix lv = left_mult_matrix(H, v);
    auto sol = solve_affine(lv, H.unit);
    if (!sol.consistent || sol.kernel.cols() > 0) return std::nullopt;
    // in a finite dimensional algebra a right inverse is two sided; check anyway
    if (!vec_eq(H.mul(sol.particular, v), H.unit)) return std::nullopt;
    return sol.particular;
}

}  // namespace detail

/**
 * @brief Solutions of g x = S^2(x) g.  Candidates from the canonical basis
 * of the space are tested for invertibility; rescalings making them
 * group-like (Delta(g) = (g(x)g)Delta(1), S(g) = g^{-1}) are searched.
 */
inline S2Report s2_implementer(const QuantumGroupoid& H) {
    const int n = H.n;
    Matrix s2 = H.antipode * H.antipode;
    Matrix basis = Matrix::identity(n);
    for (int j = 0; j < n && basis.cols() > 0; ++j) {
        Matrix con = right_mult_matrix(H, j) - left_mult_matrix(H, s2.column(j));
        Matrix restricted = con * basis;
        if (restricted.is_zero()) continue;
        basis = basis * kernel(restricted);
    }
    S2Report rep;
    rep.space = Subspace::from_columns(basis);
    for (int i = 0; i < rep.space.dim(); ++i) {
        Vec v = rep.space.basis_vector(i);
        auto inv = detail::algebra_inverse(H, v);
        if (!inv) continue;
        rep.invertible.push_back(v);
        if (rep.group_like) continue;
        SparseVec dv = H.delta(v);
        SparseVec vv = kron(sv::from_dense(v), sv::from_dense(v), n);
        SparseVec bb = ten2_mul(H, vv, H.delta_one());
        auto c = detail::scalar_ratio(dv, bb);
        if (!c || c->is_zero()) continue;
        Vec g(n);
        for (int t = 0; t < n; ++t) g[t] = *c * v[t];
        SparseVec gg = kron(sv::from_dense(g), sv::from_dense(g), n);
        if (H.delta(g) != ten2_mul(H, gg, H.delta_one())) continue;
        if (H.delta(g) != ten2_mul(H, H.delta_one(), gg)) continue;
        auto ginv = detail::algebra_inverse(H, g);
        if (!ginv || !detail::vec_eq(H.apply_S(g), *ginv)) continue;
        rep.group_like = g;
    }
    return rep;
}

struct HaarExpectations {
    Matrix onto_target{0, 0};  // E_t(x) = (id (x) haar-measure) Delta(x)
    Matrix onto_source{0, 0};  // E_s(x) = (haar-measure (x) id) Delta(x)
};

/// Conditional expectations onto H_t and H_s from the dual Haar integral.
inline HaarExpectations haar_expectations(const QuantumGroupoid& H) {
    auto hm = haar_integral(dual(H));
    if (!hm) throw math_error("haar_expectations: the dual has no Haar integral");
    const int n = H.n;
    HaarExpectations rep;
    rep.onto_target = Matrix(n, n);
    rep.onto_source = Matrix(n, n);
    for (int i = 0; i < n; ++i)
        for (const auto& [jk, c] : H.delta_basis(i)) {
            auto [j, k] = unpack2(n, jk);
            if (!(*hm)[k].is_zero()) rep.onto_target[j][i] += c * (*hm)[k];
            if (!(*hm)[j].is_zero()) rep.onto_source[k][i] += c * (*hm)[j];
        }
    return rep;
}

struct HopfModuleReport {
    bool pass = false;
    int coinv_dim = 0;
    std::string detail;
};

/**
 * @brief Check the fundamental theorem of Hopf modules on M = dual(H):
 * coinvariants equal the left integrals of the dual, and the canonical maps
 * alpha(n (x) h) = n.h and beta(m) = (m_(0).S(m_(1))) (x) m_(2) are mutually
 * inverse over the H_t-balanced tensor product.
 */
inline HopfModuleReport verify_hopf_module_theorem(const QuantumGroupoid& H) {
    const int n = H.n;
    HopfModuleReport rep;
    // module action on M = dual(H): phi . h = S(h) -> phi
    auto action = [&H](const Vec& phi, const Vec& h) {
        return act_on_functional_left(H, H.apply_S(h), phi);
    };
    // comodule map rho(dual e_a) = sum_{c,b} [Delta(e_c)]_(b,a) dual_e_c (x) e_b
    auto rho_basis = [&H, n](int a) {
        SparseVec out;
        for (int c = 0; c < n; ++c)
            for (const auto& [bq, d] : H.delta_basis(c)) {
                auto [b, q] = unpack2(n, bq);
                if (q == a) sv::add_term(out, pack2(n, c, b), d);
            }
        sv::normalize(out);
        return out;
    };
    // coinvariants: rho(m) = m.1_(1) (x) 1_(2)
    Matrix cond(n * n, n);
    for (int a = 0; a < n; ++a) {
        SparseVec lhs = rho_basis(a);
        for (const auto& [p, c] : lhs) cond[p][a] += c;
        for (const auto& [pq, c] : H.delta_one()) {
            auto [p, q] = unpack2(n, pq);
            Vec m = action(Vec(H.basis_vec(a)), H.basis_vec(p));
            for (int t = 0; t < n; ++t)
                if (!m[t].is_zero()) cond[pack2(n, t, q)][a] -= c * m[t];
        }
    }
    Matrix coinv = kernel(cond);
    Subspace N = Subspace::from_columns(coinv);
    rep.coinv_dim = N.dim();
    QuantumGroupoid D = dual(H);
    Subspace dual_ints = integral_space(D, Side::target);
    if (N.dim() != dual_ints.dim()) {
        rep.detail = "coinvariants differ from dual left integrals";
        return rep;
    }
    for (int i = 0; i < N.dim(); ++i)
        if (!dual_ints.contains(N.basis_vector(i))) {
            rep.detail = "coinvariants differ from dual left integrals";
            return rep;
        }
    // balanced tensor product N (x)_{H_t} H
    Subspace ht = counital_subalgebra(H, Side::target);
    const int dn = N.dim();
    std::vector<Vec> relations;
    for (int i = 0; i < dn; ++i)
        for (int t = 0; t < ht.dim(); ++t) {
            Vec z = ht.basis_vector(t);
            Vec nz = action(N.basis_vector(i), z);
            auto nz_coords = N.coords(nz);
            if (!nz_coords) {
                rep.detail = "coinvariants are not H_t-stable";
                return rep;
            }
            for (int j = 0; j < n; ++j) {
                Vec row(static_cast<size_t>(dn) * n, Scalar(0));
                for (int k = 0; k < dn; ++k)
                    if (!(*nz_coords)[k].is_zero()) row[static_cast<size_t>(k) * n + j] += (*nz_coords)[k];
                Vec zej = H.mul(z, H.basis_vec(j));
                for (int u = 0; u < n; ++u)
                    if (!zej[u].is_zero()) row[static_cast<size_t>(i) * n + u] -= zej[u];
                relations.push_back(std::move(row));
            }
        }
    Quotient q(Subspace::from_rows(Matrix::from_rows(std::move(relations),
                                                     static_cast<int>(static_cast<size_t>(dn) * n))));
    const int qdim = q.dim();
    // alpha on the quotient basis
    Matrix alpha(n, qdim);
    for (int col = 0; col < qdim; ++col) {
        Vec amb = q.lift(col);
        Vec out(n, Scalar(0));
        for (int i = 0; i < dn; ++i)
            for (int j = 0; j < n; ++j) {
                const Scalar& c = amb[static_cast<size_t>(i) * n + j];
                if (c.is_zero()) continue;
                Vec t = action(N.basis_vector(i), H.basis_vec(j));
                for (int u = 0; u < n; ++u)
                    if (!t[u].is_zero()) out[u] += c * t[u];
            }
        alpha.set_column(col, out);
    }
    // beta: m -> (m_(0) . S(m_(1))) (x) m_(2), then project to the quotient.
    // Only the slices along the retained third leg lie in N, so group first.
    Matrix beta(qdim, n);
    for (int a = 0; a < n; ++a) {
        std::vector<Vec> slice(n, Vec(n, Scalar(0)));
        for (const auto& [cb, c] : rho_basis(a)) {
            auto [m0, b] = unpack2(n, cb);
            for (const auto& [uv, d] : H.delta_basis(b)) {
                auto [u, v] = unpack2(n, uv);
                Vec cand = action(H.basis_vec(m0), H.apply_S(H.basis_vec(u)));
                Scalar f = c * d;
                for (int t = 0; t < n; ++t)
                    if (!cand[t].is_zero()) slice[v][t] += f * cand[t];
            }
        }
        Vec amb(static_cast<size_t>(dn) * n, Scalar(0));
        for (int v = 0; v < n; ++v) {
            auto coords = N.coords(slice[v]);
            if (!coords) {
                rep.detail = "beta does not land in the coinvariants";
                return rep;
            }
            for (int k = 0; k < dn; ++k)
                if (!(*coords)[k].is_zero()) amb[static_cast<size_t>(k) * n + v] += (*coords)[k];
        }
        beta.set_column(a, q.project(amb));
    }
    if (!(alpha * beta == Matrix::identity(n))) {
        rep.detail = "alpha . beta != id";
        return rep;
    }
    if (!(beta * alpha == Matrix::identity(qdim))) {
        rep.detail = "beta . alpha != id";
        return rep;
    }
    rep.pass = true;
    rep.detail = "isomorphism verified; coinvariant dimension " + std::to_string(rep.coinv_dim);
    return rep;
}

struct IntegralReport {
    std::vector<Vec> left_basis, right_basis;
    std::optional<Vec> normalized_left, normalized_right, haar;
    Functional chi;
    bool chi_nondegenerate = false;
    bool semisimple = false;
    std::vector<Vec> g_space;
    std::optional<std::pair<Vec, Functional>> dual_pair;  // (haar, chi)
};

/// One-stop integral theory summary.
inline IntegralReport integral_report(const QuantumGroupoid& H) {
    IntegralReport rep;
    Subspace l = integral_space(H, Side::target);
    Subspace r = integral_space(H, Side::source);
    for (int i = 0; i < l.dim(); ++i) rep.left_basis.push_back(l.basis_vector(i));
    for (int i = 0; i < r.dim(); ++i) rep.right_basis.push_back(r.basis_vector(i));
    rep.normalized_left = normalized_integral(H, Side::target);
    rep.normalized_right = normalized_integral(H, Side::source);
    rep.haar = haar_integral(H);
    auto chi = canonical_chi(H);
    rep.chi = chi.chi;
    rep.chi_nondegenerate = chi.nondegenerate;
    rep.semisimple = is_semisimple(H);
    auto s2 = s2_implementer(H);
    for (int i = 0; i < s2.space.dim(); ++i) rep.g_space.push_back(s2.space.basis_vector(i));
    if (rep.haar && rep.chi_nondegenerate) {
        // dual pair: chi -> h = 1 and h -> chi = counit
        Vec lhs = act_on_element_left(H, rep.chi, *rep.haar);
        Functional rhs = act_on_functional_left(H, *rep.haar, rep.chi);
        if (detail::vec_eq(lhs, H.unit) && detail::vec_eq(rhs, H.counit))
            rep.dual_pair = std::make_pair(*rep.haar, rep.chi);
    }
    return rep;
}

}  // namespace whakit

#endif
