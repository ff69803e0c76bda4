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

#ifndef WHAKIT_AXIOMS_HPP
#define WHAKIT_AXIOMS_HPP

#include <sstream>
#include <string>

#include "whakit/parallel.hpp"
#include "whakit/wha.hpp"

namespace whakit {

struct AxiomCheck {
    std::string name;
    bool pass = true;
    std::string witness;  // first failing basis tuple, lexicographic
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const AxiomCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    std::string summary() const {
        std::ostringstream os;
        for (const auto& c : checks) {
            os << (c.pass ? "pass" : "FAIL") << "  " << c.name;
            if (!c.pass) os << "  [" << c.witness << "]";
            os << "\n";
        }
        return os.str();
    }
};

namespace detail {

struct AxiomContext {
    const QuantumGroupoid& H;
    int n;
    std::vector<SparseVec> scol;       // S(e_a)
    std::vector<Vec> w3;               // e_(1) S(e_(2)) per basis
    std::vector<Vec> w4;               // S(e_(1)) e_(2) per basis
    Matrix peps{0, 0};                 // peps[a][b] = eps(e_a e_b)

    explicit AxiomContext(const QuantumGroupoid& h) : H(h), n(h.n) {
        scol.resize(n);
        for (int a = 0; a < n; ++a) {
            for (int t = 0; t < n; ++t)
                if (!H.antipode[t][a].is_zero()) scol[a].emplace_back(t, H.antipode[t][a]);
        }
        peps = Matrix(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Scalar acc(0);
                for (const auto& [k, c] : H.mult_basis(a, b))
                    if (!H.counit[k].is_zero()) acc += c * H.counit[k];
                peps[a][b] = acc;
            }
        w3.assign(n, Vec());
        w4.assign(n, Vec());
        parallel_for(static_cast<size_t>(n), [&](size_t p) {
            Vec v3 = H.zero(), v4 = H.zero();
            for (const auto& [jk, c] : H.delta_basis(static_cast<int>(p))) {
                auto [a, b] = unpack2(n, jk);
                // v3 += c * e_a S(e_b)
                for (const auto& [t, sb] : scol[b]) {
                    Scalar f = c * sb;
                    for (const auto& [k, m] : H.mult_basis(a, t)) v3[k] += f * m;
                }
                // v4 += c * S(e_a) e_b
                for (const auto& [t, sa] : scol[a]) {
                    Scalar f = c * sa;
                    for (const auto& [k, m] : H.mult_basis(t, b)) v4[k] += f * m;
                }
            }
            w3[p] = std::move(v3);
            w4[p] = std::move(v4);
        });
    }

    /// x * S(e_q) for a coordinate vector x.
    Vec mul_by_scol(const Vec& x, int q) const {
        Vec out = H.zero();
        for (int i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (const auto& [t, s] : scol[q]) {
                Scalar f = x[i] * s;
                for (const auto& [k, m] : H.mult_basis(i, t)) out[k] += f * m;
            }
        }
        return out;
    }
};

}  // namespace detail

/**
 * @brief Check the full axiom system on basis elements, plus the derived
 * identities that any correct structure must satisfy.  Multilinearity makes
 * the basis checks exhaustive.
 */
inline AxiomReport verify_axioms(const QuantumGroupoid& H) {
    if (!H.finalized()) throw input_error("verify_axioms: call finalize() first");
    using detail::show_sparse;
    using detail::show_vec;
    AxiomReport rep;
    detail::AxiomContext cx(H);
    const int n = H.n;

    auto add = [&rep](const std::string& name) -> AxiomCheck& {
        rep.checks.push_back({name, true, ""});
        return rep.checks.back();
    };

    {  // associativity
        AxiomCheck& c = add("associativity");
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j)
                for (int k = 0; k < n && c.pass; ++k) {
                    SparseVec lhs, rhs;
                    for (const auto& [t, f] : H.mult_basis(i, j))
                        for (const auto& [u, g] : H.mult_basis(t, k)) sv::add_term(lhs, u, f * g);
                    for (const auto& [t, f] : H.mult_basis(j, k))
                        for (const auto& [u, g] : H.mult_basis(i, t)) sv::add_term(rhs, u, f * g);
                    sv::normalize(lhs);
                    sv::normalize(rhs);
                    if (lhs != rhs) {
                        c.pass = false;
                        c.witness = "i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                                    ",k=" + std::to_string(k) + ": lhs=" + show_sparse(lhs, n, 1) +
                                    "; rhs=" + show_sparse(rhs, n, 1);
                    }
                }
    }
    {  // unit law
        AxiomCheck& c = add("unit");
        for (int i = 0; i < n && c.pass; ++i) {
            Vec e = H.basis_vec(i);
            Vec l = H.mul(H.unit, e), r = H.mul(e, H.unit);
            if (!detail::vec_eq(l, e) || !detail::vec_eq(r, e)) {
                c.pass = false;
                c.witness = "i=" + std::to_string(i) + ": 1*e=" + show_vec(l) +
                            "; e*1=" + show_vec(r);
            }
        }
    }
    {  // coassociativity
        AxiomCheck& c = add("coassociativity");
        for (int i = 0; i < n && c.pass; ++i) {
            SparseVec lhs = delta_on_leg(H, H.delta_basis(i), 1);
            SparseVec rhs = delta_on_leg(H, H.delta_basis(i), 2);
            if (lhs != rhs) {
                c.pass = false;
                c.witness = "i=" + std::to_string(i) + ": lhs=" + show_sparse(lhs, n, 3) +
                            "; rhs=" + show_sparse(rhs, n, 3);
            }
        }
    }
    {  // counit law
        AxiomCheck& c = add("counit");
        for (int i = 0; i < n && c.pass; ++i) {
            Vec l = H.zero(), r = H.zero();
            for (const auto& [jk, f] : H.delta_basis(i)) {
                auto [j, k] = unpack2(n, jk);
                l[k] += f * H.counit[j];
                r[j] += f * H.counit[k];
            }
            Vec e = H.basis_vec(i);
            if (!detail::vec_eq(l, e) || !detail::vec_eq(r, e)) {
                c.pass = false;
                c.witness = "i=" + std::to_string(i) + ": (eps(x)id)Delta=" + show_vec(l) +
                            "; (id(x)eps)Delta=" + show_vec(r);
            }
        }
    }
    {  // Delta(hg) = Delta(h) Delta(g)
        AxiomCheck& c = add("delta_multiplicative");
        std::vector<int> firstj(n, -1);
        parallel_for(static_cast<size_t>(n), [&](size_t iu) {
            int i = static_cast<int>(iu);
            for (int j = 0; j < n; ++j) {
                SparseVec lhs;
                for (const auto& [k, f] : H.mult_basis(i, j))
                    for (const auto& [pq, d] : H.delta_basis(k)) sv::add_term(lhs, pq, f * d);
                sv::normalize(lhs);
                SparseVec rhs = ten2_mul(H, H.delta_basis(i), H.delta_basis(j));
                if (lhs != rhs) {
                    firstj[i] = j;
                    return;
                }
            }
        });
        for (int i = 0; i < n && c.pass; ++i)
            if (firstj[i] >= 0) {
                int j = firstj[i];
                SparseVec lhs;
                for (const auto& [k, f] : H.mult_basis(i, j))
                    for (const auto& [pq, d] : H.delta_basis(k)) sv::add_term(lhs, pq, f * d);
                sv::normalize(lhs);
                SparseVec rhs = ten2_mul(H, H.delta_basis(i), H.delta_basis(j));
                c.pass = false;
                c.witness = "i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                            ": Delta(e_i e_j)=" + show_sparse(lhs, n, 2) +
                            "; Delta(e_i)Delta(e_j)=" + show_sparse(rhs, n, 2);
            }
    }
    {  // Eq. (1): weak comultiplicativity of the unit
        AxiomCheck& c = add("weak_comultiplicativity");
        SparseVec lhs = delta_on_leg(H, H.delta_one(), 1);
        SparseVec mid, rhs;
        for (const auto& [ab, f] : H.delta_one()) {
            auto [a, b] = unpack2(n, ab);
            for (const auto& [cd, g] : H.delta_one()) {
                auto [cc, d] = unpack2(n, cd);
                Scalar fg = f * g;
                for (const auto& [t, mcoef] : H.mult_basis(b, cc))
                    sv::add_term(mid, pack3(n, a, t, d), fg * mcoef);
                for (const auto& [t, mcoef] : H.mult_basis(cc, b))
                    sv::add_term(rhs, pack3(n, a, t, d), fg * mcoef);
            }
        }
        sv::normalize(mid);
        sv::normalize(rhs);
        // mid: (Delta(1)(x)1)(1(x)Delta(1)); rhs: (1(x)Delta(1))(Delta(1)(x)1)
        if (lhs != mid || lhs != rhs) {
            c.pass = false;
            c.witness = "(Delta(x)id)Delta(1)=" + show_sparse(lhs, n, 3) +
                        "; (Delta(1)(x)1)(1(x)Delta(1))=" + show_sparse(mid, n, 3) +
                        "; (1(x)Delta(1))(Delta(1)(x)1)=" + show_sparse(rhs, n, 3);
        }
    }
    {  // Eq. (2): weak multiplicativity of the counit
        AxiomCheck& c = add("weak_counit");
        std::vector<long long> firstfail(n, -1);
        parallel_for(static_cast<size_t>(n), [&](size_t fu) {
            int f = static_cast<int>(fu);
            Vec lhs(n), r1(n), r2(n);
            for (int g = 0; g < n; ++g) {
                for (auto& x : lhs) x = Scalar(0);
                for (auto& x : r1) x = Scalar(0);
                for (auto& x : r2) x = Scalar(0);
                for (const auto& [k, cf] : H.mult_basis(f, g)) {
                    for (int h = 0; h < n; ++h)
                        if (!cx.peps[k][h].is_zero()) lhs[h] += cf * cx.peps[k][h];
                }
                for (const auto& [pq, d] : H.delta_basis(g)) {
                    auto [p, q] = unpack2(n, pq);
                    if (!cx.peps[f][p].is_zero()) {
                        Scalar w = d * cx.peps[f][p];
                        for (int h = 0; h < n; ++h)
                            if (!cx.peps[q][h].is_zero()) r1[h] += w * cx.peps[q][h];
                    }
                    if (!cx.peps[f][q].is_zero()) {
                        Scalar w = d * cx.peps[f][q];
                        for (int h = 0; h < n; ++h)
                            if (!cx.peps[p][h].is_zero()) r2[h] += w * cx.peps[p][h];
                    }
                }
                for (int h = 0; h < n; ++h)
                    if (lhs[h] != r1[h] || lhs[h] != r2[h]) {
                        firstfail[f] = pack2(n, g, h);
                        return;
                    }
            }
        });
        for (int f = 0; f < n && c.pass; ++f)
            if (firstfail[f] >= 0) {
                auto [g, h] = unpack2(n, firstfail[f]);
                c.pass = false;
                c.witness = "f=" + std::to_string(f) + ",g=" + std::to_string(g) +
                            ",h=" + std::to_string(h);
            }
    }
    {  // Eq. (3): h_(1) S(h_(2)) = eps_t(h)
        AxiomCheck& c = add("antipode_target");
        for (int h = 0; h < n && c.pass; ++h) {
            Vec rhs = cx.H.counital_target_matrix().column(h);
            if (!detail::vec_eq(cx.w3[h], rhs)) {
                c.pass = false;
                c.witness = "h=" + std::to_string(h) + ": m(id(x)S)Delta=" + show_vec(cx.w3[h]) +
                            "; eps_t=" + show_vec(rhs);
            }
        }
    }
    {  // Eq. (4): S(h_(1)) h_(2) = eps_s(h)
        AxiomCheck& c = add("antipode_source");
        for (int h = 0; h < n && c.pass; ++h) {
            Vec rhs = cx.H.counital_source_matrix().column(h);
            if (!detail::vec_eq(cx.w4[h], rhs)) {
                c.pass = false;
                c.witness = "h=" + std::to_string(h) + ": m(S(x)id)Delta=" + show_vec(cx.w4[h]) +
                            "; eps_s=" + show_vec(rhs);
            }
        }
    }
    {  // Eq. (5): S(h_(1)) h_(2) S(h_(3)) = S(h)
        AxiomCheck& c = add("antipode_middle");
        for (int h = 0; h < n && c.pass; ++h) {
            Vec acc = H.zero();
            for (const auto& [pq, d] : H.delta_basis(h)) {
                auto [p, q] = unpack2(n, pq);
                Vec term = cx.mul_by_scol(cx.w4[p], q);
                for (int t = 0; t < n; ++t)
                    if (!term[t].is_zero()) acc[t] += d * term[t];
            }
            Vec sh = H.zero();
            for (const auto& [t, s] : cx.scol[h]) sh[t] = s;
            if (!detail::vec_eq(acc, sh)) {
                c.pass = false;
                c.witness = "h=" + std::to_string(h) + ": lhs=" + show_vec(acc) +
                            "; S(h)=" + show_vec(sh);
            }
        }
    }
    {
        AxiomCheck& c = add("antipode_invertible");
        if (!H.antipode_invertible()) {
            c.pass = false;
            c.witness = "antipode matrix is singular";
        }
    }
    if (H.star) {
        const Matrix& st = *H.star;
        auto star_vec = [&](const Vec& x) { return H.apply_star(x); };
        {
            AxiomCheck& c = add("star_involution");
            for (int i = 0; i < n && c.pass; ++i) {
                Vec v = star_vec(star_vec(H.basis_vec(i)));
                if (!detail::vec_eq(v, H.basis_vec(i))) {
                    c.pass = false;
                    c.witness = "i=" + std::to_string(i) + ": **e=" + show_vec(v);
                }
            }
        }
        {
            AxiomCheck& c = add("star_antimultiplicative");
            for (int i = 0; i < n && c.pass; ++i)
                for (int j = 0; j < n && c.pass; ++j) {
                    Vec lhs = star_vec(sv::to_dense(H.mult_basis(i, j), n));
                    Vec rhs = H.mul(star_vec(H.basis_vec(j)), star_vec(H.basis_vec(i)));
                    if (!detail::vec_eq(lhs, rhs)) {
                        c.pass = false;
                        c.witness = "i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                                    ": (e_i e_j)*=" + show_vec(lhs) + "; e_j* e_i*=" + show_vec(rhs);
                    }
                }
        }
        {
            AxiomCheck& c = add("star_comultiplicative");
            for (int i = 0; i < n && c.pass; ++i) {
                SparseVec lhs = H.delta(star_vec(H.basis_vec(i)));
                // (*(x)*)Delta(e_i)
                SparseVec rhs;
                for (const auto& [jk, d] : H.delta_basis(i)) {
                    auto [j, k] = unpack2(n, jk);
                    Scalar dc = d.conj();
                    for (int a = 0; a < n; ++a) {
                        if (st[a][j].is_zero()) continue;
                        for (int b = 0; b < n; ++b) {
                            if (st[b][k].is_zero()) continue;
                            sv::add_term(rhs, pack2(n, a, b), dc * st[a][j] * st[b][k]);
                        }
                    }
                }
                sv::normalize(rhs);
                if (lhs != rhs) {
                    c.pass = false;
                    c.witness = "i=" + std::to_string(i) + ": Delta(e*)=" + show_sparse(lhs, n, 2) +
                                "; (*(x)*)Delta(e)=" + show_sparse(rhs, n, 2);
                }
            }
        }
        {
            AxiomCheck& c = add("derived_star_unit");
            Vec u = star_vec(H.unit);
            if (!detail::vec_eq(u, H.unit)) {
                c.pass = false;
                c.witness = "1*=" + show_vec(u);
            }
        }
        {
            AxiomCheck& c = add("derived_star_counit");
            for (int i = 0; i < n && c.pass; ++i) {
                Scalar l = H.eps(star_vec(H.basis_vec(i)));
                Scalar r = H.counit[i].conj();
                if (l != r) {
                    c.pass = false;
                    c.witness = "i=" + std::to_string(i) + ": eps(e*)=" + l.to_string() +
                                "; conj eps(e)=" + r.to_string();
                }
            }
        }
        if (H.antipode_invertible()) {
            AxiomCheck& c = add("derived_star_antipode");
            for (int i = 0; i < n && c.pass; ++i) {
                Vec v = star_vec(H.apply_S(star_vec(H.apply_S(H.basis_vec(i)))));
                if (!detail::vec_eq(v, H.basis_vec(i))) {
                    c.pass = false;
                    c.witness = "i=" + std::to_string(i) + ": (*S)^2 e=" + show_vec(v);
                }
            }
        }
    }

    // ------------------------------------------------------------------
    // derived identities
    // ------------------------------------------------------------------
    const Matrix& et = H.counital_target_matrix();
    const Matrix& es = H.counital_source_matrix();
    {
        AxiomCheck& c = add("derived_counital_idempotent");
        if (!(et * et == et)) {
            c.pass = false;
            c.witness = "eps_t not idempotent";
        } else if (!(es * es == es)) {
            c.pass = false;
            c.witness = "eps_s not idempotent";
        }
    }
    {  // (id(x)eps_t)Delta(h) = 1_(1)h (x) 1_(2);  (eps_s(x)id)Delta(h) = 1_(1) (x) h1_(2)
        AxiomCheck& c = add("derived_counital_halves");
        for (int h = 0; h < n && c.pass; ++h) {
            SparseVec lt, rt, ls, rs;
            for (const auto& [jk, d] : H.delta_basis(h)) {
                auto [j, k] = unpack2(n, jk);
                for (int t = 0; t < n; ++t) {
                    if (!et[t][k].is_zero()) sv::add_term(lt, pack2(n, j, t), d * et[t][k]);
                    if (!es[t][j].is_zero()) sv::add_term(ls, pack2(n, t, k), d * es[t][j]);
                }
            }
            for (const auto& [ab, f] : H.delta_one()) {
                auto [a, b] = unpack2(n, ab);
                for (const auto& [t, m] : H.mult_basis(a, h))
                    sv::add_term(rt, pack2(n, t, b), f * m);
                for (const auto& [t, m] : H.mult_basis(h, b))
                    sv::add_term(rs, pack2(n, a, t), f * m);
            }
            sv::normalize(lt);
            sv::normalize(rt);
            sv::normalize(ls);
            sv::normalize(rs);
            if (lt != rt || ls != rs) {
                c.pass = false;
                c.witness = "h=" + std::to_string(h);
            }
        }
    }
    {
        AxiomCheck& c = add("derived_counitals_commute");
        Subspace t_img = Subspace::from_columns(et);
        Subspace s_img = Subspace::from_columns(es);
        for (int a = 0; a < t_img.dim() && c.pass; ++a)
            for (int b = 0; b < s_img.dim() && c.pass; ++b) {
                Vec z = t_img.basis_vector(a), w = s_img.basis_vector(b);
                if (!detail::vec_eq(H.mul(z, w), H.mul(w, z))) {
                    c.pass = false;
                    c.witness = "t-basis " + std::to_string(a) + ", s-basis " + std::to_string(b);
                }
            }
    }
    {
        AxiomCheck& c = add("derived_antipode_antialgebra");
        Vec s1 = H.apply_S(H.unit);
        if (!detail::vec_eq(s1, H.unit)) {
            c.pass = false;
            c.witness = "S(1)=" + show_vec(s1);
        }
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j) {
                Vec lhs = H.zero();
                for (const auto& [k, f] : H.mult_basis(i, j))
                    for (const auto& [t, s] : cx.scol[k]) lhs[t] += f * s;
                Vec rhs = H.zero();
                for (const auto& [t1, sj] : cx.scol[j]) {
                    for (const auto& [t2, si] : cx.scol[i]) {
                        Scalar f = sj * si;
                        for (const auto& [k, m] : H.mult_basis(t1, t2)) rhs[k] += f * m;
                    }
                }
                if (!detail::vec_eq(lhs, rhs)) {
                    c.pass = false;
                    c.witness = "i=" + std::to_string(i) + ",j=" + std::to_string(j);
                }
            }
    }
    {
        AxiomCheck& c = add("derived_antipode_anticoalgebra");
        for (int i = 0; i < n && c.pass; ++i) {
            SparseVec lhs;
            for (const auto& [t, s] : cx.scol[i])
                for (const auto& [pq, d] : H.delta_basis(t)) sv::add_term(lhs, pq, s * d);
            sv::normalize(lhs);
            SparseVec rhs;
            for (const auto& [jk, d] : H.delta_basis(i)) {
                auto [j, k] = unpack2(n, jk);
                for (const auto& [a, sk] : cx.scol[k])
                    for (const auto& [b, sj] : cx.scol[j])
                        sv::add_term(rhs, pack2(n, a, b), d * sk * sj);
            }
            sv::normalize(rhs);
            if (lhs != rhs) {
                c.pass = false;
                c.witness = "i=" + std::to_string(i);
            }
            Scalar el = H.eps(sv::to_dense(cx.scol[i], n));
            if (c.pass && el != H.counit[i]) {
                c.pass = false;
                c.witness = "i=" + std::to_string(i) + ": eps(S(e))=" + el.to_string();
            }
        }
    }
    {
        AxiomCheck& c = add("derived_antipode_counitals");
        if (!(H.antipode * es == et * H.antipode)) {
            c.pass = false;
            c.witness = "S eps_s != eps_t S";
        }
    }
    {  // e_t = (S(x)id)Delta(1) is a separability element for H_t
        AxiomCheck& c = add("derived_target_separability");
        SparseVec e_t;
        for (const auto& [ab, f] : H.delta_one()) {
            auto [a, b] = unpack2(n, ab);
            for (const auto& [t, s] : cx.scol[a]) sv::add_term(e_t, pack2(n, t, b), f * s);
        }
        sv::normalize(e_t);
        Vec m_et = ten2_contract_mul(H, e_t);
        if (!detail::vec_eq(m_et, H.unit)) {
            c.pass = false;
            c.witness = "m(e_t)=" + show_vec(m_et);
        }
        if (c.pass) {
            Subspace t_img = Subspace::from_columns(et);
            for (int a = 0; a < t_img.dim() && c.pass; ++a) {
                Vec z = t_img.basis_vector(a);
                SparseVec zl = ten2_mul(H, kron(sv::from_dense(z), sv::from_dense(H.unit), n), e_t);
                SparseVec zr = ten2_mul(H, e_t, kron(sv::from_dense(H.unit), sv::from_dense(z), n));
                if (zl != zr) {
                    c.pass = false;
                    c.witness = "z index " + std::to_string(a);
                }
            }
        }
    }
    return rep;
}

}  // namespace whakit

#endif
