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

#ifndef WHAKIT_TWISTING_HPP
#define WHAKIT_TWISTING_HPP

#include <optional>
#include <string>
#include <utility>

#include "whakit/axioms.hpp"
#include "whakit/constructors.hpp"
#include "whakit/qtriang.hpp"
#include "whakit/structure.hpp"

namespace whakit {

/**
 * @brief A twist pair (Theta, Theta_bar) with Theta in Delta(1)(H (x) H),
 * Theta_bar in (H (x) H)Delta(1) and Theta Theta_bar = Delta(1).  When u, w
 * are present the counit condition is the generalized one and the twisted
 * counit becomes eps(u h w).
 */
struct Twist {
    SparseVec theta;
    SparseVec theta_bar;
    std::optional<Vec> u;
    std::optional<Vec> w;

    bool generalized() const { return u.has_value() || w.has_value(); }
};

/// The twist that changes nothing.
inline Twist trivial_twist(const QuantumGroupoid& H) {
    Twist t;
    t.theta = H.delta_one();
    t.theta_bar = H.delta_one();
    return t;
}

/**
 * Verifies the twist axioms: memberships, Theta Theta_bar = Delta(1), the
 * four cocycle identities, and the counit condition in its standard or
 * generalized form.
 */
inline AxiomReport verify_twist(const QuantumGroupoid& H, const Twist& t) {
    if (!H.finalized()) throw input_error("verify_twist: object not finalized");
    AxiomReport rep;
    const int n = H.n;
    SparseVec th = t.theta, tb = t.theta_bar;
    sv::normalize(th);
    sv::normalize(tb);
    auto add = [&](const std::string& name, bool pass, std::string witness = "") {
        rep.checks.push_back({name, pass, std::move(witness)});
    };

    add("theta_membership", sv::eq(ten2_mul(H, H.delta_one(), th), th));
    add("theta_bar_membership", sv::eq(ten2_mul(H, tb, H.delta_one()), tb));
    add("theta_theta_bar", sv::eq(ten2_mul(H, th, tb), H.delta_one()));

    if (!t.generalized()) {
        auto counit_leg = [&](const SparseVec& x, int leg) {
            Vec out = H.zero();
            for (const auto& [p, c] : x) {
                auto [a, b] = unpack2(n, p);
                out[leg == 1 ? b : a] += c * H.counit[leg == 1 ? a : b];
            }
            return out;
        };
        bool ok = detail::vec_eq(counit_leg(th, 1), H.unit) &&
                  detail::vec_eq(counit_leg(th, 2), H.unit) &&
                  detail::vec_eq(counit_leg(tb, 1), H.unit) &&
                  detail::vec_eq(counit_leg(tb, 2), H.unit);
        add("counit_condition", ok);
    } else {
        Vec u = t.u.value_or(H.unit);
        Vec w = t.w.value_or(H.unit);
        Vec a1 = H.zero(), a2 = H.zero(), a3 = H.zero(), a4 = H.zero();
        for (const auto& [p, c] : th) {
            auto [x, y] = unpack2(n, p);
            a1[y] += c * pair(H.counit, H.mul(H.basis_vec(x), w));
            a2[x] += c * pair(H.counit, H.mul(H.basis_vec(y), w));
        }
        for (const auto& [p, c] : tb) {
            auto [x, y] = unpack2(n, p);
            Scalar e3 = pair(H.counit, H.mul(u, H.basis_vec(x)));
            a3[y] += c * e3;
            Scalar e4 = pair(H.counit, H.mul(u, H.basis_vec(y)));
            a4[x] += c * e4;
        }
        bool ok = detail::vec_eq(a1, H.unit) && detail::vec_eq(a2, H.unit) &&
                  detail::vec_eq(a3, H.unit) && detail::vec_eq(a4, H.unit);
        add("generalized_counit_condition", ok);
    }

    SparseVec dth1 = delta_on_leg(H, th, 1), dth2 = delta_on_leg(H, th, 2);
    SparseVec dtb1 = delta_on_leg(H, tb, 1), dtb2 = delta_on_leg(H, tb, 2);
    add("cocycle_theta_theta", sv::eq(ten3_mul(H, dth1, ten2_embed(H, th, true)),
                                      ten3_mul(H, dth2, ten2_embed(H, th, false))));
    add("cocycle_bar_bar", sv::eq(ten3_mul(H, ten2_embed(H, tb, true), dtb1),
                                  ten3_mul(H, ten2_embed(H, tb, false), dtb2)));
    add("cocycle_bar_theta", sv::eq(ten3_mul(H, dtb1, dth2),
                                    ten3_mul(H, ten2_embed(H, th, true), ten2_embed(H, tb, false))));
    add("cocycle_theta_bar", sv::eq(ten3_mul(H, dtb2, dth1),
                                    ten3_mul(H, ten2_embed(H, th, false), ten2_embed(H, tb, true))));
    return rep;
}

/// v = m(S (x) id)Theta, the element conjugating the antipode.
inline Vec twist_v(const QuantumGroupoid& H, const Twist& t) {
    Vec v = H.zero();
    for (const auto& [p, c] : t.theta) {
        auto [a, b] = unpack2(H.n, p);
        Vec term = H.mul(H.apply_S(H.basis_vec(a)), H.basis_vec(b));
        for (int r = 0; r < H.n; ++r)
            if (!term[r].is_zero()) v[r] += c * term[r];
    }
    return v;
}

/**
 * The twisted quantum groupoid H_Theta: same algebra, Delta_Theta(h) =
 * Theta_bar Delta(h) Theta, S_Theta = v^{-1} S v, counit eps (or
 * eps(u h w) in the generalized case).
 */
inline QuantumGroupoid apply_twist(const QuantumGroupoid& H, const Twist& t) {
    if (!verify_twist(H, t).pass()) throw input_error("apply_twist: twist axioms fail");
    Vec v = twist_v(H, t);
    auto vinv = detail::algebra_inverse(H, v);
    if (!vinv) throw math_error("apply_twist: m(S (x) id)Theta is not invertible");

    QuantumGroupoid out;
    out.n = H.n;
    out.mult = H.mult;
    out.unit = H.unit;
    out.comult.assign(H.n, {});
    for (int i = 0; i < H.n; ++i)
        out.comult[i] = ten2_mul(H, ten2_mul(H, t.theta_bar, H.delta_basis(i)), t.theta);
    if (t.generalized()) {
        Vec u = t.u.value_or(H.unit);
        Vec w = t.w.value_or(H.unit);
        out.counit.assign(H.n, Scalar(0));
        for (int i = 0; i < H.n; ++i)
            out.counit[i] = pair(H.counit, H.mul(H.mul(u, H.basis_vec(i)), w));
    } else {
        out.counit = H.counit;
    }
    out.antipode = Matrix(H.n, H.n);
    for (int i = 0; i < H.n; ++i)
        out.antipode.set_column(i, H.mul(H.mul(*vinv, H.apply_S(H.basis_vec(i))), v));
    out.labels = H.labels;
    out.finalize();
    return out;
}

/**
 * Gauge transformation of a twist by an invertible x with eps_t(x) =
 * eps_s(x) = 1:  Theta^x = Delta(x^{-1}) Theta (x (x) x) and Theta_bar^x =
 * (x^{-1} (x) x^{-1}) Theta_bar Delta(x).  Conjugation by x is then an
 * isomorphism from H_Theta onto H_{Theta^x}.
 */
inline Twist gauge_twist(const QuantumGroupoid& H, const Twist& t, const Vec& x) {
    auto xinv = detail::algebra_inverse(H, x);
    if (!xinv) throw input_error("gauge_twist: x is not invertible");
    if (!detail::vec_eq(H.counital_target_matrix().apply(x), H.unit) ||
        !detail::vec_eq(H.counital_source_matrix().apply(x), H.unit))
        throw input_error("gauge_twist: x must have eps_t(x) = eps_s(x) = 1");
    Twist out;
    out.theta = ten2_mul(H, ten2_mul(H, H.delta(*xinv), t.theta), detail::outer(x, x, H.n));
    out.theta_bar =
        ten2_mul(H, ten2_mul(H, detail::outer(*xinv, *xinv, H.n), t.theta_bar), H.delta(x));
    out.u = t.u;
    out.w = t.w;
    return out;
}

/// Quasitriangular structure of the twisted object: (Theta_bar_21 R Theta,
/// Theta_bar R_bar Theta_21).
inline QTStructure twist_r_matrix(const QuantumGroupoid& H, const QTStructure& qt,
                                  const Twist& t) {
    QTStructure out;
    out.r = ten2_mul(H, ten2_mul(H, ten2_flip(t.theta_bar, H.n), qt.r), t.theta);
    out.rbar = ten2_mul(H, ten2_mul(H, t.theta_bar, qt.rbar), ten2_flip(t.theta, H.n));
    return out;
}

/// The elementary twisting pair on H_1 over B: Theta = (1 (x) e^(1) q^{-1})
/// (x) (e^(2) (x) 1), Theta_bar = Delta(1), with u = 1 and w = q (x) 1.
inline Twist elementary_twist(const QuantumGroupoid& H1, const SeparableAlgebraData& sep,
                              const Vec& q) {
    const int d = sep.B.n;
    if (H1.n != d * d) throw input_error("elementary_twist: dimension mismatch");
    auto qinv = algebra_inverse(sep.B, q);
    if (!qinv) throw input_error("elementary_twist: q is not invertible");
    Twist t;
    for (const auto& [p, c] : sep.e) {
        auto [s, r] = unpack2(d, p);
        Vec sq = sep.B.mul(sep.B.basis_vec(s), *qinv);
        for (int k = 0; k < d; ++k) {
            if (sq[k].is_zero()) continue;
            for (int b1 = 0; b1 < d; ++b1) {
                if (sep.B.unit[b1].is_zero()) continue;
                for (int c2 = 0; c2 < d; ++c2) {
                    if (sep.B.unit[c2].is_zero()) continue;
                    sv::add_term(t.theta,
                                 pack2(H1.n, pack2(d, b1, k), pack2(d, r, c2)),
                                 c * sq[k] * sep.B.unit[b1] * sep.B.unit[c2]);
                }
            }
        }
    }
    sv::normalize(t.theta);
    t.theta_bar = H1.delta_one();
    t.u = H1.unit;
    Vec w(H1.n, Scalar(0));
    for (int s = 0; s < d; ++s)
        for (int c2 = 0; c2 < d; ++c2)
            if (!q[s].is_zero() && !sep.B.unit[c2].is_zero())
                w[pack2(d, s, c2)] = q[s] * sep.B.unit[c2];
    t.w = w;
    return t;
}

}  // namespace whakit

#endif  // WHAKIT_TWISTING_HPP
