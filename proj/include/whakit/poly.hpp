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

#ifndef WHAKIT_POLY_HPP
#define WHAKIT_POLY_HPP

#include <algorithm>
#include <vector>

#include "whakit/errors.hpp"

namespace whakit {

/**
 * @brief Dense univariate polynomial over an exact field.
 *
 * The coefficient type needs field semantics: default construction to zero,
 * construction from int, +, -, *, inverse(), is_zero().  Instantiated with
 * Rational (cyclotomic polynomial bookkeeping) and Scalar (factoring minimal
 * polynomials over Q(zeta_N)).
 */
template <class F>
struct Poly {
    std::vector<F> c;  // c[i] multiplies x^i; no trailing zeros

    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(F v) {
        Poly p;
        if (!v.is_zero()) p.c.push_back(std::move(v));
        return p;
    }
    /// x^n
    static Poly monomial(int n, F v = F(1)) {
        Poly p;
        if (!v.is_zero()) {
            p.c.assign(n + 1, F());
            p.c[n] = std::move(v);
        }
        return p;
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
    bool is_zero() const { return c.empty(); }
    const F& lead() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    F eval(const F& x) const {
        F acc{};
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), F());
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), F());
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, F());
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i].is_zero()) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const F& s) {
        Poly r = a;
        for (auto& x : r.c) x = x * s;
        r.trim();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c.size() != b.c.size()) return false;
        for (size_t i = 0; i < a.c.size(); ++i)
            if (!(a.c[i] - b.c[i]).is_zero()) return false;
        return true;
    }

    /// Euclidean division; divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw math_error("Poly: division by zero polynomial");
        q = Poly();
        r = a;
        F inv_lead = b.lead().inverse();
        int db = b.degree();
        if (r.degree() >= db) q.c.assign(r.degree() - db + 1, F());
        while (r.degree() >= db) {
            int k = r.degree() - db;
            F f = r.lead() * inv_lead;
            q.c[k] = f;
            for (int i = 0; i <= db; ++i) r.c[k + i] = r.c[k + i] - f * b.c[i];
            r.trim();
        }
        q.trim();
    }

    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * lead().inverse();
    }

    Poly derivative() const {
        Poly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * F(static_cast<int>(i));
        r.trim();
        return r;
    }

    /// Monic gcd.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = b;
            b = r;
        }
        return a.monic();
    }

    /// p(x + a)
    Poly shift(const F& a) const {
        Poly r, xa;
        xa.c = {a, F(1)};
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * xa + constant(*it);
        return r;
    }
};

}  // namespace whakit

#endif
