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

#ifndef WHAKIT_MINPOLY_HPP
#define WHAKIT_MINPOLY_HPP

#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "whakit/linalg.hpp"

namespace whakit {

using QPoly = Poly<Rational>;
using SPoly = Poly<Scalar>;

// ---------------------------------------------------------------------------
// minimal polynomials via Krylov sequences
// ---------------------------------------------------------------------------

using LinearAction = std::function<Vec(const Vec&)>;

namespace detail {

/// Minimal monic q with q(A)v = 0, tracked through an incremental
/// elimination of the Krylov sequence v, Av, A^2 v, ...
inline SPoly min_poly_on_vector(const LinearAction& apply, const Vec& v) {
    size_t n = v.size();
    struct Row {
        Vec w;       // reduced Krylov vector, pivot normalized to 1
        int pivot;
        SPoly coord; // expresses w in powers of A applied to v
    };
    std::vector<Row> rows;
    Vec u = v;
    for (size_t t = 0; t <= n; ++t) {
        Vec w = u;
        SPoly cw = SPoly::monomial(static_cast<int>(t));
        for (const Row& r : rows) {
            Scalar f = w[r.pivot];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < n; ++j)
                if (!r.w[j].is_zero()) w[j] -= f * r.w[j];
            cw = cw - r.coord * f;
        }
        int pivot = -1;
        for (size_t j = 0; j < n; ++j)
            if (!w[j].is_zero()) {
                pivot = static_cast<int>(j);
                break;
            }
        if (pivot < 0) return cw;  // first dependence: monic by construction
        Scalar inv = w[pivot].inverse();
        for (size_t j = 0; j < n; ++j)
            if (!w[j].is_zero()) w[j] *= inv;
        rows.push_back({std::move(w), pivot, cw * inv});
        u = apply(u);
    }
    throw math_error("min_poly_on_vector: no dependence found");
}

}  // namespace detail

/// Minimal polynomial of a linear endomorphism of k^n (monic).
inline SPoly min_poly(const LinearAction& apply, int n) {
    SPoly m = SPoly::constant(Scalar(1));
    for (int i = 0; i < n && m.degree() < n; ++i) {
        // residual vector m(A) e_i
        Vec w(n, Scalar(0));
        w[i] = Scalar(1);
        Vec acc(n, Scalar(0));
        for (int j = 0; j <= m.degree(); ++j) {
            if (!m.c[j].is_zero())
                for (int t = 0; t < n; ++t)
                    if (!w[t].is_zero()) acc[t] += m.c[j] * w[t];
            if (j < m.degree()) w = apply(w);
        }
        bool zero = true;
        for (const auto& x : acc)
            if (!x.is_zero()) {
                zero = false;
                break;
            }
        if (zero) continue;
        m = m * detail::min_poly_on_vector(apply, acc);
    }
    return m;
}

inline SPoly min_poly(const Matrix& a) {
    if (a.rows() != a.cols()) throw math_error("min_poly: not square");
    return min_poly([&a](const Vec& x) { return a.apply(x); }, a.rows());
}

// ---------------------------------------------------------------------------
// squarefree decomposition (characteristic zero)
// ---------------------------------------------------------------------------

template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(Poly<F> f) {
    std::vector<std::pair<Poly<F>, int>> out;
    if (f.degree() <= 0) return out;
    f = f.monic();
    Poly<F> g = Poly<F>::gcd(f, f.derivative());
    Poly<F> w = f / g;
    int i = 1;
    while (w.degree() > 0) {
        Poly<F> y = Poly<F>::gcd(w, g);
        Poly<F> z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        w = y;
        g = g / y;
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------------------
// GF(p) polynomial arithmetic and Berlekamp factorization
// ---------------------------------------------------------------------------

namespace fpoly {

using FpPoly = std::vector<long long>;  // coeffs in [0,p), no trailing zeros

inline void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

inline long long pow_mod_ll(long long b, long long e, long long p) {
    long long r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
inline long long inv_mod(long long a, long long p) { return pow_mod_ll(a, p - 2, p); }

inline FpPoly add(const FpPoly& a, const FpPoly& b, long long p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}
inline FpPoly sub(const FpPoly& a, const FpPoly& b, long long p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] % p + p) % p;
    trim(r);
    return r;
}
inline FpPoly mul(const FpPoly& a, const FpPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

inline void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r, long long p) {
    r = a;
    q.clear();
    int db = deg(b);
    if (db < 0) throw math_error("fpoly: division by zero");
    long long linv = inv_mod(b.back(), p);
    if (deg(r) >= db) q.assign(deg(r) - db + 1, 0);
    while (deg(r) >= db) {
        int k = deg(r) - db;
        long long f = r.back() * linv % p;
        q[k] = f;
        for (int i = 0; i <= db; ++i) r[k + i] = (r[k + i] - f * b[i] % p + p) % p;
        trim(r);
    }
}
inline FpPoly mod(const FpPoly& a, const FpPoly& b, long long p) {
    FpPoly q, r;
    divmod(a, b, q, r, p);
    return r;
}
inline FpPoly monic(FpPoly a, long long p) {
    if (a.empty()) return a;
    long long inv = inv_mod(a.back(), p);
    for (auto& x : a) x = x * inv % p;
    return a;
}
inline FpPoly gcd(FpPoly a, FpPoly b, long long p) {
    while (!b.empty()) {
        FpPoly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a), p);
}
inline FpPoly deriv(const FpPoly& a, long long p) {
    FpPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (static_cast<long long>(i) % p) % p);
    trim(r);
    return r;
}
inline FpPoly pow_mod(FpPoly base, long long e, const FpPoly& f, long long p) {
    FpPoly r{1};
    base = mod(base, f, p);
    while (e > 0) {
        if (e & 1) r = mod(mul(r, base, p), f, p);
        base = mod(mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

/// sg + th = 1 for coprime g, h over GF(p).
inline void bezout(const FpPoly& g, const FpPoly& h, FpPoly& s, FpPoly& t, long long p) {
    FpPoly r0 = g, r1 = h, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        FpPoly q, r;
        divmod(r0, r1, q, r, p);
        FpPoly s2 = sub(s0, mul(q, s1, p), p);
        FpPoly t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (deg(r0) != 0) throw math_error("fpoly: bezout inputs not coprime");
    long long inv = inv_mod(r0[0], p);
    s = s0;
    t = t0;
    for (auto& x : s) x = x * inv % p;
    for (auto& x : t) x = x * inv % p;
}

/// Berlekamp factorization of a monic squarefree polynomial over GF(p).
inline std::vector<FpPoly> berlekamp(const FpPoly& f, long long p) {
    int n = deg(f);
    if (n <= 1) return {f};
    // Frobenius matrix: column j holds x^{jp} mod f
    FpPoly xp = pow_mod(FpPoly{0, 1}, p, f, p);
    std::vector<FpPoly> cols(n);
    FpPoly cur{1};
    for (int j = 0; j < n; ++j) {
        cols[j] = cur;
        cur = mod(mul(cur, xp, p), f, p);
    }
    // kernel of (M - I) over GF(p)
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i <= deg(cols[j]); ++i) m[i][j] = cols[j][i];
        m[j][j] = (m[j][j] - 1 + p) % p;
    }
    std::vector<int> pivot_col;
    int rk = 0;
    for (int col = 0; col < n && rk < n; ++col) {
        int sel = -1;
        for (int i = rk; i < n; ++i)
            if (m[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[rk]);
        long long inv = inv_mod(m[rk][col], p);
        for (int j = 0; j < n; ++j) m[rk][j] = m[rk][j] * inv % p;
        for (int i = 0; i < n; ++i) {
            if (i == rk || m[i][col] == 0) continue;
            long long fmul = m[i][col];
            for (int j = 0; j < n; ++j) m[i][j] = (m[i][j] - fmul * m[rk][j] % p + p) % p;
        }
        pivot_col.push_back(col);
        ++rk;
    }
    std::vector<FpPoly> basis;
    {
        std::vector<int> is_pivot(n, -1);
        for (int t = 0; t < rk; ++t) is_pivot[pivot_col[t]] = t;
        for (int fcol = 0; fcol < n; ++fcol) {
            if (is_pivot[fcol] >= 0) continue;
            FpPoly v(n, 0);
            v[fcol] = 1;
            for (int t = 0; t < rk; ++t) v[pivot_col[t]] = (p - m[t][fcol]) % p;
            trim(v);
            basis.push_back(std::move(v));
        }
    }
    // kernel dimension counts the irreducible factors
    size_t r = basis.size();
    if (r <= 1) return {f};
    std::vector<FpPoly> factors{f};
    for (const FpPoly& v : basis) {
        if (factors.size() >= r) break;
        if (deg(v) < 1) continue;  // constants split nothing
        for (long long a = 0; a < p && factors.size() < r; ++a) {
            std::vector<FpPoly> next;
            for (FpPoly& u : factors) {
                if (deg(u) <= 1) {
                    next.push_back(std::move(u));
                    continue;
                }
                FpPoly va = v;
                if (va.empty()) va.push_back(0);
                va[0] = (va[0] - a % p + p) % p;
                trim(va);
                FpPoly g = gcd(mod(va, u, p), u, p);
                if (deg(g) > 0 && deg(g) < deg(u)) {
                    FpPoly q, rr;
                    divmod(u, g, q, rr, p);
                    next.push_back(std::move(g));
                    next.push_back(monic(std::move(q), p));
                } else {
                    next.push_back(std::move(u));
                }
            }
            factors = std::move(next);
        }
    }
    return factors;
}

}  // namespace fpoly

// ---------------------------------------------------------------------------
// Hensel lifting and Zassenhaus recombination over Z
// ---------------------------------------------------------------------------

namespace zpoly {

using BPoly = std::vector<bigint>;  // integer coefficients, no trailing zeros

inline void trim(BPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const BPoly& a) { return static_cast<int>(a.size()) - 1; }

inline bigint mod_pos(const bigint& a, const bigint& m) {
    bigint r = a % m;
    if (r < 0) r += m;
    return r;
}
inline bigint mod_sym(const bigint& a, const bigint& m) {
    bigint r = mod_pos(a, m);
    if (r * 2 > m) r -= m;
    return r;
}

inline BPoly reduce(BPoly a, const bigint& m) {
    for (auto& x : a) x = mod_pos(x, m);
    trim(a);
    return a;
}
inline BPoly reduce_sym(BPoly a, const bigint& m) {
    for (auto& x : a) x = mod_sym(x, m);
    trim(a);
    return a;
}
inline BPoly add(const BPoly& a, const BPoly& b, const bigint& m) {
    BPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = mod_pos(r[i] + b[i], m);
    trim(r);
    return r;
}
inline BPoly sub(const BPoly& a, const BPoly& b, const bigint& m) {
    BPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = mod_pos(r[i] - b[i], m);
    trim(r);
    return r;
}
inline BPoly mul(const BPoly& a, const BPoly& b, const bigint& m) {
    if (a.empty() || b.empty()) return {};
    BPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = mod_pos(r[i + j] + a[i] * b[j], m);
    }
    trim(r);
    return r;
}

/// Division by a monic divisor mod m.
inline void divmod_monic(const BPoly& a, const BPoly& b, BPoly& q, BPoly& r, const bigint& m) {
    r = a;
    q.clear();
    int db = deg(b);
    if (db < 0 || b.back() != 1) throw math_error("zpoly: divisor must be monic");
    if (deg(r) >= db) q.assign(deg(r) - db + 1, 0);
    while (deg(r) >= db) {
        int k = deg(r) - db;
        bigint f = r.back();
        q[k] = f;
        for (int i = 0; i <= db; ++i) r[k + i] = mod_pos(r[k + i] - f * b[i], m);
        trim(r);
    }
}

/// Exact division over Z by a monic divisor; returns false if non-exact.
inline bool divide_exact(const BPoly& a, const BPoly& b, BPoly& q) {
    BPoly r = a;
    q.clear();
    int db = deg(b);
    if (db < 0 || b.back() != 1) throw math_error("zpoly: divisor must be monic");
    if (deg(r) >= db) q.assign(deg(r) - db + 1, 0);
    while (deg(r) >= db) {
        int k = deg(r) - db;
        bigint f = r.back();
        q[k] = f;
        for (int i = 0; i <= db; ++i) r[k + i] -= f * b[i];
        trim(r);
    }
    return r.empty();
}

struct HenselPair {
    BPoly g, h, s, t;
};

/// One quadratic lifting step: from modulus m to m^2.
inline HenselPair hensel_step(const BPoly& f, const HenselPair& in, const bigint& m) {
    bigint m2 = m * m;
    const BPoly& g = in.g;
    const BPoly& h = in.h;
    const BPoly& s = in.s;
    const BPoly& t = in.t;
    BPoly e = sub(reduce(f, m2), mul(g, h, m2), m2);
    BPoly q, r;
    divmod_monic(mul(s, e, m2), h, q, r, m2);
    BPoly g1 = add(g, add(mul(t, e, m2), mul(q, g, m2), m2), m2);
    BPoly h1 = add(h, r, m2);
    BPoly b = sub(add(mul(s, g1, m2), mul(t, h1, m2), m2), BPoly{1}, m2);
    BPoly c, d;
    divmod_monic(mul(s, b, m2), h1, c, d, m2);
    BPoly s1 = sub(s, d, m2);
    BPoly t1 = sub(t, add(mul(t, b, m2), mul(c, g1, m2), m2), m2);
    return {g1, h1, s1, t1};
}

/// Lift the mod-p factor list of monic f to the given power modulus.
inline void hensel_tree(const BPoly& f, const std::vector<fpoly::FpPoly>& facs, size_t lo,
                        size_t hi, long long p, int doublings, std::vector<BPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(f);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    fpoly::FpPoly g0{1}, h0{1};
    for (size_t i = lo; i < mid; ++i) g0 = fpoly::mul(g0, facs[i], p);
    for (size_t i = mid; i < hi; ++i) h0 = fpoly::mul(h0, facs[i], p);
    fpoly::FpPoly s0, t0;
    fpoly::bezout(g0, h0, s0, t0, p);
    auto to_b = [](const fpoly::FpPoly& a) {
        BPoly r;
        for (long long x : a) r.push_back(bigint(x));
        trim(r);
        return r;
    };
    HenselPair pair{to_b(g0), to_b(h0), to_b(s0), to_b(t0)};
    bigint m(p);
    for (int i = 0; i < doublings; ++i) {
        pair = hensel_step(f, pair, m);
        m *= m;
    }
    hensel_tree(pair.g, facs, lo, mid, p, doublings, out);
    hensel_tree(pair.h, facs, mid, hi, p, doublings, out);
}

}  // namespace zpoly

namespace detail {

inline Rational rational_pow(Rational base, long long e) {
    Rational r(1);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

/// Factor a monic squarefree integer polynomial into monic irreducibles.
inline std::vector<zpoly::BPoly> factor_monic_squarefree_z(const zpoly::BPoly& f) {
    using zpoly::BPoly;
    int n = zpoly::deg(f);
    if (n <= 1) return {f};
    // prime with squarefree reduction
    long long p = 0;
    fpoly::FpPoly fp;
    for (long long cand = 3; cand < 20000; cand += 2) {
        bool prime = true;
        for (long long d = 3; d * d <= cand; d += 2)
            if (cand % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        fp.clear();
        for (const bigint& c : f) fp.push_back(static_cast<long long>(zpoly::mod_pos(c, bigint(cand))));
        fpoly::trim(fp);
        if (fpoly::deg(fp) != n) continue;  // cannot happen for monic f, kept for safety
        fpoly::FpPoly g = fpoly::gcd(fp, fpoly::deriv(fp, cand), cand);
        if (fpoly::deg(g) == 0) {
            p = cand;
            break;
        }
    }
    if (p == 0) throw math_error("factorization: no squarefree prime reduction found");

    std::vector<fpoly::FpPoly> modular = fpoly::berlekamp(fpoly::monic(fp, p), p);
    if (modular.size() == 1) return {f};
    if (modular.size() > 16) throw budget_error("factorization: too many modular factors");

    // Landau-Mignotte bound for coefficients of monic factors
    bigint norm2 = 0;
    for (const bigint& c : f) norm2 += c * c;
    bigint b = boost::multiprecision::sqrt(norm2) + 1;
    bigint bound = (bigint(1) << n) * b * 2 + 1;
    int doublings = 0;
    bigint m(p);
    while (m < bound) {
        m *= m;
        ++doublings;
    }
    std::vector<BPoly> lifted;
    {
        BPoly fm = zpoly::reduce(f, m);
        zpoly::hensel_tree(fm, modular, 0, modular.size(), p, doublings, lifted);
    }

    // subset recombination with symmetric representatives
    std::vector<BPoly> result;
    std::vector<int> active(lifted.size());
    std::iota(active.begin(), active.end(), 0);
    BPoly fcur = f;
    size_t take = 1;
    while (2 * take <= active.size()) {
        bool found = false;
        std::vector<int> pick(take);
        std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t k) -> bool {
            if (k == take) {
                BPoly cand{1};
                for (size_t idx = 0; idx < take; ++idx)
                    cand = zpoly::mul(cand, lifted[active[pick[idx]]], m);
                cand = zpoly::reduce_sym(cand, m);
                BPoly q;
                if (!cand.empty() && cand.back() == 1 && zpoly::divide_exact(fcur, cand, q)) {
                    result.push_back(cand);
                    fcur = q;
                    std::vector<int> rest;
                    for (size_t i = 0; i < active.size(); ++i) {
                        bool used = false;
                        for (size_t idx = 0; idx < take; ++idx)
                            if (pick[idx] == static_cast<int>(i)) used = true;
                        if (!used) rest.push_back(active[i]);
                    }
                    active = std::move(rest);
                    return true;
                }
                return false;
            }
            for (size_t i = start; i < active.size(); ++i) {
                pick[k] = static_cast<int>(i);
                if (rec(i + 1, k + 1)) return true;
            }
            return false;
        };
        found = rec(0, 0);
        if (!found) ++take;
    }
    if (zpoly::deg(fcur) > 0) result.push_back(fcur);
    return result;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// factorization over Q
// ---------------------------------------------------------------------------

/// Monic irreducible factors with multiplicities over Q.
inline std::vector<std::pair<QPoly, int>> factor_rational(const QPoly& f, int degree_budget = 64) {
    if (f.is_zero()) throw input_error("factor_rational: zero polynomial");
    if (f.degree() > degree_budget) throw budget_error("factor_rational: degree budget exceeded");
    std::vector<std::pair<QPoly, int>> out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        // clear denominators to a primitive integer polynomial
        bigint den(1);
        for (const Rational& c : part.c) {
            bigint d = c.den_big();
            den = den / boost::multiprecision::gcd(den, d) * d;
        }
        zpoly::BPoly w;
        for (const Rational& c : part.c) w.push_back(c.num_big() * (den / c.den_big()));
        zpoly::trim(w);
        bigint content(0);
        for (const bigint& c : w) content = boost::multiprecision::gcd(content, c);
        if (w.back() < 0) content = -content;
        for (auto& c : w) c /= content;
        // monicize: V(x) = l^{n-1} W(x/l), so V_i = W_i l^{n-1-i}
        bigint l = w.back();
        int n = zpoly::deg(w);
        zpoly::BPoly v(w.size());
        for (int i = n; i >= 0; --i) {
            bigint acc(1);
            for (int j = 0; j < n - 1 - i; ++j) acc *= l;
            v[i] = w[i] * acc;
        }
        v[n] = 1;
        for (const auto& g : detail::factor_monic_squarefree_z(v)) {
            // map back: the monic factor of w is g(l x) / l^deg(g)
            int dg = zpoly::deg(g);
            std::vector<Rational> qc(g.size());
            for (int i = 0; i <= dg; ++i) {
                bigint denpow(1);
                for (int j = 0; j < dg - i; ++j) denpow *= l;
                qc[i] = Rational(g[i], denpow);
            }
            out.emplace_back(QPoly(std::move(qc)), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i) {
            if (a.first.c[i] == b.first.c[i]) continue;
            return a.first.c[i] < b.first.c[i];
        }
        return a.second < b.second;
    });
    return out;
}

// ---------------------------------------------------------------------------
// resultants, interpolation, and Trager reduction over Q(zeta_N)
// ---------------------------------------------------------------------------

/// Resultant of two rational polynomials via the Euclidean sequence.
inline Rational resultant(QPoly a, QPoly b) {
    if (a.is_zero() || b.is_zero()) return Rational(0);
    Rational acc(1);
    bool neg = false;
    while (true) {
        if (b.degree() == 0) {
            acc = acc * detail::rational_pow(b.c[0], a.degree());
            return neg ? Rational(0) - acc : acc;
        }
        QPoly r = a % b;
        if (r.is_zero()) return Rational(0);
        acc = acc * detail::rational_pow(b.c[b.degree()], a.degree() - r.degree());
        if ((a.degree() & 1) && (b.degree() & 1)) neg = !neg;
        a = b;
        b = r;
    }
}

/// Newton interpolation through distinct rational nodes.
inline QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    QPoly poly, basis = QPoly::constant(Rational(1));
    for (size_t i = 0; i < n; ++i) {
        poly = poly + basis * dd[i];
        basis = basis * QPoly(std::vector<Rational>{Rational(0) - xs[i], Rational(1)});
    }
    return poly;
}

namespace detail {

inline QPoly coord_poly(const Scalar& s, unsigned n) {
    Scalar t = s.promoted_to(n);
    std::vector<Rational> c;
    for (unsigned i = 0; i < cyclotomic_degree(n); ++i) c.push_back(t.coeff(i));
    return QPoly(std::move(c));
}

/// Trager: factor a monic squarefree polynomial over Q(zeta_N), N > 2.
inline std::vector<SPoly> trager_squarefree(const SPoly& f, unsigned N, int degree_budget) {
    if (f.degree() <= 1) return {f};
    const QPoly& phi = field_table(N).minpoly;
    int d = phi.degree();
    int mdeg = f.degree();

    std::vector<QPoly> coords;
    for (const Scalar& s : f.c) coords.push_back(coord_poly(s, N));

    for (long long step = 0;; ++step) {
        long long s = (step % 2 == 0) ? step / 2 : -(step / 2 + 1);
        if (step > 40) throw math_error("trager: no squarefree shift found");
        // norm by evaluation at rational points and interpolation
        int npts = d * mdeg + 1;
        std::vector<Rational> xs, ys;
        long long t = 0;
        while (static_cast<int>(xs.size()) < npts) {
            // f~(t, z) = sum_j coords_j(z) (t - s z)^j, by Horner in x
            QPoly lin(std::vector<Rational>{Rational(t), Rational(-s)});
            QPoly acc;
            for (int j = mdeg; j >= 0; --j) acc = acc * lin + coords[j];
            Rational v = resultant(phi, acc);
            xs.push_back(Rational(t));
            ys.push_back(v);
            t = (t <= 0) ? -t + 1 : -t;
        }
        QPoly norm = interpolate(xs, ys);
        if (norm.degree() != d * mdeg) continue;  // degenerate shift
        if (QPoly::gcd(norm, norm.derivative()).degree() != 0) continue;

        auto qfactors = factor_rational(norm, std::max(degree_budget, norm.degree()));
        if (qfactors.size() == 1) return {f};
        Scalar shift_back = Scalar(s) * Scalar::zeta(N, 1);
        std::vector<SPoly> out;
        for (const auto& [g, mult] : qfactors) {
            (void)mult;  // squarefree norm
            std::vector<Scalar> gc;
            gc.reserve(g.c.size());
            for (const Rational& c : g.c) gc.push_back(Scalar(c));
            SPoly gk{std::move(gc)};
            SPoly cand = SPoly::gcd(f, gk.shift(shift_back));
            if (cand.degree() > 0) out.push_back(cand.monic());
        }
        int total = 0;
        for (const auto& g : out) total += g.degree();
        if (total != mdeg) throw math_error("trager: factor degrees do not add up");
        return out;
    }
}

}  // namespace detail

struct PolyFactor {
    SPoly factor;  // monic irreducible over the coefficient field
    int multiplicity = 1;
};

/**
 * @brief Factor a polynomial into monic irreducibles with multiplicities over
 * Q(zeta_field_order); field_order 0 means the field generated by the
 * coefficients.
 *
 * Throws budget_error when the degree exceeds the budget (default 64).
 */
inline std::vector<PolyFactor> factor_minpoly(const SPoly& f, unsigned field_order = 0,
                                              int degree_budget = 64) {
    if (f.is_zero()) throw input_error("factor_minpoly: zero polynomial");
    if (f.degree() > degree_budget) throw budget_error("factor_minpoly: degree budget exceeded");
    std::vector<PolyFactor> out;
    if (f.degree() == 0) return out;

    unsigned N = field_order ? field_order : 1;
    for (const Scalar& s : f.c) N = std::lcm(N, s.order());

    if (N <= 2) {
        std::vector<Rational> qc;
        qc.reserve(f.c.size());
        for (const Scalar& s : f.c) qc.push_back(s.demoted().rational_value());
        QPoly q{std::move(qc)};
        for (const auto& [g, mult] : factor_rational(q, degree_budget)) {
            std::vector<Scalar> gc;
            gc.reserve(g.c.size());
            for (const Rational& c : g.c) gc.push_back(Scalar(c));
            out.push_back({SPoly{std::move(gc)}, mult});
        }
    } else {
        for (const auto& [part, mult] : squarefree_decomposition(f)) {
            for (const auto& g : detail::trager_squarefree(part, N, degree_budget)) {
                SPoly gd = g;
                for (auto& c : gd.c) c = c.demoted();
                out.push_back({gd, mult});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        for (int i = a.factor.degree(); i >= 0; --i) {
            int c = Scalar::compare(a.factor.c[i], b.factor.c[i]);
            if (c != 0) return c < 0;
        }
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

/// Roots of f lying in Q(zeta_field_order), read off the linear factors.
inline std::vector<std::pair<Scalar, int>> field_roots(const SPoly& f, unsigned field_order = 0,
                                                       int degree_budget = 64) {
    std::vector<std::pair<Scalar, int>> roots;
    for (const auto& pf : factor_minpoly(f, field_order, degree_budget))
        if (pf.factor.degree() == 1)
            roots.emplace_back(Scalar(0) - pf.factor.c[0], pf.multiplicity);
    return roots;
}

}  // namespace whakit

#endif
