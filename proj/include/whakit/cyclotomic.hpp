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

#ifndef WHAKIT_CYCLOTOMIC_HPP
#define WHAKIT_CYCLOTOMIC_HPP

#include <atomic>
#include <boost/container/small_vector.hpp>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <string_view>

#include "whakit/poly.hpp"
#include "whakit/rational.hpp"

namespace whakit {

namespace config {
/// Largest cyclotomic order the library will promote to when mixing fields.
inline std::atomic<unsigned>& max_field_order() {
    static std::atomic<unsigned> v{1024};
    return v;
}
}  // namespace config

namespace detail {

/// Precomputed data for Q(zeta_N): Phi_N and reduced powers of zeta.
struct FieldTable {
    unsigned n = 1;
    unsigned phi = 1;
    Poly<Rational> minpoly;                      // Phi_N, monic, degree phi
    std::vector<std::vector<Rational>> zpow;     // zpow[e] = coords of z^e, e <= n + phi

    const std::vector<Rational>& power(unsigned e) const { return zpow[e]; }
};

inline const FieldTable& field_table(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<FieldTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
    if (n == 0) throw input_error("field order must be positive");
    if (n > config::max_field_order().load())
        throw budget_error("field order " + std::to_string(n) + " exceeds configured bound");

    // Phi_d for all divisors d of n, by exact division of x^d - 1.
    std::map<unsigned, Poly<Rational>> phis;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Poly<Rational> xd1 = Poly<Rational>::monomial(d) - Poly<Rational>::constant(Rational(1));
        Poly<Rational> prod = Poly<Rational>::constant(Rational(1));
        for (auto& [e, p] : phis)
            if (d % e == 0) prod = prod * p;
        phis[d] = xd1 / prod;
    }

    auto tab = std::make_unique<FieldTable>();
    tab->n = n;
    tab->minpoly = phis[n];
    tab->phi = static_cast<unsigned>(tab->minpoly.degree());
    unsigned phi = tab->phi;
    unsigned maxe = n + phi + 1;
    tab->zpow.resize(maxe + 1);
    for (unsigned e = 0; e <= maxe; ++e) {
        auto& row = tab->zpow[e];
        row.assign(phi, Rational());
        if (e < phi) {
            row[e] = Rational(1);
        } else {
            // z * previous row, reduced by the monic minimal polynomial.
            const auto& prev = tab->zpow[e - 1];
            std::vector<Rational> t(phi + 1, Rational());
            for (unsigned i = 0; i < phi; ++i) t[i + 1] = prev[i];
            Rational top = t[phi];
            if (!top.is_zero())
                for (unsigned i = 0; i < phi; ++i) t[i] = t[i] - top * tab->minpoly.c[i];
            for (unsigned i = 0; i < phi; ++i) row[i] = t[i];
        }
    }
    auto& ref = *tab;
    cache.emplace(n, std::move(tab));
    return ref;
}

}  // namespace detail

/**
 * @brief Element of a cyclotomic field Q(zeta_N), exact.
 *
 * Stored as rational coordinates in the power basis 1, z, ..., z^{phi(N)-1}
 * modulo the N-th cyclotomic polynomial; order 1 is plain Q.  Mixing orders
 * promotes both operands to the lcm (bounded by config::max_field_order).
 * The canonical text form is the grammar used in .wha.json files:
 * "-1/2+3z^2", "z", "5/3", ...
 */
class Scalar {
    using Coeffs = boost::container::small_vector<Rational, 4>;

public:
    Scalar() : ord_(1), c_{Rational()} {}
    Scalar(int v) : ord_(1), c_{Rational(v)} {}
    Scalar(long long v) : ord_(1), c_{Rational(v)} {}
    Scalar(long long num, long long den) : ord_(1), c_{Rational(num, den)} {}
    Scalar(Rational v) : ord_(1), c_{std::move(v)} {}

    /// zeta_N^k
    static Scalar zeta(unsigned n, long long k = 1) {
        const auto& tab = detail::field_table(n);
        long long e = k % static_cast<long long>(n);
        if (e < 0) e += n;
        Scalar s;
        s.ord_ = n;
        const auto& row = tab.power(static_cast<unsigned>(e));
        s.c_.assign(row.begin(), row.end());
        return s;
    }

    /// Zero element carried in Q(zeta_N).
    static Scalar zero_of_order(unsigned n) {
        const auto& tab = detail::field_table(n);
        Scalar s;
        s.ord_ = n;
        s.c_.assign(tab.phi, Rational());
        return s;
    }

    unsigned order() const { return ord_; }
    unsigned degree() const { return static_cast<unsigned>(c_.size()); }
    const Rational& coeff(unsigned i) const { return c_[i]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_one() const {
        if (!c_[0].is_one()) return false;
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    /// Rational part; throws unless is_rational().
    Rational rational_value() const {
        if (!is_rational()) throw math_error("Scalar: not a rational number: " + to_string());
        return c_[0];
    }

    friend Scalar operator-(const Scalar& a) {
        Scalar r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.ord_ == b.ord_) {
            Scalar r = a;
            for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
            return r;
        }
        auto [x, y] = promoted(a, b);
        return x + y;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.ord_ == 1 && b.ord_ == 1) {
            Scalar r;
            r.c_[0] = a.c_[0] * b.c_[0];
            return r;
        }
        if (a.ord_ != b.ord_) {
            auto [x, y] = promoted(a, b);
            return x * y;
        }
        // Fast scaling when one side is rational.
        if (a.is_rational()) return b.scaled(a.c_[0]);
        if (b.is_rational()) return a.scaled(b.c_[0]);
        const auto& tab = detail::field_table(a.ord_);
        unsigned phi = tab.phi;
        std::vector<Rational> conv(2 * phi - 1, Rational());
        for (unsigned i = 0; i < phi; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (unsigned j = 0; j < phi; ++j) {
                if (b.c_[j].is_zero()) continue;
                conv[i + j] += a.c_[i] * b.c_[j];
            }
        }
        Scalar r = zero_of_order(a.ord_);
        for (unsigned e = 0; e < conv.size(); ++e) {
            if (conv[e].is_zero()) continue;
            if (e < phi) {
                r.c_[e] += conv[e];
            } else {
                const auto& row = tab.power(e);
                for (unsigned i = 0; i < phi; ++i)
                    if (!row[i].is_zero()) r.c_[i] += conv[e] * row[i];
            }
        }
        return r;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    Scalar inverse() const {
        if (is_zero()) throw math_error("Scalar: division by zero");
        if (ord_ == 1 || is_rational()) {
            Scalar r = zero_of_order(ord_);
            r.c_[0] = c_[0].inverse();
            return r;
        }
        // extended Euclid: u * this + v * Phi_N = 1 in Q[x]
        const auto& tab = detail::field_table(ord_);
        Poly<Rational> a(std::vector<Rational>(c_.begin(), c_.end()));
        Poly<Rational> b = tab.minpoly;
        Poly<Rational> u0 = Poly<Rational>::constant(Rational(1)), u1;
        Poly<Rational> r0 = a, r1 = b;
        while (!r1.is_zero()) {
            Poly<Rational> q, rem;
            Poly<Rational>::divmod(r0, r1, q, rem);
            Poly<Rational> u2 = u0 - q * u1;
            r0 = r1;
            r1 = rem;
            u0 = u1;
            u1 = u2;
        }
        // r0 = gcd (a nonzero constant since Phi_N is irreducible over Q)
        if (r0.degree() != 0) throw math_error("Scalar: inverse failed (non-constant gcd)");
        Poly<Rational> inv = u0 * r0.c[0].inverse();
        inv = inv % tab.minpoly;
        Scalar r = zero_of_order(ord_);
        for (int i = 0; i <= inv.degree(); ++i) r.c_[i] = inv.c[i];
        return r;
    }

    /// Galois conjugation zeta -> zeta^{-1} (complex conjugation).
    Scalar conj() const {
        if (ord_ == 1) return *this;
        const auto& tab = detail::field_table(ord_);
        Scalar r = zero_of_order(ord_);
        for (unsigned k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            const auto& row = tab.power(k == 0 ? 0 : ord_ - k);
            for (unsigned i = 0; i < tab.phi; ++i)
                if (!row[i].is_zero()) r.c_[i] += c_[k] * row[i];
        }
        return r;
    }

    Scalar pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.ord_ == b.ord_) {
            for (size_t i = 0; i < a.c_.size(); ++i)
                if (a.c_[i] != b.c_[i]) return false;
            return true;
        }
        return (a - b).is_zero();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Lexicographic order on (order-promoted) coordinates; used only to make
    /// reports and serializations deterministic.
    static int compare(const Scalar& a, const Scalar& b) {
        if (a.ord_ != b.ord_) {
            auto [x, y] = promoted(a, b);
            return compare(x, y);
        }
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] < b.c_[i]) return -1;
            if (b.c_[i] < a.c_[i]) return 1;
        }
        return 0;
    }

    /// Re-express in Q(zeta_M); M must be a multiple of the current order.
    Scalar promoted_to(unsigned m) const {
        if (m == ord_) return *this;
        if (m % ord_ != 0)
            throw input_error("Scalar: cannot promote order " + std::to_string(ord_) + " into " +
                              std::to_string(m));
        const auto& tab = detail::field_table(m);
        Scalar r = zero_of_order(m);
        unsigned step = m / ord_;
        for (unsigned k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            const auto& row = tab.power((k * step) % m);
            for (unsigned i = 0; i < tab.phi; ++i)
                if (!row[i].is_zero()) r.c_[i] += c_[k] * row[i];
        }
        return r;
    }

    /// Smallest cyclotomic field (dividing the current order) containing the
    /// value; cheap containment test by round trip.
    Scalar demoted() const {
        for (unsigned d = 1; d < ord_; ++d) {
            if (ord_ % d != 0) continue;
            // try to express in Q(zeta_d)
            Scalar cand = zero_of_order(d);
            bool ok = solve_demotion(d, cand);
            if (ok) return cand;
        }
        return *this;
    }

    std::string to_string() const {
        std::string out;
        bool first = true;
        for (unsigned k = 0; k < c_.size(); ++k) {
            const Rational& a = c_[k];
            if (a.is_zero()) continue;
            Rational mag = a.sign() < 0 ? -a : a;
            if (first) {
                if (a.sign() < 0) out += "-";
                first = false;
            } else {
                out += a.sign() < 0 ? "-" : "+";
            }
            bool unit_coeff = mag.is_one() && k > 0;
            if (!unit_coeff) out += mag.to_string();
            if (k > 0) {
                if (!unit_coeff) out += "*";
                out += "z";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        if (first) out = "0";
        return out;
    }

    /**
     * Parses the scalar grammar ("1/2+z^2-3*z", whitespace tolerated) in the
     * field Q(zeta_N).  Exponents are reduced modulo N.
     */
    static Scalar parse(std::string_view s, unsigned n) {
        const auto& tab = detail::field_table(n);
        (void)tab;
        Scalar acc = zero_of_order(n);
        size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
        };
        skip_ws();
        if (pos == s.size()) throw input_error("Scalar: empty literal");
        bool any = false;
        while (true) {
            skip_ws();
            if (pos == s.size()) break;
            int sign = 1;
            if (s[pos] == '+' || s[pos] == '-') {
                if (s[pos] == '-') sign = -1;
                ++pos;
                skip_ws();
            } else if (any) {
                throw input_error("Scalar: expected '+'/'-' in '" + std::string(s) + "'");
            }
            Rational coeff(1);
            bool have_coeff = false;
            if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
                size_t start = pos;
                while (pos < s.size() &&
                       (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
                    ++pos;
                coeff = Rational::parse(s.substr(start, pos - start));
                have_coeff = true;
                skip_ws();
                if (pos < s.size() && s[pos] == '*') {
                    ++pos;
                    skip_ws();
                }
            }
            long long expo = 0;
            if (pos < s.size() && s[pos] == 'z') {
                ++pos;
                expo = 1;
                skip_ws();
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    skip_ws();
                    size_t start = pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    if (pos == start) throw input_error("Scalar: bad exponent in '" + std::string(s) + "'");
                    expo = std::stoll(std::string(s.substr(start, pos - start)));
                }
            } else if (!have_coeff) {
                throw input_error("Scalar: expected term in '" + std::string(s) + "'");
            }
            Scalar term = expo == 0 ? zero_of_order(n) : zeta(n, expo);
            if (expo == 0) term.c_[0] = Rational(1);
            term = term.scaled(sign < 0 ? -coeff : coeff);
            acc += term;
            any = true;
        }
        if (!any) throw input_error("Scalar: empty literal");
        return acc;
    }

private:
    unsigned ord_;
    Coeffs c_;

    Scalar scaled(const Rational& r) const {
        Scalar out = *this;
        for (auto& x : out.c_) x *= r;
        return out;
    }

    static std::pair<Scalar, Scalar> promoted(const Scalar& a, const Scalar& b) {
        unsigned l = std::lcm(a.ord_, b.ord_);
        if (l > config::max_field_order().load())
            throw budget_error("mixing Q(zeta_" + std::to_string(a.ord_) + ") and Q(zeta_" +
                               std::to_string(b.ord_) + ") exceeds the field order bound");
        return {a.promoted_to(l), b.promoted_to(l)};
    }

    bool solve_demotion(unsigned d, Scalar& out) const {
        // Coordinates of zeta_d^j inside Q(zeta_ord); solve a small linear
        // system by forward substitution over the power basis.
        const auto& tab = detail::field_table(ord_);
        unsigned dphi = detail::field_table(d).phi;
        unsigned step = ord_ / d;
        // Build matrix with columns = coords of zeta_d^j, j < dphi.
        std::vector<std::vector<Rational>> cols(dphi);
        for (unsigned j = 0; j < dphi; ++j) {
            const auto& row = tab.power((j * step) % ord_);
            cols[j].assign(row.begin(), row.end());
        }
        // Gaussian elimination on the (phi x dphi) system cols * x = c_.
        unsigned phi = tab.phi;
        std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(dphi + 1, Rational()));
        for (unsigned i = 0; i < phi; ++i) {
            for (unsigned j = 0; j < dphi; ++j) m[i][j] = cols[j][i];
            m[i][dphi] = c_[i];
        }
        unsigned rank = 0;
        std::vector<int> pivot_col(dphi, -1);
        for (unsigned col = 0; col < dphi && rank < phi; ++col) {
            unsigned sel = rank;
            while (sel < phi && m[sel][col].is_zero()) ++sel;
            if (sel == phi) continue;
            std::swap(m[sel], m[rank]);
            Rational inv = m[rank][col].inverse();
            for (unsigned j = col; j <= dphi; ++j) m[rank][j] *= inv;
            for (unsigned i = 0; i < phi; ++i) {
                if (i == rank || m[i][col].is_zero()) continue;
                Rational f = m[i][col];
                for (unsigned j = col; j <= dphi; ++j) m[i][j] -= f * m[rank][j];
            }
            pivot_col[col] = static_cast<int>(rank);
            ++rank;
        }
        // Consistency: rows beyond rank must have zero rhs.
        for (unsigned i = rank; i < phi; ++i)
            if (!m[i][dphi].is_zero()) return false;
        out = zero_of_order(d);
        for (unsigned col = 0; col < dphi; ++col)
            if (pivot_col[col] >= 0) out.c_[col] = m[pivot_col[col]][dphi];
        // Round-trip check guards columns that never got a pivot.
        return out.promoted_to(ord_) == *this;
    }
};

/// phi(N), as the library sees it (degree of Phi_N).
inline unsigned cyclotomic_degree(unsigned n) { return detail::field_table(n).phi; }

}  // namespace whakit

#endif
