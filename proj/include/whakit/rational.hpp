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

#ifndef WHAKIT_RATIONAL_HPP
#define WHAKIT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>

#include "whakit/errors.hpp"

namespace whakit {

using bigint = boost::multiprecision::cpp_int;

/**
 * @brief Exact rational number.
 *
 * Values whose numerator and denominator fit in 64 bits are stored inline and
 * use branch-light int64/int128 arithmetic; anything larger transparently
 * escapes to an immutable, shared cpp_int representation.  All structure
 * tensors of the desk-scale quantum groupoids stay on the fast path, which is
 * what makes the dim-243 axiom suite affordable, but no operation ever
 * overflows silently.
 *
 * Invariants: denominator > 0, gcd(num, den) == 1, and the inline form is
 * used whenever the value fits.
 */
class Rational {
    struct Big {
        bigint n, d;  // d > 0, gcd(n,d) == 1
    };

public:
    Rational() : n_(0), d_(1) {}
    Rational(long long n) : n_(n), d_(1) {}
    Rational(int n) : n_(n), d_(1) {}
    Rational(long long n, long long d) { assign_small(n, d); }
    Rational(const bigint& n, const bigint& d) { assign_big(n, d); }

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const { return big_ ? big_->d == 1 : d_ == 1; }
    bool is_small() const { return !big_; }

    int sign() const {
        if (big_) return big_->n > 0 ? 1 : (big_->n < 0 ? -1 : 0);
        return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
    }

    bigint num_big() const { return big_ ? big_->n : bigint(n_); }
    bigint den_big() const { return big_ ? big_->d : bigint(d_); }

    /// Inline accessors; only meaningful when is_small().
    long long num_small() const { return n_; }
    long long den_small() const { return d_; }

    friend Rational operator-(const Rational& a) {
        if (!a.big_) return Rational::raw(-a.n_, a.d_);
        return Rational::raw_big(-a.big_->n, a.big_->d);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.n_ == 0) return b;
            if (b.n_ == 0) return a;
            long long g = std::gcd(a.d_, b.d_);
            i128 bd = b.d_ / g, ad = a.d_ / g;
            i128 t = i128(a.n_) * bd + i128(b.n_) * ad;
            i128 gt = gcd128(t < 0 ? -t : t, g);
            if (gt == 0) gt = 1;
            i128 n = t / gt;
            i128 d = ad * (b.d_ / gt);
            Rational r;
            if (r.try_small(n, d)) return r;
            r.assign_big(to_big(n), to_big(d));
            return r;
        }
        return big_op(a, b, '+');
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.n_ == 0 || b.n_ == 0) return Rational();
            long long g1 = std::gcd(a.n_ < 0 ? -a.n_ : a.n_, b.d_);
            long long g2 = std::gcd(b.n_ < 0 ? -b.n_ : b.n_, a.d_);
            i128 n = i128(a.n_ / g1) * (b.n_ / g2);
            i128 d = i128(a.d_ / g2) * (b.d_ / g1);
            Rational r;
            if (r.try_small(n, d)) return r;
            r.assign_big(to_big(n), to_big(d));
            return r;
        }
        return big_op(a, b, '*');
    }

    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

    Rational inverse() const {
        if (is_zero()) throw math_error("Rational: division by zero");
        if (!big_) {
            Rational r;
            if (n_ > 0)
                r = raw(d_, n_);
            else
                r = raw(-d_, -n_);
            return r;
        }
        return big_->n > 0 ? raw_big(big_->d, big_->n) : raw_big(-big_->d, -big_->n);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
        return a.num_big() == b.num_big() && a.den_big() == b.den_big();
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    /// Total order (by value).
    friend bool operator<(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return i128(a.n_) * b.d_ < i128(b.n_) * a.d_;
        return a.num_big() * b.den_big() < b.num_big() * a.den_big();
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const {
        if (big_) {
            std::string s = big_->n.str();
            if (big_->d != 1) s += "/" + big_->d.str();
            return s;
        }
        std::string s = std::to_string(n_);
        if (d_ != 1) s += "/" + std::to_string(d_);
        return s;
    }

    /**
     * Parses "[+-]digits[/digits]" of arbitrary length.  Throws input_error
     * on malformed text.
     */
    static Rational parse(std::string_view s) {
        size_t pos = 0;
        auto read_int = [&](bool sign_ok) -> bigint {
            bool neg = false;
            if (sign_ok && pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                neg = s[pos] == '-';
                ++pos;
            }
            size_t start = pos;
            bigint v = 0;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
                v = v * 10 + (s[pos] - '0');
                ++pos;
            }
            if (pos == start) throw input_error("Rational: expected digits in '" + std::string(s) + "'");
            return neg ? bigint(-v) : v;
        };
        bigint n = read_int(true);
        bigint d = 1;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            d = read_int(false);
        }
        if (pos != s.size()) throw input_error("Rational: trailing junk in '" + std::string(s) + "'");
        Rational r;
        r.assign_big(n, d);
        return r;
    }

private:
    using i128 = __int128;

    long long n_ = 0, d_ = 1;
    std::shared_ptr<const Big> big_;

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a < 0 ? -a : a;
    }

    static bigint to_big(i128 v) {
        bool neg = v < 0;
        if (neg) v = -v;
        bigint r = static_cast<std::uint64_t>(v >> 64);
        r <<= 64;
        r += static_cast<std::uint64_t>(v);
        return neg ? bigint(-r) : r;
    }

    static Rational raw(long long n, long long d) {
        Rational r;
        r.n_ = n;
        r.d_ = d;
        return r;
    }
    static Rational raw_big(bigint n, bigint d) {
        Rational r;
        // Already normalized by the caller; demote if it fits.
        if (!r.try_small_big(n, d)) r.big_ = std::make_shared<Big>(Big{std::move(n), std::move(d)});
        return r;
    }

    // Bounds chosen so negation can never overflow.
    static constexpr long long kMax = 0x7fffffffffffffffLL;

    bool try_small(i128 n, i128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (d == 0) throw math_error("Rational: zero denominator");
        if (n > kMax || n < -kMax || d > kMax) return false;
        n_ = static_cast<long long>(n);
        d_ = static_cast<long long>(d);
        big_.reset();
        return true;
    }

    bool try_small_big(const bigint& n, const bigint& d) {
        if (n > kMax || n < -kMax || d > kMax) return false;
        n_ = n.convert_to<long long>();
        d_ = d.convert_to<long long>();
        big_.reset();
        return true;
    }

    void assign_small(long long n, long long d) {
        if (d == 0) throw math_error("Rational: zero denominator");
        i128 nn = n, dd = d;
        if (!try_small(nn, dd)) assign_big(bigint(n), bigint(d));
    }

    void assign_big(bigint n, bigint d) {
        if (d == 0) throw math_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        bigint g = boost::multiprecision::gcd(boost::multiprecision::abs(n), d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (!try_small_big(n, d)) big_ = std::make_shared<Big>(Big{std::move(n), std::move(d)});
    }

    static Rational big_op(const Rational& a, const Rational& b, char op) {
        bigint an = a.num_big(), ad = a.den_big(), bn = b.num_big(), bd = b.den_big();
        Rational r;
        if (op == '+')
            r.assign_big(an * bd + bn * ad, ad * bd);
        else
            r.assign_big(an * bn, ad * bd);
        return r;
    }
};

}  // namespace whakit

#endif
