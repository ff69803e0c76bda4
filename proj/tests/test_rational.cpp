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

#include <boost/multiprecision/cpp_int.hpp>
#include <catch2/catch_amalgamated.hpp>

#include "whakit/rational.hpp"

using whakit::Rational;
using cppq = boost::multiprecision::cpp_rational;

namespace {

// Deterministic xorshift so the cross-check against boost is reproducible.
struct Rng {
    std::uint64_t s = 0x9e3779b97f4a7c15ULL;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long long small(long long bound) { return static_cast<long long>(next() % (2 * bound + 1)) - bound; }
};

cppq to_cppq(const Rational& r) { return cppq(r.num_big(), r.den_big()); }

}  // namespace

TEST_CASE("rational basic arithmetic and normalization", "[rational]") {
    REQUIRE(Rational(2, 4) == Rational(1, 2));
    REQUIRE(Rational(-2, -4) == Rational(1, 2));
    REQUIRE(Rational(2, -4) == Rational(-1, 2));
    REQUIRE((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    REQUIRE((Rational(1, 2) - Rational(1, 2)).is_zero());
    REQUIRE((Rational(3, 7) * Rational(7, 3)).is_one());
    REQUIRE((Rational(3, 4) / Rational(3, 2)) == Rational(1, 2));
    REQUIRE(Rational(5).is_integer());
    REQUIRE(!Rational(5, 3).is_integer());
    REQUIRE(Rational(-7, 3).sign() == -1);
    REQUIRE(Rational(0).sign() == 0);
    REQUIRE_THROWS_AS(Rational(1, 0), whakit::math_error);
    REQUIRE_THROWS_AS(Rational(1).inverse() / Rational(0), whakit::math_error);
}

TEST_CASE("rational ordering", "[rational]") {
    REQUIRE(Rational(1, 3) < Rational(1, 2));
    REQUIRE(Rational(-1, 2) < Rational(-1, 3));
    REQUIRE(Rational(2) > Rational(-100));
}

TEST_CASE("rational overflow escapes to bignum and demotes back", "[rational]") {
    Rational big(1);
    for (int i = 0; i < 5; ++i) big *= Rational(1000000007LL);
    REQUIRE(!big.is_small());
    REQUIRE(big.to_string() == "1000000035000000490000003430000012005000016807");
    Rational back = big;
    for (int i = 0; i < 5; ++i) back /= Rational(1000000007LL);
    REQUIRE(back.is_one());
    REQUIRE(back.is_small());

    // 2^200 / 2^199 == 2 exactly
    Rational p(1);
    for (int i = 0; i < 200; ++i) p *= Rational(2);
    Rational q(1);
    for (int i = 0; i < 199; ++i) q *= Rational(2);
    REQUIRE(p / q == Rational(2));

    // addition with huge denominators
    Rational h = Rational(1) / p;
    REQUIRE((h + h) * p == Rational(2));
}

TEST_CASE("rational string round trip", "[rational]") {
    for (const char* s : {"0", "1", "-1", "22/7", "-355/113", "123456789123456789123456789"}) {
        REQUIRE(Rational::parse(s).to_string() == s);
    }
    REQUIRE(Rational::parse("+3/6") == Rational(1, 2));
    REQUIRE_THROWS_AS(Rational::parse("1/.2"), whakit::input_error);
    REQUIRE_THROWS_AS(Rational::parse(""), whakit::input_error);
    REQUIRE_THROWS_AS(Rational::parse("1 2"), whakit::input_error);
}

TEST_CASE("rational agrees with boost cpp_rational on random expressions", "[rational]") {
    Rng rng;
    for (int iter = 0; iter < 2000; ++iter) {
        long long an = rng.small(1'000'000'000LL), ad = 0, bn = rng.small(1'000'000'000LL), bd = 0;
        while (ad == 0) ad = rng.small(1'000'000'000LL);
        while (bd == 0) bd = rng.small(1'000'000'000LL);
        Rational a(an, ad), b(bn, bd);
        cppq qa = cppq(an) / ad, qb = cppq(bn) / bd;
        REQUIRE(to_cppq(a + b) == qa + qb);
        REQUIRE(to_cppq(a - b) == qa - qb);
        REQUIRE(to_cppq(a * b) == qa * qb);
        if (bn != 0) REQUIRE(to_cppq(a / b) == qa / qb);
        REQUIRE((a < b) == (qa < qb));
    }
    // chained products stressing the promotion boundary
    Rational acc(1);
    cppq qacc(1);
    for (int iter = 0; iter < 300; ++iter) {
        long long n = rng.small(1'000'000'000LL), d = 0;
        while (n == 0) n = rng.small(1'000'000'000LL);
        while (d == 0) d = rng.small(1'000'000'000LL);
        acc *= Rational(n, d);
        qacc *= cppq(n) / d;
        acc += Rational(1, 3);
        qacc += cppq(1, 3);
    }
    REQUIRE(to_cppq(acc) == qacc);
}
