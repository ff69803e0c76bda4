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

#include <catch2/catch_amalgamated.hpp>

#include "whakit/minpoly.hpp"

using whakit::factor_minpoly;
using whakit::factor_rational;
using whakit::Matrix;
using whakit::QPoly;
using whakit::Rational;
using whakit::Scalar;
using whakit::SPoly;

namespace {

QPoly qpoly(std::initializer_list<long long> coeffs) {
    std::vector<Rational> c;
    for (long long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}

SPoly spoly(std::initializer_list<Scalar> coeffs) { return SPoly(std::vector<Scalar>(coeffs)); }

SPoly product(const std::vector<whakit::PolyFactor>& factors) {
    SPoly p = SPoly::constant(Scalar(1));
    for (const auto& f : factors)
        for (int i = 0; i < f.multiplicity; ++i) p = p * f.factor;
    return p;
}

}  // namespace

TEST_CASE("minimal polynomial of simple matrices", "[minpoly]") {
    SECTION("diagonal with repeated eigenvalue") {
        Matrix a(3, 3);
        a[0][0] = Scalar(1);
        a[1][1] = Scalar(1);
        a[2][2] = Scalar(2);
        SPoly m = whakit::min_poly(a);
        // (x-1)(x-2) = x^2 - 3x + 2
        REQUIRE(m.degree() == 2);
        CHECK(m.c[0] == Scalar(2));
        CHECK(m.c[1] == Scalar(-3));
        CHECK(m.c[2] == Scalar(1));
    }
    SECTION("nilpotent Jordan block") {
        Matrix a(3, 3);
        a[1][0] = Scalar(1);
        a[2][1] = Scalar(1);
        SPoly m = whakit::min_poly(a);
        REQUIRE(m.degree() == 3);
        CHECK(m.c[0].is_zero());
        CHECK(m.c[1].is_zero());
        CHECK(m.c[2].is_zero());
    }
    SECTION("companion matrix of x^3 - 2") {
        Matrix a(3, 3);
        a[1][0] = Scalar(1);
        a[2][1] = Scalar(1);
        a[0][2] = Scalar(2);
        SPoly m = whakit::min_poly(a);
        REQUIRE(m.degree() == 3);
        CHECK(m.c[0] == Scalar(-2));
        CHECK(m.c[1].is_zero());
        CHECK(m.c[2].is_zero());
    }
    SECTION("cyclotomic eigenvalues") {
        Scalar z = Scalar::zeta(3, 1);
        Matrix a(2, 2);
        a[0][0] = z;
        a[1][1] = z * z;
        SPoly m = whakit::min_poly(a);
        // (x - zeta3)(x - zeta3^2) = x^2 + x + 1
        REQUIRE(m.degree() == 2);
        CHECK(m.c[0] == Scalar(1));
        CHECK(m.c[1] == Scalar(1));
    }
}

TEST_CASE("squarefree decomposition", "[minpoly]") {
    // (x-1)^2 (x+2)
    QPoly f = qpoly({-1, 1}) * qpoly({-1, 1}) * qpoly({2, 1});
    auto parts = whakit::squarefree_decomposition(f);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == qpoly({2, 1}));
    CHECK(parts[0].second == 1);
    CHECK(parts[1].first == qpoly({-1, 1}));
    CHECK(parts[1].second == 2);
}

TEST_CASE("rational factorization basics", "[minpoly]") {
    SECTION("x^2 - 1") {
        auto f = factor_rational(qpoly({-1, 0, 1}));
        REQUIRE(f.size() == 2);
        CHECK(f[0].first == qpoly({-1, 1}));
        CHECK(f[1].first == qpoly({1, 1}));
    }
    SECTION("x^2 + 1 irreducible") {
        auto f = factor_rational(qpoly({1, 0, 1}));
        REQUIRE(f.size() == 1);
        CHECK(f[0].first.degree() == 2);
    }
    SECTION("x^2 - x - 1 irreducible over Q") {
        auto f = factor_rational(qpoly({-1, -1, 1}));
        REQUIRE(f.size() == 1);
        CHECK(f[0].first.degree() == 2);
    }
    SECTION("x^6 - 1 splits into four cyclotomic factors") {
        auto f = factor_rational(qpoly({-1, 0, 0, 0, 0, 0, 1}));
        REQUIRE(f.size() == 4);
        int total = 0;
        for (const auto& [g, mult] : f) total += g.degree() * mult;
        CHECK(total == 6);
    }
    SECTION("non-monic input with rational roots") {
        // 6x^2 + 5x + 1 = 6 (x + 1/2)(x + 1/3)
        auto f = factor_rational(qpoly({1, 5, 6}));
        REQUIRE(f.size() == 2);
        CHECK(f[0].first == QPoly(std::vector<Rational>{Rational(1, 3), Rational(1)}));
        CHECK(f[1].first == QPoly(std::vector<Rational>{Rational(1, 2), Rational(1)}));
    }
    SECTION("x^4 + 1 needs recombination") {
        // reducible modulo every prime, irreducible over Q
        auto f = factor_rational(qpoly({1, 0, 0, 0, 1}));
        REQUIRE(f.size() == 1);
        CHECK(f[0].first.degree() == 4);
    }
    SECTION("(x^2 - 2)(x^2 - 3)") {
        auto f = factor_rational(qpoly({-2, 0, 1}) * qpoly({-3, 0, 1}));
        REQUIRE(f.size() == 2);
        CHECK(f[0].first == qpoly({-3, 0, 1}));
        CHECK(f[1].first == qpoly({-2, 0, 1}));
    }
    SECTION("multiplicities recovered") {
        QPoly f = qpoly({-1, 1}) * qpoly({-1, 1}) * qpoly({1, 0, 1});
        auto fac = factor_rational(f);
        REQUIRE(fac.size() == 2);
        CHECK(fac[0].first == qpoly({-1, 1}));
        CHECK(fac[0].second == 2);
        CHECK(fac[1].first.degree() == 2);
        CHECK(fac[1].second == 1);
    }
}

TEST_CASE("resultant and interpolation oracles", "[minpoly]") {
    // res(z^2+1, z-3) = (3-i)(3+i) = 10
    CHECK(whakit::resultant(qpoly({1, 0, 1}), qpoly({-3, 1})) == Rational(10));
    // res(x^2-1, x^2-4) = (1-4)(1-4) = 9
    CHECK(whakit::resultant(qpoly({-1, 0, 1}), qpoly({-4, 0, 1})) == Rational(9));
    // shared root gives zero
    CHECK(whakit::resultant(qpoly({-1, 0, 1}), qpoly({-1, 1})) == Rational(0));

    std::vector<Rational> xs = {Rational(0), Rational(1), Rational(2)};
    std::vector<Rational> ys = {Rational(1), Rational(2), Rational(5)};
    QPoly p = whakit::interpolate(xs, ys);
    CHECK(p == qpoly({1, 0, 1}));
}

TEST_CASE("x^2 - x - 1 splits over Q(zeta_5)", "[minpoly]") {
    SPoly f = spoly({Scalar(-1), Scalar(-1), Scalar(1)});
    auto factors = factor_minpoly(f, 5);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].factor.degree() == 1);
    CHECK(factors[1].factor.degree() == 1);
    CHECK(product(factors) == f);

    // both roots satisfy r^2 = r + 1; one of them is 1 + zeta + zeta^4
    Scalar golden = Scalar(1) + Scalar::zeta(5, 1) + Scalar::zeta(5, 4);
    bool seen_golden = false;
    for (const auto& pf : factors) {
        Scalar r = Scalar(0) - pf.factor.c[0];
        CHECK(r * r == r + Scalar(1));
        if (r == golden) seen_golden = true;
    }
    CHECK(seen_golden);

    auto roots = whakit::field_roots(f, 5);
    REQUIRE(roots.size() == 2);
}

TEST_CASE("x^2 + 1 stays irreducible over Q(zeta_3)", "[minpoly]") {
    SPoly f = spoly({Scalar(1), Scalar(0), Scalar(1)});
    auto factors = factor_minpoly(f, 3);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].factor.degree() == 2);
    CHECK(factors[0].multiplicity == 1);
}

TEST_CASE("cyclotomic splitting over the right field", "[minpoly]") {
    SECTION("x^2 + x + 1 over Q(zeta_3)") {
        SPoly f = spoly({Scalar(1), Scalar(1), Scalar(1)});
        auto factors = factor_minpoly(f, 3);
        REQUIRE(factors.size() == 2);
        CHECK(product(factors) == f);
        Scalar z = Scalar::zeta(3, 1);
        bool saw1 = false, saw2 = false;
        for (const auto& pf : factors) {
            Scalar r = Scalar(0) - pf.factor.c[0];
            if (r == z) saw1 = true;
            if (r == z * z) saw2 = true;
        }
        CHECK(saw1);
        CHECK(saw2);
    }
    SECTION("Phi_5 splits into linear factors over Q(zeta_5)") {
        SPoly f = spoly({Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(1)});
        auto factors = factor_minpoly(f, 5);
        REQUIRE(factors.size() == 4);
        for (const auto& pf : factors) CHECK(pf.factor.degree() == 1);
        CHECK(product(factors) == f);
    }
    SECTION("multiplicity over an extension") {
        Scalar z = Scalar::zeta(3, 1);
        SPoly lin = spoly({Scalar(0) - z, Scalar(1)});
        SPoly f = lin * lin * spoly({Scalar(-1), Scalar(1)});
        auto factors = factor_minpoly(f);
        REQUIRE(factors.size() == 2);
        CHECK(product(factors) == f);
        bool found_sq = false;
        for (const auto& pf : factors)
            if (pf.multiplicity == 2) {
                found_sq = true;
                CHECK(pf.factor == lin);
            }
        CHECK(found_sq);
    }
}

TEST_CASE("degree budget is enforced", "[minpoly]") {
    std::vector<Scalar> big(70, Scalar(0));
    big[0] = Scalar(1);
    big[69] = Scalar(1);
    CHECK_THROWS_AS(factor_minpoly(SPoly(std::move(big)), 0, 64), whakit::budget_error);
}
