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

#include "fixtures.hpp"
#include "whakit/axioms.hpp"
#include "whakit/qtriang.hpp"

using whakit::AxiomReport;
using whakit::DoubleAlgebra;
using whakit::drinfeld_double;
using whakit::drinfeld_u;
using whakit::DrinfeldReport;
using whakit::dual;
using whakit::factorizability;
using whakit::FactorizabilityReport;
using whakit::is_group_like;
using whakit::pack2;
using whakit::qt_from_r;
using whakit::QTStructure;
using whakit::QuantumGroupoid;
using whakit::ribbon_from_star;
using whakit::Scalar;
using whakit::SparseVec;
using whakit::Vec;
using whakit::verify_axioms;
using whakit::verify_qt;
using whakit::verify_ribbon;

namespace sv = whakit::sv;

namespace {

bool vec_eq(const Vec& a, const Vec& b) { return whakit::detail::vec_eq(a, b); }

bool failed_check(const AxiomReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return !c.pass;
    return false;
}

}  // namespace

TEST_CASE("trivial quasitriangular structure on a group algebra", "[qtriang]") {
    QuantumGroupoid h = fixtures::z2();
    QTStructure qt = qt_from_r(h, {{pack2(2, 0, 0), Scalar(1)}});

    REQUIRE(verify_qt(h, qt).pass());
    REQUIRE(sv::eq(qt.rbar, SparseVec{{pack2(2, 0, 0), Scalar(1)}}));

    DrinfeldReport dr = drinfeld_u(h, qt);
    REQUIRE(dr.pass());
    CHECK(vec_eq(dr.u, h.unit));
    CHECK(vec_eq(dr.v, h.unit));

    FactorizabilityReport fr = factorizability(h, qt);
    CHECK(fr.rank == 1);
    CHECK(fr.centralizer_dim == 2);
    CHECK(fr.range_in_centralizer);
    CHECK_FALSE(fr.factorizable);
    CHECK(fr.triangular);

    auto nu = ribbon_from_star(h, qt);
    REQUIRE(nu.has_value());
    CHECK(vec_eq(*nu, h.unit));
    CHECK(verify_ribbon(h, qt, *nu).pass());
}

TEST_CASE("nontrivial R-matrix on the group algebra of Z/2", "[qtriang]") {
    QuantumGroupoid h = fixtures::z2();
    Scalar half(1, 2);
    QTStructure qt = qt_from_r(h, {{pack2(2, 0, 0), half},
                                   {pack2(2, 0, 1), half},
                                   {pack2(2, 1, 0), half},
                                   {pack2(2, 1, 1), -half}});

    REQUIRE(verify_qt(h, qt).pass());

    DrinfeldReport dr = drinfeld_u(h, qt);
    REQUIRE(dr.pass());
    CHECK(vec_eq(dr.u, h.basis_vec(1)));  // u = g
    CHECK(vec_eq(dr.u_inv, h.basis_vec(1)));

    FactorizabilityReport fr = factorizability(h, qt);
    CHECK(fr.rank == 1);
    CHECK_FALSE(fr.factorizable);
    CHECK(fr.triangular);  // R_21 R = 1 (x) 1

    auto nu = ribbon_from_star(h, qt);
    REQUIRE(nu.has_value());
    CHECK(vec_eq(*nu, h.basis_vec(1)));  // nu = u^{-1} = g
    CHECK(verify_ribbon(h, qt, *nu).pass());
    CHECK_FALSE(verify_ribbon(h, qt, h.zero()).pass());
}

TEST_CASE("coproduct of the unit as an R-matrix on a groupoid algebra", "[qtriang]") {
    QuantumGroupoid h = fixtures::pair2();
    QTStructure qt = qt_from_r(h, h.delta_one());

    REQUIRE(verify_qt(h, qt).pass());

    DrinfeldReport dr = drinfeld_u(h, qt);
    REQUIRE(dr.pass());
    CHECK(vec_eq(dr.u, h.unit));

    // the centralizer of H_s in M_2 is the diagonal, which is also H_t
    FactorizabilityReport fr = factorizability(h, qt);
    CHECK(fr.rank == 2);
    CHECK(fr.centralizer_dim == 2);
    CHECK(fr.factorizable);
    CHECK(fr.triangular);

    auto nu = ribbon_from_star(h, qt);
    REQUIRE(nu.has_value());
    CHECK(vec_eq(*nu, h.unit));
}

TEST_CASE("perturbed R-matrix is rejected with a named check", "[qtriang]") {
    QuantumGroupoid h = fixtures::pair2();
    SparseVec r = h.delta_one();
    r.emplace_back(pack2(4, 1, 2), Scalar(1));
    sv::normalize(r);
    AxiomReport rep = verify_qt(h, qt_from_r(h, r));
    REQUIRE_FALSE(rep.pass());
    CHECK(failed_check(rep, "r_membership"));
    CHECK(failed_check(rep, "r_rbar_corner"));
}

TEST_CASE("group-like detection", "[qtriang]") {
    QuantumGroupoid h = fixtures::z2();
    CHECK(is_group_like(h, h.unit));
    CHECK(is_group_like(h, h.basis_vec(1)));
    Vec sum = h.mul(h.unit, h.unit);
    sum[1] += Scalar(1);  // 1 + g is not invertible
    CHECK_FALSE(is_group_like(h, sum));
    CHECK_FALSE(is_group_like(h, h.zero()));
}

TEST_CASE("Drinfeld double of a group algebra", "[qtriang]") {
    QuantumGroupoid h = fixtures::z2();
    DoubleAlgebra d = drinfeld_double(h);

    REQUIRE(d.groupoid.n == 4);  // no amalgamation in the Hopf case
    REQUIRE(verify_axioms(d.groupoid).pass());
    REQUIRE(verify_qt(d.groupoid, d.qt).pass());
    REQUIRE(d.groupoid.star.has_value());

    SECTION("embeddings multiply to the class of a pure tensor") {
        for (int p = 0; p < 2; ++p)
            for (int k = 0; k < 2; ++k) {
                Vec amb(4, Scalar(0));
                amb[p * 2 + k] = Scalar(1);
                CHECK(vec_eq(d.groupoid.mul(d.embed_dual.column(p), d.embed_h.column(k)),
                             d.carrier.project(amb)));
            }
    }

    SECTION("the double is factorizable but not triangular") {
        FactorizabilityReport fr = factorizability(d.groupoid, d.qt);
        CHECK(fr.rank == 4);
        CHECK(fr.centralizer_dim == 4);
        CHECK(fr.factorizable);
        CHECK_FALSE(fr.triangular);
    }

    SECTION("Drinfeld element and a ribbon element") {
        DrinfeldReport dr = drinfeld_u(d.groupoid, d.qt);
        REQUIRE(dr.pass());
        CHECK(verify_ribbon(d.groupoid, d.qt, dr.u_inv).pass());
        auto nu = ribbon_from_star(d.groupoid, d.qt);
        REQUIRE(nu.has_value());
    }

    SECTION("dual of the double multiplies componentwise") {
        QuantumGroupoid dd = dual(d.groupoid);
        QuantumGroupoid hd = dual(h);
        for (int k = 0; k < 4; ++k) REQUIRE(d.carrier.section_index(k) == k);
        for (int p1 = 0; p1 < 2; ++p1)
            for (int k1 = 0; k1 < 2; ++k1)
                for (int p2 = 0; p2 < 2; ++p2)
                    for (int k2 = 0; k2 < 2; ++k2) {
                        Vec lhs = dd.mul(dd.basis_vec(p1 * 2 + k1), dd.basis_vec(p2 * 2 + k2));
                        Vec hp = h.mul(h.basis_vec(p1), h.basis_vec(p2));
                        Vec fp = hd.mul(hd.basis_vec(k2), hd.basis_vec(k1));
                        Vec rhs(4, Scalar(0));
                        for (int a = 0; a < 2; ++a)
                            for (int b = 0; b < 2; ++b) rhs[a * 2 + b] = hp[a] * fp[b];
                        CHECK(vec_eq(lhs, rhs));
                    }
        // unit of the dual is 1_(2) (x) (eps <- 1_(1)), here 1 (x) eps
        Vec unit_expected(4, Scalar(0));
        unit_expected[0] = Scalar(1);
        unit_expected[1] = Scalar(1);
        CHECK(vec_eq(dd.unit, unit_expected));
    }
}

TEST_CASE("Drinfeld double of a groupoid algebra", "[qtriang]") {
    QuantumGroupoid h = fixtures::pair2();
    DoubleAlgebra d = drinfeld_double(h);

    // amalgamation kills every class whose dual leg disagrees with the
    // target of the algebra leg, leaving one class per arrow
    REQUIRE(d.groupoid.n == 4);
    REQUIRE(verify_axioms(d.groupoid).pass());
    REQUIRE(verify_qt(d.groupoid, d.qt).pass());
    REQUIRE(d.groupoid.star.has_value());

    FactorizabilityReport fr = factorizability(d.groupoid, d.qt);
    CHECK(fr.rank == 2);
    CHECK(fr.centralizer_dim == 2);
    CHECK(fr.factorizable);

    DrinfeldReport dr = drinfeld_u(d.groupoid, d.qt);
    REQUIRE(dr.pass());
}

TEST_CASE("Drinfeld double of the smallest non-cocommutative Hopf algebra", "[qtriang]") {
    QuantumGroupoid h = fixtures::sweedler_h4();
    DoubleAlgebra d = drinfeld_double(h);

    REQUIRE(d.groupoid.n == 16);
    REQUIRE(verify_axioms(d.groupoid).pass());
    REQUIRE(verify_qt(d.groupoid, d.qt).pass());

    DrinfeldReport dr = drinfeld_u(d.groupoid, d.qt);
    REQUIRE(dr.pass());

    FactorizabilityReport fr = factorizability(d.groupoid, d.qt);
    CHECK(fr.rank == 16);
    CHECK(fr.factorizable);
    CHECK_FALSE(fr.triangular);
}
