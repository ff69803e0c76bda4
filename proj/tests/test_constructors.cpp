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
#include "whakit/constructors.hpp"
#include "whakit/groupoid.hpp"
#include "whakit/integrals.hpp"

using whakit::Algebra;
using whakit::algebra_inverse;
using whakit::algebra_of;
using whakit::counital_subalgebra;
using whakit::elementary_wha;
using whakit::FiniteGroupoid;
using whakit::functions_algebra;
using whakit::groupoid_algebra;
using whakit::groupoid_function_algebra;
using whakit::HopfActionData;
using whakit::matrix_algebra;
using whakit::pack2;
using whakit::QuantumGroupoid;
using whakit::Scalar;
using whakit::separable_algebra_data;
using whakit::SeparableAlgebraData;
using whakit::Side;
using whakit::SparseVec;
using whakit::Subspace;
using whakit::transformation_wha;
using whakit::trivial_hopf;
using whakit::Vec;
using whakit::verify_axioms;

namespace {

bool same_structure(const QuantumGroupoid& a, const QuantumGroupoid& b) {
    if (a.n != b.n) return false;
    for (size_t i = 0; i < a.mult.size(); ++i)
        if (!(a.mult[i] == b.mult[i])) return false;
    if (!whakit::detail::vec_eq(a.unit, b.unit)) return false;
    if (!whakit::detail::vec_eq(a.counit, b.counit)) return false;
    for (int i = 0; i < a.n; ++i) {
        if (!(a.comult[i] == b.comult[i])) return false;
        if (!whakit::detail::vec_eq(a.antipode.column(i), b.antipode.column(i))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("groupoid table validation", "[constructors]") {
    FiniteGroupoid g = FiniteGroupoid::pair_groupoid(2);
    REQUIRE_NOTHROW(g.validate());
    SECTION("broken inverse") {
        g.inverse[1] = 1;  // g12^{-1} must be g21
        CHECK_THROWS_AS(g.validate(), whakit::input_error);
    }
    SECTION("composability mismatch") {
        g.compose[1][1] = 0;  // g12 g12 undefined in the pair groupoid
        CHECK_THROWS_AS(g.validate(), whakit::input_error);
    }
    SECTION("bad identity") {
        g.identity[0] = 1;
        CHECK_THROWS_AS(g.validate(), whakit::input_error);
    }
}

TEST_CASE("pair groupoid algebra oracle values", "[constructors]") {
    QuantumGroupoid h = groupoid_algebra(FiniteGroupoid::pair_groupoid(2));
    REQUIRE(h.n == 4);
    REQUIRE(h.labels.size() == 4);
    CHECK(h.labels[1] == "g12");
    // 1 = g11 + g22
    Vec unit = h.zero();
    unit[0] = Scalar(1);
    unit[3] = Scalar(1);
    CHECK(h.unit == unit);
    // g12 g21 = g11, g12 g12 = 0
    CHECK(h.mul(h.basis_vec(1), h.basis_vec(2)) == h.basis_vec(0));
    CHECK(h.is_zero_vec(h.mul(h.basis_vec(1), h.basis_vec(1))));
    // counit is 1 on every morphism, S(g12) = g21 = g12^*
    CHECK(h.eps(h.basis_vec(1)) == Scalar(1));
    CHECK(h.apply_S(h.basis_vec(1)) == h.basis_vec(2));
    REQUIRE(h.star.has_value());
    CHECK(h.apply_star(h.basis_vec(1)) == h.basis_vec(2));
    CHECK(verify_axioms(h).pass());
    // dim H_t equals the number of objects
    CHECK(counital_subalgebra(h, Side::target).dim() == 2);
}

TEST_CASE("one object groupoid gives an ordinary Hopf algebra", "[constructors]") {
    QuantumGroupoid h = groupoid_algebra(FiniteGroupoid::cyclic_group(2));
    REQUIRE(h.n == 2);
    CHECK(h.unit == h.basis_vec(0));
    // Delta(1) = 1 (x) 1
    whakit::SparseVec d1 = h.delta_one();
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].first == whakit::pack2(2, 0, 0));
    CHECK(counital_subalgebra(h, Side::target).dim() == 1);
    CHECK(verify_axioms(h).pass());
}

TEST_CASE("disjoint union groupoid algebra", "[constructors]") {
    auto g = FiniteGroupoid::disjoint_union(FiniteGroupoid::cyclic_group(2),
                                            FiniteGroupoid::cyclic_group(2));
    REQUIRE_NOTHROW(g.validate());
    QuantumGroupoid h = groupoid_algebra(g);
    REQUIRE(h.n == 4);
    CHECK(counital_subalgebra(h, Side::target).dim() == 2);
    CHECK(verify_axioms(h).pass());
    // cross terms vanish
    CHECK(h.is_zero_vec(h.mul(h.basis_vec(0), h.basis_vec(2))));
}

TEST_CASE("function algebra of a groupoid", "[constructors]") {
    QuantumGroupoid f = groupoid_function_algebra(FiniteGroupoid::pair_groupoid(2));
    REQUIRE(f.n == 4);
    CHECK(verify_axioms(f).pass());
    // pointwise product of indicator functions
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Vec prod = f.mul(f.basis_vec(i), f.basis_vec(j));
            if (i == j)
                CHECK(prod == f.basis_vec(i));
            else
                CHECK(f.is_zero_vec(prod));
        }
    // unit is the constant function 1
    Vec ones(4, Scalar(1));
    CHECK(f.unit == ones);
    // eps_t(p_g) = sum over v with v v^{-1} = g; nonzero only on identities
    Vec et0 = f.counital_t(f.basis_vec(0));  // p_{g11}
    Vec expect = f.zero();
    expect[0] = Scalar(1);
    expect[1] = Scalar(1);  // g12 g12^{-1} = g11
    CHECK(et0 == expect);
    CHECK(f.is_zero_vec(f.counital_t(f.basis_vec(1))));
    // counit evaluates at the units: eps(p_g) = <p_g, 1>
    CHECK(f.counit[0] == Scalar(1));
    CHECK(f.counit[1] == Scalar(0));
    CHECK(f.counit[3] == Scalar(1));
}

TEST_CASE("larger pair groupoid still checks out", "[constructors]") {
    QuantumGroupoid h = groupoid_algebra(FiniteGroupoid::pair_groupoid(3));
    REQUIRE(h.n == 9);
    CHECK(verify_axioms(h).pass());
    CHECK(counital_subalgebra(h, Side::target).dim() == 3);
    CHECK(counital_subalgebra(h, Side::source).dim() == 3);
}

TEST_CASE("separability data from the regular trace", "[constructors]") {
    SECTION("matrix algebra") {
        Algebra b = matrix_algebra(2);
        SeparableAlgebraData sep = separable_algebra_data(b);
        REQUIRE_NOTHROW(sep.validate());
        // omega = 2 tr, e = (1/2) sum_ij E_ij (x) E_ji
        CHECK(sep.omega[0] == Scalar(2));
        CHECK(sep.omega[1] == Scalar(0));
        CHECK(sep.omega[3] == Scalar(2));
        SparseVec expect = {{pack2(4, 0, 0), Scalar(1, 2)},
                            {pack2(4, 1, 2), Scalar(1, 2)},
                            {pack2(4, 2, 1), Scalar(1, 2)},
                            {pack2(4, 3, 3), Scalar(1, 2)}};
        CHECK(sep.e == expect);
    }
    SECTION("functions on two points") {
        SeparableAlgebraData sep = separable_algebra_data(functions_algebra(2));
        CHECK(sep.omega == Vec{Scalar(1), Scalar(1)});
        SparseVec expect = {{pack2(2, 0, 0), Scalar(1)}, {pack2(2, 1, 1), Scalar(1)}};
        CHECK(sep.e == expect);
    }
    SECTION("dual numbers are not separable") {
        // basis {1, x} with x^2 = 0: the regular trace form degenerates
        Algebra d;
        d.n = 2;
        d.mult.assign(4, {});
        d.mult[pack2(2, 0, 0)] = {{0, Scalar(1)}};
        d.mult[pack2(2, 0, 1)] = {{1, Scalar(1)}};
        d.mult[pack2(2, 1, 0)] = {{1, Scalar(1)}};
        d.unit = d.basis_vec(0);
        REQUIRE_NOTHROW(d.validate());
        CHECK_THROWS_AS(separable_algebra_data(d), whakit::math_error);
    }
}

TEST_CASE("elementary quantum groupoid on a matrix algebra", "[constructors]") {
    Algebra b = matrix_algebra(2);
    SeparableAlgebraData sep = separable_algebra_data(b);
    Vec q(4, Scalar(0));
    q[0] = Scalar(5, 2);
    q[3] = Scalar(5, 8);  // tr(q^{-1}) = 2
    QuantumGroupoid h = elementary_wha(sep, q);
    REQUIRE(h.n == 16);
    CHECK(verify_axioms(h).pass());
    CHECK(whakit::is_semisimple(h));

    SECTION("squared antipode is conjugation by q (x) q^{-1}") {
        Vec qi = *algebra_inverse(b, q);
        Vec big(16, Scalar(0)), bigi(16, Scalar(0));
        for (int s = 0; s < 4; ++s)
            for (int t = 0; t < 4; ++t) {
                big[pack2(4, s, t)] = q[s] * qi[t];
                bigi[pack2(4, s, t)] = qi[s] * q[t];
            }
        for (int i = 0; i < h.n; ++i) {
            Vec s2 = h.apply_S(h.apply_S(h.basis_vec(i)));
            Vec ad = h.mul(h.mul(big, h.basis_vec(i)), bigi);
            CHECK(whakit::detail::vec_eq(s2, ad));
        }
    }
    SECTION("counital subalgebras are the two tensor legs") {
        Subspace ht = Subspace::from_columns(h.counital_target_matrix());
        Subspace hs = Subspace::from_columns(h.counital_source_matrix());
        CHECK(ht.dim() == 4);
        CHECK(hs.dim() == 4);
        for (int r = 0; r < 4; ++r) {
            Vec left(16, Scalar(0)), right(16, Scalar(0));
            for (int s = 0; s < 4; ++s) {
                left[pack2(4, r, s)] = b.unit[s];
                right[pack2(4, s, r)] = b.unit[s];
            }
            CHECK(ht.contains(left));
            CHECK(hs.contains(right));
        }
    }
    SECTION("wrong normalization is rejected") {
        Vec bad(4, Scalar(0));
        bad[0] = Scalar(8, 5);
        bad[3] = Scalar(2, 5);  // tr(q) = 2 but tr(q^{-1}) != 2
        CHECK_THROWS_AS(elementary_wha(sep, bad), whakit::input_error);
        CHECK_THROWS_AS(elementary_wha(sep, sep.B.basis_vec(1)), whakit::input_error);
    }
}

TEST_CASE("elementary groupoid of a function algebra is a pair groupoid dual",
          "[constructors]") {
    SeparableAlgebraData sep = separable_algebra_data(functions_algebra(2));
    QuantumGroupoid h = elementary_wha(sep, sep.B.unit);
    REQUIRE(h.n == 4);
    CHECK(verify_axioms(h).pass());
    QuantumGroupoid f = groupoid_function_algebra(FiniteGroupoid::pair_groupoid(2));
    CHECK(same_structure(h, f));
}

TEST_CASE("quantum transformation groupoid from a Hopf action", "[constructors]") {
    SeparableAlgebraData pts = separable_algebra_data(functions_algebra(2));

    SECTION("Z/2 swapping two points") {
        HopfActionData d;
        d.hopf = fixtures::z2();
        d.mod = pts;
        d.act.assign(4, {});
        d.act[0 * 2 + 0] = {{0, Scalar(1)}};
        d.act[0 * 2 + 1] = {{1, Scalar(1)}};
        d.act[1 * 2 + 0] = {{1, Scalar(1)}};
        d.act[1 * 2 + 1] = {{0, Scalar(1)}};
        QuantumGroupoid t = transformation_wha(d);
        REQUIRE(t.n == 8);
        CHECK(verify_axioms(t).pass());
        CHECK(whakit::rank(t.counital_target_matrix()) == 2);
        CHECK(whakit::rank(t.counital_source_matrix()) == 2);
        CHECK(whakit::is_semisimple(t));
    }
    SECTION("broken action is rejected") {
        HopfActionData d;
        d.hopf = fixtures::z2();
        d.mod = pts;
        d.act.assign(4, {});
        d.act[0 * 2 + 0] = {{0, Scalar(1)}};
        d.act[0 * 2 + 1] = {{1, Scalar(1)}};
        d.act[1 * 2 + 0] = {{0, Scalar(1)}};  // g fixes p0 but squashes p1: not an action
        d.act[1 * 2 + 1] = {{0, Scalar(1)}};
        CHECK_THROWS_AS(transformation_wha(d), whakit::math_error);
    }
    SECTION("trivial Hopf algebra gives the elementary groupoid") {
        HopfActionData d;
        d.hopf = trivial_hopf();
        d.mod = pts;
        d.act.assign(2, {});
        d.act[0] = {{0, Scalar(1)}};
        d.act[1] = {{1, Scalar(1)}};
        QuantumGroupoid t = transformation_wha(d);
        QuantumGroupoid e = elementary_wha(pts, pts.B.unit);
        CHECK(same_structure(t, e));
    }
}
