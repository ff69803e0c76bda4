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
#include "whakit/constructors.hpp"
#include "whakit/repcat.hpp"

using whakit::Algebra;
using whakit::algebra_of;
using whakit::BratteliData;
using whakit::DoubleAlgebra;
using whakit::drinfeld_double;
using whakit::drinfeld_u;
using whakit::dual;
using whakit::elementary_wha;
using whakit::factorizability;
using whakit::FiniteGroupoid;
using whakit::functions_algebra;
using whakit::groupoid_algebra;
using whakit::inclusion_matrix;
using whakit::input_error;
using whakit::is_module;
using whakit::math_error;
using whakit::Matrix;
using whakit::matrix_algebra;
using whakit::ModuleRep;
using whakit::module_dual;
using whakit::module_regular;
using whakit::module_tensor;
using whakit::module_trivial;
using whakit::pack2;
using whakit::principal_graph_depth2;
using whakit::PrincipalGraphReport;
using whakit::qt_from_r;
using whakit::QTStructure;
using whakit::quantum_dimension;
using whakit::quantum_trace;
using whakit::QuantumGroupoid;
using whakit::ribbon_from_star;
using whakit::Scalar;
using whakit::s_matrix;
using whakit::separable_algebra_data;
using whakit::SMatrixReport;
using whakit::SparseVec;
using whakit::subalgebra;
using whakit::SubalgebraModel;
using whakit::TensorModule;
using whakit::Vec;
using whakit::verify_braiding;
using whakit::verify_duality;
using whakit::verify_qt;
using whakit::verify_ribbon;
using whakit::wedderburn;
using whakit::WedderburnData;

namespace {

Matrix int_matrix(std::initializer_list<std::initializer_list<int>> rows) {
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int v : row) m[i][j++] = Scalar(v);
        ++i;
    }
    return m;
}

SparseVec outer_vec(const QuantumGroupoid& h, const Vec& x, const Vec& y) {
    SparseVec out;
    for (int i = 0; i < h.n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < h.n; ++j)
            if (!y[j].is_zero()) whakit::sv::add_term(out, pack2(h.n, i, j), x[i] * y[j]);
    }
    return out;
}

}  // namespace

TEST_CASE("wedderburn data of small algebras", "[repcat]") {
    QuantumGroupoid pair2 = fixtures::pair2();

    SECTION("pair groupoid algebra is one M2 block") {
        WedderburnData wd = wedderburn(pair2);
        REQUIRE(wd.blocks.size() == 1);
        const auto& b = wd.blocks[0];
        CHECK(b.block_dim == 4);
        CHECK(b.irrep_dim == 2);
        CHECK(b.multiplicity == 2);
        CHECK(b.center_dim == 1);
        CHECK(b.split);
        CHECK(b.idempotent == pair2.unit);
        CHECK(b.character == Vec{Scalar(1), Scalar(0), Scalar(0), Scalar(1)});
        CHECK(is_module(pair2, b.irrep));
        CHECK(wd.all_split());
    }

    SECTION("dual of the pair groupoid splits into four lines") {
        WedderburnData wd = wedderburn(dual(pair2));
        REQUIRE(wd.blocks.size() == 4);
        for (const auto& b : wd.blocks) {
            CHECK(b.irrep_dim == 1);
            CHECK(b.multiplicity == 1);
            CHECK(b.end_dim == 1);
            CHECK(b.split);
        }
    }

    SECTION("group algebra of Z2 has the trivial and the sign character") {
        WedderburnData wd = wedderburn(fixtures::z2());
        REQUIRE(wd.blocks.size() == 2);
        bool triv = false, sign = false;
        for (const auto& b : wd.blocks) {
            REQUIRE(b.irrep_dim == 1);
            if (b.character == Vec{Scalar(1), Scalar(1)}) triv = true;
            if (b.character == Vec{Scalar(1), Scalar(-1)}) sign = true;
        }
        CHECK(triv);
        CHECK(sign);
    }

    SECTION("Z3 over the rationals keeps an honest unsplit block") {
        QuantumGroupoid z3 = groupoid_algebra(FiniteGroupoid::cyclic_group(3));
        WedderburnData wd = wedderburn(z3);
        REQUIRE(wd.blocks.size() == 2);
        CHECK(wd.blocks[0].irrep_dim == 1);
        CHECK(wd.blocks[0].split);
        CHECK(wd.blocks[1].irrep_dim == 2);
        CHECK_FALSE(wd.blocks[1].split);
        CHECK(wd.blocks[1].end_dim == 2);
        CHECK(wd.blocks[1].center_dim == 2);
        CHECK_FALSE(wd.all_split());
        CHECK(is_module(algebra_of(z3), wd.blocks[1].irrep));

        WedderburnData wd3 = wedderburn(algebra_of(z3), 3);
        REQUIRE(wd3.blocks.size() == 3);
        for (const auto& b : wd3.blocks) {
            CHECK(b.irrep_dim == 1);
            CHECK(b.split);
        }
    }

    SECTION("full matrix algebra") {
        WedderburnData wd = wedderburn(matrix_algebra(2));
        REQUIRE(wd.blocks.size() == 1);
        CHECK(wd.blocks[0].irrep_dim == 2);
        CHECK(wd.blocks[0].split);
    }

    SECTION("non-semisimple input is rejected") {
        CHECK_THROWS_AS(wedderburn(fixtures::sweedler_h4()), math_error);
    }
}

TEST_CASE("modules, truncated tensor products and duality", "[repcat]") {
    QuantumGroupoid pair2 = fixtures::pair2();

    SECTION("standard modules of the pair groupoid") {
        ModuleRep triv = module_trivial(pair2);
        ModuleRep reg = module_regular(pair2);
        REQUIRE(triv.dim == 2);
        REQUIRE(reg.dim == 4);
        CHECK(is_module(pair2, triv));
        CHECK(is_module(pair2, reg));
        CHECK(is_module(pair2, module_dual(pair2, triv)));

        TensorModule tt = module_tensor(pair2, triv, triv);
        CHECK(tt.mod.dim == 2);
        CHECK(is_module(pair2, tt.mod));
        TensorModule tr = module_tensor(pair2, triv, reg);
        CHECK(tr.mod.dim == 4);
        CHECK(is_module(pair2, tr.mod));
        // the truncation data is a section/retraction pair
        CHECK(tt.proj * tt.incl == Matrix::identity(tt.mod.dim));
        CHECK(tt.incl * tt.proj == tt.projector);
    }

    SECTION("rigidity holds on the pair groupoid") {
        WedderburnData wd = wedderburn(pair2);
        CHECK(verify_duality(pair2, module_trivial(pair2)).pass());
        CHECK(verify_duality(pair2, module_regular(pair2)).pass());
        CHECK(verify_duality(pair2, wd.blocks[0].irrep).pass());
    }

    SECTION("rigidity does not need semisimplicity") {
        QuantumGroupoid h4 = fixtures::sweedler_h4();
        CHECK(verify_duality(h4, module_regular(h4)).pass());
        CHECK(verify_duality(h4, module_trivial(h4)).pass());
    }

    SECTION("group-like case multiplies dimensions") {
        QuantumGroupoid z2 = fixtures::z2();
        ModuleRep reg = module_regular(z2);
        TensorModule rr = module_tensor(z2, reg, reg);
        CHECK(rr.mod.dim == 4);
        WedderburnData wd = wedderburn(z2);
        TensorModule ss = module_tensor(z2, wd.blocks[1].irrep, wd.blocks[1].irrep);
        CHECK(ss.mod.dim == 1);
    }
}

TEST_CASE("braidings and quantum dimensions on kZ2", "[repcat]") {
    QuantumGroupoid z2 = fixtures::z2();
    WedderburnData wd = wedderburn(z2);

    SECTION("symmetric structure R = 1 (x) 1") {
        QTStructure qt = qt_from_r(z2, outer_vec(z2, z2.unit, z2.unit));
        REQUIRE(verify_qt(z2, qt).pass());
        Vec nu = z2.unit;
        REQUIRE(verify_ribbon(z2, qt, nu).pass());
        for (const auto& b : wd.blocks) {
            auto qd = quantum_dimension(z2, qt, nu, b.irrep);
            REQUIRE(qd.scalar.has_value());
            CHECK(*qd.scalar == Scalar(1));
        }
        auto qreg = quantum_dimension(z2, qt, nu, module_regular(z2));
        REQUIRE(qreg.scalar.has_value());
        CHECK(*qreg.scalar == Scalar(2));
        CHECK(verify_braiding(z2, qt, wd.blocks[0].irrep, wd.blocks[1].irrep).pass());

        SMatrixReport sm = s_matrix(z2, qt, nu);
        CHECK(sm.s == int_matrix({{1, 1}, {1, 1}}));
        CHECK_FALSE(sm.modular);
    }

    SECTION("nontrivial bicharacter R is triangular, S degenerates") {
        SparseVec r;
        whakit::sv::add_term(r, pack2(2, 0, 0), Scalar(1, 2));
        whakit::sv::add_term(r, pack2(2, 0, 1), Scalar(1, 2));
        whakit::sv::add_term(r, pack2(2, 1, 0), Scalar(1, 2));
        whakit::sv::add_term(r, pack2(2, 1, 1), Scalar(-1, 2));
        QTStructure qt = qt_from_r(z2, r);
        REQUIRE(verify_qt(z2, qt).pass());
        CHECK(drinfeld_u(z2, qt).u == z2.basis_vec(1));
        auto nu = ribbon_from_star(z2, qt);
        REQUIRE(nu.has_value());
        CHECK(verify_braiding(z2, qt, wd.blocks[0].irrep, wd.blocks[1].irrep).pass());
        CHECK(factorizability(z2, qt).triangular);

        // triangular, so S_ij is the product of the quantum dimensions
        Vec unu = z2.mul(drinfeld_u(z2, qt).u, *nu);
        std::vector<Scalar> qdim(wd.blocks.size());
        for (size_t i = 0; i < wd.blocks.size(); ++i) {
            auto qd = quantum_dimension(z2, qt, *nu, wd.blocks[i].irrep);
            REQUIRE(qd.scalar.has_value());
            qdim[i] = *qd.scalar;
            // for a one dimensional module the quantum dimension is chi(u nu)
            Scalar chi;
            for (int a = 0; a < z2.n; ++a) chi += unu[a] * wd.blocks[i].character[a];
            CHECK(qdim[i] == chi);
        }
        SMatrixReport sm = s_matrix(z2, qt, *nu);
        for (size_t i = 0; i < wd.blocks.size(); ++i)
            for (size_t j = 0; j < wd.blocks.size(); ++j)
                CHECK(sm.s[static_cast<int>(i)][static_cast<int>(j)] == qdim[i] * qdim[j]);
        CHECK_FALSE(sm.modular);
    }
}

TEST_CASE("the double of kZ2 is modular", "[repcat]") {
    DoubleAlgebra dd = drinfeld_double(fixtures::z2());
    const QuantumGroupoid& D = dd.groupoid;
    REQUIRE(D.n == 4);
    REQUIRE(verify_qt(D, dd.qt).pass());
    auto nu = ribbon_from_star(D, dd.qt);
    REQUIRE(nu.has_value());

    WedderburnData wd = wedderburn(D);
    REQUIRE(wd.blocks.size() == 4);
    for (const auto& b : wd.blocks) {
        CHECK(b.irrep_dim == 1);
        CHECK(b.split);
    }
    // deterministic block order: the trivial representation lands second
    CHECK(wd.blocks[0].character == Vec{Scalar(1), Scalar(-1), Scalar(0), Scalar(0)});
    CHECK(wd.blocks[1].character == Vec{Scalar(1), Scalar(1), Scalar(0), Scalar(0)});
    CHECK(wd.blocks[2].character == Vec{Scalar(0), Scalar(0), Scalar(1), Scalar(-1)});
    CHECK(wd.blocks[3].character == Vec{Scalar(0), Scalar(0), Scalar(1), Scalar(1)});

    SMatrixReport sm = s_matrix(D, dd.qt, *nu);
    CHECK(sm.modular);
    CHECK(sm.all_split);
    CHECK(sm.factorizable);
    CHECK(sm.haar);
    CHECK(sm.hypotheses_hold);
    CHECK(sm.irrep_dims == std::vector<int>{1, 1, 1, 1});
    // entry values recorded from an independent brute-force run; exact
    Matrix expected = int_matrix({{1, 1, -1, -1}, {1, 1, 1, 1}, {-1, 1, 1, -1}, {-1, 1, -1, 1}});
    CHECK(sm.s == expected);

    SECTION("categorical route agrees entry for entry") {
        const int k = static_cast<int>(wd.blocks.size());
        Matrix cat(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                const ModuleRep& vi = wd.blocks[i].irrep;
                const ModuleRep& vj = wd.blocks[j].irrep;
                TensorModule tji = module_tensor(D, vj, vi);
                TensorModule tij = module_tensor(D, vi, vj);
                Matrix c1 = whakit::braiding_ambient(D, dd.qt, vj, vi);
                Matrix c2 = whakit::braiding_ambient(D, dd.qt, vi, vj);
                Matrix c1r = tij.proj * (c1 * tji.incl);
                Matrix c2r = tji.proj * (c2 * tij.incl);
                auto tq = quantum_trace(D, dd.qt, *nu, tji.mod, c2r * c1r);
                REQUIRE(tq.scalar.has_value());
                cat[i][j] = *tq.scalar;
            }
        CHECK(cat == sm.s);
    }

    SECTION("braiding and duality checks on irreps") {
        CHECK(verify_braiding(D, dd.qt, wd.blocks[0].irrep, wd.blocks[1].irrep).pass());
        CHECK(verify_duality(D, wd.blocks[2].irrep).pass());
    }
}

TEST_CASE("quantum traces valued in the trivial subalgebra", "[repcat]") {
    QuantumGroupoid pair2 = fixtures::pair2();
    QTStructure qt = qt_from_r(pair2, pair2.delta_one());
    REQUIRE(verify_qt(pair2, qt).pass());
    Vec nu = pair2.unit;
    REQUIRE(verify_ribbon(pair2, qt, nu).pass());
    WedderburnData wd = wedderburn(pair2);

    auto qd = quantum_dimension(pair2, qt, nu, wd.blocks[0].irrep);
    REQUIRE(qd.scalar.has_value());
    CHECK(*qd.scalar == Scalar(1));
    CHECK(qd.on_trivial == Matrix::identity(2));
    auto qtr = quantum_dimension(pair2, qt, nu, module_trivial(pair2));
    REQUIRE(qtr.scalar.has_value());
    CHECK(*qtr.scalar == Scalar(1));
    auto qrg = quantum_dimension(pair2, qt, nu, module_regular(pair2));
    REQUIRE(qrg.scalar.has_value());
    CHECK(*qrg.scalar == Scalar(2));

    // a map that is not a module map is rejected before any trace is taken
    Matrix not_linear(2, 2);
    not_linear[0][0] = Scalar(1);
    CHECK_THROWS_AS(quantum_trace(pair2, qt, nu, wd.blocks[0].irrep, not_linear), input_error);

    // one simple object of quantum dimension one: S = (1) and is invertible
    SMatrixReport sm = s_matrix(pair2, qt, nu);
    CHECK(sm.s == int_matrix({{1}}));
    CHECK(sm.modular);
}

TEST_CASE("inclusion matrices and Bratteli diagrams", "[repcat]") {
    Algebra triv;
    triv.n = 1;
    triv.mult = {SparseVec{{0, Scalar(1)}}};
    triv.unit = Vec{Scalar(1)};
    triv.labels = {"1"};

    SECTION("scalars inside a matrix algebra") {
        Algebra m2 = matrix_algebra(2);
        Matrix emb(m2.n, 1);
        emb.set_column(0, m2.unit);
        BratteliData b = inclusion_matrix(triv, m2, emb);
        CHECK(b.sub_dims == std::vector<int>{1});
        CHECK(b.big_dims == std::vector<int>{2});
        CHECK(b.mult == std::vector<std::vector<int>>{{2}});
        CHECK(b.components == 1);
        CHECK(b.json() == "{\"sub\":[1],\"big\":[2],\"mult\":[[2]],\"components\":1}");
        // doubled edge rendered as two parallel lines
        std::string dot = b.dot();
        auto first = dot.find("a0 -- b0");
        REQUIRE(first != std::string::npos);
        CHECK(dot.find("a0 -- b0", first + 1) != std::string::npos);
    }

    SECTION("scalars inside the function algebra") {
        Algebra kk = functions_algebra(2);
        Matrix emb(kk.n, 1);
        emb.set_column(0, kk.unit);
        BratteliData b = inclusion_matrix(triv, kk, emb);
        CHECK(b.mult == std::vector<std::vector<int>>{{1, 1}});
        CHECK(b.components == 1);
    }

    SECTION("counital base inside the pair groupoid algebra") {
        QuantumGroupoid pair2 = fixtures::pair2();
        Algebra amb = algebra_of(pair2);
        SubalgebraModel sub = subalgebra(amb, pair2.counital_target_matrix(), "t");
        REQUIRE(sub.algebra.n == 2);
        BratteliData b = inclusion_matrix(sub.algebra, amb, sub.embed);
        CHECK(b.mult == std::vector<std::vector<int>>{{1}, {1}});
        CHECK(b.json() == "{\"sub\":[1,1],\"big\":[2],\"mult\":[[1],[1]],\"components\":1}");
    }

    SECTION("bad embeddings are rejected") {
        Algebra m2 = matrix_algebra(2);
        Matrix bad(m2.n, 1);
        bad.set_column(0, m2.basis_vec(0));
        CHECK_THROWS_AS(inclusion_matrix(triv, m2, bad), input_error);
        Matrix shaped(1, 1);
        CHECK_THROWS_AS(inclusion_matrix(triv, m2, shaped), input_error);
    }
}

TEST_CASE("principal graphs at depth two", "[repcat]") {
    SECTION("kZ2 gives the A3 diagram") {
        PrincipalGraphReport pg = principal_graph_depth2(fixtures::z2());
        CHECK(pg.graph.sub_dims == std::vector<int>{1});
        CHECK(pg.graph.big_dims == std::vector<int>{1, 1});
        CHECK(pg.graph.mult == std::vector<std::vector<int>>{{1, 1}});
        CHECK(pg.graph.components == 1);
        CHECK(pg.biconnected);
    }

    SECTION("kZ3 gives the three edge star") {
        QuantumGroupoid z3 = groupoid_algebra(FiniteGroupoid::cyclic_group(3));
        PrincipalGraphReport pg = principal_graph_depth2(z3);
        CHECK(pg.graph.sub_dims == std::vector<int>{1});
        CHECK(pg.graph.big_dims == std::vector<int>{1, 1, 1});
        CHECK(pg.graph.mult == std::vector<std::vector<int>>{{1, 1, 1}});
    }

    SECTION("dual of kZ2 stays connected") {
        PrincipalGraphReport pg = principal_graph_depth2(dual(fixtures::z2()));
        CHECK(pg.graph.components == 1);
    }

    SECTION("pair groupoid keeps both components of its full diagram") {
        PrincipalGraphReport pg = principal_graph_depth2(fixtures::pair2());
        CHECK(pg.full.components == 2);
        CHECK(pg.graph.components == 2);
        CHECK_FALSE(pg.biconnected);
    }

    SECTION("non-semisimple dual is rejected") {
        CHECK_THROWS_AS(principal_graph_depth2(fixtures::sweedler_h4()), math_error);
    }
}

TEST_CASE("representation data of an elementary quantum groupoid", "[repcat]") {
    auto sep = separable_algebra_data(matrix_algebra(2));
    QuantumGroupoid h1 = elementary_wha(sep, sep.B.unit);
    WedderburnData wd = wedderburn(h1);
    REQUIRE(wd.blocks.size() == 1);
    CHECK(wd.blocks[0].irrep_dim == 4);
    CHECK(wd.blocks[0].split);
    ModuleRep triv = module_trivial(h1);
    CHECK(triv.dim == 4);
    CHECK(verify_duality(h1, triv).pass());
    // not cocommutative, so Delta(1) fails the hexagon checks
    QTStructure qt = qt_from_r(h1, h1.delta_one());
    CHECK_FALSE(verify_qt(h1, qt).pass());
}
