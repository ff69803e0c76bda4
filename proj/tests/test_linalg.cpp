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

#include "whakit/linalg.hpp"
#include "whakit/parallel.hpp"

using whakit::AffineSolutionSpace;
using whakit::Matrix;
using whakit::Quotient;
using whakit::Scalar;
using whakit::Subspace;
using whakit::Vec;

namespace {

// deterministic small scalars for property sweeps
Scalar sample_scalar(unsigned long long& state) {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    long long n = static_cast<long long>(state % 7) - 3;
    if (state % 5 == 0) return Scalar(n) + Scalar::zeta(3, 1) * Scalar(static_cast<long long>(state % 3));
    return Scalar(n);
}

Matrix sample_matrix(int r, int c, unsigned long long& state) {
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m[i][j] = sample_scalar(state);
    return m;
}

}  // namespace

TEST_CASE("matrix product and identity", "[linalg]") {
    Matrix a(2, 3);
    a[0] = {Scalar(1), Scalar(2), Scalar(0)};
    a[1] = {Scalar(0), Scalar(1), Scalar(-1)};
    Matrix b(3, 2);
    b[0] = {Scalar(1), Scalar(1)};
    b[1] = {Scalar(0), Scalar(2)};
    b[2] = {Scalar(3), Scalar(0)};
    Matrix c = a * b;
    REQUIRE(c.rows() == 2);
    REQUIRE(c.cols() == 2);
    CHECK(c[0][0] == Scalar(1));
    CHECK(c[0][1] == Scalar(5));
    CHECK(c[1][0] == Scalar(-3));
    CHECK(c[1][1] == Scalar(2));

    Matrix id = Matrix::identity(3);
    CHECK(a * id == a);
    CHECK(Matrix::identity(2) * a == a);
    CHECK((a.transpose().transpose()) == a);
}

TEST_CASE("rank-1 system over Q(zeta_3) has kernel of dimension 1", "[linalg]") {
    // rows are proportional by zeta_3, so the rank is 1
    Scalar z = Scalar::zeta(3, 1);
    Matrix a(2, 2);
    a[0] = {Scalar(1), z};
    a[1] = {z, z * z};
    CHECK(whakit::rank(a) == 1);

    Matrix k = whakit::kernel(a);
    REQUIRE(k.cols() == 1);
    Vec v = k.column(0);
    Vec av = a.apply(v);
    CHECK(av[0].is_zero());
    CHECK(av[1].is_zero());
    bool nonzero = !v[0].is_zero() || !v[1].is_zero();
    CHECK(nonzero);
}

TEST_CASE("solve_affine returns particular plus kernel", "[linalg]") {
    Matrix a(2, 3);
    a[0] = {Scalar(1), Scalar(1), Scalar(0)};
    a[1] = {Scalar(0), Scalar(1), Scalar(1)};
    Vec b = {Scalar(3), Scalar(5)};
    AffineSolutionSpace s = whakit::solve_affine(a, b);
    REQUIRE(s.consistent);
    CHECK(s.kernel.cols() == 1);

    Vec ap = a.apply(s.particular);
    CHECK(ap[0] == Scalar(3));
    CHECK(ap[1] == Scalar(5));

    // shifting by any kernel vector still solves
    Vec shifted = s.particular;
    Vec k0 = s.kernel.column(0);
    for (size_t i = 0; i < shifted.size(); ++i) shifted[i] += Scalar(7) * k0[i];
    Vec asft = a.apply(shifted);
    CHECK(asft[0] == Scalar(3));
    CHECK(asft[1] == Scalar(5));

    SECTION("inconsistent system is reported") {
        Matrix c(2, 2);
        c[0] = {Scalar(1), Scalar(2)};
        c[1] = {Scalar(2), Scalar(4)};
        AffineSolutionSpace t = whakit::solve_affine(c, {Scalar(1), Scalar(3)});
        CHECK_FALSE(t.consistent);
        CHECK(t.kernel.cols() == 1);
    }
}

TEST_CASE("inverse over a cyclotomic field", "[linalg]") {
    Scalar z = Scalar::zeta(5, 1);
    Matrix a(2, 2);
    a[0] = {Scalar(1) + z, Scalar(2)};
    a[1] = {z * z, Scalar(1) - z};
    Matrix inv = whakit::inverse(a);
    CHECK(a * inv == Matrix::identity(2));
    CHECK(inv * a == Matrix::identity(2));

    Matrix sing(2, 2);
    sing[0] = {Scalar(1), Scalar(2)};
    sing[1] = {Scalar(2), Scalar(4)};
    CHECK_FALSE(whakit::try_inverse(sing).has_value());
    CHECK_THROWS_AS(whakit::inverse(sing), whakit::math_error);
}

TEST_CASE("solve_affine substitute-back property sweep", "[linalg]") {
    unsigned long long state = 0x9e3779b97f4a7c15ull;
    for (int trial = 0; trial < 25; ++trial) {
        int r = 2 + static_cast<int>(state % 3);
        int c = 2 + static_cast<int>((state >> 8) % 3);
        Matrix a = sample_matrix(r, c, state);
        // build rhs in the image so the system is consistent
        Vec x0(c);
        for (int j = 0; j < c; ++j) x0[j] = sample_scalar(state);
        Vec b = a.apply(x0);
        AffineSolutionSpace s = whakit::solve_affine(a, b);
        REQUIRE(s.consistent);
        Vec back = a.apply(s.particular);
        for (int i = 0; i < r; ++i) CHECK(back[i] == b[i]);
        CHECK(s.kernel.cols() == c - whakit::rank(a));
        for (int col = 0; col < s.kernel.cols(); ++col) {
            Vec kv = a.apply(s.kernel.column(col));
            for (int i = 0; i < r; ++i) CHECK(kv[i].is_zero());
        }
    }
}

TEST_CASE("subspace membership, reduction and intersection", "[linalg]") {
    Matrix rows(2, 4);
    rows[0] = {Scalar(1), Scalar(0), Scalar(1), Scalar(0)};
    rows[1] = {Scalar(0), Scalar(1), Scalar(0), Scalar(1)};
    Subspace u = Subspace::from_rows(rows);
    CHECK(u.dim() == 2);
    CHECK(u.contains({Scalar(2), Scalar(3), Scalar(2), Scalar(3)}));
    CHECK_FALSE(u.contains({Scalar(1), Scalar(0), Scalar(0), Scalar(0)}));

    auto coords = u.coords({Scalar(2), Scalar(-1), Scalar(2), Scalar(-1)});
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == Scalar(2));
    CHECK((*coords)[1] == Scalar(-1));

    Matrix rows2(2, 4);
    rows2[0] = {Scalar(1), Scalar(0), Scalar(1), Scalar(0)};
    rows2[1] = {Scalar(0), Scalar(0), Scalar(0), Scalar(1)};
    Subspace w = Subspace::from_rows(rows2);
    Subspace meet = Subspace::intersect(u, w);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains({Scalar(1), Scalar(0), Scalar(1), Scalar(0)}));
    CHECK(u.contains(meet.basis_vector(0)));
    CHECK(w.contains(meet.basis_vector(0)));
}

TEST_CASE("quotient projection and section", "[linalg]") {
    // kill (e0 - e1) in k^3: quotient has dimension 2
    Matrix rel(1, 3);
    rel[0] = {Scalar(1), Scalar(-1), Scalar(0)};
    Quotient q{Subspace::from_rows(rel)};
    REQUIRE(q.dim() == 2);

    Vec a = q.project({Scalar(1), Scalar(0), Scalar(0)});
    Vec b = q.project({Scalar(0), Scalar(1), Scalar(0)});
    CHECK(a == b);  // identified elements project equally

    // project . lift = identity on the quotient
    for (int k = 0; k < q.dim(); ++k) {
        Vec p = q.project(q.lift(k));
        for (int j = 0; j < q.dim(); ++j) CHECK(p[j] == (j == k ? Scalar(1) : Scalar(0)));
    }

    // lifting then projecting an arbitrary coset is stable
    Vec v = {Scalar(4), Scalar(7), Scalar(-2)};
    Vec pv = q.project(v);
    CHECK(q.project(q.lift_vec(pv)) == pv);
}

TEST_CASE("sparse vector normalization", "[linalg]") {
    whakit::SparseVec v;
    whakit::sv::add_term(v, 4, Scalar(2));
    whakit::sv::add_term(v, 1, Scalar(3));
    whakit::sv::add_term(v, 4, Scalar(-2));
    whakit::sv::add_term(v, 1, Scalar(1, 2));
    whakit::sv::normalize(v);
    REQUIRE(v.size() == 1);
    CHECK(v[0].first == 1);
    CHECK(v[0].second == Scalar(7, 2));

    Vec dense = whakit::sv::to_dense(v, 6);
    CHECK(dense[1] == Scalar(7, 2));
    CHECK(whakit::sv::from_dense(dense) == v);
}

TEST_CASE("parallel_for matches serial accumulation", "[linalg]") {
    const size_t n = 1000;
    std::vector<long long> out(n, 0);
    whakit::config::set_thread_count(4);
    whakit::parallel_for(n, [&](size_t i) { out[i] = static_cast<long long>(i * i); });
    whakit::config::set_thread_count(1);
    for (size_t i = 0; i < n; ++i) REQUIRE(out[i] == static_cast<long long>(i * i));
}
