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

#ifndef WHAKIT_STRUCTURE_HPP
#define WHAKIT_STRUCTURE_HPP

#include <string>

#include "whakit/wha.hpp"

namespace whakit {

enum class Side { target, source };

/// eps_t(x) or eps_s(x).
inline Vec counital(const QuantumGroupoid& H, const Vec& x, Side side) {
    return side == Side::target ? H.counital_t(x) : H.counital_s(x);
}

/// H_t or H_s as a subspace of H (image of the counital map).
inline Subspace counital_subalgebra(const QuantumGroupoid& H, Side side) {
    const Matrix& m =
        side == Side::target ? H.counital_target_matrix() : H.counital_source_matrix();
    return Subspace::from_columns(m);
}

/// Matrix of left multiplication by basis element e_j.
inline Matrix left_mult_matrix(const QuantumGroupoid& H, int j) {
    Matrix out(H.n, H.n);
    for (int i = 0; i < H.n; ++i)
        for (const auto& [k, c] : H.mult_basis(j, i)) out[k][i] += c;
    return out;
}

/// Matrix of right multiplication by basis element e_j.
inline Matrix right_mult_matrix(const QuantumGroupoid& H, int j) {
    Matrix out(H.n, H.n);
    for (int i = 0; i < H.n; ++i)
        for (const auto& [k, c] : H.mult_basis(i, j)) out[k][i] += c;
    return out;
}

/// Matrix of left multiplication by an element x.
inline Matrix left_mult_matrix(const QuantumGroupoid& H, const Vec& x) {
    Matrix out(H.n, H.n);
    for (int j = 0; j < H.n; ++j) {
        if (x[j].is_zero()) continue;
        for (int i = 0; i < H.n; ++i)
            for (const auto& [k, c] : H.mult_basis(j, i)) out[k][i] += x[j] * c;
    }
    return out;
}

inline Matrix right_mult_matrix(const QuantumGroupoid& H, const Vec& x) {
    Matrix out(H.n, H.n);
    for (int j = 0; j < H.n; ++j) {
        if (x[j].is_zero()) continue;
        for (int i = 0; i < H.n; ++i)
            for (const auto& [k, c] : H.mult_basis(i, j)) out[k][i] += x[j] * c;
    }
    return out;
}

/// Columns spanning the centralizer of the chosen counital subalgebra.
inline Matrix centralizer_columns(const QuantumGroupoid& H, Side side) {
    Matrix proj =
        side == Side::target ? H.counital_target_matrix() : H.counital_source_matrix();
    Subspace sub = Subspace::from_columns(proj);
    Matrix sys(sub.dim() * H.n, H.n);
    for (int b = 0; b < sub.dim(); ++b) {
        Matrix d = right_mult_matrix(H, sub.basis_vector(b)) -
                   left_mult_matrix(H, sub.basis_vector(b));
        for (int r = 0; r < H.n; ++r)
            for (int c = 0; c < H.n; ++c) sys[b * H.n + r][c] = d[r][c];
    }
    return kernel(sys);
}

/// Center of the underlying algebra, via iterated kernel intersection.
inline Subspace center(const QuantumGroupoid& H) {
    const int n = H.n;
    Matrix basis = Matrix::identity(n);  // columns span the candidate space
    for (int j = 0; j < n; ++j) {
        if (basis.cols() == 0) break;
        Matrix con = left_mult_matrix(H, j) - right_mult_matrix(H, j);
        Matrix restricted = con * basis;
        if (restricted.is_zero()) continue;
        Matrix ker = kernel(restricted);
        basis = basis * ker;
    }
    return Subspace::from_columns(basis);
}

/**
 * @brief The dual quantum groupoid on the dual basis, with
 * (phi psi)(x) = (phi (x) psi)(Delta x) and Delta(phi)(x (x) y) = phi(xy).
 */
inline QuantumGroupoid dual(const QuantumGroupoid& H) {
    const int n = H.n;
    QuantumGroupoid D;
    D.n = n;
    D.mult.assign(static_cast<size_t>(n) * n, SparseVec());
    D.comult.assign(n, SparseVec());
    D.unit = H.counit;
    D.counit = H.unit;
    for (int a = 0; a < n; ++a) {
        for (const auto& [ij, c] : H.delta_basis(a)) {
            auto [i, j] = unpack2(n, ij);
            D.mult[pack2(n, i, j)].emplace_back(a, c);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [a, c] : H.mult_basis(i, j))
                D.comult[a].emplace_back(pack2(n, i, j), c);
    D.antipode = H.antipode.transpose();
    if (H.star) {
        Matrix cs(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) cs[r][c] = (*H.star)[r][c].conj();
        D.star = (cs * H.antipode).transpose();
    }
    if (!H.labels.empty()) {
        D.labels.resize(n);
        for (int i = 0; i < n; ++i) D.labels[i] = H.labels[i] + "^";
    }
    D.finalize();
    return D;
}

enum class Derived { op, cop, opcop };

/// Opposite / co-opposite / bi-opposite structure on the same basis.
inline QuantumGroupoid derive(const QuantumGroupoid& H, Derived which) {
    const int n = H.n;
    QuantumGroupoid R;
    R.n = n;
    R.unit = H.unit;
    R.counit = H.counit;
    R.labels = H.labels;
    R.star = H.star;
    bool flip_mult = (which == Derived::op || which == Derived::opcop);
    bool flip_comult = (which == Derived::cop || which == Derived::opcop);
    R.mult.assign(static_cast<size_t>(n) * n, SparseVec());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            R.mult[pack2(n, i, j)] = flip_mult ? H.mult_basis(j, i) : H.mult_basis(i, j);
    R.comult.assign(n, SparseVec());
    for (int a = 0; a < n; ++a)
        R.comult[a] = flip_comult ? ten2_flip(H.delta_basis(a), n) : H.delta_basis(a);
    if (which == Derived::opcop) {
        R.antipode = H.antipode;
    } else {
        R.antipode = H.antipode_inverse();
    }
    R.finalize();
    return R;
}

/// Tensor product H (x) K on the packed basis e_i (x) f_j  ->  i*dim(K)+j.
inline QuantumGroupoid tensor_product(const QuantumGroupoid& H, const QuantumGroupoid& K) {
    const int n1 = H.n, n2 = K.n, n = n1 * n2;
    QuantumGroupoid T;
    T.n = n;
    auto ix = [n2](int a, int b) { return static_cast<long long>(a) * n2 + b; };
    T.mult.assign(static_cast<size_t>(n) * n, SparseVec());
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            for (int c = 0; c < n1; ++c)
                for (int d = 0; d < n2; ++d) {
                    SparseVec& out = T.mult[pack2(n, static_cast<int>(ix(a, b)),
                                                  static_cast<int>(ix(c, d)))];
                    for (const auto& [p, x] : H.mult_basis(a, c))
                        for (const auto& [q, y] : K.mult_basis(b, d))
                            out.emplace_back(ix(p, q), x * y);
                }
    T.unit.assign(n, Scalar(0));
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            if (!H.unit[a].is_zero() && !K.unit[b].is_zero())
                T.unit[ix(a, b)] = H.unit[a] * K.unit[b];
    T.comult.assign(n, SparseVec());
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b) {
            SparseVec& out = T.comult[ix(a, b)];
            for (const auto& [jk, x] : H.delta_basis(a)) {
                auto [j1, k1] = unpack2(n1, jk);
                for (const auto& [jk2, y] : K.delta_basis(b)) {
                    auto [j2, k2] = unpack2(n2, jk2);
                    out.emplace_back(pack2(n, static_cast<int>(ix(j1, j2)),
                                           static_cast<int>(ix(k1, k2))),
                                     x * y);
                }
            }
        }
    T.counit.assign(n, Scalar(0));
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b) T.counit[ix(a, b)] = H.counit[a] * K.counit[b];
    T.antipode = Matrix(n, n);
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            for (int p = 0; p < n1; ++p)
                for (int q = 0; q < n2; ++q) {
                    Scalar v = H.antipode[p][a] * K.antipode[q][b];
                    if (!v.is_zero()) T.antipode[ix(p, q)][ix(a, b)] = v;
                }
    if (H.star && K.star) {
        Matrix st(n, n);
        for (int a = 0; a < n1; ++a)
            for (int b = 0; b < n2; ++b)
                for (int p = 0; p < n1; ++p)
                    for (int q = 0; q < n2; ++q) {
                        Scalar v = (*H.star)[p][a] * (*K.star)[q][b];
                        if (!v.is_zero()) st[ix(p, q)][ix(a, b)] = v;
                    }
        T.star = st;
    }
    if (!H.labels.empty() && !K.labels.empty()) {
        T.labels.resize(n);
        for (int a = 0; a < n1; ++a)
            for (int b = 0; b < n2; ++b) T.labels[ix(a, b)] = H.labels[a] + "(x)" + K.labels[b];
    }
    T.finalize();
    return T;
}

struct MorphismReport {
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> failures;  // (check, witness)

    std::string summary() const {
        std::string s = pass ? "morphism: pass\n" : "morphism: FAIL\n";
        for (const auto& [k, w] : failures) s += "  " + k + ": " + w + "\n";
        return s;
    }
};

/**
 * @brief Check that the linear map given by matrix f (columns = images of
 * the H basis, expressed in the K basis) is a homomorphism of quantum
 * groupoids.
 */
inline MorphismReport check_morphism(const QuantumGroupoid& H, const QuantumGroupoid& K,
                                     const Matrix& f) {
    MorphismReport rep;
    if (f.rows() != K.n || f.cols() != H.n)
        throw input_error("check_morphism: matrix must be dim(K) x dim(H)");
    auto fail = [&rep](const std::string& name, const std::string& wit) {
        rep.pass = false;
        rep.failures.emplace_back(name, wit);
    };
    const int n = H.n;
    auto fv = [&](int i) { return f.column(i); };
    {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                Vec lhs = f.apply(sv::to_dense(H.mult_basis(i, j), n));
                Vec rhs = K.mul(fv(i), fv(j));
                if (!detail::vec_eq(lhs, rhs)) {
                    ok = false;
                    fail("algebra_map", "i=" + std::to_string(i) + ",j=" + std::to_string(j));
                }
            }
    }
    if (!detail::vec_eq(f.apply(H.unit), K.unit)) fail("unit_map", "f(1) != 1");
    {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            SparseVec lhs = K.delta(fv(i));
            SparseVec rhs;
            for (const auto& [jk, c] : H.delta_basis(i)) {
                auto [j, k] = unpack2(n, jk);
                Vec a = fv(j), b = fv(k);
                for (int p = 0; p < K.n; ++p) {
                    if (a[p].is_zero()) continue;
                    for (int q = 0; q < K.n; ++q)
                        if (!b[q].is_zero()) sv::add_term(rhs, pack2(K.n, p, q), c * a[p] * b[q]);
                }
            }
            sv::normalize(rhs);
            if (lhs != rhs) {
                ok = false;
                fail("coalgebra_map", "i=" + std::to_string(i) +
                                          ": Delta f=" + detail::show_sparse(lhs, K.n, 2) +
                                          "; (f(x)f)Delta=" + detail::show_sparse(rhs, K.n, 2));
            }
        }
    }
    {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (K.eps(fv(i)) != H.counit[i]) {
                ok = false;
                fail("counit_map", "i=" + std::to_string(i));
            }
        }
    }
    if (!(K.antipode * f == f * H.antipode)) fail("antipode_map", "S_K f != f S_H");
    if (rep.pass && !f.is_zero()) {
        int dt_h = Subspace::from_columns(H.counital_target_matrix()).dim();
        int dt_k = Subspace::from_columns(K.counital_target_matrix()).dim();
        if (dt_h != dt_k)
            fail("counital_dims", "dim H_t=" + std::to_string(dt_h) +
                                      " != dim K_t=" + std::to_string(dt_k));
    }
    return rep;
}

struct Connectivity {
    bool connected = false;
    bool biconnected = false;
    int dim_ht_center = 0;       // dim(H_t intersect Z(H))
    int dim_dual_ht_center = 0;  // same invariant for the dual
};

/**
 * @brief Connectivity invariants.  Connected means the trivial intersection
 * H_t cap Z(H) is one dimensional; biconnected means the dual is connected
 * too.
 */
inline Connectivity connectivity(const QuantumGroupoid& H) {
    Connectivity out;
    Subspace z = center(H);
    Subspace ht = counital_subalgebra(H, Side::target);
    out.dim_ht_center = Subspace::intersect(ht, z).dim();
    out.connected = (out.dim_ht_center == 1);
    QuantumGroupoid D = dual(H);
    Subspace zd = center(D);
    Subspace dt = counital_subalgebra(D, Side::target);
    out.dim_dual_ht_center = Subspace::intersect(dt, zd).dim();
    out.biconnected = out.connected && (out.dim_dual_ht_center == 1);
    return out;
}

}  // namespace whakit

#endif
