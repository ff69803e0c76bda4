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

#ifndef WHAKIT_ALGEBRA_HPP
#define WHAKIT_ALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whakit/wha.hpp"

namespace whakit {

/**
 * @brief Plain finite-dimensional associative unital algebra.
 *
 * Carrier of smash products, commutants and the base algebras of the
 * twisting constructions, where no coalgebra structure is present.
 * mult[i * n + j] expands e_i e_j in the basis.
 */
struct Algebra {
    int n = 0;
    std::vector<SparseVec> mult;
    Vec unit;
    std::vector<std::string> labels;

    const SparseVec& mult_basis(int i, int j) const {
        return mult[static_cast<size_t>(i) * n + j];
    }

    Vec zero() const { return Vec(n, Scalar(0)); }

    Vec basis_vec(int i) const {
        Vec v = zero();
        v[i] = Scalar(1);
        return v;
    }

    Vec mul(const Vec& x, const Vec& y) const {
        Vec out = zero();
        for (int i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                Scalar f = x[i] * y[j];
                for (const auto& [k, c] : mult_basis(i, j)) out[k] += f * c;
            }
        }
        return out;
    }

    /// Shape validation plus the associativity and unit laws; throws on failure.
    void validate() const {
        if (n <= 0) throw input_error("Algebra: empty basis");
        if (static_cast<int>(mult.size()) != n * n || static_cast<int>(unit.size()) != n)
            throw input_error("Algebra: tensor shape mismatch");
        for (const auto& sv : mult)
            for (const auto& [k, c] : sv)
                if (k < 0 || k >= n) throw input_error("Algebra: product index out of range");
        for (int i = 0; i < n; ++i) {
            if (!detail::vec_eq(mul(unit, basis_vec(i)), basis_vec(i)) ||
                !detail::vec_eq(mul(basis_vec(i), unit), basis_vec(i)))
                throw math_error("Algebra: unit law fails at basis " + std::to_string(i));
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Vec lhs = mul(mul(basis_vec(i), basis_vec(j)), basis_vec(k));
                    Vec rhs = mul(basis_vec(i), mul(basis_vec(j), basis_vec(k)));
                    if (!detail::vec_eq(lhs, rhs))
                        throw math_error("Algebra: associativity fails at (" + std::to_string(i) +
                                         "," + std::to_string(j) + "," + std::to_string(k) + ")");
                }
        }
    }

    std::string label(int i) const {
        if (i < static_cast<int>(labels.size())) return labels[i];
        return "b" + std::to_string(i);
    }
};

/// Underlying algebra of a quantum groupoid, coalgebra data forgotten.
inline Algebra algebra_of(const QuantumGroupoid& H) {
    Algebra a;
    a.n = H.n;
    a.mult = H.mult;
    a.unit = H.unit;
    a.labels = H.labels;
    return a;
}

inline Matrix left_mult_matrix(const Algebra& A, const Vec& x) {
    Matrix m(A.n, A.n);
    for (int j = 0; j < A.n; ++j) m.set_column(j, A.mul(x, A.basis_vec(j)));
    return m;
}

inline Matrix right_mult_matrix(const Algebra& A, const Vec& x) {
    Matrix m(A.n, A.n);
    for (int j = 0; j < A.n; ++j) m.set_column(j, A.mul(A.basis_vec(j), x));
    return m;
}

/**
 * @brief A subalgebra presented on its own basis, together with the
 * embedding into the ambient algebra.
 */
struct SubalgebraModel {
    Algebra algebra;
    Matrix embed{0, 0};  // ambient_dim x algebra.n, columns are the basis
    Subspace span;

    Vec coords(const Vec& ambient) const {
        auto c = span.coords(ambient);
        if (!c) throw math_error("SubalgebraModel: vector outside the subalgebra");
        return *c;
    }
};

/**
 * Builds the subalgebra spanned by the columns of `cols` inside `amb`.
 * Throws when the span is not closed under multiplication or misses the unit.
 */
inline SubalgebraModel subalgebra(const Algebra& amb, const Matrix& cols,
                                  const std::string& label_prefix = "s") {
    SubalgebraModel sub;
    sub.span = Subspace::from_columns(cols);
    int d = sub.span.dim();
    if (d == 0) throw input_error("subalgebra: zero span");
    sub.embed = Matrix(amb.n, d);
    for (int k = 0; k < d; ++k) sub.embed.set_column(k, sub.span.basis_vector(k));
    sub.algebra.n = d;
    sub.algebra.mult.assign(static_cast<size_t>(d) * d, {});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec prod = amb.mul(sub.embed.column(i), sub.embed.column(j));
            auto c = sub.span.coords(prod);
            if (!c) throw math_error("subalgebra: span not closed under multiplication");
            SparseVec sv;
            for (int k = 0; k < d; ++k)
                if (!(*c)[k].is_zero()) sv.emplace_back(k, (*c)[k]);
            sub.algebra.mult[static_cast<size_t>(i) * d + j] = std::move(sv);
        }
    auto u = sub.span.coords(amb.unit);
    if (!u) throw math_error("subalgebra: unit lies outside the span");
    sub.algebra.unit = *u;
    for (int k = 0; k < d; ++k) sub.algebra.labels.push_back(label_prefix + std::to_string(k));
    return sub;
}

/**
 * @brief A subalgebra of End(k^m) given by basis matrices, acting in the
 * row-major vec coordinates of k^{m^2}.
 */
struct MatrixSubalgebra {
    int m = 0;
    std::vector<Matrix> basis;
    Subspace span;
    Algebra algebra;

    static Vec vec_of(const Matrix& x) {
        Vec v(static_cast<size_t>(x.rows()) * x.cols());
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j) v[static_cast<size_t>(i) * x.cols() + j] = x[i][j];
        return v;
    }

    Matrix materialize(const Vec& c) const {
        Matrix x(m, m);
        for (int b = 0; b < static_cast<int>(basis.size()); ++b) {
            if (c[b].is_zero()) continue;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (!basis[b][i][j].is_zero()) x[i][j] += c[b] * basis[b][i][j];
        }
        return x;
    }

    Vec coords(const Matrix& x) const {
        auto c = span.coords(vec_of(x));
        if (!c) throw math_error("MatrixSubalgebra: matrix outside the span");
        return *c;
    }
};

/**
 * The commutant {X : X g = g X for all generators g} inside End(k^m),
 * with structure constants on the solved basis.
 */
inline MatrixSubalgebra commutant(int m, const std::vector<Matrix>& gens) {
    int mm = m * m;
    Matrix sys(static_cast<int>(gens.size()) * mm, mm);
    int row0 = 0;
    for (const auto& g : gens) {
        // row-major vec: vec(X g - g X) = (I (x) g^T - g (x) I) vec(X)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                int r = row0 + i * m + j;
                for (int t = 0; t < m; ++t) {
                    if (!g[t][j].is_zero()) sys[r][i * m + t] += g[t][j];
                    if (!g[i][t].is_zero()) sys[r][t * m + j] -= g[i][t];
                }
            }
        row0 += mm;
    }
    Matrix k = kernel(sys);
    MatrixSubalgebra out;
    out.m = m;
    for (int col = 0; col < k.cols(); ++col) {
        Matrix x(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) x[i][j] = k[i * m + j][col];
        out.basis.push_back(std::move(x));
    }
    int d = static_cast<int>(out.basis.size());
    Matrix cols(mm, d);
    for (int b = 0; b < d; ++b) cols.set_column(b, MatrixSubalgebra::vec_of(out.basis[b]));
    out.span = Subspace::from_columns(cols);
    // rebuild the basis matrices from the canonical rref basis of the span
    out.basis.clear();
    for (int b = 0; b < out.span.dim(); ++b) {
        Vec v = out.span.basis_vector(b);
        Matrix x(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) x[i][j] = v[static_cast<size_t>(i) * m + j];
        out.basis.push_back(std::move(x));
    }
    d = out.span.dim();
    out.algebra.n = d;
    out.algebra.mult.assign(static_cast<size_t>(d) * d, {});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec c = out.coords(out.basis[i] * out.basis[j]);
            SparseVec sv;
            for (int t = 0; t < d; ++t)
                if (!c[t].is_zero()) sv.emplace_back(t, c[t]);
            out.algebra.mult[static_cast<size_t>(i) * d + j] = std::move(sv);
        }
    out.algebra.unit = out.coords(Matrix::identity(m));
    for (int b = 0; b < d; ++b) out.algebra.labels.push_back("T" + std::to_string(b));
    return out;
}

inline std::optional<Vec> algebra_inverse(const Algebra& A, const Vec& v) {
    Matrix lv = left_mult_matrix(A, v);
    auto sol = solve_affine(lv, A.unit);
    if (!sol.consistent || sol.kernel.cols() > 0) return std::nullopt;
    if (!detail::vec_eq(A.mul(sol.particular, v), A.unit)) return std::nullopt;
    return sol.particular;
}

/**
 * Trace-form criterion for semisimplicity: over a field of characteristic
 * zero the regular trace form (x, y) -> tr(L_x L_y) is nondegenerate exactly
 * on the semisimple algebras.
 */
inline bool is_semisimple_algebra(const Algebra& A) {
    std::vector<Matrix> lm;
    lm.reserve(A.n);
    for (int i = 0; i < A.n; ++i) lm.push_back(left_mult_matrix(A, A.basis_vec(i)));
    Matrix gram(A.n, A.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
            Scalar tr(0);
            for (int s = 0; s < A.n; ++s)
                for (int t = 0; t < A.n; ++t)
                    if (!lm[i][s][t].is_zero() && !lm[j][t][s].is_zero())
                        tr += lm[i][s][t] * lm[j][t][s];
            gram[i][j] = tr;
        }
    return try_inverse(gram).has_value();
}

/// f maps A to B by columns; true when f is a unital algebra isomorphism.
inline bool is_algebra_isomorphism(const Algebra& A, const Algebra& B, const Matrix& f) {
    if (f.rows() != B.n || f.cols() != A.n || A.n != B.n) return false;
    if (!try_inverse(f)) return false;
    if (!detail::vec_eq(f.apply(A.unit), B.unit)) return false;
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
            Vec lhs = f.apply(A.mul(A.basis_vec(i), A.basis_vec(j)));
            Vec rhs = B.mul(f.column(i), f.column(j));
            if (!detail::vec_eq(lhs, rhs)) return false;
        }
    return true;
}

}  // namespace whakit

#endif  // WHAKIT_ALGEBRA_HPP
