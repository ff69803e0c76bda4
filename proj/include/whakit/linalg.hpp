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

#ifndef WHAKIT_LINALG_HPP
#define WHAKIT_LINALG_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "whakit/cyclotomic.hpp"

namespace whakit {

using Vec = std::vector<Scalar>;

/// index/value pairs, sorted by index, no explicit zeros
using SparseVec = std::vector<std::pair<long long, Scalar>>;

namespace sv {

inline void add_term(SparseVec& v, long long idx, const Scalar& s) {
    if (!s.is_zero()) v.emplace_back(idx, s);
}

/// Sort, merge duplicate indices, drop zeros.
inline void normalize(SparseVec& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t out = 0;
    for (size_t i = 0; i < v.size();) {
        long long idx = v[i].first;
        Scalar acc = v[i].second;
        size_t j = i + 1;
        while (j < v.size() && v[j].first == idx) {
            acc += v[j].second;
            ++j;
        }
        if (!acc.is_zero()) v[out++] = {idx, std::move(acc)};
        i = j;
    }
    v.resize(out);
}

inline SparseVec from_dense(const Vec& d) {
    SparseVec v;
    for (size_t i = 0; i < d.size(); ++i)
        if (!d[i].is_zero()) v.emplace_back(static_cast<long long>(i), d[i]);
    return v;
}

inline Vec to_dense(const SparseVec& v, size_t n) {
    Vec d(n, Scalar(0));
    for (const auto& [i, s] : v) d[static_cast<size_t>(i)] += s;
    return d;
}

inline bool is_zero(const SparseVec& v) { return v.empty(); }

/// Equality of sparse vectors, tolerant of unnormalized input.
inline bool eq(SparseVec a, SparseVec b) {
    normalize(a);
    normalize(b);
    return a == b;
}

}  // namespace sv

/**
 * @brief Dense matrix over Scalar, row-major rows.
 *
 * Everything downstream (axiom checking, integrals, Wedderburn data) reduces
 * to exact Gaussian elimination on these.
 */
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : ncols_(cols), r_(rows, Vec(cols, Scalar(0))) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m[i][i] = Scalar(1);
        return m;
    }
    static Matrix from_rows(std::vector<Vec> rows, int cols) {
        Matrix m;
        m.ncols_ = cols;
        m.r_ = std::move(rows);
        return m;
    }
    static Matrix from_columns(const std::vector<Vec>& cols, int rows) {
        Matrix m(rows, static_cast<int>(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j)
            for (int i = 0; i < rows; ++i) m[i][static_cast<int>(j)] = cols[j][i];
        return m;
    }

    int rows() const { return static_cast<int>(r_.size()); }
    int cols() const { return ncols_; }
    Vec& operator[](int i) { return r_[i]; }
    const Vec& operator[](int i) const { return r_[i]; }
    Scalar& at(int i, int j) { return r_[i][j]; }
    const Scalar& at(int i, int j) const { return r_[i][j]; }

    Vec column(int j) const {
        Vec c(rows());
        for (int i = 0; i < rows(); ++i) c[i] = r_[i][j];
        return c;
    }
    void set_column(int j, const Vec& c) {
        for (int i = 0; i < rows(); ++i) r_[i][j] = c[i];
    }

    Matrix transpose() const {
        Matrix t(cols(), rows());
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < cols(); ++j) t[j][i] = r_[i][j];
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols() != b.rows()) throw math_error("Matrix: shape mismatch in product");
        Matrix c(a.rows(), b.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int k = 0; k < a.cols(); ++k) {
                const Scalar& f = a[i][k];
                if (f.is_zero()) continue;
                for (int j = 0; j < b.cols(); ++j)
                    if (!b[k][j].is_zero()) c[i][j] += f * b[k][j];
            }
        return c;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix c = a;
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) c[i][j] += b[i][j];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix c = a;
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) c[i][j] -= b[i][j];
        return c;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (a[i][j] != b[i][j]) return false;
        return true;
    }

    Vec apply(const Vec& x) const {
        Vec y(rows(), Scalar(0));
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < cols(); ++j)
                if (!r_[i][j].is_zero() && !x[j].is_zero()) y[i] += r_[i][j] * x[j];
        return y;
    }

    bool is_zero() const {
        for (const auto& row : r_)
            for (const auto& x : row)
                if (!x.is_zero()) return false;
        return true;
    }

private:
    int ncols_ = 0;
    std::vector<Vec> r_;
};

/// Result of full reduced row echelon form.
struct Rref {
    Matrix m;
    std::vector<int> pivot_cols;  // one per pivot row, increasing
    int rank = 0;
};

inline Rref rref(Matrix a) {
    Rref out;
    int rows = a.rows(), cols = a.cols();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int sel = -1;
        for (int i = rank; i < rows; ++i) {
            if (a[i][col].is_zero()) continue;
            // prefer rational pivots: their inverses are cheap
            if (sel < 0) sel = i;
            if (a[i][col].is_rational()) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(a[sel], a[rank]);
        Scalar inv = a[rank][col].inverse();
        for (int j = col; j < cols; ++j)
            if (!a[rank][j].is_zero()) a[rank][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            Scalar f = a[i][col];
            for (int j = col; j < cols; ++j)
                if (!a[rank][j].is_zero()) a[i][j] -= f * a[rank][j];
        }
        out.pivot_cols.push_back(col);
        ++rank;
    }
    out.rank = rank;
    out.m = std::move(a);
    return out;
}

inline int rank(const Matrix& a) { return rref(a).rank; }

/// Columns span the nullspace {x : a x = 0}.
inline Matrix kernel(const Matrix& a) {
    Rref r = rref(a);
    int cols = a.cols();
    std::vector<int> is_pivot(cols, -1);
    for (int p = 0; p < r.rank; ++p) is_pivot[r.pivot_cols[p]] = p;
    std::vector<Vec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f] >= 0) continue;
        Vec v(cols, Scalar(0));
        v[f] = Scalar(1);
        for (int p = 0; p < r.rank; ++p) v[r.pivot_cols[p]] = -r.m[p][f];
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(basis, cols);
}

/// Affine solution set of a x = b.
struct AffineSolutionSpace {
    bool consistent = false;
    Vec particular;   // defined when consistent
    Matrix kernel;    // columns span the homogeneous solutions
    int dim() const { return kernel.cols(); }
    bool unique() const { return consistent && kernel.cols() == 0; }
};

inline AffineSolutionSpace solve_affine(const Matrix& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw math_error("solve_affine: rhs length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug[i][j] = a[i][j];
        aug[i][a.cols()] = b[i];
    }
    Rref r = rref(std::move(aug));
    AffineSolutionSpace sol;
    sol.consistent = true;
    for (int p = 0; p < r.rank; ++p)
        if (r.pivot_cols[p] == a.cols()) sol.consistent = false;
    sol.kernel = kernel(a);
    if (sol.consistent) {
        sol.particular.assign(a.cols(), Scalar(0));
        for (int p = 0; p < r.rank; ++p)
            if (r.pivot_cols[p] < a.cols()) sol.particular[r.pivot_cols[p]] = r.m[p][a.cols()];
    }
    return sol;
}

inline std::optional<Matrix> try_inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw math_error("inverse: not square");
    int n = a.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = Scalar(1);
    }
    Rref r = rref(std::move(aug));
    if (r.rank < n || r.pivot_cols[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = r.m[i][n + j];
    return inv;
}

inline Matrix inverse(const Matrix& a) {
    auto inv = try_inverse(a);
    if (!inv) throw math_error("inverse: matrix is singular");
    return *inv;
}

/**
 * @brief Row-echelon model of a linear subspace of k^n.
 *
 * Supports membership tests, canonical reduction modulo the subspace, and
 * intersection; rows of `rref_rows` form the canonical spanning set.
 */
class Subspace {
public:
    Subspace() = default;

    static Subspace from_rows(const Matrix& rows) {
        Subspace s;
        Rref r = rref(rows);
        std::vector<Vec> kept;
        for (int i = 0; i < r.rank; ++i) kept.push_back(r.m[i]);
        s.rows_ = Matrix::from_rows(std::move(kept), rows.cols());
        s.pivots_ = r.pivot_cols;
        s.n_ = rows.cols();
        return s;
    }
    static Subspace from_columns(const Matrix& cols) { return from_rows(cols.transpose()); }

    int ambient_dim() const { return n_; }
    int dim() const { return rows_.rows(); }
    const Matrix& basis_rows() const { return rows_; }
    Vec basis_vector(int i) const { return rows_[i]; }

    /// v reduced to canonical form modulo the subspace.
    Vec reduce(Vec v) const {
        for (int p = 0; p < rows_.rows(); ++p) {
            const Scalar& c = v[pivots_[p]];
            if (c.is_zero()) continue;
            Scalar f = c;  // pivot entries are 1
            for (int j = pivots_[p]; j < n_; ++j)
                if (!rows_[p][j].is_zero()) v[j] -= f * rows_[p][j];
        }
        return v;
    }

    bool contains(const Vec& v) const {
        Vec r = reduce(v);
        for (const auto& x : r)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Coordinates of v in the rref basis; nullopt when v is outside.
    std::optional<Vec> coords(const Vec& v) const {
        Vec c(rows_.rows(), Scalar(0));
        Vec w = v;
        for (int p = 0; p < rows_.rows(); ++p) {
            Scalar f = w[pivots_[p]];
            if (f.is_zero()) continue;
            c[p] = f;
            for (int j = pivots_[p]; j < n_; ++j)
                if (!rows_[p][j].is_zero()) w[j] -= f * rows_[p][j];
        }
        for (const auto& x : w)
            if (!x.is_zero()) return std::nullopt;
        return c;
    }

    static Subspace intersect(const Subspace& u, const Subspace& w) {
        // solve x^T U = y^T W over the row spans
        if (u.n_ != w.n_) throw math_error("Subspace: ambient mismatch");
        int p = u.dim(), q = w.dim();
        Matrix sys(u.n_, p + q);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < u.n_; ++j) sys[j][i] = u.rows_[i][j];
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < u.n_; ++j) sys[j][p + i] = -w.rows_[i][j];
        Matrix k = kernel(sys);
        std::vector<Vec> rows;
        for (int col = 0; col < k.cols(); ++col) {
            Vec v(u.n_, Scalar(0));
            for (int i = 0; i < p; ++i) {
                const Scalar& c = k[i][col];
                if (c.is_zero()) continue;
                for (int j = 0; j < u.n_; ++j)
                    if (!u.rows_[i][j].is_zero()) v[j] += c * u.rows_[i][j];
            }
            rows.push_back(std::move(v));
        }
        return from_rows(Matrix::from_rows(std::move(rows), u.n_));
    }

private:
    Matrix rows_{0, 0};
    std::vector<int> pivots_;
    int n_ = 0;

    friend class Quotient;
};

/**
 * @brief Quotient of k^n by a subspace, with a fixed linear section.
 *
 * The section basis is the set of non-pivot coordinates of the relation
 * space; project() gives canonical coordinates of a coset, lift() the chosen
 * representative.  Used for balanced tensor products and the double's
 * amalgamation quotient.
 */
class Quotient {
public:
    Quotient() = default;
    explicit Quotient(Subspace relations) : rel_(std::move(relations)) {
        int n = rel_.ambient_dim();
        std::vector<bool> is_pivot(n, false);
        for (int p : rel_.pivots_) is_pivot[p] = true;
        for (int j = 0; j < n; ++j)
            if (!is_pivot[j]) section_.push_back(j);
    }

    int ambient_dim() const { return rel_.ambient_dim(); }
    int dim() const { return static_cast<int>(section_.size()); }
    const Subspace& relations() const { return rel_; }
    int section_index(int k) const { return section_[k]; }

    /// Coordinates of [v] in the section basis.
    Vec project(const Vec& v) const {
        Vec red = rel_.reduce(v);
        Vec out(section_.size());
        for (size_t k = 0; k < section_.size(); ++k) out[k] = red[section_[k]];
        return out;
    }

    /// Ambient representative of the k-th quotient basis vector.
    Vec lift(int k) const {
        Vec v(rel_.ambient_dim(), Scalar(0));
        v[section_[k]] = Scalar(1);
        return v;
    }

    Vec lift_vec(const Vec& q) const {
        Vec v(rel_.ambient_dim(), Scalar(0));
        for (size_t k = 0; k < section_.size(); ++k) v[section_[k]] = q[k];
        return v;
    }

private:
    Subspace rel_;
    std::vector<int> section_;
};

/**
 * @brief Sparse structure tensor of arity 1, 2 or 3 (interchange surface).
 */
struct SparseTensor {
    int arity = 0;
    std::array<int, 3> dims{0, 0, 0};
    struct Entry {
        std::array<int, 3> idx{0, 0, 0};
        Scalar value;
    };
    std::vector<Entry> entries;

    void set(std::array<int, 3> idx, Scalar v) {
        if (!v.is_zero()) entries.push_back({idx, std::move(v)});
    }

    void canonicalize() {
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.idx < b.idx; });
        std::vector<Entry> out;
        for (auto& e : entries) {
            if (!out.empty() && out.back().idx == e.idx)
                out.back().value += e.value;
            else
                out.push_back(e);
        }
        entries.clear();
        for (auto& e : out)
            if (!e.value.is_zero()) entries.push_back(std::move(e));
    }
};

}  // namespace whakit

#endif
