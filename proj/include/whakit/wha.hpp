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

#ifndef WHAKIT_WHA_HPP
#define WHAKIT_WHA_HPP

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "whakit/linalg.hpp"

namespace whakit {

/// Elements and functionals are coordinate (co)vectors over the basis.
using Element = Vec;
using Functional = Vec;

inline long long pack2(int n, int j, int k) { return static_cast<long long>(j) * n + k; }
inline std::pair<int, int> unpack2(int n, long long p) {
    return {static_cast<int>(p / n), static_cast<int>(p % n)};
}
inline long long pack3(int n, int a, int b, int c) {
    return (static_cast<long long>(a) * n + b) * n + c;
}
inline std::array<int, 3> unpack3(int n, long long p) {
    int c = static_cast<int>(p % n);
    p /= n;
    int b = static_cast<int>(p % n);
    return {static_cast<int>(p / n), b, c};
}

/**
 * @brief A finite quantum groupoid presented by structure tensors.
 *
 * Basis e_0..e_{n-1}; mult[i*n+j] holds e_i e_j, comult[i] holds Delta(e_i)
 * with tensor indices packed as j*n+k.  The antipode acts by its matrix; the
 * optional star matrix composes with coefficientwise conjugation.  Call
 * finalize() once after filling the fields; it validates shapes and builds
 * the counital-map caches.
 */
struct QuantumGroupoid {
    int n = 0;
    unsigned field_order = 1;
    std::vector<SparseVec> mult;     // n*n entries
    Vec unit;                        // the element 1
    std::vector<SparseVec> comult;   // n entries, packed pairs
    Vec counit;                      // covector
    Matrix antipode;                 // S
    std::optional<Matrix> star;      // antilinear involution
    std::vector<std::string> labels;

    int dim() const { return n; }

    void finalize() {
        if (n <= 0) throw input_error("QuantumGroupoid: dimension must be positive");
        if (static_cast<int>(mult.size()) != n * n || static_cast<int>(comult.size()) != n ||
            static_cast<int>(unit.size()) != n || static_cast<int>(counit.size()) != n ||
            antipode.rows() != n || antipode.cols() != n)
            throw input_error("QuantumGroupoid: structure tensor shape mismatch");
        if (star && (star->rows() != n || star->cols() != n))
            throw input_error("QuantumGroupoid: star matrix shape mismatch");
        if (!labels.empty() && static_cast<int>(labels.size()) != n)
            throw input_error("QuantumGroupoid: label count mismatch");
        for (auto& m : mult) sv::normalize(m);
        for (auto& d : comult) sv::normalize(d);
        for (const auto& m : mult)
            for (const auto& [idx, c] : m)
                if (idx < 0 || idx >= n) throw input_error("QuantumGroupoid: mult index range");
        for (const auto& d : comult)
            for (const auto& [idx, c] : d)
                if (idx < 0 || idx >= static_cast<long long>(n) * n)
                    throw input_error("QuantumGroupoid: comult index range");
        for (const Vec& v : {unit, counit})
            for (const Scalar& s : v) field_order = std::lcm(field_order, s.order());
        for (const auto& m : mult)
            for (const auto& [idx, c] : m) field_order = std::lcm(field_order, c.order());
        for (const auto& d : comult)
            for (const auto& [idx, c] : d) field_order = std::lcm(field_order, c.order());
        delta_one_.clear();
        for (int i = 0; i < n; ++i) {
            if (unit[i].is_zero()) continue;
            for (const auto& [jk, c] : comult[i]) sv::add_term(delta_one_, jk, unit[i] * c);
        }
        sv::normalize(delta_one_);
        build_counital_maps();
        s_inv_ = try_inverse(antipode);
        finalized_ = true;
    }
    bool finalized() const { return finalized_; }

    const SparseVec& mult_basis(int i, int j) const { return mult[static_cast<size_t>(i) * n + j]; }
    const SparseVec& delta_basis(int i) const { return comult[i]; }
    const SparseVec& delta_one() const { return delta_one_; }
    const Matrix& counital_target_matrix() const { return et_; }
    const Matrix& counital_source_matrix() const { return es_; }
    bool antipode_invertible() const { return s_inv_.has_value(); }
    const Matrix& antipode_inverse() const {
        if (!s_inv_) throw math_error("QuantumGroupoid: antipode is not invertible");
        return *s_inv_;
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

    SparseVec delta(const Vec& x) const {
        SparseVec out;
        for (int i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (const auto& [jk, c] : comult[i]) sv::add_term(out, jk, x[i] * c);
        }
        sv::normalize(out);
        return out;
    }

    Scalar eps(const Vec& x) const {
        Scalar s(0);
        for (int i = 0; i < n; ++i)
            if (!x[i].is_zero()) s += x[i] * counit[i];
        return s;
    }

    Vec apply_S(const Vec& x) const { return antipode.apply(x); }
    Vec apply_S_inv(const Vec& x) const { return antipode_inverse().apply(x); }

    Vec apply_star(const Vec& x) const {
        if (!star) throw math_error("QuantumGroupoid: no star structure");
        Vec cx(n);
        for (int i = 0; i < n; ++i) cx[i] = x[i].conj();
        return star->apply(cx);
    }

    Vec counital_t(const Vec& x) const { return et_.apply(x); }
    Vec counital_s(const Vec& x) const { return es_.apply(x); }

    bool is_zero_vec(const Vec& x) const {
        for (const Scalar& s : x)
            if (!s.is_zero()) return false;
        return true;
    }

private:
    SparseVec delta_one_;
    Matrix et_{0, 0}, es_{0, 0};
    std::optional<Matrix> s_inv_;
    bool finalized_ = false;

    void build_counital_maps() {
        // eps_t(h) = eps(1_(1) h) 1_(2),  eps_s(h) = 1_(1) eps(h 1_(2))
        et_ = Matrix(n, n);
        es_ = Matrix(n, n);
        for (const auto& [pq, c] : delta_one_) {
            auto [p, q] = unpack2(n, pq);
            for (int h = 0; h < n; ++h) {
                Scalar acc_t(0);  // eps(e_p e_h)
                for (const auto& [k, m] : mult_basis(p, h))
                    if (!counit[k].is_zero()) acc_t += m * counit[k];
                if (!acc_t.is_zero()) et_[q][h] += c * acc_t;
                Scalar acc_s(0);  // eps(e_h e_q)
                for (const auto& [k, m] : mult_basis(h, q))
                    if (!counit[k].is_zero()) acc_s += m * counit[k];
                if (!acc_s.is_zero()) es_[p][h] += c * acc_s;
            }
        }
    }
};

// ---------------------------------------------------------------------------
// sparse operations on tensor powers of H
// ---------------------------------------------------------------------------

/// x (x) y for coordinate vectors, packed into dim(a)*dim(b).
inline SparseVec kron(const SparseVec& a, const SparseVec& b, long long dim_b) {
    SparseVec out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) sv::add_term(out, i * dim_b + j, x * y);
    sv::normalize(out);
    return out;
}

/// Multiplication in H (x) H on packed sparse elements.
inline SparseVec ten2_mul(const QuantumGroupoid& h, const SparseVec& a, const SparseVec& b) {
    int n = h.n;
    SparseVec out;
    for (const auto& [p1, c1] : a) {
        auto [j1, k1] = unpack2(n, p1);
        for (const auto& [p2, c2] : b) {
            auto [j2, k2] = unpack2(n, p2);
            const SparseVec& mj = h.mult_basis(j1, j2);
            if (mj.empty()) continue;
            const SparseVec& mk = h.mult_basis(k1, k2);
            if (mk.empty()) continue;
            Scalar f = c1 * c2;
            for (const auto& [t1, m1] : mj) {
                Scalar g = f * m1;
                for (const auto& [t2, m2] : mk) sv::add_term(out, pack2(n, t1, t2), g * m2);
            }
        }
    }
    sv::normalize(out);
    return out;
}

/// Multiplication in H (x) H (x) H on packed sparse elements.
inline SparseVec ten3_mul(const QuantumGroupoid& h, const SparseVec& a, const SparseVec& b) {
    int n = h.n;
    SparseVec out;
    for (const auto& [p1, c1] : a) {
        auto [a1, b1, c1i] = unpack3(n, p1);
        for (const auto& [p2, c2] : b) {
            auto [a2, b2, c2i] = unpack3(n, p2);
            const SparseVec& m1 = h.mult_basis(a1, a2);
            if (m1.empty()) continue;
            const SparseVec& m2 = h.mult_basis(b1, b2);
            if (m2.empty()) continue;
            const SparseVec& m3 = h.mult_basis(c1i, c2i);
            if (m3.empty()) continue;
            Scalar f = c1 * c2;
            for (const auto& [t1, x1] : m1) {
                Scalar g1 = f * x1;
                for (const auto& [t2, x2] : m2) {
                    Scalar g2 = g1 * x2;
                    for (const auto& [t3, x3] : m3)
                        sv::add_term(out, pack3(n, t1, t2, t3), g2 * x3);
                }
            }
        }
    }
    sv::normalize(out);
    return out;
}

/// Apply Delta to one leg of a packed 2-tensor, producing a packed 3-tensor.
inline SparseVec delta_on_leg(const QuantumGroupoid& h, const SparseVec& a, int leg) {
    int n = h.n;
    SparseVec out;
    for (const auto& [p, c] : a) {
        auto [j, k] = unpack2(n, p);
        if (leg == 1) {
            for (const auto& [pq, d] : h.delta_basis(j)) {
                auto [x, y] = unpack2(n, pq);
                sv::add_term(out, pack3(n, x, y, k), c * d);
            }
        } else {
            for (const auto& [pq, d] : h.delta_basis(k)) {
                auto [x, y] = unpack2(n, pq);
                sv::add_term(out, pack3(n, j, x, y), c * d);
            }
        }
    }
    sv::normalize(out);
    return out;
}

/// Embed a packed 2-tensor into legs (1,2) or (2,3) of H^(x)3, unit elsewhere.
inline SparseVec ten2_embed(const QuantumGroupoid& h, const SparseVec& a, bool low) {
    int n = h.n;
    SparseVec out;
    for (const auto& [p, c] : a) {
        auto [j, k] = unpack2(n, p);
        for (int u = 0; u < n; ++u) {
            if (h.unit[u].is_zero()) continue;
            sv::add_term(out, low ? pack3(n, j, k, u) : pack3(n, u, j, k), c * h.unit[u]);
        }
    }
    sv::normalize(out);
    return out;
}

/// Apply a linear map (given by its matrix) to one leg of a packed tensor.
inline SparseVec apply_on_leg(const SparseVec& a, const Matrix& m, int arity, int leg, int n) {
    SparseVec out;
    for (const auto& [p, c] : a) {
        // unpack, transform the chosen leg, repack
        long long rest[3] = {0, 0, 0};
        long long q = p;
        for (int pos = arity - 1; pos >= 0; --pos) {
            rest[pos] = q % n;
            q /= n;
        }
        int src = static_cast<int>(rest[leg - 1]);
        for (int t = 0; t < m.rows(); ++t) {
            if (m[t][src].is_zero()) continue;
            long long packed = 0;
            for (int pos = 0; pos < arity; ++pos)
                packed = packed * n + (pos == leg - 1 ? t : rest[pos]);
            sv::add_term(out, packed, c * m[t][src]);
        }
    }
    sv::normalize(out);
    return out;
}

/// Swap the two legs of a packed 2-tensor.
inline SparseVec ten2_flip(const SparseVec& a, int n) {
    SparseVec out;
    for (const auto& [p, c] : a) {
        auto [j, k] = unpack2(n, p);
        out.emplace_back(pack2(n, k, j), c);
    }
    sv::normalize(out);
    return out;
}

inline Vec ten2_contract_mul(const QuantumGroupoid& h, const SparseVec& a) {
    Vec out = h.zero();
    for (const auto& [p, c] : a) {
        auto [j, k] = unpack2(h.n, p);
        for (const auto& [t, m] : h.mult_basis(j, k)) out[t] += c * m;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sweedler arrows
// ---------------------------------------------------------------------------

/// (h -> phi)(g) = phi(g h)
inline Functional act_on_functional_left(const QuantumGroupoid& H, const Vec& h,
                                         const Functional& phi) {
    Functional out = H.zero();
    for (int a = 0; a < H.n; ++a) {
        Scalar acc(0);
        for (int i = 0; i < H.n; ++i) {
            if (h[i].is_zero()) continue;
            for (const auto& [k, c] : H.mult_basis(a, i))
                if (!phi[k].is_zero()) acc += h[i] * c * phi[k];
        }
        out[a] = acc;
    }
    return out;
}

/// (phi <- h)(g) = phi(h g)
inline Functional act_on_functional_right(const QuantumGroupoid& H, const Functional& phi,
                                          const Vec& h) {
    Functional out = H.zero();
    for (int a = 0; a < H.n; ++a) {
        Scalar acc(0);
        for (int i = 0; i < H.n; ++i) {
            if (h[i].is_zero()) continue;
            for (const auto& [k, c] : H.mult_basis(i, a))
                if (!phi[k].is_zero()) acc += h[i] * c * phi[k];
        }
        out[a] = acc;
    }
    return out;
}

/// phi -> h = h_(1) phi(h_(2))
inline Vec act_on_element_left(const QuantumGroupoid& H, const Functional& phi, const Vec& h) {
    Vec out = H.zero();
    for (const auto& [jk, c] : H.delta(h)) {
        auto [j, k] = unpack2(H.n, jk);
        if (!phi[k].is_zero()) out[j] += c * phi[k];
    }
    return out;
}

/// h <- phi = phi(h_(1)) h_(2)
inline Vec act_on_element_right(const QuantumGroupoid& H, const Vec& h, const Functional& phi) {
    Vec out = H.zero();
    for (const auto& [jk, c] : H.delta(h)) {
        auto [j, k] = unpack2(H.n, jk);
        if (!phi[j].is_zero()) out[k] += c * phi[j];
    }
    return out;
}

/// Pairing <phi, x>.
inline Scalar pair(const Functional& phi, const Vec& x) {
    Scalar s(0);
    for (size_t i = 0; i < phi.size(); ++i)
        if (!phi[i].is_zero() && !x[i].is_zero()) s += phi[i] * x[i];
    return s;
}

namespace detail {

inline bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

inline std::string show_vec(const Vec& v) {
    std::string os;
    bool first = true;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!first) os += " + ";
        os += "(" + v[i].to_string() + ")e" + std::to_string(i);
        first = false;
    }
    if (first) os = "0";
    return os;
}

inline std::string show_sparse(const SparseVec& v, int n, int arity) {
    std::string os;
    bool first = true;
    for (const auto& [p, c] : v) {
        if (!first) os += " + ";
        os += "(" + c.to_string() + ")";
        if (arity == 2) {
            auto [j, k] = unpack2(n, p);
            os += "e" + std::to_string(j) + "(x)e" + std::to_string(k);
        } else if (arity == 3) {
            auto t = unpack3(n, p);
            os += "e" + std::to_string(t[0]) + "(x)e" + std::to_string(t[1]) + "(x)e" +
                  std::to_string(t[2]);
        } else {
            os += "e" + std::to_string(p);
        }
        first = false;
    }
    if (first) os = "0";
    return os;
}

}  // namespace detail

}  // namespace whakit

#endif
