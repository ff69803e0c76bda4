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

#ifndef WHAKIT_GROUPOID_HPP
#define WHAKIT_GROUPOID_HPP

#include <string>
#include <vector>

#include "whakit/structure.hpp"
#include "whakit/wha.hpp"

namespace whakit {

/**
 * @brief A finite groupoid given by explicit tables.  Morphism g: source(g)
 * -> target(g); the composite g*h (first h, then g) is defined exactly when
 * source(g) == target(h).
 */
struct FiniteGroupoid {
    int objects = 0;
    std::vector<int> source;
    std::vector<int> target;
    std::vector<int> identity;               // per object
    std::vector<std::vector<int>> compose;   // compose[g][h], -1 if undefined
    std::vector<int> inverse;
    std::vector<std::string> labels;

    int size() const { return static_cast<int>(source.size()); }

    void validate() const {
        const int m = size();
        if (objects <= 0) throw input_error("groupoid: needs at least one object");
        if (static_cast<int>(target.size()) != m || static_cast<int>(inverse.size()) != m ||
            static_cast<int>(compose.size()) != m)
            throw input_error("groupoid: table sizes disagree");
        if (static_cast<int>(identity.size()) != objects)
            throw input_error("groupoid: one identity per object required");
        auto in_obj = [this](int o) { return o >= 0 && o < objects; };
        auto in_mor = [m](int g) { return g >= 0 && g < m; };
        for (int g = 0; g < m; ++g) {
            if (!in_obj(source[g]) || !in_obj(target[g]))
                throw input_error("groupoid: morphism " + std::to_string(g) + " out of range");
            if (static_cast<int>(compose[g].size()) != m)
                throw input_error("groupoid: composition row size");
            if (!in_mor(inverse[g])) throw input_error("groupoid: inverse out of range");
        }
        for (int o = 0; o < objects; ++o) {
            int e = identity[o];
            if (!in_mor(e) || source[e] != o || target[e] != o)
                throw input_error("groupoid: identity of object " + std::to_string(o));
        }
        for (int g = 0; g < m; ++g)
            for (int h = 0; h < m; ++h) {
                int gh = compose[g][h];
                bool composable = (source[g] == target[h]);
                if (composable != (gh >= 0))
                    throw input_error("groupoid: composability mismatch at (" +
                                      std::to_string(g) + "," + std::to_string(h) + ")");
                if (gh >= 0 && (!in_mor(gh) || source[gh] != source[h] || target[gh] != target[g]))
                    throw input_error("groupoid: composite endpoints at (" + std::to_string(g) +
                                      "," + std::to_string(h) + ")");
            }
        for (int g = 0; g < m; ++g)
            for (int h = 0; h < m; ++h) {
                if (compose[g][h] < 0) continue;
                for (int k = 0; k < m; ++k) {
                    if (compose[h][k] < 0) continue;
                    if (compose[compose[g][h]][k] != compose[g][compose[h][k]])
                        throw input_error("groupoid: associativity at (" + std::to_string(g) +
                                          "," + std::to_string(h) + "," + std::to_string(k) + ")");
                }
            }
        for (int g = 0; g < m; ++g) {
            if (compose[g][identity[source[g]]] != g || compose[identity[target[g]]][g] != g)
                throw input_error("groupoid: identity law at " + std::to_string(g));
            int gi = inverse[g];
            if (source[gi] != target[g] || target[gi] != source[g] ||
                compose[g][gi] != identity[target[g]] || compose[gi][g] != identity[source[g]])
                throw input_error("groupoid: inverse law at " + std::to_string(g));
        }
    }

    /// Pair groupoid on n objects: one morphism g_ij from j to i for every pair.
    static FiniteGroupoid pair_groupoid(int n) {
        if (n <= 0) throw input_error("pair_groupoid: n must be positive");
        FiniteGroupoid G;
        G.objects = n;
        const int m = n * n;
        auto ix = [n](int i, int j) { return i * n + j; };
        G.source.resize(m);
        G.target.resize(m);
        G.labels.resize(m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                G.target[ix(i, j)] = i;
                G.source[ix(i, j)] = j;
                G.labels[ix(i, j)] =
                    "g" + std::to_string(i + 1) + (n < 10 ? "" : "_") + std::to_string(j + 1);
            }
        G.identity.resize(n);
        for (int i = 0; i < n; ++i) G.identity[i] = ix(i, i);
        G.compose.assign(m, std::vector<int>(m, -1));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) G.compose[ix(i, j)][ix(j, k)] = ix(i, k);
        G.inverse.resize(m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) G.inverse[ix(i, j)] = ix(j, i);
        return G;
    }

    /// Cyclic group of order n as a one object groupoid.
    static FiniteGroupoid cyclic_group(int n) {
        if (n <= 0) throw input_error("cyclic_group: n must be positive");
        FiniteGroupoid G;
        G.objects = 1;
        G.source.assign(n, 0);
        G.target.assign(n, 0);
        G.identity = {0};
        G.compose.assign(n, std::vector<int>(n, -1));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) G.compose[i][j] = (i + j) % n;
        G.inverse.resize(n);
        for (int i = 0; i < n; ++i) G.inverse[i] = (n - i) % n;
        G.labels.resize(n);
        for (int i = 0; i < n; ++i) G.labels[i] = "c" + std::to_string(i);
        return G;
    }

    static FiniteGroupoid disjoint_union(const FiniteGroupoid& A, const FiniteGroupoid& B) {
        FiniteGroupoid G;
        G.objects = A.objects + B.objects;
        const int ma = A.size(), mb = B.size(), m = ma + mb;
        G.source.resize(m);
        G.target.resize(m);
        G.inverse.resize(m);
        G.labels.resize(m);
        for (int g = 0; g < ma; ++g) {
            G.source[g] = A.source[g];
            G.target[g] = A.target[g];
            G.inverse[g] = A.inverse[g];
            G.labels[g] = (A.labels.empty() ? "a" + std::to_string(g) : A.labels[g] + "'");
        }
        for (int g = 0; g < mb; ++g) {
            G.source[ma + g] = A.objects + B.source[g];
            G.target[ma + g] = A.objects + B.target[g];
            G.inverse[ma + g] = ma + B.inverse[g];
            G.labels[ma + g] = (B.labels.empty() ? "b" + std::to_string(g) : B.labels[g] + "''");
        }
        G.identity.resize(G.objects);
        for (int o = 0; o < A.objects; ++o) G.identity[o] = A.identity[o];
        for (int o = 0; o < B.objects; ++o) G.identity[A.objects + o] = ma + B.identity[o];
        G.compose.assign(m, std::vector<int>(m, -1));
        for (int g = 0; g < ma; ++g)
            for (int h = 0; h < ma; ++h) G.compose[g][h] = A.compose[g][h];
        for (int g = 0; g < mb; ++g)
            for (int h = 0; h < mb; ++h) {
                int c = B.compose[g][h];
                G.compose[ma + g][ma + h] = (c < 0 ? -1 : ma + c);
            }
        return G;
    }
};

/**
 * @brief The groupoid algebra kG: morphisms as basis, composition as
 * product (zero when undefined), Delta(g) = g (x) g, eps(g) = 1,
 * S(g) = g^{-1}, g* = g^{-1}.
 */
inline QuantumGroupoid groupoid_algebra(const FiniteGroupoid& G) {
    G.validate();
    const int n = G.size();
    QuantumGroupoid H;
    H.n = n;
    H.mult.assign(static_cast<size_t>(n) * n, SparseVec());
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (G.compose[g][h] >= 0) H.mult[pack2(n, g, h)].emplace_back(G.compose[g][h], Scalar(1));
    H.unit.assign(n, Scalar(0));
    for (int o = 0; o < G.objects; ++o) H.unit[G.identity[o]] = Scalar(1);
    H.comult.assign(n, SparseVec());
    for (int g = 0; g < n; ++g) H.comult[g].emplace_back(pack2(n, g, g), Scalar(1));
    H.counit.assign(n, Scalar(1));
    H.antipode = Matrix(n, n);
    for (int g = 0; g < n; ++g) H.antipode[G.inverse[g]][g] = Scalar(1);
    H.star = H.antipode;
    H.labels = G.labels;
    H.finalize();
    return H;
}

/// Functions on G with pointwise product; precisely the dual of kG.
inline QuantumGroupoid groupoid_function_algebra(const FiniteGroupoid& G) {
    return dual(groupoid_algebra(G));
}

}  // namespace whakit

#endif
