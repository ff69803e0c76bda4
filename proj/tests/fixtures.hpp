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

#ifndef WHAKIT_TESTS_FIXTURES_HPP
#define WHAKIT_TESTS_FIXTURES_HPP

#include "whakit/groupoid.hpp"
#include "whakit/wha.hpp"

namespace fixtures {

inline whakit::QuantumGroupoid pair2() {
    return whakit::groupoid_algebra(whakit::FiniteGroupoid::pair_groupoid(2));
}

inline whakit::QuantumGroupoid z2() {
    return whakit::groupoid_algebra(whakit::FiniteGroupoid::cyclic_group(2));
}

/**
 * The four dimensional small Hopf algebra on generators g, x with
 * g^2 = 1, x^2 = 0, xg = -gx; Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x.
 * Not semisimple; the classic source of a one dimensional integral space
 * with no normalized integral.  Basis order 1, g, x, gx.
 */
inline whakit::QuantumGroupoid sweedler_h4() {
    using whakit::Scalar;
    whakit::QuantumGroupoid h;
    h.n = 4;
    h.mult.assign(16, whakit::SparseVec());
    auto mono = [](int a, int b) { return a + 2 * b; };  // g^a x^b
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    if (b + d >= 2) continue;  // x^2 = 0
                    int sign = (b * c) % 2 ? -1 : 1;
                    h.mult[whakit::pack2(4, mono(a, b), mono(c, d))].emplace_back(
                        mono((a + c) % 2, b + d), Scalar(sign));
                }
    h.unit = {Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
    h.comult.assign(4, whakit::SparseVec());
    h.comult[0].emplace_back(whakit::pack2(4, 0, 0), Scalar(1));  // 1 (x) 1
    h.comult[1].emplace_back(whakit::pack2(4, 1, 1), Scalar(1));  // g (x) g
    h.comult[2].emplace_back(whakit::pack2(4, 2, 0), Scalar(1));  // x (x) 1
    h.comult[2].emplace_back(whakit::pack2(4, 1, 2), Scalar(1));  // g (x) x
    h.comult[3].emplace_back(whakit::pack2(4, 3, 1), Scalar(1));  // gx (x) g
    h.comult[3].emplace_back(whakit::pack2(4, 0, 3), Scalar(1));  // 1 (x) gx
    h.counit = {Scalar(1), Scalar(1), Scalar(0), Scalar(0)};
    h.antipode = whakit::Matrix(4, 4);
    h.antipode[0][0] = Scalar(1);
    h.antipode[1][1] = Scalar(1);
    h.antipode[3][2] = Scalar(-1);  // S(x) = -gx
    h.antipode[2][3] = Scalar(1);   // S(gx) = x
    h.labels = {"1", "g", "x", "gx"};
    h.finalize();
    return h;
}

}  // namespace fixtures

#endif
