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

#ifndef WHAKIT_ERRORS_HPP
#define WHAKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace whakit {

/// Base class of all whakit exceptions.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic failures: division by zero, non-invertible elements, ...
struct math_error : error {
    explicit math_error(const std::string& what) : error(what) {}
};

/// Malformed input: bad dimensions, unparsable scalars, bad files.
struct input_error : error {
    explicit input_error(const std::string& what) : error(what) {}
};

/// A configured resource bound (field order, factor degree, time) was hit.
struct budget_error : error {
    explicit budget_error(const std::string& what) : error(what) {}
};

}  // namespace whakit

#endif
