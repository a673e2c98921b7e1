/* Copyright (C) 2026 The haarproj authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

namespace haarproj {

// Exponent vector alpha of a character z^alpha on the torus T^n.
using MultiIndex = std::vector<std::int64_t>;

// |alpha| = sum_j |alpha_j| (the order of alpha).
inline std::int64_t order_of(const MultiIndex& a) {
    std::int64_t s = 0;
    for (auto v : a) s += std::llabs(v);
    return s;
}

}  // namespace haarproj
