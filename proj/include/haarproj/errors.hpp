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

#include <stdexcept>
#include <string>

namespace haarproj {

// Thrown when a quadrature routine cannot reach its accuracy target.
// `achieved` carries the error bound that was actually reached.
class AccuracyError : public std::runtime_error {
  public:
    AccuracyError(const std::string& what, double achieved_bound)
        : std::runtime_error(what), achieved(achieved_bound) {}
    double achieved;
};

}  // namespace haarproj
