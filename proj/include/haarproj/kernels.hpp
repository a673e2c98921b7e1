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

#ifndef HAARPROJ_KERNELS_HPP
#define HAARPROJ_KERNELS_HPP

#include <complex>
#include <cstdint>

namespace haarproj {

// symmetric: D_m(t) = sum_{k=-m}^{m} e^{-ikt} (real valued)
// analytic:  D_m^+(t) = sum_{k=0}^{m} e^{-ikt}
enum class KernelKind { symmetric, analytic };

struct KernelSpec {
  std::int64_t m = 0;
  KernelKind kind = KernelKind::symmetric;
};

// Closed-form evaluation away from t in 2*pi*Z; explicit character sum
// when |sin(t/2)| < 1e-8, where the ratio form loses all accuracy.
std::complex<double> kernel_eval(const KernelSpec& spec, double t);

// Mean of |D_m| respectively |D_m^+| over [0,2pi], to absolute accuracy
// 1e-10, by Kronrod panels split at the kinks of the absolute value.
// Values are memoized per process; when the environment variable
// HAAR_CACHE_DIR names a writable directory they also persist across
// runs in <dir>/lebesgue_constants.txt. Throws AccuracyError if the
// quadrature cannot reach the tolerance.
double lebesgue_L(std::int64_t m);
double lebesgue_Lplus(std::int64_t m);

} // namespace haarproj

#endif // HAARPROJ_KERNELS_HPP
