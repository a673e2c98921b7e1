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

#ifndef HAARPROJ_INTEGRATE_HPP
#define HAARPROJ_INTEGRATE_HPP

#include <haarproj/indexsets.hpp>

#include <complex>
#include <cstdint>
#include <vector>

namespace haarproj {

enum class Method { mc, qmc, quadrature, exact };
enum class Engine { mc, qmc };

const char* method_name(Method m);

struct IntegralEstimate {
  double value = 0.0;
  double std_err = 0.0; // 0 for exact results
  std::int64_t samples = 0;
  Method method = Method::exact;
  std::uint64_t seed = 0;
};

struct MCConfig {
  std::int64_t samples = 1 << 20;
  std::uint64_t seed = 12345;
  std::int64_t blocks = 64; // samples >= blocks >= 1
  Engine engine = Engine::qmc;
  bool control_variate = false; // regress on |P|^2, whose mean is known
  int jobs = 0;                 // 0: use the process-wide default
};

// P(theta) = sum_alpha c_alpha e^{2 pi i <alpha, theta>} on [0,1)^dim.
// An empty coefficient vector means all-ones; otherwise it runs parallel
// to support.elems.
struct TrigPolynomial {
  IndexSet support;
  std::vector<std::complex<double>> coefficients;
};

TrigPolynomial all_ones(IndexSet set);

// |P(theta)|; theta.size() must equal the support dimension.
double eval_abs_sum(const TrigPolynomial& P, const std::vector<double>& theta);

// Mean of |P| over the torus. Deterministic for fixed (seed, blocks)
// regardless of the number of worker threads. The standard error is the
// spread of the block means over sqrt(blocks).
IntegralEstimate l1_norm(const TrigPolynomial& P, const MCConfig& cfg = {});

// sqrt(sum |c_alpha|^2), exact by orthonormality of the characters.
double l2_norm_exact(const TrigPolynomial& P);

// (mean of |P|^p)^{1/p}; the standard error is pushed through the 1/p
// power by the delta method.
IntegralEstimate lp_norm(const TrigPolynomial& P, double p,
                         const MCConfig& cfg = {});

// Time average (1/2T) int_{-T}^{T} |sum_n a_n e^{-i omega_n t}| dt by
// composite Kronrod panels (at least `nodes` evaluation points, panel
// width at most pi/(4 max|omega|)). `value` is the average at T; the
// ladder at T, 2T, 4T is attached for convergence diagnostics.
struct ErgodicEstimate {
  IntegralEstimate estimate;
  double at_T = 0.0;
  double at_2T = 0.0;
  double at_4T = 0.0;
};

ErgodicEstimate ergodic_l1(const std::vector<double>& omegas,
                           const std::vector<std::complex<double>>& coeffs,
                           double T, std::int64_t nodes = 4096);

} // namespace haarproj

#endif // HAARPROJ_INTEGRATE_HPP
