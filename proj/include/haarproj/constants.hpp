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

#ifndef HAARPROJ_CONSTANTS_HPP
#define HAARPROJ_CONSTANTS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace haarproj {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  std::string source;
};

// lambda(l_2^n) over C: (sqrt(pi)/2) n! / Gamma(n + 1/2), via log-Gamma
double proj_l2_complex(std::int64_t n);

// lambda(l_2^n) over R: (2/sqrt(pi)) Gamma((n+2)/2) / Gamma((n+1)/2)
double proj_l2_real(std::int64_t n);

// lambda(l_1^n) over R: the l_2 value at n for odd n, at n-1 for even n
double proj_l1_real(std::int64_t n);

// lambda(l_1^n) over C: int_0^inf (1 - J_0(t)^n) / t^2 dt. Quadrature up
// to a cut T with |J_0(t)| <= sqrt(2/(pi t)); beyond T the 1/t^2 part is
// added exactly and the remainder is below 1e-10 by choice of T.
// Memoized per process.
double proj_l1_complex(std::int64_t n);

// sqrt(n), the universal upper bound for n-dimensional spaces
double kadets_snobar(std::int64_t n);

// sqrt(n) (1 - n^{-2} 5^{-(2n+11)}); n >= 2. The decrement drops below
// one ulp of sqrt(n) already around n = 6, so the value is typically
// indistinguishable from kadets_snobar in double precision.
double lewis_bound(std::int64_t n);

// [sqrt(N)/C2, sqrt(N)] for an N-element character set with a Lambda(2)
// constant at most C2
Bracket lambda2_bracket(std::int64_t N, double C2,
                        std::string source = "lambda2");

// Product formula for (analytic) boxes: prod_j lebesgue_L(d_j), or
// prod_j lebesgue_Lplus(d_j) when analytic is set
double proj_box_exact(const std::vector<std::int64_t>& d, bool analytic);

double bessel_j0(double t);

// Asymptotic reference curves used by the experiment harness.
//   lozinski       (4/pi^2) log(x+1)
//   harper         sqrt(x) / (log log x)^{1/4},   x > e
//   logp           (sqrt(pi)/2) sqrt(x)
//   landau         (x/log x) (log log x)^{m-1} / (m-1)!,  x > e, param = m
//   babenko        x^{(n-1)/2},                   param = n
//   limit_formula  ((4/pi^2) log x)^n,            param = n
enum class Curve { lozinski, harper, logp, landau, babenko, limit_formula };

const char* curve_name(Curve c);
Curve curve_from_name(std::string_view name);

double reference_curve(Curve c, double x, double param = 0.0);

} // namespace haarproj

#endif // HAARPROJ_CONSTANTS_HPP
