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

#ifndef HAARPROJ_SIDON_HPP
#define HAARPROJ_SIDON_HPP

#include <haarproj/integrate.hpp>

#include <cstdint>

namespace haarproj {

// Bounds on the Sidon constant of a finite character set: the largest
// ratio sum |c_alpha| / ||P||_inf over polynomials supported on the set.
// `lower` is constructive and certified; `upper` is the Cauchy-Schwarz
// bound sqrt(|J|). 1 <= lower <= upper always.
struct SidonEstimate {
  double lower = 1.0;           // sum |c| / sup_certificate for the witness
  double upper = 1.0;           // sqrt(|J|)
  TrigPolynomial witness;       // attains `lower`
  double sup_certificate = 1.0; // certified upper bound on ||witness||_inf
};

// Certified upper bound on ||P||_inf: the maximum over a uniform grid with
// `grid` points per axis, plus h * Lip, where h is half the diagonal of one
// grid cell and Lip <= 2 pi sum |c_alpha| ||alpha - s||_2. The recentring
// s is the per-coordinate midpoint of the exponents carrying a nonzero
// coefficient; |P| is invariant under it, and it halves the constant for
// one-sided supports. Requires grid >= 4 * (1 + max total degree) and at
// most 4 torus dimensions.
double sup_norm_certified(const TrigPolynomial& P, std::int64_t grid);

// Level-k Rudin-Shapiro polynomial: all 2^k coefficients are +-1 on the
// exponents {0, ..., 2^k - 1}, and ||P||_inf <= sqrt(2^{k+1}).
TrigPolynomial shapiro_polynomial(int k);

// upper = sqrt(|J|); lower = the best certified ratio over `budget`
// candidate witnesses: random sign patterns on all-ones, a Rudin-Shapiro
// block with sign-flip perturbations when J is one-dimensional and
// contiguous, and random complex Gaussian coefficients for the rest.
// A single character (ratio exactly 1) is the floor, so budget 0 and sets
// in more than 4 dimensions report lower = 1 with the upper bound intact.
// grid 0 picks the smallest grid the certificate accepts.
SidonEstimate sidon_bounds(const IndexSet& J, std::int64_t budget,
                           std::int64_t grid = 0, std::uint64_t seed = 12345);

} // namespace haarproj

#endif // HAARPROJ_SIDON_HPP
