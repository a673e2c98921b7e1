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

// Finite-dimensional spaces of Dirichlet polynomials: a frequency, a finite
// support, and the transform onto a concrete torus where the projection
// constant becomes the Haar mean of |character sum|. The dispatcher routes
// each space to the cheapest faithful engine: closed kernel forms in one
// dimension, exact products on box-shaped exponent sets, the closed-form
// integral for independent frequencies, sampling on the lifted set, or time
// averages when no torus model exists.

#ifndef HAARPROJ_DIRICHLET_HPP
#define HAARPROJ_DIRICHLET_HPP

#include <haarproj/constants.hpp>
#include <haarproj/indexsets.hpp>
#include <haarproj/integrate.hpp>

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace haarproj {

// How the values omega_n arise. The named kinds derive them on demand;
// the last two carry them in Frequency::values, indexed by n.
enum class FrequencyKind {
  natural,         // omega_n = n, n >= 0
  log_integers,    // omega_n = log n, n >= 1
  log_primes,      // omega_n = log p_n, n >= 1
  q_independent,   // stored values, declared rationally independent
  explicit_values, // stored values, no declared structure
};

const char* frequency_kind_name(FrequencyKind k);
FrequencyKind frequency_kind_from_name(std::string_view name);

struct Frequency {
  FrequencyKind kind = FrequencyKind::natural;
  std::vector<double> values; // used by the explicit kinds only
  bool b2 = false; // declared square-independence; user input, never verified
};

// omega_n for the given frequency. Throws std::invalid_argument when n is
// outside the kind's index range (natural: n >= 0, log kinds: n >= 1,
// explicit kinds: a stored value must exist).
double frequency_value(const Frequency& f, std::int64_t n);

// The span of the characters with frequencies {omega_n : n in support}.
// Coefficients are optional and only feed polynomial-level helpers such as
// ergodic_l1 (missing keys mean 0, an empty map means all ones); the
// projection constant is an invariant of the space and ignores them.
// For q_independent spaces the stored values may be omitted entirely, since
// only |support| enters the closed form.
struct DirichletSpace {
  Frequency frequency;
  std::vector<std::int64_t> support;
  std::map<std::int64_t, std::complex<double>> coefficients;
};

enum class ProjMethod {
  auto_select,    // let the dispatcher choose
  exact_kernel,   // 1-D: closed kernel constant or panel quadrature
  exact_product,  // per-coordinate product over a box-shaped lift
  closed_form_l1, // Bessel-integral constant of |support| characters
  mc,
  qmc,
  ergodic,
};

const char* proj_method_name(ProjMethod m);

struct ProjectionConstantResult {
  IntegralEstimate estimate;
  std::optional<Bracket> bracket;
  ProjMethod method = ProjMethod::qmc; // the engine that actually ran
  std::int64_t torus_dim = 0;          // 0 when no torus model was used
  bool budget_exhausted = false; // sample cap hit before the stderr target
};

// The exponent set the space lives on: natural -> the 1-D set {n : n in J};
// log_integers -> the prime-exponent vectors in dimension pi(max J);
// log_primes / q_independent -> the standard basis in dimension |J|.
// Throws std::invalid_argument for explicit_values (no finite torus model;
// use the ergodic engine).
IndexSet bohr_transform(const DirichletSpace& space);

// Projection constant of the space. method auto_select routes: natural
// frequencies to the exact kernel path, independent frequencies to the
// closed form, box-shaped integer lifts to the exact product, remaining
// integer lifts to sampling, and explicit_values to the time average.
// Sampling runs in growing stages until the standard error falls under
// 0.5% of the running value or budget.samples is exhausted (then
// budget_exhausted is set). A two-sided root bracket is attached whenever
// the space admits one.
ProjectionConstantResult projection_constant(
    const DirichletSpace& space, ProjMethod method = ProjMethod::auto_select,
    const MCConfig& budget = {});

struct HarperResult {
  ProjectionConstantResult result;
  double ratio_sqrt = 0.0;  // value / sqrt(x)
  double ratio_curve = 0.0; // value / (sqrt(x)/(log log x)^{1/4}); 0 if x <= e
};

// Projection constant of (log_integers, J = {1..x}), with the growth
// diagnostics used by the character-count experiments. Requires x >= 2.
HarperResult harper_integral(std::int64_t x, const MCConfig& budget = {});

// Time-average l1 norm of the space's polynomial over [-T, T] (all ones
// when no coefficients are stored).
ErgodicEstimate ergodic_l1(const DirichletSpace& space, double T,
                           std::int64_t nodes = 4096);

} // namespace haarproj

#endif // HAARPROJ_DIRICHLET_HPP
