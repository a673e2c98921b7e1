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

#include <haarproj/dirichlet.hpp>

#include <haarproj/kernels.hpp>
#include <haarproj/numtheory.hpp>
#include <haarproj/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace haarproj {

namespace {

constexpr double kTwoPi = 6.2831853071795864769252867665590058;

std::vector<std::int64_t> sorted_support(const DirichletSpace& space)
{
  if (space.support.empty())
    throw std::invalid_argument("support must be non-empty");
  std::vector<std::int64_t> s = space.support;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

void validate(const DirichletSpace& space, const std::vector<std::int64_t>& s)
{
  for (const auto& [n, c] : space.coefficients) {
    if (!std::binary_search(s.begin(), s.end(), n))
      throw std::invalid_argument("coefficient index outside the support");
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("coefficients must be finite");
  }
  if (space.frequency.kind == FrequencyKind::q_independent &&
      space.frequency.values.empty())
    return; // values optional: only |support| enters the closed form
  double prev = -1.0;
  for (std::int64_t n : s) {
    double w = frequency_value(space.frequency, n);
    if (!std::isfinite(w))
      throw std::invalid_argument("frequency values must be finite");
    if (w < 0.0)
      throw std::invalid_argument("frequency values must be non-negative");
    if (w <= prev)
      throw std::invalid_argument(
          "frequency values must be strictly increasing over the support");
    prev = w;
  }
}

struct OneDim {
  double value = 0.0;
  double err = 0.0;   // quadrature error of the mean; 0 for closed forms
  bool closed = true; // no quadrature ran
};

// Haar mean of |sum_n z^n| over a finite 1-D exponent set. Translation
// (z^-a factors out of the modulus) and dilation (z -> z^d preserves Haar
// measure) reduce arithmetic progressions to the closed analytic-kernel
// constant; everything else goes to adaptive panels with splits planted on
// the near-zero minima of the integrand.
OneDim one_dim_constant(std::vector<std::int64_t> freqs)
{
  const std::int64_t base = freqs.front();
  for (auto& v : freqs) v -= base;
  if (freqs.size() == 1) return {1.0, 0.0, true};

  std::int64_t d = freqs[1];
  bool ap = d >= 1;
  for (std::size_t i = 2; ap && i < freqs.size(); ++i)
    ap = freqs[i] - freqs[i - 1] == d;
  if (ap)
    return {lebesgue_Lplus(static_cast<std::int64_t>(freqs.size()) - 1), 0.0,
            true};

  auto f = [&freqs](double t) {
    double re = 0.0;
    double im = 0.0;
    for (auto n : freqs) {
      double a = static_cast<double>(n) * t;
      re += std::cos(a);
      im += std::sin(a);
    }
    return std::sqrt(re * re + im * im);
  };

  const std::int64_t width = freqs.back();
  const int grid = static_cast<int>(
      std::clamp<std::int64_t>(32 * width, 1024, std::int64_t{1} << 16));
  std::vector<double> vals(grid);
  double top = 0.0;
  for (int i = 0; i < grid; ++i) {
    vals[i] = f(kTwoPi * i / grid);
    top = std::max(top, vals[i]);
  }
  std::vector<double> splits;
  for (int i = 0; i < grid; ++i) {
    double v = vals[i];
    if (v > 0.2 * top) continue;
    if (v > vals[(i + grid - 1) % grid] || v > vals[(i + 1) % grid]) continue;
    double lo = kTwoPi * (i - 1) / grid;
    double hi = kTwoPi * (i + 1) / grid;
    while (hi - lo > 1e-12) {
      double m1 = lo + (hi - lo) / 3.0;
      double m2 = hi - (hi - lo) / 3.0;
      if (f(m1) < f(m2))
        hi = m2;
      else
        lo = m1;
    }
    splits.push_back(0.5 * (lo + hi));
  }

  QuadResult q = integrate_adaptive(f, 0.0, kTwoPi, 1e-9, splits, 1e-13);
  return {q.value / kTwoPi, q.err_bound / kTwoPi, false};
}

// A lift is a box exactly when it equals the cartesian product of its
// per-coordinate value sets; distinct elements make the cardinality
// comparison sufficient.
bool box_factors(const IndexSet& lift,
                 std::vector<std::vector<std::int64_t>>& factors)
{
  factors.assign(static_cast<std::size_t>(lift.dim), {});
  for (int j = 0; j < lift.dim; ++j) {
    auto& vals = factors[static_cast<std::size_t>(j)];
    for (const auto& e : lift.elems) vals.push_back(e[static_cast<std::size_t>(j)]);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  }
  unsigned __int128 prod = 1;
  for (const auto& vals : factors) {
    prod *= vals.size();
    if (prod > lift.elems.size()) return false;
  }
  return prod == lift.elems.size();
}

std::int64_t omega_max(const IndexSet& lift)
{
  std::int64_t best = 0;
  for (const auto& e : lift.elems) {
    std::int64_t s = 0;
    for (auto v : e) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

std::optional<Bracket> make_bracket(const DirichletSpace& space,
                                    std::int64_t count, const IndexSet* lift)
{
  if (space.frequency.b2)
    return lambda2_bracket(count, std::sqrt(2.0), "b2");
  if (lift) {
    double c2 = std::pow(2.0, 0.5 * static_cast<double>(omega_max(*lift)));
    return lambda2_bracket(count, std::max(1.0, c2));
  }
  return std::nullopt;
}

// Grow the sample count until the standard error falls under 0.5% of the
// running value or the cap binds. Stages use the same seed; each one is a
// fresh deterministic estimate, and the last one is reported.
IntegralEstimate sampled_l1(const TrigPolynomial& poly, const MCConfig& budget,
                            Engine engine, bool& exhausted)
{
  MCConfig cfg = budget;
  cfg.engine = engine;
  const std::int64_t cap = budget.samples;
  std::int64_t stage =
      std::min(cap, std::max<std::int64_t>(4096, budget.blocks));
  IntegralEstimate est;
  for (;;) {
    cfg.samples = stage;
    est = l1_norm(poly, cfg);
    if (est.std_err <= 0.005 * std::abs(est.value) || stage >= cap) break;
    stage = std::min(cap, stage * 4);
  }
  exhausted = est.std_err > 0.005 * std::abs(est.value);
  return est;
}

} // namespace

const char* frequency_kind_name(FrequencyKind k)
{
  switch (k) {
    case FrequencyKind::natural: return "natural";
    case FrequencyKind::log_integers: return "log_integers";
    case FrequencyKind::log_primes: return "log_primes";
    case FrequencyKind::q_independent: return "q_independent";
    case FrequencyKind::explicit_values: return "explicit";
  }
  return "?";
}

FrequencyKind frequency_kind_from_name(std::string_view name)
{
  if (name == "natural") return FrequencyKind::natural;
  if (name == "log_integers" || name == "logn")
    return FrequencyKind::log_integers;
  if (name == "log_primes" || name == "logp") return FrequencyKind::log_primes;
  if (name == "q_independent" || name == "qindep")
    return FrequencyKind::q_independent;
  if (name == "explicit") return FrequencyKind::explicit_values;
  throw std::invalid_argument("unknown frequency kind: " + std::string(name));
}

const char* proj_method_name(ProjMethod m)
{
  switch (m) {
    case ProjMethod::auto_select: return "auto";
    case ProjMethod::exact_kernel: return "exact_kernel";
    case ProjMethod::exact_product: return "exact_product";
    case ProjMethod::closed_form_l1: return "closed_form_l1";
    case ProjMethod::mc: return "mc";
    case ProjMethod::qmc: return "qmc";
    case ProjMethod::ergodic: return "ergodic";
  }
  return "?";
}

double frequency_value(const Frequency& f, std::int64_t n)
{
  switch (f.kind) {
    case FrequencyKind::natural:
      if (n < 0)
        throw std::invalid_argument("the natural frequency indexes from 0");
      return static_cast<double>(n);
    case FrequencyKind::log_integers:
      if (n < 1)
        throw std::invalid_argument(
            "the log-integer frequency indexes from 1");
      return std::log(static_cast<double>(n));
    case FrequencyKind::log_primes:
      if (n < 1)
        throw std::invalid_argument("the log-prime frequency indexes from 1");
      return std::log(static_cast<double>(
          numtheory::nth_prime(static_cast<std::uint64_t>(n))));
    case FrequencyKind::q_independent:
    case FrequencyKind::explicit_values:
      if (n < 0 || n >= static_cast<std::int64_t>(f.values.size()))
        throw std::invalid_argument(
            "no stored frequency value for this index");
      return f.values[static_cast<std::size_t>(n)];
  }
  throw std::invalid_argument("unknown frequency kind");
}

IndexSet bohr_transform(const DirichletSpace& space)
{
  std::vector<std::int64_t> s = sorted_support(space);
  validate(space, s);
  switch (space.frequency.kind) {
    case FrequencyKind::natural: {
      std::vector<MultiIndex> elems;
      elems.reserve(s.size());
      for (auto n : s) elems.push_back({n});
      return custom_set(1, std::move(elems));
    }
    case FrequencyKind::log_integers: {
      if (s.front() == 1 &&
          s.back() == static_cast<std::int64_t>(s.size()))
        return delta_set(s.back()); // {1..x}: keep the family tag
      int dim = static_cast<int>(
          numtheory::prime_pi(static_cast<std::uint64_t>(s.back())));
      std::vector<MultiIndex> elems;
      elems.reserve(s.size());
      for (auto n : s)
        elems.push_back(numtheory::bohr_lift(static_cast<std::uint64_t>(n),
                                             static_cast<std::size_t>(dim)));
      return custom_set(dim, std::move(elems));
    }
    case FrequencyKind::log_primes:
    case FrequencyKind::q_independent: {
      int dim = static_cast<int>(s.size());
      std::vector<MultiIndex> elems;
      elems.reserve(s.size());
      for (int j = 0; j < dim; ++j) {
        MultiIndex e(static_cast<std::size_t>(dim), 0);
        e[static_cast<std::size_t>(j)] = 1;
        elems.push_back(std::move(e));
      }
      return custom_set(dim, std::move(elems));
    }
    case FrequencyKind::explicit_values:
      break;
  }
  throw std::invalid_argument(
      "an explicit frequency has no finite torus model; use the ergodic "
      "engine");
}

ProjectionConstantResult projection_constant(const DirichletSpace& space,
                                             ProjMethod method,
                                             const MCConfig& budget)
{
  std::vector<std::int64_t> s = sorted_support(space);
  validate(space, s);
  const std::int64_t count = static_cast<std::int64_t>(s.size());
  const FrequencyKind kind = space.frequency.kind;

  std::optional<IndexSet> lift;
  auto get_lift = [&]() -> const IndexSet& {
    if (!lift) lift = bohr_transform(space);
    return *lift;
  };

  std::vector<std::vector<std::int64_t>> factors;
  if (method == ProjMethod::auto_select) {
    switch (kind) {
      case FrequencyKind::natural:
        method = ProjMethod::exact_kernel;
        break;
      case FrequencyKind::log_primes:
      case FrequencyKind::q_independent:
        method = ProjMethod::closed_form_l1;
        break;
      case FrequencyKind::log_integers:
        method = box_factors(get_lift(), factors) ? ProjMethod::exact_product
                 : budget.engine == Engine::mc    ? ProjMethod::mc
                                                  : ProjMethod::qmc;
        break;
      case FrequencyKind::explicit_values:
        method = ProjMethod::ergodic;
        break;
    }
  }

  ProjectionConstantResult r;
  r.method = method;
  switch (method) {
    case ProjMethod::exact_kernel: {
      if (kind != FrequencyKind::natural)
        throw std::invalid_argument(
            "exact_kernel applies to the natural frequency only");
      OneDim od = one_dim_constant(s);
      r.estimate.value = od.value;
      r.estimate.std_err = od.err;
      r.estimate.method = od.closed ? Method::exact : Method::quadrature;
      r.torus_dim = 1;
      r.bracket = make_bracket(space, count, &get_lift());
      break;
    }
    case ProjMethod::closed_form_l1: {
      if (kind != FrequencyKind::log_primes &&
          kind != FrequencyKind::q_independent)
        throw std::invalid_argument(
            "closed_form_l1 needs rationally independent frequencies");
      r.estimate.value = proj_l1_complex(count);
      r.estimate.method = Method::exact;
      r.torus_dim = count;
      r.bracket = make_bracket(space, count, &get_lift());
      break;
    }
    case ProjMethod::exact_product: {
      if (kind != FrequencyKind::log_integers)
        throw std::invalid_argument(
            "exact_product applies to the log-integer frequency only");
      if (factors.empty() && !box_factors(get_lift(), factors))
        throw std::invalid_argument("the exponent set is not a box");
      double value = 1.0;
      double rel_err = 0.0;
      bool closed = true;
      for (const auto& vals : factors) {
        OneDim od = one_dim_constant(vals);
        value *= od.value;
        if (od.value > 0.0) rel_err += od.err / od.value;
        closed = closed && od.closed;
      }
      r.estimate.value = value;
      r.estimate.std_err = value * rel_err;
      r.estimate.method = closed ? Method::exact : Method::quadrature;
      r.torus_dim = get_lift().dim;
      r.bracket = make_bracket(space, count, &get_lift());
      break;
    }
    case ProjMethod::mc:
    case ProjMethod::qmc: {
      const IndexSet& set = get_lift();
      bool exhausted = false;
      r.estimate = sampled_l1(
          all_ones(set), budget,
          method == ProjMethod::mc ? Engine::mc : Engine::qmc, exhausted);
      r.budget_exhausted = exhausted;
      r.torus_dim = set.dim;
      r.bracket = make_bracket(space, count, &set);
      break;
    }
    case ProjMethod::ergodic: {
      std::vector<double> omegas;
      omegas.reserve(s.size());
      for (auto n : s) omegas.push_back(frequency_value(space.frequency, n));
      std::vector<std::complex<double>> ones(omegas.size(), {1.0, 0.0});
      ErgodicEstimate e = ergodic_l1(omegas, ones, 1e4, 4096);
      r.estimate = e.estimate;
      r.torus_dim = 0;
      r.bracket = make_bracket(space, count, nullptr);
      break;
    }
    case ProjMethod::auto_select:
      throw std::logic_error("method resolution fell through");
  }
  return r;
}

HarperResult harper_integral(std::int64_t x, const MCConfig& budget)
{
  if (x < 2) throw std::invalid_argument("need x >= 2");
  DirichletSpace space;
  space.frequency.kind = FrequencyKind::log_integers;
  space.support.resize(static_cast<std::size_t>(x));
  std::iota(space.support.begin(), space.support.end(), std::int64_t{1});

  HarperResult h;
  h.result = projection_constant(space, ProjMethod::auto_select, budget);
  double v = h.result.estimate.value;
  double xd = static_cast<double>(x);
  h.ratio_sqrt = v / std::sqrt(xd);
  h.ratio_curve =
      xd > std::exp(1.0) ? v / reference_curve(Curve::harper, xd) : 0.0;
  return h;
}

ErgodicEstimate ergodic_l1(const DirichletSpace& space, double T,
                           std::int64_t nodes)
{
  std::vector<std::int64_t> s = sorted_support(space);
  validate(space, s);
  std::vector<double> omegas;
  std::vector<std::complex<double>> coeffs;
  omegas.reserve(s.size());
  coeffs.reserve(s.size());
  for (auto n : s) {
    omegas.push_back(frequency_value(space.frequency, n));
    if (space.coefficients.empty()) {
      coeffs.emplace_back(1.0, 0.0);
    } else {
      auto it = space.coefficients.find(n);
      coeffs.push_back(it == space.coefficients.end()
                           ? std::complex<double>(0.0, 0.0)
                           : it->second);
    }
  }
  return ergodic_l1(omegas, coeffs, T, nodes);
}

} // namespace haarproj
