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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <haarproj/integrate.hpp>
#include <haarproj/kernels.hpp>
#include <haarproj/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <vector>

using namespace haarproj;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourOverPi = 4.0 / kPi;

// Mean of |sum_k c_k e^{ik t}| over one period, by adaptive quadrature;
// an oracle for every 1-D sampling result.
double circle_mean_oracle(const std::vector<std::int64_t>& freqs,
                          const std::vector<cplx>& coeffs)
{
  auto f = [&](double t) {
    cplx v = 0.0;
    for (std::size_t k = 0; k < freqs.size(); ++k)
      v += coeffs[k] * std::exp(cplx(0.0, static_cast<double>(freqs[k]) * t));
    return std::abs(v);
  };
  QuadResult r = integrate_adaptive(f, 0.0, 2.0 * kPi, 1e-9, {}, 1e-12);
  return r.value / (2.0 * kPi);
}

IndexSet basis_set(int n)
{
  std::vector<MultiIndex> elems;
  for (int j = 0; j < n; ++j) {
    MultiIndex e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    elems.push_back(e);
  }
  return custom_set(n, elems);
}

MCConfig quick_cfg(std::uint64_t seed, std::int64_t samples = 1 << 14)
{
  MCConfig cfg;
  cfg.samples = samples;
  cfg.blocks = 32;
  cfg.seed = seed;
  return cfg;
}

} // namespace

TEST_CASE("eval_abs_sum matches hand values")
{
  TrigPolynomial single = all_ones(custom_set(1, {{0}}));
  CHECK(eval_abs_sum(single, {0.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eval_abs_sum(single, {0.37}) == doctest::Approx(1.0).epsilon(1e-15));

  TrigPolynomial pair = all_ones(basis_set(2));
  CHECK(eval_abs_sum(pair, {0.0, 0.0}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(eval_abs_sum(pair, {0.0, 0.5}) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

  // 1 + 2i z at z = i: 1 + 2i*i = -1
  TrigPolynomial weighted{custom_set(1, {{0}, {1}}), {cplx(1.0, 0.0), cplx(0.0, 2.0)}};
  CHECK(eval_abs_sum(weighted, {0.25}) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(eval_abs_sum(pair, {0.0}), std::invalid_argument);
}

TEST_CASE("l2_norm_exact from the coefficient vector")
{
  CHECK(l2_norm_exact(all_ones(box_set({1, 1}))) == doctest::Approx(3.0));
  TrigPolynomial single{custom_set(1, {{4}}), {cplx(0.0, 5.0)}};
  CHECK(l2_norm_exact(single) == doctest::Approx(5.0));
  TrigPolynomial three{custom_set(1, {{0}, {1}, {2}}),
                       {cplx(1.0, 0.0), cplx(2.0, 0.0), cplx(2.0, 0.0)}};
  CHECK(l2_norm_exact(three) == doctest::Approx(3.0));
}

TEST_CASE("input validation")
{
  CHECK_THROWS_AS(l1_norm(all_ones(IndexSet{})), std::invalid_argument);

  TrigPolynomial bad{basis_set(2), {cplx(1.0, 0.0)}};
  CHECK_THROWS_AS(l1_norm(bad), std::invalid_argument);

  TrigPolynomial zero{basis_set(2), {cplx(0.0, 0.0), cplx(0.0, 0.0)}};
  CHECK_THROWS_AS(l1_norm(zero), std::invalid_argument);

  MCConfig cfg;
  cfg.samples = 8;
  cfg.blocks = 16;
  CHECK_THROWS_AS(l1_norm(all_ones(basis_set(2)), cfg), std::invalid_argument);

  CHECK_THROWS_AS(lp_norm(all_ones(basis_set(2)), 0.5), std::invalid_argument);
}

TEST_CASE("two q-independent characters average to 4/pi")
{
  MCConfig cfg;
  cfg.samples = 1 << 20;
  cfg.seed = 99;
  IntegralEstimate est = l1_norm(all_ones(basis_set(2)), cfg);
  CHECK(est.method == Method::qmc);
  CHECK(est.std_err > 0.0);
  CHECK(est.std_err < 1e-3);
  CHECK(std::fabs(est.value - kFourOverPi) <= 3.0 * est.std_err);
  CHECK(est.samples <= cfg.samples);
  CHECK(est.samples > (cfg.samples * 9) / 10);
  CHECK(est.seed == 99);
}

TEST_CASE("1-D analytic range reproduces the kernel constant")
{
  TrigPolynomial box = all_ones(custom_set(1, {{0}, {1}, {2}}));
  IntegralEstimate est = l1_norm(box, quick_cfg(7, 1 << 18));
  CHECK(std::fabs(est.value - lebesgue_Lplus(2)) <= 3.0 * est.std_err);
}

TEST_CASE("divisor lift of 16 stays under sqrt(16)")
{
  IntegralEstimate est = l1_norm(all_ones(delta_set(16)), quick_cfg(5, 1 << 18));
  CHECK(est.value <= 4.0 + 3.0 * est.std_err);
  CHECK(est.value > 1.0);
}

TEST_CASE("sampling matches the 1-D quadrature oracle on weighted supports")
{
  std::vector<std::int64_t> freqs = {-3, -1, 0, 2, 5};
  std::vector<cplx> coeffs = {cplx(0.5, -1.0), cplx(1.0, 0.0), cplx(-2.0, 0.25),
                              cplx(0.0, 1.5), cplx(1.0, 1.0)};
  std::vector<MultiIndex> elems;
  for (auto f : freqs) elems.push_back({f});
  TrigPolynomial P{custom_set(1, elems), coeffs};
  double want = circle_mean_oracle(freqs, coeffs);
  IntegralEstimate est = l1_norm(P, quick_cfg(11, 1 << 17));
  CHECK(std::fabs(est.value - want) <= 3.0 * est.std_err);

  MCConfig plain = quick_cfg(11, 1 << 17);
  plain.engine = Engine::mc;
  IntegralEstimate mc = l1_norm(P, plain);
  CHECK(mc.method == Method::mc);
  CHECK(std::fabs(mc.value - want) <= 3.0 * mc.std_err);
}

TEST_CASE("fast evaluation paths agree with the direct walk")
{
  // forcing an explicit all-ones coefficient vector disables the run and
  // sieve shortcuts, so both paths see identical sample points
  auto force_direct = [](const IndexSet& s) {
    return TrigPolynomial{s, std::vector<cplx>(s.elems.size(), cplx(1.0, 0.0))};
  };
  MCConfig cfg = quick_cfg(21, 1 << 12);

  IndexSet runs_set = ninf_lift_set(3, 2);
  IntegralEstimate fast = l1_norm(all_ones(runs_set), cfg);
  IntegralEstimate slow = l1_norm(force_direct(runs_set), cfg);
  CHECK(fast.value == doctest::Approx(slow.value).epsilon(1e-10));

  IndexSet dlift = delta_set(60);
  fast = l1_norm(all_ones(dlift), cfg);
  slow = l1_norm(force_direct(dlift), cfg);
  CHECK(fast.value == doctest::Approx(slow.value).epsilon(1e-10));

  IndexSet nlift = n1_lift_set(2, 60);
  fast = l1_norm(all_ones(nlift), cfg);
  slow = l1_norm(force_direct(nlift), cfg);
  CHECK(fast.value == doctest::Approx(slow.value).epsilon(1e-10));

  // same elements under a custom tag cannot use the sieve plan either
  IndexSet retagged = custom_set(dlift.dim, dlift.elems);
  IntegralEstimate direct2 = l1_norm(all_ones(retagged), cfg);
  IntegralEstimate ref = l1_norm(all_ones(dlift), cfg);
  CHECK(direct2.value == doctest::Approx(ref.value).epsilon(1e-10));
}

TEST_CASE("estimates are bitwise deterministic across worker counts")
{
  std::vector<TrigPolynomial> polys;
  polys.push_back(all_ones(delta_set(30)));
  polys.push_back(all_ones(basis_set(3)));
  TrigPolynomial weighted{custom_set(2, {{0, 1}, {1, 0}, {2, 2}}),
                          {cplx(1, 2), cplx(-0.5, 0), cplx(0, 1)}};
  polys.push_back(weighted);

  for (const auto& P : polys) {
    for (Engine eng : {Engine::qmc, Engine::mc}) {
      MCConfig a = quick_cfg(17, 1 << 12);
      a.engine = eng;
      a.jobs = 1;
      MCConfig b = a;
      b.jobs = 4;
      IntegralEstimate ea = l1_norm(P, a);
      IntegralEstimate eb = l1_norm(P, b);
      CHECK(ea.value == eb.value);
      CHECK(ea.std_err == eb.std_err);
      CHECK(ea.samples == eb.samples);
    }
  }
}

TEST_CASE("block accounting and constant shortcut")
{
  MCConfig cfg = quick_cfg(3, 1000);
  cfg.blocks = 10;
  cfg.engine = Engine::mc;
  IntegralEstimate est = l1_norm(all_ones(basis_set(2)), cfg);
  CHECK(est.samples == 1000);

  cfg.engine = Engine::qmc;
  est = l1_norm(all_ones(basis_set(2)), cfg);
  CHECK(est.samples == 97 * 10); // largest prime <= 100 per block

  cfg.blocks = 1;
  est = l1_norm(all_ones(basis_set(2)), cfg);
  CHECK(est.std_err == 0.0); // a single block carries no spread

  TrigPolynomial constant{custom_set(0, {MultiIndex{}}), {cplx(3.0, 4.0)}};
  est = l1_norm(constant);
  CHECK(est.method == Method::exact);
  CHECK(est.value == doctest::Approx(5.0));
  CHECK(est.std_err == 0.0);
}

TEST_CASE("control variate keeps the answer and cuts the spread")
{
  // plain MC here: the lattice rule integrates |P|^2 exactly, which
  // collapses the regression variance and turns the variate off
  MCConfig plain = quick_cfg(31, 1 << 16);
  plain.engine = Engine::mc;
  MCConfig cv = plain;
  cv.control_variate = true;
  IntegralEstimate a = l1_norm(all_ones(basis_set(2)), plain);
  IntegralEstimate b = l1_norm(all_ones(basis_set(2)), cv);
  CHECK(std::fabs(b.value - kFourOverPi) <= 3.0 * b.std_err + 1e-12);
  CHECK(b.std_err < a.std_err);
}

TEST_CASE("lp_norm: consistency with l1, Parseval, and a quartic moment")
{
  TrigPolynomial pair = all_ones(basis_set(2));
  MCConfig cfg = quick_cfg(13, 1 << 16);

  IntegralEstimate p1 = lp_norm(pair, 1.0, cfg);
  IntegralEstimate l1 = l1_norm(pair, cfg);
  CHECK(p1.value == l1.value);
  CHECK(p1.std_err == l1.std_err);

  IntegralEstimate p2 = lp_norm(pair, 2.0, cfg);
  CHECK(std::fabs(p2.value - l2_norm_exact(pair)) <= 3.0 * p2.std_err);

  // int |1+e(t)|^4 dt = 6, so the L4 norm is 6^{1/4}
  IntegralEstimate p4 = lp_norm(pair, 4.0, cfg);
  CHECK(p4.std_err > 0.0);
  CHECK(std::fabs(p4.value - std::pow(6.0, 0.25)) <= 3.0 * p4.std_err);
}

TEST_CASE("Parseval guard on 200 random all-ones supports")
{
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> dim_d(1, 4);
  std::uniform_int_distribution<int> size_d(1, 20);
  std::uniform_int_distribution<std::int64_t> entry_d(-3, 3);
  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = dim_d(rng);
    int want = size_d(rng);
    if (n == 1) want = std::min(want, 7); // only 7 lattice points in [-3,3]
    std::set<MultiIndex> elems;
    while (static_cast<int>(elems.size()) < want) {
      MultiIndex a(static_cast<std::size_t>(n));
      for (auto& v : a) v = entry_d(rng);
      elems.insert(a);
    }
    TrigPolynomial P = all_ones(
        custom_set(n, std::vector<MultiIndex>(elems.begin(), elems.end())));
    IntegralEstimate est = lp_norm(P, 2.0, quick_cfg(100 + trial));
    double exact = l2_norm_exact(P);
    if (std::fabs(est.value - exact) > 3.0 * est.std_err + 1e-9) ++violations;

    // Cauchy-Schwarz sandwich for the same support
    IntegralEstimate one = l1_norm(P, quick_cfg(300 + trial));
    CHECK(one.value <= exact * (1.0 + 3.0 * one.std_err / one.value));
  }
  CHECK(violations == 0);
}

TEST_CASE("hypercontractive bound holds for 200 Gaussian polynomials")
{
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> nd(1, 3), md(1, 3);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = nd(rng), m = md(rng);
    IndexSet sup = lambda_set(1, m, n, true);
    std::vector<cplx> coeffs(sup.elems.size());
    for (auto& c : coeffs) c = cplx(gauss(rng), gauss(rng));
    TrigPolynomial P{sup, coeffs};
    if (l2_norm_exact(P) == 0.0) continue;
    IntegralEstimate one = l1_norm(P, quick_cfg(500 + trial));
    double lhs = l2_norm_exact(P);
    double rhs = std::sqrt(std::pow(2.0, m)) * one.value + 3.0 * one.std_err;
    if (lhs > rhs) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("box supports factor into kernel constants")
{
  IntegralEstimate sym = l1_norm(all_ones(box_set({1, 2})), quick_cfg(41, 1 << 17));
  double want = lebesgue_L(1) * lebesgue_L(2);
  CHECK(std::fabs(sym.value - want) <= 3.0 * sym.std_err);

  IntegralEstimate ana = l1_norm(all_ones(ninf_lift_set(2, 2)), quick_cfg(43, 1 << 17));
  double wplus = lebesgue_Lplus(2) * lebesgue_Lplus(2);
  CHECK(std::fabs(ana.value - wplus) <= 3.0 * ana.std_err);
}

TEST_CASE("time averages: constants, circle pairs, and prime logs")
{
  ErgodicEstimate one = ergodic_l1({0.0}, {cplx(1.0, 0.0)}, 10.0);
  CHECK(one.at_T == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(one.estimate.method == Method::quadrature);

  ErgodicEstimate pair =
      ergodic_l1({0.0, 1.0}, {cplx(1.0, 0.0), cplx(1.0, 0.0)}, 1e4);
  CHECK(std::fabs(pair.at_T - kFourOverPi) <= 1e-2);
  CHECK(std::fabs(pair.at_2T - kFourOverPi) <= 1e-2);
  CHECK(std::fabs(pair.at_4T - kFourOverPi) <= 1e-2);
  CHECK(pair.estimate.value == pair.at_T);
  CHECK(pair.estimate.samples >= 4096);

  ErgodicEstimate logs = ergodic_l1({std::log(2.0), std::log(3.0)},
                                    {cplx(1.0, 0.0), cplx(1.0, 0.0)}, 1e5);
  CHECK(std::fabs(logs.at_T - kFourOverPi) <= 1e-3);

  CHECK_THROWS_AS(ergodic_l1({0.0}, {cplx(1.0, 0.0)}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(ergodic_l1({0.0}, {cplx(1.0, 0.0)}, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(ergodic_l1({0.0, 1.0}, {cplx(1.0, 0.0)}, 1.0), std::invalid_argument);
  double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(ergodic_l1({inf}, {cplx(1.0, 0.0)}, 1.0), std::invalid_argument);
}

TEST_CASE("time averages agree with circle means for integer frequencies")
{
  std::vector<std::vector<std::int64_t>> supports = {
      {0, 2, 5}, {1, 3}, {0, 1, 2, 3, 4, 5}};
  for (const auto& J : supports) {
    std::vector<double> om(J.begin(), J.end());
    std::vector<cplx> cf(J.size(), cplx(1.0, 0.0));
    ErgodicEstimate erg = ergodic_l1(om, cf, 1e4);
    double want = circle_mean_oracle(J, cf);
    CHECK(std::fabs(erg.at_T - want) <= 1e-2);
  }
}
