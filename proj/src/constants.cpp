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

#include <haarproj/constants.hpp>

#include <haarproj/kernels.hpp>
#include <haarproj/quadrature.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace haarproj {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795029;
constexpr double kSqrtPi = 1.7724538509055160272981674833411452;

void require_dim(std::int64_t n, std::int64_t least)
{
  if (n < least)
    throw std::invalid_argument("dimension must be >= " +
                                std::to_string(least));
}

double powi(double base, std::int64_t e)
{
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// integrand (1 - J_0(t)^n) / t^2; near 0 the subtraction 1 - j0(t) loses
// every significant digit and the resulting noise stalls the adaptive
// panels, so there u = 1 - J_0(t) comes from the ascending series instead
double bessel_integrand(std::int64_t n, double t)
{
  if (t <= 0.5) {
    double q = 0.25 * t * t;
    double u = q;
    double term = q;
    for (int k = 2; term > u * 1e-17 && k < 40; ++k) {
      term *= q / static_cast<double>(k * k);
      u += (k % 2 == 0) ? -term : term;
    }
    if (u == 0.0) return static_cast<double>(n) / 4.0;
    return -std::expm1(static_cast<double>(n) * std::log1p(-u)) / (t * t);
  }
  double j = bessel_j0(t);
  double one_minus;
  if (j > 0.5)
    one_minus = -std::expm1(static_cast<double>(n) * std::log(j));
  else
    one_minus = 1.0 - powi(j, n);
  return one_minus / (t * t);
}

double bessel_l1_integral(std::int64_t n)
{
  // past T the integrand is 1/t^2 minus J_0^n/t^2: the first part sums to
  // 1/T exactly and the second is bounded through the padded envelope
  // |J_0(t)| <= 1.02 sqrt(2/(pi t)), giving a remainder below 1e-10 once
  // T >= (env^n / ((n/2+1) 1e-10))^{1/(n/2+1)}
  double half = static_cast<double>(n) / 2.0;
  double env = std::pow(1.02 * std::sqrt(2.0 / kPi), static_cast<double>(n));
  double t_tail =
      std::pow(env / ((half + 1.0) * 1e-10), 1.0 / (half + 1.0));
  double T = std::max(8.0, t_tail);
  auto f = [n](double t) { return bessel_integrand(n, t); };
  QuadResult q = integrate_adaptive(f, 0.0, T, 1e-11, {}, 1e-15);
  return q.value + 1.0 / T;
}

} // namespace

double proj_l2_complex(std::int64_t n)
{
  require_dim(n, 1);
  double nn = static_cast<double>(n);
  return kSqrtPi / 2.0 * std::exp(std::lgamma(nn + 1.0) - std::lgamma(nn + 0.5));
}

double proj_l2_real(std::int64_t n)
{
  require_dim(n, 1);
  double nn = static_cast<double>(n);
  return 2.0 / kSqrtPi *
         std::exp(std::lgamma((nn + 2.0) / 2.0) - std::lgamma((nn + 1.0) / 2.0));
}

double proj_l1_real(std::int64_t n)
{
  require_dim(n, 1);
  return proj_l2_real(n % 2 == 0 ? n - 1 : n);
}

double proj_l1_complex(std::int64_t n)
{
  require_dim(n, 1);
  static std::mutex mutex;
  static std::map<std::int64_t, double> memo;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  double v = bessel_l1_integral(n);
  std::lock_guard<std::mutex> lock(mutex);
  memo.emplace(n, v);
  return v;
}

double kadets_snobar(std::int64_t n)
{
  require_dim(n, 1);
  return std::sqrt(static_cast<double>(n));
}

double lewis_bound(std::int64_t n)
{
  require_dim(n, 2);
  double nn = static_cast<double>(n);
  double decrement = std::exp(-static_cast<double>(2 * n + 11) * std::log(5.0) -
                              2.0 * std::log(nn));
  return std::sqrt(nn) * (1.0 - decrement);
}

Bracket lambda2_bracket(std::int64_t N, double C2, std::string source)
{
  if (N < 1) throw std::invalid_argument("need at least one character");
  if (!(C2 >= 1.0))
    throw std::invalid_argument("a Lambda(2) constant is at least 1");
  double root = std::sqrt(static_cast<double>(N));
  return Bracket{root / C2, root, std::move(source)};
}

double proj_box_exact(const std::vector<std::int64_t>& d, bool analytic)
{
  double prod = 1.0;
  for (auto m : d) {
    if (m < 0) throw std::invalid_argument("box degrees must be >= 0");
    prod *= analytic ? lebesgue_Lplus(m) : lebesgue_L(m);
  }
  return prod;
}

double bessel_j0(double t)
{
  return ::j0(t);
}

const char* curve_name(Curve c)
{
  switch (c) {
    case Curve::lozinski: return "lozinski";
    case Curve::harper: return "harper";
    case Curve::logp: return "logp";
    case Curve::landau: return "landau";
    case Curve::babenko: return "babenko";
    case Curve::limit_formula: return "limit_formula";
  }
  return "?";
}

Curve curve_from_name(std::string_view name)
{
  for (Curve c : {Curve::lozinski, Curve::harper, Curve::logp, Curve::landau,
                  Curve::babenko, Curve::limit_formula})
    if (name == curve_name(c)) return c;
  throw std::invalid_argument("unknown reference curve: " + std::string(name));
}

double reference_curve(Curve c, double x, double param)
{
  constexpr double kE = 2.7182818284590452353602874713526625;
  auto integer_param = [&](const char* what) {
    auto k = std::llround(param);
    if (k < 1 || std::fabs(param - static_cast<double>(k)) > 1e-9)
      throw std::invalid_argument(std::string(what) +
                                  " must be a positive integer");
    return k;
  };
  switch (c) {
    case Curve::lozinski:
      if (x < 0.0) throw std::domain_error("lozinski curve needs x >= 0");
      return 4.0 / (kPi * kPi) * std::log(x + 1.0);
    case Curve::harper:
      if (!(x > kE)) throw std::domain_error("harper curve needs x > e");
      return std::sqrt(x) / std::pow(std::log(std::log(x)), 0.25);
    case Curve::logp:
      if (x < 0.0) throw std::domain_error("logp curve needs x >= 0");
      return kSqrtPi / 2.0 * std::sqrt(x);
    case Curve::landau: {
      auto m = integer_param("landau order m");
      if (!(x > kE)) throw std::domain_error("landau curve needs x > e");
      return x / std::log(x) *
             std::pow(std::log(std::log(x)), static_cast<double>(m - 1)) /
             std::tgamma(static_cast<double>(m));
    }
    case Curve::babenko: {
      auto n = integer_param("babenko dimension n");
      if (x < 0.0) throw std::domain_error("babenko curve needs x >= 0");
      return std::pow(x, static_cast<double>(n - 1) / 2.0);
    }
    case Curve::limit_formula: {
      auto n = integer_param("limit formula dimension n");
      if (x < 1.0) throw std::domain_error("limit formula needs x >= 1");
      return std::pow(4.0 / (kPi * kPi) * std::log(x),
                      static_cast<double>(n));
    }
  }
  throw std::invalid_argument("unknown reference curve");
}

} // namespace haarproj
