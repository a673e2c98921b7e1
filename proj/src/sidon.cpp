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

#include <haarproj/sidon.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace haarproj {

namespace {

constexpr double kTwoPi = 6.2831853071795864769252867665590058;

std::complex<double> coeff_at(const TrigPolynomial& P, std::size_t j)
{
  return P.coefficients.empty() ? std::complex<double>(1.0, 0.0)
                                : P.coefficients[j];
}

std::int64_t max_total_degree(const TrigPolynomial& P)
{
  std::int64_t deg = 0;
  for (std::size_t j = 0; j < P.support.elems.size(); ++j) {
    if (std::abs(coeff_at(P, j)) == 0.0) continue;
    std::int64_t d = 0;
    for (auto v : P.support.elems[j]) d += std::abs(v);
    deg = std::max(deg, d);
  }
  return deg;
}

double sum_abs(const TrigPolynomial& P)
{
  double s = 0.0;
  for (std::size_t j = 0; j < P.support.elems.size(); ++j)
    s += std::abs(coeff_at(P, j));
  return s;
}

// max_k |P(k/G)| for one torus dimension, evaluated chunk by chunk with a
// per-term rotation so the inner loop carries no trig calls.
double grid_max_1d(const TrigPolynomial& P, std::int64_t grid)
{
  const std::size_t n = P.support.elems.size();
  std::vector<std::int64_t> alpha(n);
  std::vector<std::complex<double>> c(n);
  for (std::size_t j = 0; j < n; ++j) {
    alpha[j] = P.support.elems[j][0];
    c[j] = coeff_at(P, j);
  }
  const std::int64_t chunk = std::min<std::int64_t>(grid, 1 << 15);
  std::vector<std::complex<double>> acc(static_cast<std::size_t>(chunk));
  double best = 0.0;
  for (std::int64_t k0 = 0; k0 < grid; k0 += chunk) {
    const std::int64_t len = std::min(chunk, grid - k0);
    std::fill(acc.begin(), acc.begin() + len, std::complex<double>(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(c[j]) == 0.0) continue;
      const double step = kTwoPi * static_cast<double>(alpha[j]) /
                          static_cast<double>(grid);
      std::complex<double> w = std::polar(1.0, step);
      std::complex<double> z =
          c[j] * std::polar(1.0, step * static_cast<double>(k0));
      for (std::int64_t i = 0; i < len; ++i) {
        acc[static_cast<std::size_t>(i)] += z;
        z *= w;
      }
    }
    for (std::int64_t i = 0; i < len; ++i)
      best = std::max(best, std::abs(acc[static_cast<std::size_t>(i)]));
  }
  return best;
}

double grid_max_nd(const TrigPolynomial& P, std::int64_t grid)
{
  const int dim = P.support.dim;
  const std::size_t n = P.support.elems.size();
  double points = std::pow(static_cast<double>(grid), dim);
  if (points > static_cast<double>(std::int64_t{1} << 26))
    throw std::invalid_argument(
        "certification grid too large for this dimension");

  std::vector<std::complex<double>> table(static_cast<std::size_t>(grid));
  for (std::int64_t m = 0; m < grid; ++m)
    table[static_cast<std::size_t>(m)] =
        std::polar(1.0, kTwoPi * static_cast<double>(m) /
                            static_cast<double>(grid));

  std::vector<std::int64_t> idx(static_cast<std::size_t>(dim), 0);
  double best = 0.0;
  for (;;) {
    std::complex<double> p(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      std::complex<double> cj = coeff_at(P, j);
      if (std::abs(cj) == 0.0) continue;
      std::int64_t m = 0;
      for (int a = 0; a < dim; ++a)
        m += P.support.elems[j][static_cast<std::size_t>(a)] *
             idx[static_cast<std::size_t>(a)];
      m %= grid;
      if (m < 0) m += grid;
      p += cj * table[static_cast<std::size_t>(m)];
    }
    best = std::max(best, std::abs(p));

    int a = 0;
    while (a < dim && ++idx[static_cast<std::size_t>(a)] == grid) {
      idx[static_cast<std::size_t>(a)] = 0;
      ++a;
    }
    if (a == dim) break;
  }
  return best;
}

bool contiguous_1d(const IndexSet& J)
{
  if (J.dim != 1 || J.elems.size() < 2) return false;
  for (std::size_t i = 0; i < J.elems.size(); ++i)
    if (J.elems[i][0] != J.elems[0][0] + static_cast<std::int64_t>(i))
      return false;
  return true;
}

} // namespace

double sup_norm_certified(const TrigPolynomial& P, std::int64_t grid)
{
  const std::size_t n = P.support.elems.size();
  if (n == 0) throw std::invalid_argument("empty support");
  if (!P.coefficients.empty() && P.coefficients.size() != n)
    throw std::invalid_argument(
        "coefficient count does not match the support");
  if (P.support.dim > 4)
    throw std::invalid_argument(
        "certification grids above 4 dimensions are rejected");

  std::complex<double> total(0.0, 0.0);
  for (std::size_t j = 0; j < n; ++j) total += coeff_at(P, j);
  if (P.support.dim == 0) return std::abs(total);

  if (grid < 4 * (1 + max_total_degree(P)))
    throw std::invalid_argument("grid too coarse for the degree");

  const int dim = P.support.dim;
  std::vector<double> lo(static_cast<std::size_t>(dim));
  std::vector<double> hi(static_cast<std::size_t>(dim));
  bool any = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(coeff_at(P, j)) == 0.0) continue;
    for (int a = 0; a < dim; ++a) {
      double v =
          static_cast<double>(P.support.elems[j][static_cast<std::size_t>(a)]);
      if (!any) {
        lo[static_cast<std::size_t>(a)] = v;
        hi[static_cast<std::size_t>(a)] = v;
      } else {
        lo[static_cast<std::size_t>(a)] =
            std::min(lo[static_cast<std::size_t>(a)], v);
        hi[static_cast<std::size_t>(a)] =
            std::max(hi[static_cast<std::size_t>(a)], v);
      }
    }
    any = true;
  }
  if (!any) return 0.0; // identically zero polynomial

  std::size_t live = 0;
  std::complex<double> last(0.0, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> cj = coeff_at(P, j);
    if (std::abs(cj) == 0.0) continue;
    ++live;
    last = cj;
  }
  if (live == 1) return std::abs(last); // one character: constant modulus

  double lip_sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double cj = std::abs(coeff_at(P, j));
    if (cj == 0.0) continue;
    double norm2 = 0.0;
    for (int a = 0; a < dim; ++a) {
      double center = 0.5 * (lo[static_cast<std::size_t>(a)] +
                             hi[static_cast<std::size_t>(a)]);
      double d =
          static_cast<double>(
              P.support.elems[j][static_cast<std::size_t>(a)]) -
          center;
      norm2 += d * d;
    }
    lip_sum += cj * std::sqrt(norm2);
  }
  const double lip = kTwoPi * lip_sum;
  const double h = 0.5 * std::sqrt(static_cast<double>(dim)) /
                   static_cast<double>(grid);

  double gmax = dim == 1 ? grid_max_1d(P, grid) : grid_max_nd(P, grid);
  return gmax + h * lip;
}

TrigPolynomial shapiro_polynomial(int k)
{
  if (k < 0) throw std::invalid_argument("need k >= 0");
  if (k > 24) throw std::invalid_argument("level too large to materialize");
  std::vector<double> p{1.0};
  std::vector<double> q{1.0};
  for (int level = 0; level < k; ++level) {
    const std::size_t half = p.size();
    std::vector<double> np(2 * half);
    std::vector<double> nq(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
      np[i] = p[i];
      nq[i] = p[i];
      np[half + i] = q[i];
      nq[half + i] = -q[i];
    }
    p = std::move(np);
    q = std::move(nq);
  }

  TrigPolynomial out;
  std::vector<MultiIndex> elems;
  elems.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    elems.push_back({static_cast<std::int64_t>(i)});
  out.support = custom_set(1, std::move(elems));
  out.coefficients.reserve(p.size());
  for (double v : p) out.coefficients.emplace_back(v, 0.0);
  return out;
}

SidonEstimate sidon_bounds(const IndexSet& J, std::int64_t budget,
                           std::int64_t grid, std::uint64_t seed)
{
  const std::size_t n = J.elems.size();
  if (n == 0) throw std::invalid_argument("empty set");

  SidonEstimate best;
  best.upper = std::sqrt(static_cast<double>(n));
  best.lower = 1.0;
  best.sup_certificate = 1.0;
  best.witness.support = J;
  best.witness.coefficients.assign(n, {0.0, 0.0});
  best.witness.coefficients[0] = {1.0, 0.0}; // single character: ratio 1

  if (budget <= 0 || J.dim > 4 || n == 1) return best;

  std::int64_t maxdeg = 0;
  for (const auto& e : J.elems) {
    std::int64_t d = 0;
    for (auto v : e) d += std::abs(v);
    maxdeg = std::max(maxdeg, d);
  }
  if (grid <= 0) grid = 4 * (1 + maxdeg);

  const bool contiguous = contiguous_1d(J);
  std::int64_t n_gauss = budget / 2;
  std::int64_t n_sign = budget / 4;
  std::int64_t n_shapiro = budget - n_gauss - n_sign;
  if (!contiguous) {
    n_gauss += n_shapiro;
    n_shapiro = 0;
  }

  std::vector<std::complex<double>> shapiro_base;
  int block = 0;
  if (contiguous) {
    int k = 0;
    while ((std::size_t{1} << (k + 1)) <= n) ++k;
    block = 1 << k;
    TrigPolynomial sh = shapiro_polynomial(k);
    shapiro_base.assign(n, {0.0, 0.0});
    for (int i = 0; i < block; ++i)
      shapiro_base[static_cast<std::size_t>(i)] =
          sh.coefficients[static_cast<std::size_t>(i)];
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> coin(0, 1);

  TrigPolynomial candidate;
  candidate.support = J;
  auto consider = [&](const std::vector<std::complex<double>>& coeffs) {
    candidate.coefficients = coeffs;
    double num = sum_abs(candidate);
    if (num == 0.0) return;
    double cert = sup_norm_certified(candidate, grid);
    if (!(cert > 0.0)) return;
    double ratio = num / cert;
    if (ratio > best.lower) {
      best.lower = ratio;
      best.sup_certificate = cert;
      best.witness.coefficients = coeffs;
    }
  };

  std::vector<std::complex<double>> coeffs(n);
  // sign patterns first (the all-ones vector leads), then the Shapiro
  // block and its sign-flip perturbations, then Gaussian coefficients;
  // a better ratio must be strictly larger, so earlier candidates win ties
  for (std::int64_t t = 0; t < n_sign; ++t) {
    for (auto& c : coeffs)
      c = t == 0 ? std::complex<double>(1.0, 0.0)
                 : std::complex<double>(coin(rng) ? 1.0 : -1.0, 0.0);
    consider(coeffs);
  }
  if (n_shapiro > 0) {
    std::uniform_int_distribution<int> pos(0, block - 1);
    coeffs = shapiro_base;
    consider(coeffs);
    for (std::int64_t t = 1; t < n_shapiro; ++t) {
      coeffs = shapiro_base;
      coeffs[static_cast<std::size_t>(pos(rng))] *= -1.0;
      consider(coeffs);
    }
  }
  for (std::int64_t t = 0; t < n_gauss; ++t) {
    for (auto& c : coeffs) c = {gauss(rng), gauss(rng)};
    consider(coeffs);
  }

  return best;
}

} // namespace haarproj
