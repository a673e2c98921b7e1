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

#include <haarproj/kernels.hpp>
#include <haarproj/quadrature.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <utility>

namespace haarproj {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSingular = 1e-8; // |sin(t/2)| below this: use the sum

double sym_value(std::int64_t m, double t)
{
  double s = std::sin(0.5 * t);
  if (std::abs(s) < kSingular) {
    double v = 1.0;
    for (std::int64_t k = 1; k <= m; ++k) v += 2.0 * std::cos(k * t);
    return v;
  }
  return std::sin((m + 0.5) * t) / s;
}

std::complex<double> analytic_value(std::int64_t m, double t)
{
  double s = std::sin(0.5 * t);
  if (std::abs(s) < kSingular) {
    std::complex<double> v = 0.0;
    for (std::int64_t k = 0; k <= m; ++k)
      v += std::complex<double>(std::cos(k * t), -std::sin(k * t));
    return v;
  }
  // e^{-imt/2} sin((m+1)t/2) / sin(t/2)
  double amp = std::sin(0.5 * (m + 1) * t) / s;
  double phase = -0.5 * m * t;
  return {amp * std::cos(phase), amp * std::sin(phase)};
}

// ---- memoization with optional on-disk persistence --------------------

std::shared_mutex g_memo_mutex;
std::map<std::pair<char, std::int64_t>, double> g_memo;
bool g_cache_loaded = false;

std::string cache_path()
{
  const char* dir = std::getenv("HAAR_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::string(dir) + "/lebesgue_constants.txt";
}

void load_cache_locked()
{
  g_cache_loaded = true;
  std::string path = cache_path();
  if (path.empty()) return;
  std::ifstream is(path);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    char kind;
    std::int64_t m;
    double v;
    if ((ls >> kind >> m >> v) && (kind == 'L' || kind == 'P') && m >= 0)
      g_memo[{kind, m}] = v; // malformed lines are simply skipped
  }
}

void persist(char kind, std::int64_t m, double v)
{
  std::string path = cache_path();
  if (path.empty()) return;
  std::ofstream os(path, std::ios::app);
  if (!os) return; // the cache is best effort
  char buf[64];
  std::snprintf(buf, sizeof buf, "%c %lld %.17g\n", kind,
                static_cast<long long>(m), v);
  os << buf;
}

double mean_abs_kernel(char kind, std::int64_t m)
{
  // kinks of |D| at the zeros of the numerator sine
  std::int64_t panels = kind == 'L' ? 2 * m + 1 : m + 1;
  double width = kTwoPi / static_cast<double>(panels);
  std::vector<double> splits;
  splits.reserve(panels - 1);
  for (std::int64_t k = 1; k < panels; ++k) splits.push_back(k * width);

  auto f = [kind, m](double t) {
    if (kind == 'L') return std::abs(sym_value(m, t));
    return std::abs(analytic_value(m, t));
  };
  QuadResult r = integrate_adaptive(f, 0.0, kTwoPi, kTwoPi * 1e-10, splits,
                                    1e-12);
  return r.value / kTwoPi;
}

double lebesgue_memoized(char kind, std::int64_t m)
{
  if (m < 0) throw std::invalid_argument("kernel degree must be >= 0");
  std::pair<char, std::int64_t> key{kind, m};
  {
    std::shared_lock lock(g_memo_mutex);
    if (g_cache_loaded) {
      auto it = g_memo.find(key);
      if (it != g_memo.end()) return it->second;
    }
  }
  {
    std::unique_lock lock(g_memo_mutex);
    if (!g_cache_loaded) load_cache_locked();
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return it->second;
  }
  double v = m == 0 ? 1.0 : mean_abs_kernel(kind, m);
  {
    std::unique_lock lock(g_memo_mutex);
    g_memo[key] = v;
  }
  persist(kind, m, v);
  return v;
}

} // namespace

std::complex<double> kernel_eval(const KernelSpec& spec, double t)
{
  if (spec.m < 0) throw std::invalid_argument("kernel degree must be >= 0");
  if (spec.kind == KernelKind::symmetric) return {sym_value(spec.m, t), 0.0};
  return analytic_value(spec.m, t);
}

double lebesgue_L(std::int64_t m) { return lebesgue_memoized('L', m); }

double lebesgue_Lplus(std::int64_t m) { return lebesgue_memoized('P', m); }

} // namespace haarproj
