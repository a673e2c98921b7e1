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

#include <haarproj/indexsets.hpp>
#include <haarproj/numtheory.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace haarproj {

namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

std::int64_t isqrt64(std::int64_t v)
{
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// min(base^exp, clamp + 1), so callers can compare against clamp safely
__int128 ipow_clamped(__int128 base, int exp, __int128 clamp)
{
  __int128 r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > (clamp + 1) / base) return clamp + 1;
    r *= base;
  }
  return r;
}

void check_cap_value(std::int64_t cap)
{
  if (cap < 1) throw std::invalid_argument("cardinality cap must be positive");
}

void check_predicted(__int128 predicted, std::int64_t cap)
{
  if (predicted > cap)
    throw std::length_error("index set would exceed the cardinality cap");
}

void emit_guarded(std::vector<MultiIndex>& out, const MultiIndex& cur,
                  std::int64_t cap)
{
  if (static_cast<std::int64_t>(out.size()) >= cap)
    throw std::length_error("index set would exceed the cardinality cap");
  out.push_back(cur);
}

// Enumerates alpha with sum_j w(alpha_j) <= budget (w = |.| for p=1,
// square for p=2), optionally restricted to the exact shell. Ascending
// coordinate loops make the output lexicographically sorted.
struct NormBallEnum {
  int n;
  int p; // 1 or 2
  bool signed_entries;
  bool exact;
  std::int64_t budget;
  std::int64_t cap;
  std::vector<MultiIndex>& out;
  MultiIndex cur;

  std::int64_t weight(std::int64_t a) const
  {
    return p == 1 ? std::llabs(a) : a * a;
  }

  void run(int pos, std::int64_t used)
  {
    if (pos == n) {
      if (!exact || used == budget) emit_guarded(out, cur, cap);
      return;
    }
    std::int64_t rem = budget - used;
    std::int64_t amax = p == 1 ? rem : isqrt64(rem);
    for (std::int64_t a = signed_entries ? -amax : 0; a <= amax; ++a) {
      cur[pos] = a;
      run(pos + 1, used + weight(a));
    }
  }
};

// Product enumeration over prod_j {lo_j..hi_j}, optional max-norm filter.
struct BoxEnum {
  const std::vector<std::int64_t>& lo;
  const std::vector<std::int64_t>& hi;
  std::int64_t exact_sup; // -1: keep everything, else require max|a_j| == it
  std::int64_t cap;
  std::vector<MultiIndex>& out;
  MultiIndex cur;

  void run(std::size_t pos)
  {
    if (pos == lo.size()) {
      if (exact_sup >= 0) {
        std::int64_t sup = 0;
        for (auto a : cur) sup = std::max<std::int64_t>(sup, std::llabs(a));
        if (sup != exact_sup) return;
      }
      emit_guarded(out, cur, cap);
      return;
    }
    for (std::int64_t a = lo[pos]; a <= hi[pos]; ++a) {
      cur[pos] = a;
      run(pos + 1);
    }
  }
};

// Walks the exponent vectors of all integers <= x (one tree node per
// integer), optionally restricted to total order <= / == order_bound.
struct LiftEnum {
  std::int64_t x;
  std::vector<std::uint64_t> primes;
  std::int64_t order_bound; // -1: no restriction
  bool order_exact;
  std::int64_t cap;
  std::vector<MultiIndex>& out;
  MultiIndex cur;

  void run(std::size_t first, std::int64_t value, std::int64_t used)
  {
    if (!order_exact || used == order_bound) emit_guarded(out, cur, cap);
    for (std::size_t j = first; j < primes.size(); ++j) {
      auto p = static_cast<std::int64_t>(primes[j]);
      std::int64_t v = value;
      std::int64_t e = 0;
      while (v <= x / p && (order_bound < 0 || used + e < order_bound)) {
        v *= p;
        ++e;
        cur[j] = e;
        run(j + 1, v, used + e);
      }
      cur[j] = 0;
    }
  }
};

IndexSet finish(IndexSet set)
{
  std::sort(set.elems.begin(), set.elems.end());
  set.elems.erase(std::unique(set.elems.begin(), set.elems.end()),
                  set.elems.end());
  return set;
}

std::string pmn_params(int p, std::int64_t m, int n)
{
  std::string ps = p == 0 ? "inf" : std::to_string(p);
  return "p=" + ps + " m=" + std::to_string(m) + " n=" + std::to_string(n);
}

IndexSet norm_set(int p, std::int64_t m, int n, bool le, bool signed_entries,
                  std::int64_t cap)
{
  check_cap_value(cap);
  if (p != 0 && p != 1 && p != 2)
    throw std::invalid_argument("norm index must be 1, 2 or inf");
  if (m < 0 || n < 0) throw std::invalid_argument("m and n must be >= 0");
  if (p == 2 && m > 3'000'000'000)
    throw std::length_error("index set would exceed the cardinality cap");

  IndexSet set;
  set.dim = n;
  set.family = signed_entries ? (le ? Family::j_le : Family::j_exact)
                              : (le ? Family::lambda_le : Family::lambda_exact);
  set.params = pmn_params(p, m, n);

  if (p == 0) {
    std::int64_t width = (signed_entries ? 2 * m : m) + 1;
    check_predicted(ipow_clamped(width, n, cap), cap);
    std::vector<std::int64_t> lo(n, signed_entries ? -m : 0), hi(n, m);
    BoxEnum box{lo, hi, le ? -1 : m, cap, set.elems, MultiIndex(n, 0)};
    box.run(0);
  } else {
    std::int64_t budget = p == 1 ? m : m * m;
    NormBallEnum ball{n,   p,         signed_entries, !le,
                      budget, cap, set.elems,      MultiIndex(n, 0)};
    ball.run(0, 0);
  }
  return set; // enumeration order is already lexicographic
}

} // namespace

const char* family_name(Family f)
{
  switch (f) {
    case Family::lambda_exact: return "lambda_exact";
    case Family::lambda_le: return "lambda_le";
    case Family::j_exact: return "j_exact";
    case Family::j_le: return "j_le";
    case Family::box: return "box";
    case Family::sphere: return "sphere";
    case Family::delta_x: return "delta_x";
    case Family::n1_lift: return "n1_lift";
    case Family::ninf_lift: return "ninf_lift";
    case Family::custom: return "custom";
  }
  return "custom";
}

Family family_from_name(std::string_view name)
{
  for (Family f : {Family::lambda_exact, Family::lambda_le, Family::j_exact,
                   Family::j_le, Family::box, Family::sphere, Family::delta_x,
                   Family::n1_lift, Family::ninf_lift, Family::custom})
    if (name == family_name(f)) return f;
  throw std::invalid_argument("unknown index set family: " +
                              std::string(name));
}

std::int64_t default_cardinality_cap() { return 100'000'000; }

IndexSet lambda_set(int p, std::int64_t m, int n, bool le, std::int64_t cap)
{
  return norm_set(p, m, n, le, false, cap);
}

IndexSet j_set(int p, std::int64_t m, int n, bool le, std::int64_t cap)
{
  return norm_set(p, m, n, le, true, cap);
}

IndexSet box_set(const std::vector<std::int64_t>& d, std::int64_t cap)
{
  check_cap_value(cap);
  __int128 predicted = 1;
  for (auto dj : d) {
    if (dj < 0) throw std::invalid_argument("box radii must be >= 0");
    predicted *= 2 * static_cast<__int128>(dj) + 1;
    check_predicted(predicted, cap);
  }

  IndexSet set;
  set.dim = static_cast<int>(d.size());
  set.family = Family::box;
  for (std::size_t j = 0; j < d.size(); ++j)
    set.params += (j == 0 ? "d=" : ",") + std::to_string(d[j]);

  std::vector<std::int64_t> lo(d.size()), hi(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    lo[j] = -d[j];
    hi[j] = d[j];
  }
  BoxEnum box{lo, hi, -1, cap, set.elems, MultiIndex(d.size(), 0)};
  box.run(0);
  return set;
}

IndexSet sphere_set(std::int64_t m, int n, std::int64_t cap)
{
  IndexSet set = norm_set(2, m, n, true, true, cap);
  set.family = Family::sphere;
  set.params = "m=" + std::to_string(m) + " n=" + std::to_string(n);
  return set;
}

IndexSet delta_set(std::int64_t x, std::int64_t cap)
{
  check_cap_value(cap);
  if (x < 1) throw std::invalid_argument("delta_x needs x >= 1");
  check_predicted(x, cap);

  IndexSet set;
  set.family = Family::delta_x;
  set.params = "x=" + std::to_string(x);
  LiftEnum lift{x, numtheory::primes_up_to(x), -1, false, cap, set.elems, {}};
  set.dim = static_cast<int>(lift.primes.size());
  lift.cur.assign(set.dim, 0);
  lift.run(0, 1, 0);
  return finish(std::move(set));
}

IndexSet n1_lift_set(std::int64_t m, std::int64_t x, std::int64_t cap)
{
  check_cap_value(cap);
  if (m < 0 || x < 1)
    throw std::invalid_argument("n1_lift needs m >= 0 and x >= 1");

  IndexSet set;
  set.family = Family::n1_lift;
  set.params = "m=" + std::to_string(m) + " x=" + std::to_string(x);
  LiftEnum lift{x, numtheory::primes_up_to(x), m, true, cap, set.elems, {}};
  set.dim = static_cast<int>(lift.primes.size());
  lift.cur.assign(set.dim, 0);
  lift.run(0, 1, 0);
  return finish(std::move(set));
}

IndexSet ninf_lift_set(std::int64_t m, int n, std::int64_t cap)
{
  check_cap_value(cap);
  if (m < 0 || n < 0) throw std::invalid_argument("m and n must be >= 0");
  check_predicted(ipow_clamped(m + 1, n, cap), cap);

  IndexSet set;
  set.dim = n;
  set.family = Family::ninf_lift;
  set.params = "m=" + std::to_string(m) + " n=" + std::to_string(n);
  std::vector<std::int64_t> lo(n, 0), hi(n, m);
  BoxEnum box{lo, hi, -1, cap, set.elems, MultiIndex(n, 0)};
  box.run(0);
  return set;
}

IndexSet custom_set(int dim, std::vector<MultiIndex> elems)
{
  if (dim < 0) throw std::invalid_argument("dimension must be >= 0");
  for (const auto& a : elems)
    if (static_cast<int>(a.size()) != dim)
      throw std::invalid_argument("element length differs from dimension");

  IndexSet set;
  set.dim = dim;
  set.family = Family::custom;
  set.params = "-";
  set.elems = std::move(elems);
  return finish(std::move(set));
}

std::int64_t cardinality_lambda1(std::int64_t m, std::int64_t n)
{
  if (m < 0 || n < 1)
    throw std::invalid_argument("cardinality_lambda1 needs m >= 0, n >= 1");
  // binom(n+m-1, m), multiplicative form, overflow-checked each step
  std::int64_t k = std::min(m, n - 1);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n + m - k + i - 1) / i;
    if (r > kInt64Max)
      throw std::overflow_error("cardinality_lambda1 exceeds 63 bits");
  }
  return static_cast<std::int64_t>(r);
}

namespace {

__int128 ball_count_rec(int n, std::int64_t r2)
{
  if (r2 < 0) return 0;
  if (n == 0) return 1;
  if (n == 1) return 2 * isqrt64(r2) + 1;
  __int128 c = 0;
  std::int64_t amax = isqrt64(r2);
  for (std::int64_t a = -amax; a <= amax; ++a)
    c += ball_count_rec(n - 1, r2 - a * a);
  return c;
}

} // namespace

std::int64_t lattice_count(std::int64_t m, int n)
{
  if (m < 0 || n < 1)
    throw std::invalid_argument("lattice_count needs m >= 0, n >= 1");
  if (m > 3'000'000'000)
    throw std::overflow_error("lattice_count exceeds 63 bits");
  __int128 c = ball_count_rec(n, m * m);
  if (c > kInt64Max) throw std::overflow_error("lattice_count exceeds 63 bits");
  return static_cast<std::int64_t>(c);
}

void write_indexset(std::ostream& os, const IndexSet& set)
{
  os << "# dim=" << set.dim << " family=" << family_name(set.family)
     << " params=" << (set.params.empty() ? "-" : set.params) << '\n';
  for (const auto& a : set.elems) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j) os << ' ';
      os << a[j];
    }
    os << '\n';
  }
}

IndexSet read_indexset(std::istream& is)
{
  IndexSet set;
  set.family = Family::custom;
  set.params = "-";
  int dim = -1;
  bool saw_header = false;

  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      if (first) {
        first = false;
        auto grab = [&line](const char* key) -> std::string {
          std::size_t at = line.find(key);
          if (at == std::string::npos) return {};
          at += std::string_view(key).size();
          std::size_t end = line.find(' ', at);
          return line.substr(at, end == std::string::npos ? end : end - at);
        };
        std::string d = grab("dim=");
        std::string fam = grab("family=");
        std::size_t pat = line.find("params=");
        if (!d.empty()) {
          dim = std::stoi(d);
          saw_header = true;
        }
        if (!fam.empty()) set.family = family_from_name(fam);
        if (pat != std::string::npos)
          set.params = line.substr(pat + std::string_view("params=").size());
      }
      continue;
    }
    first = false;
    std::istringstream ls(line.substr(start));
    MultiIndex a;
    std::int64_t v;
    while (ls >> v) a.push_back(v);
    if (!ls.eof())
      throw std::invalid_argument("index set line is not whitespace-separated "
                                  "integers: " + line);
    if (dim < 0) dim = static_cast<int>(a.size());
    if (static_cast<int>(a.size()) != dim)
      throw std::invalid_argument("index set line has wrong arity: " + line);
    set.elems.push_back(std::move(a));
  }
  if (dim < 0 && !saw_header)
    throw std::invalid_argument("index set file has no elements and no header");
  set.dim = std::max(dim, 0);
  return finish(std::move(set));
}

void save_indexset(const std::string& path, const IndexSet& set)
{
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_indexset(os, set);
  if (!os.good()) throw std::runtime_error("write failed: " + path);
}

IndexSet load_indexset(const std::string& path)
{
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return read_indexset(is);
}

} // namespace haarproj
