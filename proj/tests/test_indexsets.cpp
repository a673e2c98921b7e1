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

#include <haarproj/indexsets.hpp>
#include <haarproj/numtheory.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

using namespace haarproj;
using namespace haarproj::numtheory;

namespace {

// Pascal's triangle, independent of the multiplicative formula under test
std::int64_t pascal(int n, int k)
{
  if (k < 0 || k > n) return 0;
  std::vector<std::int64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::int64_t> next(i + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

std::int64_t ball3_oracle(std::int64_t m)
{
  std::int64_t c = 0;
  for (std::int64_t a = -m; a <= m; ++a)
    for (std::int64_t b = -m; b <= m; ++b)
      for (std::int64_t d = -m; d <= m; ++d)
        if (a * a + b * b + d * d <= m * m) ++c;
  return c;
}

bool contains(const IndexSet& s, const MultiIndex& a)
{
  return std::binary_search(s.elems.begin(), s.elems.end(), a);
}

std::int64_t lift_value(const MultiIndex& a)
{
  __int128 v = 1;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::int64_t e = 0; e < a[j]; ++e) v *= nth_prime(j + 1);
  return static_cast<std::int64_t>(v);
}

} // namespace

TEST_CASE("total order shells over non-negative indices")
{
  IndexSet s = lambda_set(1, 2, 2, false);
  REQUIRE(s.elems.size() == 3);
  CHECK(s.elems[0] == MultiIndex{0, 2});
  CHECK(s.elems[1] == MultiIndex{1, 1});
  CHECK(s.elems[2] == MultiIndex{2, 0});
  CHECK(s.dim == 2);
  CHECK(s.family == Family::lambda_exact);
  CHECK(!contains(s, MultiIndex{1, 0}));
  CHECK(!contains(s, MultiIndex{2, 1}));

  CHECK(std::is_sorted(s.elems.begin(), s.elems.end()));
}

TEST_CASE("shell cardinality matches Pascal's triangle and enumeration")
{
  CHECK(cardinality_lambda1(2, 2) == 3);
  CHECK(cardinality_lambda1(0, 5) == 1);
  CHECK(cardinality_lambda1(5, 5) == 126);
  CHECK(static_cast<std::int64_t>(lambda_set(1, 5, 5, false).elems.size()) ==
        126);

  for (int m = 0; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n) {
      std::int64_t want = pascal(n + m - 1, m);
      CHECK(cardinality_lambda1(m, n) == want);
      CHECK(static_cast<std::int64_t>(lambda_set(1, m, n, false).elems.size()) ==
            want);
    }

  CHECK_THROWS_AS(cardinality_lambda1(200, 200), std::overflow_error);
  CHECK_THROWS_AS(cardinality_lambda1(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(cardinality_lambda1(2, 0), std::invalid_argument);
}

TEST_CASE("inclusive set is the disjoint union of the shells")
{
  IndexSet le = lambda_set(1, 3, 3, true);
  std::vector<MultiIndex> merged;
  std::size_t total = 0;
  for (int k = 0; k <= 3; ++k) {
    IndexSet shell = lambda_set(1, k, 3, false);
    total += shell.elems.size();
    merged.insert(merged.end(), shell.elems.begin(), shell.elems.end());
  }
  std::sort(merged.begin(), merged.end());
  CHECK(total == le.elems.size()); // shells do not overlap
  CHECK(merged == le.elems);
}

TEST_CASE("signed shells")
{
  IndexSet s = j_set(1, 1, 2, false);
  REQUIRE(s.elems.size() == 4);
  CHECK(s.elems[0] == MultiIndex{-1, 0});
  CHECK(s.elems[1] == MultiIndex{0, -1});
  CHECK(s.elems[2] == MultiIndex{0, 1});
  CHECK(s.elems[3] == MultiIndex{1, 0});

  std::size_t total = 0;
  for (int k = 0; k <= 4; ++k) total += j_set(1, k, 3, false).elems.size();
  CHECK(total == j_set(1, 4, 3, true).elems.size());
}

TEST_CASE("euclidean shells and balls")
{
  IndexSet s = lambda_set(2, 5, 2, false);
  REQUIRE(s.elems.size() == 4);
  CHECK(s.elems[0] == MultiIndex{0, 5});
  CHECK(s.elems[1] == MultiIndex{3, 4});
  CHECK(s.elems[2] == MultiIndex{4, 3});
  CHECK(s.elems[3] == MultiIndex{5, 0});

  IndexSet ball = sphere_set(1, 3);
  REQUIRE(ball.elems.size() == 7);
  CHECK(contains(ball, MultiIndex{0, 0, 0}));
  for (int j = 0; j < 3; ++j)
    for (int sign : {-1, 1}) {
      MultiIndex e(3, 0);
      e[j] = sign;
      CHECK(contains(ball, e));
    }
  CHECK(!contains(ball, MultiIndex{1, 1, 0}));

  CHECK(sphere_set(3, 3).elems == j_set(2, 3, 3, true).elems);
}

TEST_CASE("boxes")
{
  IndexSet s = box_set({1, 1});
  CHECK(s.elems.size() == 9);
  CHECK(s.dim == 2);
  CHECK(contains(s, MultiIndex{-1, 1}));
  CHECK(!contains(s, MultiIndex{2, 0}));

  CHECK(box_set({2, 0, 3}).elems.size() == 5u * 1u * 7u);
  CHECK(box_set({}).elems.size() == 1); // the empty multi index
}

TEST_CASE("analytic boxes")
{
  IndexSet s = ninf_lift_set(2, 3);
  CHECK(s.elems.size() == 27);
  for (const auto& a : s.elems)
    for (auto e : a) {
      CHECK(e >= 0);
      CHECK(e <= 2);
    }
  CHECK(ninf_lift_set(4, 1).elems.size() == 5);
  CHECK(ninf_lift_set(0, 4).elems.size() == 1);
}

TEST_CASE("parameter and memory guards")
{
  CHECK_THROWS_AS(lambda_set(3, 2, 2, false), std::invalid_argument);
  CHECK_THROWS_AS(j_set(-1, 2, 2, true), std::invalid_argument);
  CHECK_THROWS_AS(lambda_set(1, -1, 2, false), std::invalid_argument);
  CHECK_THROWS_AS(box_set({1, -2}), std::invalid_argument);

  CHECK_THROWS_AS(ninf_lift_set(9, 10), std::length_error); // 10^10 elements
  CHECK_THROWS_AS(box_set({1000, 1000, 1000, 1000}), std::length_error);
  CHECK_THROWS_AS(delta_set(100, 50), std::length_error);
  CHECK_THROWS_AS(j_set(1, 6, 3, true, 100), std::length_error);
  CHECK_NOTHROW(j_set(1, 2, 2, true, 13)); // exactly at the cap
}

TEST_CASE("exponent vectors of the integers up to x")
{
  IndexSet s = delta_set(4);
  CHECK(s.dim == 2);
  REQUIRE(s.elems.size() == 4);
  CHECK(s.elems[0] == MultiIndex{0, 0});
  CHECK(s.elems[1] == MultiIndex{0, 1});
  CHECK(s.elems[2] == MultiIndex{1, 0});
  CHECK(s.elems[3] == MultiIndex{2, 0});
  CHECK(!contains(s, MultiIndex{1, 1})); // that would be 6

  for (std::int64_t x : {1, 2, 3, 10, 100, 1000, 10000}) {
    IndexSet d = delta_set(x);
    CHECK(static_cast<std::int64_t>(d.elems.size()) == x);
    CHECK(d.dim == static_cast<int>(primes_up_to(x).size()));
  }

  // bijection with 1..x via the exponent map
  IndexSet d = delta_set(1000);
  std::vector<MultiIndex> lifts;
  for (std::int64_t n = 1; n <= 1000; ++n) lifts.push_back(bohr_lift(n, d.dim));
  std::sort(lifts.begin(), lifts.end());
  CHECK(lifts == d.elems);
}

TEST_CASE("lifts of the integers with a fixed number of prime factors")
{
  IndexSet s = n1_lift_set(2, 30);
  CHECK(s.elems.size() == 10);
  CHECK(s.dim == 10); // pi(30)
  for (const auto& a : s.elems) {
    CHECK(order_of(a) == 2);
    CHECK(lift_value(a) <= 30);
  }
  std::vector<MultiIndex> lifts;
  for (std::int64_t n : n1_numbers(2, 30)) lifts.push_back(bohr_lift(n, s.dim));
  std::sort(lifts.begin(), lifts.end());
  CHECK(lifts == s.elems);

  IndexSet primes = n1_lift_set(1, 100);
  CHECK(primes.elems.size() == 25);
  for (const auto& a : primes.elems) CHECK(order_of(a) == 1);

  IndexSet sixteen = n1_lift_set(4, 16);
  REQUIRE(sixteen.elems.size() == 1);
  CHECK(lift_value(sixteen.elems[0]) == 16);

  CHECK(n1_lift_set(0, 50).elems.size() == 1); // only n = 1
}

TEST_CASE("lattice point counts in euclidean balls")
{
  CHECK(lattice_count(0, 3) == 1);
  CHECK(lattice_count(1, 3) == 7);
  for (std::int64_t m = 0; m <= 12; ++m)
    CHECK(lattice_count(m, 3) == ball3_oracle(m));

  double v = static_cast<double>(lattice_count(50, 3));
  double sphere_vol = 4.0 / 3.0 * 3.14159265358979323846 * 50 * 50 * 50;
  CHECK(std::abs(v - sphere_vol) / sphere_vol < 0.05);

  for (int n = 1; n <= 3; ++n)
    for (std::int64_t m = 0; m <= 6; ++m)
      CHECK(static_cast<std::int64_t>(sphere_set(m, n).elems.size()) ==
            lattice_count(m, n));

  CHECK_THROWS_AS(lattice_count(-1, 3), std::invalid_argument);
  CHECK_THROWS_AS(lattice_count(3, 0), std::invalid_argument);
}

TEST_CASE("file round trip")
{
  IndexSet s = n1_lift_set(2, 30);
  auto path = std::filesystem::temp_directory_path() / "haarproj_ixset.txt";
  save_indexset(path.string(), s);
  IndexSet r = load_indexset(path.string());
  CHECK(r.dim == s.dim);
  CHECK(r.family == s.family);
  CHECK(r.params == s.params);
  CHECK(r.elems == s.elems);
  std::filesystem::remove(path);

  IndexSet b = lambda_set(1, 2, 2, false);
  std::ostringstream os;
  write_indexset(os, b);
  CHECK(os.str().substr(0, os.str().find('\n')) ==
        "# dim=2 family=lambda_exact params=p=1 m=2 n=2");
}

TEST_CASE("reading tolerates missing headers and duplicates")
{
  std::istringstream plain("1 2\n0 0\n1 2\n");
  IndexSet s = read_indexset(plain);
  CHECK(s.dim == 2);
  CHECK(s.family == Family::custom);
  REQUIRE(s.elems.size() == 2); // duplicate dropped
  CHECK(s.elems[0] == MultiIndex{0, 0});
  CHECK(s.elems[1] == MultiIndex{1, 2});

  std::istringstream arity("# dim=2 family=custom params=-\n1 2 3\n");
  CHECK_THROWS_AS(read_indexset(arity), std::invalid_argument);

  std::istringstream junk("1 spam\n");
  CHECK_THROWS_AS(read_indexset(junk), std::invalid_argument);

  std::istringstream empty("");
  CHECK_THROWS_AS(read_indexset(empty), std::invalid_argument);

  std::istringstream headeronly("# dim=3 family=custom params=-\n");
  IndexSet h = read_indexset(headeronly);
  CHECK(h.dim == 3);
  CHECK(h.elems.empty());
}

TEST_CASE("custom sets validate and sort")
{
  IndexSet s = custom_set(2, {{1, 0}, {0, 1}, {1, 0}});
  CHECK(s.elems.size() == 2);
  CHECK(std::is_sorted(s.elems.begin(), s.elems.end()));
  CHECK_THROWS_AS(custom_set(2, {{1, 0, 0}}), std::invalid_argument);

  CHECK(family_from_name("delta_x") == Family::delta_x);
  CHECK(family_from_name(family_name(Family::ninf_lift)) == Family::ninf_lift);
  CHECK_THROWS_AS(family_from_name("nonsense"), std::invalid_argument);
}
