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

#ifndef HAARPROJ_INDEXSETS_HPP
#define HAARPROJ_INDEXSETS_HPP

#include <haarproj/multiindex.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace haarproj {

// Families of finite frequency sets. The analytic families (lambda_*,
// delta_x, n1_lift, ninf_lift) live in N_0^n, the signed ones in Z^n.
enum class Family {
  lambda_exact, // {alpha >= 0 : ||alpha||_p = m}
  lambda_le,    // {alpha >= 0 : ||alpha||_p <= m}
  j_exact,      // {alpha in Z^n : ||alpha||_p = m}
  j_le,         // {alpha in Z^n : ||alpha||_p <= m}
  box,          // prod_j {-d_j..d_j}
  sphere,       // {alpha in Z^n : ||alpha||_2 <= m}
  delta_x,      // exponent vectors of 1..x, dimension pi(x)
  n1_lift,      // exponent vectors of {n <= x : Omega(n) = m}
  ninf_lift,    // {0..m}^n
  custom,       // anything user supplied
};

const char* family_name(Family f);
Family family_from_name(std::string_view name);

// A finite set of multi indices, lexicographically sorted and free of
// duplicates. Immutable after construction; safe to share across threads.
struct IndexSet {
  int dim = 0;
  std::vector<MultiIndex> elems;
  Family family = Family::custom;
  std::string params; // generating parameters, "key=value" pairs
};

// Default memory guard: generators refuse to materialize more elements.
std::int64_t default_cardinality_cap();

// Generators. All throw std::invalid_argument on bad parameters
// (p not in {1,2,inf}, negative sizes) and std::length_error when the
// resulting set would exceed `cap` elements. p = 0 encodes the max norm.
IndexSet lambda_set(int p, std::int64_t m, int n, bool le,
                    std::int64_t cap = default_cardinality_cap());
IndexSet j_set(int p, std::int64_t m, int n, bool le,
               std::int64_t cap = default_cardinality_cap());
IndexSet box_set(const std::vector<std::int64_t>& d,
                 std::int64_t cap = default_cardinality_cap());
IndexSet sphere_set(std::int64_t m, int n,
                    std::int64_t cap = default_cardinality_cap());
IndexSet delta_set(std::int64_t x,
                   std::int64_t cap = default_cardinality_cap());
IndexSet n1_lift_set(std::int64_t m, std::int64_t x,
                     std::int64_t cap = default_cardinality_cap());
IndexSet ninf_lift_set(std::int64_t m, int n,
                       std::int64_t cap = default_cardinality_cap());
IndexSet custom_set(int dim, std::vector<MultiIndex> elems);

// |{alpha >= 0 : |alpha| = m}| in dimension n, i.e. binom(n+m-1, m).
// Exact; throws std::overflow_error when the value exceeds 63 bits.
std::int64_t cardinality_lambda1(std::int64_t m, std::int64_t n);

// Number of lattice points in the closed euclidean ball of radius m
// in Z^n, by recursive coordinate bounding.
std::int64_t lattice_count(std::int64_t m, int n);

// File format: a header line `# dim=<n> family=<tag> params=<...>`
// followed by one element per line, entries whitespace separated.
// Reading tolerates a missing header (the set becomes custom with the
// dimension of the first line), skips blank and comment lines, and
// silently drops duplicate elements.
void write_indexset(std::ostream& os, const IndexSet& set);
IndexSet read_indexset(std::istream& is);
void save_indexset(const std::string& path, const IndexSet& set);
IndexSet load_indexset(const std::string& path);

} // namespace haarproj

#endif // HAARPROJ_INDEXSETS_HPP
