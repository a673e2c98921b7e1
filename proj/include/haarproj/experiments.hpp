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

#ifndef HAARPROJ_EXPERIMENTS_HPP
#define HAARPROJ_EXPERIMENTS_HPP

#include <haarproj/dirichlet.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace haarproj {

struct ExperimentRow {
  double x = 0.0;
  double computed = 0.0;
  double std_err = 0.0; // 0 for exact rows
  double reference = 0.0;
  double ratio = 0.0; // computed / reference
};

// One experiment run: a table of computed values against a reference curve,
// with per-row regularity assertions evaluated as the rows are produced.
// The echoed config reproduces the rows bitwise.
struct ExperimentReport {
  std::string name;
  std::vector<ExperimentRow> rows;
  MCConfig config;
  bool passed = true;
  std::vector<std::string> failures;
};

struct ExperimentInfo {
  std::string name;
  std::string claim; // the regularity the rows are checked against
};

std::vector<ExperimentInfo> list_experiments();

// Runs a registered experiment. Sampling experiments derive per-row budgets
// from cfg.samples (documented per experiment in the claim string); exact
// experiments ignore the budget. Unknown names are rejected.
ExperimentReport run_experiment(std::string_view name, const MCConfig& cfg);

// Command-line argument grammars, shared with the tests.

// upto:x | range:a,b | n1:m,x | ninf:m,n | file:PATH -> Dirichlet indices.
// upto starts at 0 for the natural frequency and at 1 for the rest; n1
// selects the integers up to x with exactly m prime factors; ninf the
// integers built from the first n primes with every exponent at most m;
// file loads a one-dimensional index-set file.
std::vector<std::int64_t> parse_dirichlet_support(std::string_view spec,
                                                  FrequencyKind kind);

// upto:x | range:a,b | delta:x | lambda:m,n | sphere:m,n | box:d1,d2,... |
// n1:m,x | ninf:m,n | file:PATH -> torus exponent set.
IndexSet parse_index_support(std::string_view spec);

// natural | logn | logp | qindep | file:PATH. A frequency file holds the
// header `# frequency explicit [qindependent]` and one value per line.
Frequency parse_frequency(std::string_view spec);

} // namespace haarproj

#endif // HAARPROJ_EXPERIMENTS_HPP
