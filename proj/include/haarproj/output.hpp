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

#ifndef HAARPROJ_OUTPUT_HPP
#define HAARPROJ_OUTPUT_HPP

#include <haarproj/experiments.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace haarproj {

// 17 significant digits: round-trips to the same double and is byte-stable
// across runs, which the output formats rely on.
std::string format_full(double v);

// `x,computed,stderr,reference,ratio` with one header line. Refuses an
// empty table (a report with no rows indicates a broken run).
std::string csv_report(const ExperimentReport& report);

// The whole report as one JSON object: name, config echo, pass/fail with
// failure messages, and the same rows the CSV carries.
std::string json_report(const ExperimentReport& report);

// Ordered JSON object assembler for the small one-off CLI payloads. Keys
// appear in insertion order so equal inputs serialize to equal bytes.
class JsonBuilder {
 public:
  void add(std::string_view key, double v);
  void add(std::string_view key, std::int64_t v);
  void add(std::string_view key, std::uint64_t v);
  void add(std::string_view key, std::string_view text);
  void add_null(std::string_view key);
  void add_raw(std::string_view key, std::string_view json);
  std::string str() const; // "{...}"

 private:
  std::string body_;
};

std::string json_escape(std::string_view text);

} // namespace haarproj

#endif // HAARPROJ_OUTPUT_HPP
