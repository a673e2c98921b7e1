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

#include <haarproj/output.hpp>

#include <cstdio>
#include <stdexcept>

namespace haarproj {

std::string format_full(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(std::string_view text)
{
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

namespace {

void append_entry(std::string& body, std::string_view key,
                  std::string_view rendered)
{
  if (!body.empty()) body += ',';
  body += '"';
  body += json_escape(key);
  body += "\":";
  body += rendered;
}

} // namespace

void JsonBuilder::add(std::string_view key, double v)
{
  append_entry(body_, key, format_full(v));
}

void JsonBuilder::add(std::string_view key, std::int64_t v)
{
  append_entry(body_, key, std::to_string(v));
}

void JsonBuilder::add(std::string_view key, std::uint64_t v)
{
  append_entry(body_, key, std::to_string(v));
}

void JsonBuilder::add(std::string_view key, std::string_view text)
{
  std::string rendered = "\"";
  rendered += json_escape(text);
  rendered += '"';
  append_entry(body_, key, rendered);
}

void JsonBuilder::add_null(std::string_view key)
{
  append_entry(body_, key, "null");
}

void JsonBuilder::add_raw(std::string_view key, std::string_view json)
{
  append_entry(body_, key, json);
}

std::string JsonBuilder::str() const
{
  return "{" + body_ + "}";
}

std::string csv_report(const ExperimentReport& report)
{
  if (report.rows.empty())
    throw std::invalid_argument("refusing to emit a report with no rows");
  std::string out = "x,computed,stderr,reference,ratio\n";
  for (const auto& row : report.rows) {
    out += format_full(row.x);
    out += ',';
    out += format_full(row.computed);
    out += ',';
    out += format_full(row.std_err);
    out += ',';
    out += format_full(row.reference);
    out += ',';
    out += format_full(row.ratio);
    out += '\n';
  }
  return out;
}

std::string json_report(const ExperimentReport& report)
{
  if (report.rows.empty())
    throw std::invalid_argument("refusing to emit a report with no rows");

  JsonBuilder config;
  config.add("seed", report.config.seed);
  config.add("samples", report.config.samples);
  config.add("blocks", report.config.blocks);
  config.add("jobs", static_cast<std::int64_t>(report.config.jobs));
  config.add("engine",
             report.config.engine == Engine::mc ? std::string_view("mc")
                                                : std::string_view("qmc"));

  std::string rows = "[";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    JsonBuilder r;
    r.add("x", row.x);
    r.add("computed", row.computed);
    r.add("stderr", row.std_err);
    r.add("reference", row.reference);
    r.add("ratio", row.ratio);
    if (i > 0) rows += ',';
    rows += r.str();
  }
  rows += ']';

  std::string failures = "[";
  for (std::size_t i = 0; i < report.failures.size(); ++i) {
    if (i > 0) failures += ',';
    failures += '"';
    failures += json_escape(report.failures[i]);
    failures += '"';
  }
  failures += ']';

  JsonBuilder top;
  top.add("name", report.name);
  top.add_raw("config", config.str());
  top.add_raw("passed", report.passed ? "true" : "false");
  top.add_raw("failures", failures);
  top.add_raw("rows", rows);
  return top.str();
}

} // namespace haarproj
