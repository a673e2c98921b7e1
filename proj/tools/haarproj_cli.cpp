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

#include <CLI11.hpp>

#include <haarproj/constants.hpp>
#include <haarproj/dirichlet.hpp>
#include <haarproj/experiments.hpp>
#include <haarproj/indexsets.hpp>
#include <haarproj/kernels.hpp>
#include <haarproj/output.hpp>
#include <haarproj/parallel.hpp>
#include <haarproj/sidon.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

namespace {

using namespace haarproj;

struct Globals {
  std::uint64_t seed = 12345;
  std::int64_t samples = std::int64_t{1} << 20;
  std::int64_t blocks = 64;
  int jobs = 0;
  std::string out;    // path, or a bare format name meaning stdout
  std::string format; // json | csv | "" (infer)
};

MCConfig make_config(const Globals& g)
{
  if (g.jobs > 0) set_max_jobs(g.jobs);
  MCConfig cfg;
  cfg.samples = g.samples;
  cfg.seed = g.seed;
  cfg.blocks = g.blocks;
  cfg.jobs = g.jobs;
  return cfg;
}

struct OutTarget {
  std::string path; // empty: stdout
  std::string format;
};

// `--out report.csv` picks a file (format from the extension unless --format
// overrides); a bare `--out json` / `--out csv` is shorthand for
// `--format json|csv` on stdout.
OutTarget resolve_output(const Globals& g, const std::string& fallback)
{
  OutTarget t;
  t.path = g.out;
  t.format = g.format;
  if (t.format.empty() && (t.path == "json" || t.path == "csv")) {
    t.format = t.path;
    t.path.clear();
  }
  if (t.format.empty() && !t.path.empty()) {
    if (t.path.ends_with(".csv")) t.format = "csv";
    if (t.path.ends_with(".json")) t.format = "json";
  }
  if (t.format.empty()) t.format = fallback;
  if (t.format != "json" && t.format != "csv")
    throw CLI::ValidationError("--format", "must be json or csv");
  return t;
}

void emit(const std::string& text, const std::string& path)
{
  std::string payload = text;
  if (payload.empty() || payload.back() != '\n') payload.push_back('\n');
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << payload;
}

ProjMethod proj_method_from_name(const std::string& name)
{
  static const std::map<std::string, ProjMethod> table = {
      {"auto", ProjMethod::auto_select},
      {"exact_kernel", ProjMethod::exact_kernel},
      {"exact_product", ProjMethod::exact_product},
      {"closed_form_l1", ProjMethod::closed_form_l1},
      {"mc", ProjMethod::mc},
      {"qmc", ProjMethod::qmc},
      {"ergodic", ProjMethod::ergodic},
  };
  auto it = table.find(name);
  if (it == table.end())
    throw CLI::ValidationError("--method", "unknown method " + name);
  return it->second;
}

double constant_by_name(const std::string& name, std::int64_t n)
{
  static const std::map<std::string,
                        std::function<double(std::int64_t)>>
      table = {
          {"proj_l2_complex", proj_l2_complex},
          {"proj_l2_real", proj_l2_real},
          {"proj_l1_real", proj_l1_real},
          {"proj_l1_complex", proj_l1_complex},
          {"kadets_snobar", kadets_snobar},
          {"lewis_bound", lewis_bound},
      };
  auto it = table.find(name);
  if (it == table.end())
    throw CLI::ValidationError("--name", "unknown constant " + name);
  return it->second(n);
}

int run_proj(const Globals& g, const std::string& frequency,
             const std::string& support, const std::string& method, bool b2)
{
  DirichletSpace space;
  space.frequency = parse_frequency(frequency);
  space.frequency.b2 = b2;
  space.support = parse_dirichlet_support(support, space.frequency.kind);
  ProjectionConstantResult r =
      projection_constant(space, proj_method_from_name(method),
                          make_config(g));

  OutTarget t = resolve_output(g, "json");
  if (t.format == "json") {
    JsonBuilder b;
    b.add("value", r.estimate.value);
    b.add("stderr", r.estimate.std_err);
    b.add("samples", r.estimate.samples);
    b.add("method", std::string_view(proj_method_name(r.method)));
    b.add("seed", r.estimate.seed);
    if (r.bracket) {
      b.add("bracket_lo", r.bracket->lo);
      b.add("bracket_hi", r.bracket->hi);
    } else {
      b.add_null("bracket_lo");
      b.add_null("bracket_hi");
    }
    emit(b.str(), t.path);
    return 0;
  }
  ExperimentReport report{"proj", {}, make_config(g), true, {}};
  ExperimentRow row;
  row.x = static_cast<double>(space.support.size());
  row.computed = r.estimate.value;
  row.std_err = r.estimate.std_err;
  row.reference = r.bracket ? r.bracket->hi : 0.0;
  row.ratio = r.bracket ? r.estimate.value / r.bracket->hi : 0.0;
  report.rows.push_back(row);
  emit(csv_report(report), t.path);
  return 0;
}

int run_sidon(const Globals& g, const std::string& support,
              std::int64_t grid, std::int64_t budget)
{
  IndexSet set = parse_index_support(support);
  SidonEstimate est = sidon_bounds(set, budget, grid, g.seed);

  OutTarget t = resolve_output(g, "json");
  if (t.format == "json") {
    std::string coeffs = "[";
    for (std::size_t i = 0; i < est.witness.coefficients.size(); ++i) {
      if (i) coeffs += ",";
      coeffs += "[" + format_full(est.witness.coefficients[i].real()) + "," +
                format_full(est.witness.coefficients[i].imag()) + "]";
    }
    coeffs += "]";
    JsonBuilder b;
    b.add("lower", est.lower);
    b.add("upper", est.upper);
    b.add("sup_certificate", est.sup_certificate);
    b.add_raw("witness_coefficients", coeffs);
    emit(b.str(), t.path);
    return 0;
  }
  ExperimentReport report{"sidon", {}, make_config(g), true, {}};
  ExperimentRow row;
  row.x = static_cast<double>(set.elems.size());
  row.computed = est.lower;
  row.reference = est.upper;
  row.ratio = est.lower / est.upper;
  report.rows.push_back(row);
  emit(csv_report(report), t.path);
  return 0;
}

int run_registered(const Globals& g, const std::string& name)
{
  ExperimentReport report = run_experiment(name, make_config(g));
  OutTarget t = resolve_output(g, "csv");
  emit(t.format == "json" ? json_report(report) : csv_report(report),
       t.path);
  for (const auto& f : report.failures) std::cerr << f << "\n";
  return report.passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Projection constants of trigonometric and Dirichlet "
               "polynomial spaces"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--samples", g.samples, "sampling budget")
      ->capture_default_str();
  app.add_option("--blocks", g.blocks, "stderr blocks")
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker thread cap (0: all cores)")
      ->capture_default_str();
  app.add_option("--out", g.out,
                 "output file, or bare 'json'/'csv' for stdout");
  app.add_option("--format", g.format, "json or csv");

  int rc = 0;

  auto* leb = app.add_subcommand(
      "lebesgue", "L1 norm of the degree-m Dirichlet kernel");
  std::int64_t leb_m = 0;
  bool leb_plus = false;
  leb->add_option("--m", leb_m, "kernel degree")->required();
  leb->add_flag("--plus", leb_plus, "analytic kernel (exponents 0..m)");
  leb->callback([&] {
    if (g.jobs > 0) set_max_jobs(g.jobs);
    std::cout << format_full(leb_plus ? lebesgue_Lplus(leb_m)
                                      : lebesgue_L(leb_m))
              << "\n";
  });

  auto* cst = app.add_subcommand(
      "constants", "closed-form projection constants and bounds");
  std::string cst_name;
  std::int64_t cst_n = 0;
  cst->add_option("--name", cst_name,
                  "proj_l2_complex | proj_l2_real | proj_l1_real | "
                  "proj_l1_complex | kadets_snobar | lewis_bound")
      ->required();
  cst->add_option("--n", cst_n, "dimension")->required();
  cst->callback(
      [&] { std::cout << format_full(constant_by_name(cst_name, cst_n)) << "\n"; });

  auto* cnt = app.add_subcommand("count", "cardinalities of exponent sets");
  std::string cnt_support;
  std::string cnt_lattice;
  cnt->add_option("--support", cnt_support,
                  "upto:x | range:a,b | delta:x | lambda:m,n | sphere:m,n | "
                  "box:d1,d2,... | n1:m,x | ninf:m,n | file:PATH");
  cnt->add_option("--lattice", cnt_lattice,
                  "m,n: lattice points in the radius-m ball of Z^n");
  cnt->callback([&] {
    if (cnt_support.empty() == cnt_lattice.empty())
      throw CLI::ValidationError("count",
                                 "give exactly one of --support, --lattice");
    if (!cnt_lattice.empty()) {
      auto pos = cnt_lattice.find(',');
      if (pos == std::string::npos)
        throw CLI::ValidationError("--lattice", "expected m,n");
      std::int64_t m = std::stoll(cnt_lattice.substr(0, pos));
      int n = std::stoi(cnt_lattice.substr(pos + 1));
      std::cout << lattice_count(m, n) << "\n";
      return;
    }
    std::cout << parse_index_support(cnt_support).elems.size() << "\n";
  });

  auto* proj = app.add_subcommand(
      "proj", "projection constant of a Dirichlet polynomial space");
  std::string proj_freq = "natural";
  std::string proj_support;
  std::string proj_method = "auto";
  bool proj_b2 = false;
  proj->add_option("--frequency", proj_freq,
                   "natural | logn | logp | qindep | file:PATH")
      ->capture_default_str();
  proj->add_option("--support", proj_support,
                   "upto:x | range:a,b | n1:m,x | ninf:m,n | file:PATH")
      ->required();
  proj->add_option("--method", proj_method,
                   "auto | exact_kernel | exact_product | closed_form_l1 | "
                   "mc | qmc | ergodic")
      ->capture_default_str();
  proj->add_flag("--b2", proj_b2,
                 "declare the frequency B2 (tightens the bracket)");
  proj->callback(
      [&] { rc = run_proj(g, proj_freq, proj_support, proj_method, proj_b2); });

  auto* sid = app.add_subcommand(
      "sidon", "certified Sidon-constant bounds for an exponent set");
  std::string sid_support;
  std::int64_t sid_grid = 0;
  std::int64_t sid_budget = 512;
  sid->add_option("--support", sid_support,
                  "same grammar as count --support")
      ->required();
  sid->add_option("--grid", sid_grid,
                  "grid points per axis (0: smallest admissible)")
      ->capture_default_str();
  sid->add_option("--budget", sid_budget, "candidate witnesses to try")
      ->capture_default_str();
  sid->callback([&] { rc = run_sidon(g, sid_support, sid_grid, sid_budget); });

  std::string experiments_help = "named experiment; registered:";
  for (const auto& info : list_experiments())
    experiments_help += "\n  " + info.name + ": " + info.claim;
  auto* exp = app.add_subcommand("experiment", experiments_help);
  std::string exp_name;
  exp->add_option("name", exp_name, "experiment name")->required();
  exp->callback([&] { rc = run_registered(g, exp_name); });

  auto* lst =
      app.add_subcommand("list-experiments", "registered experiments");
  lst->callback([&] {
    for (const auto& info : list_experiments())
      std::cout << info.name << "\t" << info.claim << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
