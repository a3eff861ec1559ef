/*
   Copyright 2026 The ncl authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "ncl/dynamics.hpp"
#include "ncl/errors.hpp"
#include "ncl/jsonio.hpp"
#include "ncl/pathmodel.hpp"
#include "ncl/verify.hpp"

namespace {

using namespace ncl;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kRange = 3;
constexpr int kBudget = 4;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error("cannot open output file " + out_path);
  f << text;
}

// The DFS step budget, smallest of: built-in default, NCL_BUDGET, --budget.
std::uint64_t enumeration_budget(std::uint64_t flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("NCL_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw Error("NCL_BUDGET must be a positive integer, got '" +
                std::string(env) + "'");
  }
  return 1'000'000;
}

// Trajectories deep enough to serve value_at for every index in [lo, hi]
// of the requested family, negative indices included (those read the star
// involution of a partner entry at a translated positive index).
struct Slice {
  Trajectory a;        // t22 for B22, otherwise the (1,4) xy trajectory
  Trajectory b;        // the (1,4) XY trajectory when needed
  const Trajectory* b_ptr = nullptr;

  NCPoly value(CaseTag tag, long n) const { return value_at(tag, n, a, b_ptr); }
};

Slice materialize(CaseTag tag, long lo, long hi) {
  Slice s;
  if (tag == CaseTag::B22) {
    s.a = seq_22(std::max({hi, 1 - lo, 1L}));
    return s;
  }
  long depth = std::max(hi, 2L);
  switch (tag) {
    case CaseTag::B14_xy:
    case CaseTag::B14_XY:
      depth = std::max(depth, 2 - lo);
      break;
    case CaseTag::B41_xy:
      depth = std::max({depth, hi + 1, 1 - lo});
      break;
    case CaseTag::B41_XY:
      depth = std::max(depth, 3 - lo);
      break;
    default:
      break;
  }
  s.a = seq_14(SeedData::xy, depth);
  s.b = seq_14(SeedData::XY, depth);
  s.b_ptr = &s.b;
  return s;
}

struct ComputeArgs {
  std::string case_name = "22";
  long n = 0;
  long to = std::numeric_limits<long>::min();  // min() means "single index"
  bool u = false;
  std::string format = "text";
  std::string out;
};

int run_compute(const ComputeArgs& a) {
  CaseTag tag = parse_case(a.case_name);
  const bool range = a.to != std::numeric_limits<long>::min();
  const long lo = a.n;
  const long hi = range ? a.to : a.n;
  if (hi < lo) throw Error("empty range: --to is below --n");
  if (a.u && tag != CaseTag::B14_xy && tag != CaseTag::B14_XY)
    throw Error("--u is only meaningful for the (1,4) flavors");

  // u_n is the even subsequence member R_{2n}, so the u flag is an index
  // doubling and the star transport for negative indices comes for free.
  const long stretch = a.u ? 2 : 1;
  Slice slice = materialize(tag, stretch * lo, stretch * hi);

  std::ostringstream text;
  nlohmann::json values = nlohmann::json::array();
  for (long n = lo; n <= hi; ++n) {
    NCPoly v = slice.value(tag, stretch * n);
    if (a.format == "json") {
      values.push_back({{"n", n}, {"poly", poly_to_json(v)}});
    } else if (range) {
      text << (a.u ? "u_" : "R_") << n << " = " << to_string(v) << "\n";
    } else {
      text << to_string(v) << "\n";
    }
  }
  if (a.format == "json") {
    nlohmann::json doc = {{"case", to_string(tag)},
                          {"sequence", a.u ? "u" : "R"},
                          {"values", std::move(values)}};
    emit(a.out, doc.dump(2) + "\n");
  } else {
    emit(a.out, text.str());
  }
  return kOk;
}

struct VerifyArgs {
  long nmax = 8;
  std::uint64_t budget = 40'000'000;
  std::string inject;
  std::string format = "text";
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  SuiteOptions opt;
  opt.n22 = a.nmax;
  opt.n14 = std::min(a.nmax, 8L);
  opt.n41 = std::min(a.nmax, 6L);
  opt.n_neg = std::min(a.nmax, 6L);
  opt.budget = a.budget;
  opt.inject_fault = a.inject;
  VerifyReport rep = full_suite(opt);
  if (a.format == "json")
    emit(a.out, report_to_json(rep).dump(2) + "\n");
  else
    emit(a.out, rep.to_text());
  return rep.all_passed() ? kOk : kCheckFailed;
}

struct PathsArgs {
  std::string case_name = "22";
  long len = 0;
  std::uint64_t budget = 0;
  bool budget_given = false;
  std::string format = "text";
  std::string out;
};

int run_paths(const PathsArgs& a) {
  CaseTag tag = parse_case(a.case_name);
  PathModel m = build_model(tag);
  std::uint64_t budget = enumeration_budget(a.budget, a.budget_given);
  PathListing l = partition_fn_enumerate(m, a.len, budget, true);

  if (a.format == "json") {
    nlohmann::json paths = nlohmann::json::array();
    for (std::size_t i = 0; i < l.paths.size(); ++i)
      paths.push_back({{"vertices", l.paths[i]},
                       {"weight", poly_to_json(l.weights[i])}});
    nlohmann::json doc = {{"case", to_string(tag)},
                          {"length", a.len},
                          {"count", l.count},
                          {"paths", std::move(paths)},
                          {"partition", poly_to_json(l.total)}};
    emit(a.out, doc.dump(2) + "\n");
    return kOk;
  }

  std::ostringstream text;
  std::size_t width = 0;
  for (const std::string& p : l.paths) width = std::max(width, p.size());
  for (std::size_t i = 0; i < l.paths.size(); ++i)
    text << std::left << std::setw(static_cast<int>(width) + 2) << l.paths[i]
         << to_string(l.weights[i]) << "\n";
  text << l.count << " path" << (l.count == 1 ? "" : "s")
       << ", partition sum " << to_string(l.total) << "\n";
  emit(a.out, text.str());
  return kOk;
}

struct StatsArgs {
  std::string case_name = "22";
  long nmax = 8;
  std::string format = "text";
  std::string out;
};

int run_stats(const StatsArgs& a) {
  CaseTag tag = parse_case(a.case_name);
  Slice slice = materialize(tag, 0, a.nmax);

  std::ostringstream text;
  text << std::right << std::setw(4) << "n" << std::setw(10) << "terms"
       << std::setw(10) << "max|c|" << std::setw(14) << "x-span"
       << std::setw(14) << "y-span" << "\n";
  nlohmann::json rows = nlohmann::json::array();
  for (long n = 0; n <= a.nmax; ++n) {
    NCPoly v = slice.value(tag, n);
    std::int64_t xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    bool first = true;
    for (const auto& [w, c] : v) {
      (void)c;
      auto [ex, ey] = w.exponent_sums();
      if (first) {
        xlo = xhi = ex;
        ylo = yhi = ey;
        first = false;
      } else {
        xlo = std::min(xlo, ex);
        xhi = std::max(xhi, ex);
        ylo = std::min(ylo, ey);
        yhi = std::max(yhi, ey);
      }
    }
    Int mc = max_abs_coeff(v);
    if (a.format == "json") {
      rows.push_back({{"n", n},
                      {"terms", v.terms()},
                      {"max_coeff", mc.str()},
                      {"x_span", {xlo, xhi}},
                      {"y_span", {ylo, yhi}}});
    } else {
      std::string xs = std::to_string(xlo) + ".." + std::to_string(xhi);
      std::string ys = std::to_string(ylo) + ".." + std::to_string(yhi);
      text << std::setw(4) << n << std::setw(10) << v.terms() << std::setw(10)
           << mc.str() << std::setw(14) << xs << std::setw(14) << ys << "\n";
    }
  }
  if (a.format == "json") {
    nlohmann::json doc = {{"case", to_string(tag)}, {"rows", std::move(rows)}};
    emit(a.out, doc.dump(2) + "\n");
  } else {
    emit(a.out, text.str());
  }
  return kOk;
}

struct SeriesArgs {
  std::string case_name = "22";
  long order = 6;
  bool check = false;
  std::string format = "text";
  std::string out;
};

int run_series(const SeriesArgs& a) {
  CaseTag tag = parse_case(a.case_name);
  if (a.order < 1) throw Error("--order must be at least 1");
  std::vector<NCPoly> f = continued_fraction_series(tag, a.order - 1);
  VerifyReport rep;
  if (a.check) rep = series_multiply_check(tag, f);

  if (a.format == "json") {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t n = 0; n < f.size(); ++n)
      coeffs.push_back({{"power", n}, {"poly", poly_to_json(f[n])}});
    nlohmann::json doc = {{"case", to_string(tag)},
                          {"coefficients", std::move(coeffs)}};
    if (a.check) doc["numerator_check"] = report_to_json(rep);
    emit(a.out, doc.dump(2) + "\n");
  } else {
    std::ostringstream text;
    for (std::size_t n = 0; n < f.size(); ++n)
      text << "t^" << n << ": " << to_string(f[n]) << "\n";
    if (a.check) text << rep.to_text();
    emit(a.out, text.str());
  }
  return (a.check && !rep.all_passed()) ? kCheckFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact engine for the rank 2 noncommutative cluster sequences\n"
      "cases: 22, 14xy, 14XY, 41xy, 41XY"};
  app.require_subcommand(1);

  ComputeArgs ca;
  CLI::App* compute = app.add_subcommand(
      "compute", "print sequence members, negative indices included");
  compute->add_option("--case", ca.case_name, "sequence family")
      ->capture_default_str();
  compute->add_option("--n", ca.n, "index, may be negative")->required();
  compute->add_option("--to", ca.to, "end of an inclusive index range");
  compute->add_flag("--u", ca.u,
                    "print the even-subsequence member u_n instead of R_n");
  compute->add_option("--format", ca.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  compute->add_option("-o,--output", ca.out, "write here instead of stdout");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the verification suite and exit 0 only if it passes");
  verify->add_option("--nmax", va.nmax, "sequence depth")
      ->capture_default_str();
  verify->add_option("--budget", va.budget,
                     "elementary products allowed per direct check")
      ->capture_default_str();
  verify
      ->add_option("--inject-fault", va.inject,
                   "corrupt one input on purpose: entry or k")
      ->check(CLI::IsMember({"entry", "k"}));
  verify->add_option("--format", va.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_option("-o,--output", va.out, "write here instead of stdout");

  PathsArgs pa;
  CLI::App* paths = app.add_subcommand(
      "paths", "list the weighted walks behind one sequence member");
  paths->add_option("--case", pa.case_name, "sequence family (no 41 models)")
      ->capture_default_str();
  paths->add_option("--len", pa.len, "walk length in steps")->required();
  CLI::Option* budget_opt =
      paths->add_option("--budget", pa.budget,
                        "enumeration step cap, default 1000000 or NCL_BUDGET");
  paths->add_option("--format", pa.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  paths->add_option("-o,--output", pa.out, "write here instead of stdout");

  StatsArgs sa;
  CLI::App* stats = app.add_subcommand(
      "stats", "term counts, coefficient bounds and degree spans");
  stats->add_option("--case", sa.case_name, "sequence family")
      ->capture_default_str();
  stats->add_option("--nmax", sa.nmax, "last index tabulated")
      ->capture_default_str();
  stats->add_option("--format", sa.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  stats->add_option("-o,--output", sa.out, "write here instead of stdout");

  SeriesArgs ra;
  CLI::App* series = app.add_subcommand(
      "series", "continued fraction expansion coefficients");
  series->add_option("--case", ra.case_name, "sequence family (no 41 models)")
      ->capture_default_str();
  series->add_option("--order", ra.order, "number of coefficients")
      ->capture_default_str();
  series->add_flag("--check", ra.check,
                   "also verify the numerator identity of the expansion");
  series->add_option("--format", ra.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  series->add_option("-o,--output", ra.out, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  pa.budget_given = budget_opt->count() > 0;

  try {
    if (compute->parsed()) return run_compute(ca);
    if (verify->parsed()) return run_verify(va);
    if (paths->parsed()) return run_paths(pa);
    if (stats->parsed()) return run_stats(sa);
    if (series->parsed()) return run_series(ra);
  } catch (const IndexUnavailable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRange;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
