// dmod: decomposition factors of twisted D-modules on plane line
// arrangements.
//
//   dmod report <file> [--json]
//   dmod verify [--seed N] [--suite NAME] [--corrupt-q]
//   dmod explain <file>
//   dmod sweep --m-max K [--grid 0,1/2] [--json]
//
// Exit status: 0 ok, 1 input error, 2 verification failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <tuple>

#include "dmod/action.hpp"
#include "dmod/arrangement.hpp"
#include "dmod/certs.hpp"
#include "dmod/decomp.hpp"
#include "dmod/errors.hpp"
#include "dmod/io.hpp"
#include "dmod/verify.hpp"
#include "dmod/weyl.hpp"

namespace {

using namespace dmod;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;

int cmd_report(const std::string& path, bool json) {
  const Arrangement arr = io::read_arrangement(path);
  const DecompositionReport report = count_factors(arr);
  if (json)
    std::cout << io::report_to_json(report).dump(2) << "\n";
  else
    std::cout << io::report_to_text(report);
  return kExitOk;
}

int cmd_verify(std::uint64_t seed, const std::vector<std::string>& only, bool corrupt_q) {
  verify::Options options;
  options.seed = seed;
  options.corrupt_q = corrupt_q;
  std::vector<std::string> names = only.empty() ? verify::suite_names() : only;
  for (const std::string& name : names) {
    const auto& known = verify::suite_names();
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw PreconditionError("unknown suite \"" + name + "\"");
  }
  std::cout << "seed " << seed << "\n";
  bool all_passed = true;
  for (const std::string& name : names) {
    const verify::SuiteResult r = verify::run_suite(name, options);
    std::cout << (r.passed ? "[pass] " : "[FAIL] ") << r.name << ": " << r.checks << " checks\n";
    if (!r.passed) {
      std::cout << "  witness: " << r.witness << "\n";
      all_passed = false;
    }
  }
  return all_passed ? kExitOk : kExitVerify;
}

std::string scalars_text(const std::vector<Scalar>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return "(" + out + ")";
}

int cmd_explain(const std::string& path) {
  const Arrangement arr = io::read_arrangement(path);
  const DecompositionReport report = count_factors(arr);
  std::cout << io::report_to_text(report);
  bool ok = true;

  const Arrangement reduced = normalize_beta(arr);
  std::cout << "\nexponents mod Z: " << scalars_text(reduced.beta) << "\n";
  if (arr.size() == 1) {
    std::cout << "single line: C[t]_t t^beta has " << (report.k == 1 ? 2 : 1)
              << " factor(s)\n";
    return kExitOk;
  }

  const NormalizedArrangement normalized = normalize_coordinates(reduced);
  std::cout << "normalized forms:";
  for (const LinearForm& f : normalized.forms()) std::cout << " [" << f.to_string() << "]";
  std::cout << "\nform scalings: " << scalars_text(normalized.scale()) << "\n";

  const AnnPair ann = build_annihilators(normalized);
  const AnnihilatorCheck check = verify_annihilators(ann, normalized);
  std::cout << "\nannihilators of alpha^beta\n";
  std::cout << "  P = " << ann.P << "\n  Q = " << ann.Q << "\n";
  std::cout << "  P*alpha^beta = 0, Q*alpha^beta = 0: " << (check.ok ? "verified" : "FAILED")
            << "\n";
  ok = ok && check.ok;

  std::cout << "\nideal J = A2*x + A2*P + A2*Q\n";
  const IdealSimplification simplified = simplify_ideal(ann);
  for (const IdentityStep& s : simplified.steps)
    std::cout << "  " << s.to_string() << (s.holds() ? "" : "  <-- FAILED") << "\n";
  std::cout << "  generators:";
  for (const WeylOp& g : simplified.generators) std::cout << " [" << g << "]";
  std::cout << "\n";
  ok = ok && simplified.verify();

  const Scalar gamma = reduced.beta_sum() + Scalar(1);
  const MembershipChain chain = reduce_power_chain(gamma, static_cast<unsigned>(arr.size() - 2));
  std::cout << "\ny-part: " << chain.to_string();
  ok = ok && chain.verify();

  const QuotientClass direct = quotient_class(reduced.beta_sum(), arr.size());
  const QuotientClass composed = quotient_class_via_certificates(ann);
  std::cout << "A2/J: " << to_string(direct) << " (from certificates: " << to_string(composed)
            << ")\n";
  ok = ok && direct == composed;
  return ok ? kExitOk : kExitVerify;
}

std::vector<Scalar> parse_grid(const std::string& text) {
  std::vector<Scalar> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) grid.push_back(Scalar::parse(item));
  return grid;
}

std::uint64_t closed_formula(std::size_t m, std::size_t k, bool sum_integer) {
  if (k == m) return 2 * m;
  return sum_integer ? m + k - 1 : k + 1;
}

int cmd_sweep(std::size_t m_max, const std::string& grid_text, bool json) {
  if (m_max > 8) throw PreconditionError("sweep supports --m-max <= 8");
  const std::vector<Scalar> grid = parse_grid(grid_text);

  // (m, k, sum integer) -> (count, instances); count 0 marks a disagreement.
  std::map<std::tuple<std::size_t, std::size_t, bool>, std::pair<std::uint64_t, std::size_t>> rows;
  bool consistent = true;
  for (std::size_t m = 1; m <= m_max && !grid.empty(); ++m) {
    std::vector<LinearForm> forms{LinearForm(1, 0), LinearForm(0, 1)};
    for (std::size_t i = 2; i < m; ++i) forms.emplace_back(static_cast<long>(i - 1), 1);
    forms.resize(m, LinearForm(1, 0));
    // Exponent vectors as multisets of grid entries.
    std::vector<std::size_t> idx(m, 0);
    for (;;) {
      Arrangement arr{forms, {}};
      for (std::size_t i : idx) arr.beta.push_back(grid[i]);
      const DecompositionReport r = count_factors(arr);
      const bool sum_integer = arr.beta_sum().is_integer();
      auto [it, fresh] = rows.try_emplace({m, r.k, sum_integer}, r.count, 0);
      if (!fresh && it->second.first != r.count) {
        it->second.first = 0;
        consistent = false;
      }
      ++it->second.second;

      std::size_t pos = m;
      while (pos > 0 && idx[pos - 1] + 1 == grid.size()) --pos;
      if (pos == 0) break;
      const std::size_t next = idx[pos - 1] + 1;
      for (std::size_t p = pos - 1; p < m; ++p) idx[p] = next;
    }
  }

  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  std::ostringstream text;
  text << "m  k  sum      count  formula  2^k  ok\n";
  for (const auto& [key, value] : rows) {
    const auto [m, k, sum_integer] = key;
    const std::uint64_t formula = closed_formula(m, k, sum_integer);
    bool ok = value.first == formula;
    std::string nc = "-";
    if (m <= 2) {
      const std::uint64_t expected = normal_crossings_count(k, m, 2);
      ok = ok && value.first == expected;
      nc = std::to_string(expected);
    }
    consistent = consistent && ok;
    nlohmann::ordered_json row;
    row["m"] = m;
    row["k"] = k;
    row["sum_integer"] = sum_integer;
    row["count"] = value.first;
    row["formula"] = formula;
    row["instances"] = value.second;
    row["ok"] = ok;
    table.push_back(std::move(row));
    char line[96];
    std::snprintf(line, sizeof line, "%-2zu %-2zu %-8s %-6llu %-8llu %-4s %s\n", m, k,
                  sum_integer ? "integer" : "other",
                  static_cast<unsigned long long>(value.first),
                  static_cast<unsigned long long>(formula), nc.c_str(), ok ? "yes" : "NO");
    text << line;
  }
  if (json)
    std::cout << table.dump(2) << "\n";
  else
    std::cout << text.str();
  return consistent ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposition factors of twisted D-modules on plane line arrangements"};
  app.require_subcommand(1);

  std::string report_path;
  bool report_json = false;
  auto* report = app.add_subcommand("report", "Count and describe the decomposition factors");
  report->add_option("file", report_path, "Arrangement JSON file")->required();
  report->add_flag("--json", report_json, "Emit the report as JSON");

  std::uint64_t seed = 1;
  std::vector<std::string> suites;
  bool corrupt_q = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the seeded verification suites");
  verify_cmd->add_option("--seed", seed, "Seed for randomized suites");
  verify_cmd->add_option("--suite", suites, "Run only the named suite(s)");
  verify_cmd->add_flag("--corrupt-q", corrupt_q, "Perturb Q in the annihilator suite");

  std::string explain_path;
  auto* explain = app.add_subcommand("explain", "Report plus the certificate chains");
  explain->add_option("file", explain_path, "Arrangement JSON file")->required();

  std::size_t m_max = 5;
  std::string grid = "0,1/2";
  bool sweep_json = false;
  auto* sweep = app.add_subcommand("sweep", "Tabulate counts over exponent grids");
  sweep->add_option("--m-max", m_max, "Largest number of lines (<= 8)")->required();
  sweep->add_option("--grid", grid, "Comma-separated exponent values");
  sweep->add_flag("--json", sweep_json, "Emit the table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*report) return cmd_report(report_path, report_json);
    if (*verify_cmd) return cmd_verify(seed, suites, corrupt_q);
    if (*explain) return cmd_explain(explain_path);
    if (*sweep) return cmd_sweep(m_max, grid, sweep_json);
  } catch (const dmod::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
