// Copyright 2026 The weylgme Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// weylgme: command-line front end.
//
//   weylgme analyze STATE.json --alpha A --beta B [--mode general|perm-invariant] [--json] [--csv F]
//   weylgme scan FAMILY --alpha A --beta B [--partition L|R] [--mode M] [--tol T] [--grid N] [--csv F]
//   weylgme repro table1|table2|example3|fig1|fig2 [--grid N] [--csv F]
//   weylgme zoo w3|example2|ghz4 [--x X] [-o F]
//   weylgme random-state --dims 2,2,2 --seed S [--rank R] [-o F]
//
// Exit status: 0 success, 2 parse or validation error, 3 bad arguments.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "weylgme/criteria.hpp"
#include "weylgme/report.hpp"
#include "weylgme/scan.hpp"
#include "weylgme/state_file.hpp"
#include "weylgme/zoo.hpp"

namespace {

using namespace weylgme;

constexpr int kExitInput = 2;
constexpr int kExitArgs = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DetectionMode parse_mode(const std::string& text) {
  if (text == "general") return DetectionMode::general;
  if (text == "perm-invariant") return DetectionMode::permutation_invariant;
  throw UsageError("--mode must be 'general' or 'perm-invariant', got '" + text + "'");
}

// Writes to the --csv path when given, stdout otherwise.
void emit_csv(const Table& table, const std::string& path) {
  if (path.empty()) {
    write_csv(std::cout, table);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  write_csv(out, table);
}

void emit_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct AnalyzeArgs {
  std::string state_path;
  double alpha = 0.0, beta = 0.0;
  std::string mode = "general";
  bool json = false;
  std::string csv;
};

void run_analyze(const AnalyzeArgs& args) {
  const auto file = load_state_file(args.state_path);
  const auto report = detect(file.state, args.alpha, args.beta, parse_mode(args.mode));
  std::cout << (args.json ? render_json(report) : render_text(report));
  if (!args.csv.empty()) {
    Table table{{"bipartition", "trace_norm", "bound", "violated"}, {}};
    for (const auto& rec : report.records) {
      table.rows.push_back({rec.bipartition.name(), format_double(rec.trace_norm),
                            format_double(rec.bound), rec.violated ? "1" : "0"});
    }
    emit_csv(table, args.csv);
  }
}

struct ScanArgs {
  std::string family;
  std::string state_path;
  double alpha = 0.0, beta = 0.0;
  std::string partition;
  std::string mode = "general";
  double tol = 1e-6;
  int grid = 101;
  std::string csv;
};

void run_scan(const ScanArgs& args) {
  const auto name = parse_family_name(args.family);
  if (!name) throw UsageError("unknown family '" + args.family + "'");
  if (*name == FamilyName::custom && args.state_path.empty()) {
    throw UsageError("family 'custom' needs --state FILE");
  }
  const FamilySpec family = *name == FamilyName::custom
                                ? FamilySpec::custom(load_state_file(args.state_path).state)
                                : FamilySpec(*name);

  Criterion criterion = GmeGeneral{};
  if (!args.partition.empty()) {
    criterion = Bipartition::parse(args.partition, family.base().parties());
  } else if (parse_mode(args.mode) == DetectionMode::permutation_invariant) {
    criterion = GmePermInvariant{};
  }
  const auto result = scan(family, args.alpha, args.beta, criterion, args.tol, args.grid);
  std::cout << render_text(result);
  if (!args.csv.empty()) {
    Table table{{"x", "score", "bound", "f"}, {}};
    for (const auto& s : result.samples) {
      table.rows.push_back({format_double(s.x), format_double(s.score),
                            format_double(s.bound), format_double(s.score - s.bound)});
    }
    emit_csv(table, args.csv);
  }
}

void run_repro(const std::string& target_name, int grid, const std::string& csv) {
  const auto target = parse_repro_target(target_name);
  if (!target) throw UsageError("unknown repro target '" + target_name + "'");
  emit_csv(repro(*target, grid), csv);
}

void run_zoo(const std::string& name, double x, const std::string& out) {
  DensityMatrix base = [&] {
    if (name == "w3") return w3();
    if (name == "example2") return example2_phi();
    if (name == "ghz4") return ghz(4);
    throw UsageError("unknown zoo state '" + name + "' (w3, example2, ghz4)");
  }();
  std::ostringstream label;
  label << name << " x=" << format_double(x);
  emit_text(serialize_state_file({white_noise(base, x), label.str(), "weylgme zoo"}), out);
}

void run_random(const std::vector<int>& dims, std::uint64_t seed, int rank,
                const std::string& out) {
  std::mt19937_64 rng(seed);
  const auto state = rank <= 0 ? random_pure_state(dims, rng)
                               : random_mixed_state(dims, rank, rng);
  emit_text(serialize_state_file({state, "random seed=" + std::to_string(seed),
                                  "weylgme random-state"}),
            out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genuine multipartite entanglement tests from generalized Pauli correlation tensors"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the separability and GME tests on a state file");
  analyze_cmd->add_option("state", analyze.state_path, "State file (JSON)")->required();
  analyze_cmd->add_option("--alpha", analyze.alpha, "Weight of the S0 block")->required();
  analyze_cmd->add_option("--beta", analyze.beta, "Weight of the full block")->required();
  analyze_cmd->add_option("--mode", analyze.mode, "general | perm-invariant");
  analyze_cmd->add_flag("--json", analyze.json, "Print the report as JSON");
  analyze_cmd->add_option("--csv", analyze.csv, "Write per-bipartition rows to this CSV file");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Locate the detection threshold along a white-noise family");
  scan_cmd->add_option("family", scan_args.family,
                       "w3_noise | example2_noise | ghz4_noise | custom")->required();
  scan_cmd->add_option("--state", scan_args.state_path, "Base state for the custom family");
  scan_cmd->add_option("--alpha", scan_args.alpha, "Weight of the S0 block")->required();
  scan_cmd->add_option("--beta", scan_args.beta, "Weight of the full block")->required();
  scan_cmd->add_option("--partition", scan_args.partition,
                       "Test one bipartition, e.g. \"2|1,3\"; default is the GME test");
  scan_cmd->add_option("--mode", scan_args.mode, "general | perm-invariant (GME test)");
  scan_cmd->add_option("--tol", scan_args.tol, "Bisection tolerance")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--grid", scan_args.grid, "Sample grid size")->check(CLI::Range(2, 100000));
  scan_cmd->add_option("--csv", scan_args.csv, "Write the sample grid to this CSV file");

  std::string repro_target, repro_csv;
  int repro_grid = 101;
  auto* repro_cmd = app.add_subcommand("repro", "Emit reference tables and figure data as CSV");
  repro_cmd->add_option("target", repro_target, "table1 | table2 | example3 | fig1 | fig2")->required();
  repro_cmd->add_option("--grid", repro_grid, "Curve grid size")->check(CLI::Range(2, 100000));
  repro_cmd->add_option("--csv", repro_csv, "Output file (default stdout)");

  std::string zoo_name, zoo_out;
  double zoo_x = 1.0;
  auto* zoo_cmd = app.add_subcommand("zoo", "Write a named noisy state as a state file");
  zoo_cmd->add_option("name", zoo_name, "w3 | example2 | ghz4")->required();
  zoo_cmd->add_option("--x", zoo_x, "Mixing parameter")->check(CLI::Range(0.0, 1.0));
  zoo_cmd->add_option("-o,--output", zoo_out, "Output file (default stdout)");

  std::vector<int> random_dims;
  std::uint64_t random_seed = 0;
  int random_rank = 0;
  std::string random_out;
  auto* random_cmd = app.add_subcommand("random-state", "Write a seeded random state as a state file");
  random_cmd->add_option("--dims", random_dims, "Subsystem dimensions, e.g. 2,2,2")
      ->required()->delimiter(',');
  random_cmd->add_option("--seed", random_seed, "RNG seed")->required();
  random_cmd->add_option("--rank", random_rank, "Rank of a mixed state (default: pure)");
  random_cmd->add_option("-o,--output", random_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitArgs;
  }

  try {
    if (*analyze_cmd) run_analyze(analyze);
    if (*scan_cmd) run_scan(scan_args);
    if (*repro_cmd) run_repro(repro_target, repro_grid, repro_csv);
    if (*zoo_cmd) run_zoo(zoo_name, zoo_x, zoo_out);
    if (*random_cmd) run_random(random_dims, random_seed, random_rank, random_out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArgs;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArgs;
  }
  return 0;
}
