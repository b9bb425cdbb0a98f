// Command-line front end for the epset library.
//
// Exit codes: 0 success, 1 negative decision, 2 input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epset/bench.hpp"
#include "epset/builders.hpp"
#include "epset/decide.hpp"
#include "epset/dfa.hpp"
#include "epset/dfa_io.hpp"
#include "epset/errors.hpp"
#include "epset/modular.hpp"
#include "epset/oracle.hpp"
#include "epset/structure.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

// Thrown for flag combinations CLI11 cannot express.
struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string set_string(const std::vector<epset::Value>& values) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << '}';
  return out.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw FlagError("--out: cannot write '" + out_path + "'");
  out << text;
}

int cmd_decide(const std::string& path, bool json) {
  epset::Decision d = epset::decide(epset::read_dfa_file(path));
  if (json) {
    std::cout << epset::to_json(d) << '\n';
  } else {
    switch (d.classification) {
      case epset::Classification::PurelyPeriodic:
      case epset::Classification::ImpurelyPeriodic:
        std::cout << (d.classification == epset::Classification::PurelyPeriodic ? "purely" : "impurely") << " periodic";
        if (d.param) {
          std::cout << ", p=" << d.param->period << ", R=" << set_string(d.param->remainders);
          if (!d.param->mismatches.empty()) std::cout << ", I=" << set_string(d.param->mismatches);
        } else {
          std::cout << " (parameter too large to enumerate)";
        }
        std::cout << '\n';
        break;
      case epset::Classification::NotEventuallyPeriodic:
        std::cout << "not eventually periodic (reason: " << epset::to_string(*d.reason) << ")\n";
        break;
      case epset::Classification::NotByValue:
        std::cout << "not accepted by value (reason: not-by-value)\n";
        break;
    }
    std::cout << "ell=" << d.ell << ", m=" << d.m << '\n';
  }
  return d.periodic() ? kOk : kNegative;
}

struct BuildOptions {
  std::string kind;
  epset::Value period = 0;
  std::vector<epset::Value> remainders, mismatches, set;
  unsigned base = 2;
  bool minimize = false;
  std::string out;
};

int cmd_build(const BuildOptions& o) {
  if (o.kind != "mismatch") {
    if (o.period > epset::kMaxPeriod) throw FlagError("--period: must not exceed 2^31");
    for (epset::Value r : o.remainders)
      if (o.period > 0 && r >= o.period)
        throw FlagError("--remainders: " + std::to_string(r) + " is not below --period " + std::to_string(o.period));
  }
  epset::Dfa a(2, 1);
  if (o.kind == "mod") {
    if (o.period == 0) throw FlagError("--period: required and positive for 'build mod'");
    a = epset::build_mod_automaton(o.period, o.remainders, o.base);
  } else if (o.kind == "eventually") {
    if (o.period == 0) throw FlagError("--period: required and positive for 'build eventually'");
    epset::PeriodicParameter param{o.period, o.remainders, o.mismatches};
    std::sort(param.remainders.begin(), param.remainders.end());
    std::sort(param.mismatches.begin(), param.mismatches.end());
    a = epset::build_eventually_periodic_automaton(param, o.base);
  } else {
    if (o.set.empty()) throw FlagError("--set: required and non-empty for 'build mismatch'");
    a = epset::build_mismatch_automaton(o.set, o.base);
  }
  if (o.minimize) a = epset::minimize(epset::trim_accessible(a)).dfa;
  emit(epset::to_text(a), o.out);
  return kOk;
}

int cmd_minimize(const std::string& path, const std::string& out) {
  epset::Dfa a = epset::read_dfa_file(path);
  emit(epset::to_text(epset::minimize(epset::trim_accessible(a)).dfa), out);
  return kOk;
}

int cmd_analyze(const std::string& path) {
  epset::Dfa a = epset::read_dfa_file(path);
  auto comps = epset::sccs(a);
  std::size_t nontrivial = 0;
  for (const auto& c : comps) nontrivial += c.nontrivial;
  std::cout << "states: " << a.num_states() << '\n'
            << "sccs: " << comps.size() << " (" << nontrivial << " non-trivial)\n";
  auto zc = epset::zero_circuit_states(a);
  std::cout << "zero-circuit states (" << zc.size() << "):";
  for (epset::State s : zc) std::cout << ' ' << s;
  std::cout << '\n';
  auto part = epset::ult_eq_merge(a);
  std::size_t max_index = 0;
  for (std::size_t idx : part.index_of_class) max_index = std::max(max_index, idx);
  std::cout << "ultimate-equivalence classes: " << part.num_classes << ", max index " << max_index << '\n';
  if (a.num_states() <= 64) {
    std::vector<std::vector<epset::State>> members(part.num_classes);
    for (epset::State s = 0; s < a.num_states(); ++s) members[part.class_of[s]].push_back(s);
    for (std::size_t c = 0; c < part.num_classes; ++c) {
      std::cout << "  class " << c << " (index " << part.index_of_class[c] << "):";
      for (epset::State s : members[c]) std::cout << ' ' << s;
      std::cout << '\n';
    }
  }
  return kOk;
}

int cmd_export_dot(const std::string& path, const std::string& out) {
  emit(epset::to_dot(epset::read_dfa_file(path)), out);
  return kOk;
}

int cmd_oracle(const std::string& path, epset::Value p_max, epset::Value n_max, epset::Value values) {
  if (values < n_max + 2 * p_max) throw FlagError("--values: must be at least --n-max + 2 * --p-max");
  epset::Dfa a = epset::read_dfa_file(path);
  auto table = epset::oracle::enumerate_membership(a, values);
  auto found = epset::oracle::find_eventual_period(table, p_max, n_max);
  if (!found) {
    std::cout << "none in box (p <= " << p_max << ", N <= " << n_max << ", values <= " << values << ")\n";
    return kNegative;
  }
  std::cout << "p=" << found->period << " N=" << found->threshold << '\n';
  return kOk;
}

int cmd_bench(const std::string& family, const std::vector<std::size_t>& sizes, unsigned base, unsigned repeats) {
  if (sizes.empty() || !std::is_sorted(sizes.begin(), sizes.end())) throw FlagError("--sizes: must be a non-empty ascending list");
  auto fam = family == "mod" ? epset::BenchFamily::Mod : epset::BenchFamily::Eventually;
  auto rows = epset::run_bench(fam, sizes, base, repeats);
  epset::write_csv(std::cout, rows);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether a base-b automaton accepts an eventually periodic set of integers"};
  app.require_subcommand(1);

  std::string file, out;
  bool json = false;
  auto* decide = app.add_subcommand("decide", "Classify the set accepted by an automaton file");
  decide->add_option("file", file, "Automaton in text format")->required();
  decide->add_flag("--json", json, "Print the JSON report");

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Construct a canonical automaton");
  build_cmd->add_option("kind", build.kind, "mod | eventually | mismatch")
      ->required()
      ->check(CLI::IsMember({"mod", "eventually", "mismatch"}));
  build_cmd->add_option("--period", build.period, "Period p");
  build_cmd->add_option("--remainders", build.remainders, "Remainder set R, comma separated")->delimiter(',');
  build_cmd->add_option("--mismatches", build.mismatches, "Mismatch set I, comma separated")->delimiter(',');
  build_cmd->add_option("--set", build.set, "Finite set for 'mismatch', comma separated")->delimiter(',');
  build_cmd->add_option("--base", build.base, "Base b")->check(CLI::Range(2u, 65536u));
  build_cmd->add_flag("--minimize", build.minimize, "Minimise the result");
  build_cmd->add_option("--out", build.out, "Output file (default stdout)");

  auto* minimize = app.add_subcommand("minimize", "Minimise an automaton file");
  minimize->add_option("file", file, "Automaton in text format")->required();
  minimize->add_option("--out", out, "Output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "SCCs, 0-circuits and ultimate-equivalence classes");
  analyze->add_option("file", file, "Automaton in text format")->required();

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of an automaton file");
  dot->add_option("file", file, "Automaton in text format")->required();
  dot->add_option("--out", out, "Output file (default stdout)");

  epset::Value p_max = epset::oracle::kDefaultPeriodBox, n_max = epset::oracle::kDefaultThresholdBox,
               values = epset::oracle::kDefaultValueBox;
  auto* oracle = app.add_subcommand("oracle", "Brute-force search for an eventual period");
  oracle->add_option("file", file, "Automaton in text format")->required();
  oracle->add_option("--p-max", p_max, "Largest period searched")->check(CLI::PositiveNumber);
  oracle->add_option("--n-max", n_max, "Largest threshold searched");
  oracle->add_option("--values", values, "Values enumerated");

  std::string family = "mod";
  std::vector<std::size_t> sizes{1000, 10000, 100000};
  unsigned bench_base = 2, repeats = 3;
  auto* bench = app.add_subcommand("bench", "Time decide on generated instances, CSV output");
  bench->add_option("--family", family, "mod | eventually")->check(CLI::IsMember({"mod", "eventually"}));
  bench->add_option("--sizes", sizes, "Ascending instance sizes, comma separated")->delimiter(',');
  bench->add_option("--base", bench_base, "Base b")->check(CLI::Range(2u, 65536u));
  bench->add_option("--repeats", repeats, "Runs per size; the median is reported")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*decide) return cmd_decide(file, json);
    if (*build_cmd) return cmd_build(build);
    if (*minimize) return cmd_minimize(file, out);
    if (*analyze) return cmd_analyze(file);
    if (*dot) return cmd_export_dot(file, out);
    if (*oracle) return cmd_oracle(file, p_max, n_max, values);
    if (*bench) return cmd_bench(family, sizes, bench_base, repeats);
  } catch (const epset::ParseError& e) {
    std::cerr << "error: " << file << ": " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
