#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ihara_towers/errors.hpp"
#include "towers_cli/towers_cli.hpp"

namespace {

using namespace towers_cli;

struct Options {
  std::string family;
  std::vector<std::int64_t> params;
  std::string graph_path;
  std::string oracle_graph_path;
  std::string output;
  std::string format;
  std::string mode = "matrix-tree";
  std::vector<std::uint64_t> primes;
  std::uint64_t n_max = 10;
  std::uint64_t n_probe = 300;
  std::uint64_t seed = ihara_towers::kDefaultFactorSeed;
  unsigned precision = 32;
  unsigned jobs = 1;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw std::invalid_argument("cannot write " + opt.output);
  out << text;
}

bool wants_csv(const Options& opt) {
  if (!opt.format.empty()) return opt.format == "csv";
  return opt.output.size() >= 4 && opt.output.compare(opt.output.size() - 4, 4, ".csv") == 0;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ihara_towers::PadicOptions padic_options(const Options& opt) {
  ihara_towers::PadicOptions o;
  o.seed = opt.seed;
  o.precision = opt.precision;
  return o;
}

int run_verify(const Options& opt) {
  const GraphFile g = read_graph(opt.graph_path);
  const ihara_towers::VoltagedGraph vg = to_voltaged(g);
  const ihara_towers::TowerAnalysis ta = ihara_towers::analyze(vg);
  const ihara_towers::OracleMode mode =
      opt.mode == "bruteforce-small" ? ihara_towers::OracleMode::kBruteForceSmall : ihara_towers::OracleMode::kMatrixTree;
  const ihara_towers::VoltagedGraph oracle_graph =
      opt.oracle_graph_path.empty() ? vg : to_voltaged(read_graph(opt.oracle_graph_path));
  const ihara_towers::TowerVerification v = ihara_towers::verify_tower(oracle_graph, ta, opt.n_max, opt.jobs, mode);
  emit(opt, dump(verification_json(v)));
  if (!v.ok()) {
    std::cerr << "verification mismatch at n = " << *v.first_mismatch << "\n";
    return kMismatch;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning trees, Ihara polynomials and p-adic laws along Z-towers of voltage covers"};
  app.require_subcommand(1);
  Options opt;

  auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", opt.output, "Write to this file"); };
  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("graph", opt.graph_path, "Graph JSON file")->required()->check(CLI::ExistingFile);
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "json or csv (default: from --output suffix, else json)")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* generate = app.add_subcommand("generate", "Write a base voltaged graph");
  generate->add_option("family", opt.family, "Graph family")->required()->check(CLI::IsMember(generator_families()));
  generate->add_option("params", opt.params, "Family parameters (voltages)");
  add_output(generate);

  CLI::App* analyze = app.add_subcommand("analyze", "Summarize the tower of a voltaged graph");
  add_graph(analyze);
  analyze->add_option("--prime", opt.primes, "Prime for a p-adic Mahler exponent (repeatable)");
  add_output(analyze);

  CLI::App* table = app.add_subcommand("table", "kappa, resultant and delta rows for n = 1..n-max");
  add_graph(table);
  table->add_option("--n-max", opt.n_max, "Largest layer")->check(CLI::PositiveNumber);
  table->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(table);
  add_output(table);

  CLI::App* verify = app.add_subcommand("verify", "Check the formula against spanning-tree counts of each layer");
  add_graph(verify);
  verify->add_option("--n-max", opt.n_max, "Largest layer")->check(CLI::PositiveNumber);
  verify->add_option("--mode", opt.mode, "Oracle")->check(CLI::IsMember({"matrix-tree", "bruteforce-small"}));
  verify->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--oracle-graph", opt.oracle_graph_path, "Build the layers from this graph instead")
      ->check(CLI::ExistingFile);
  add_output(verify);

  CLI::App* padic = app.add_subcommand("padic", "p-adic valuation report of the spanning-tree counts");
  add_graph(padic);
  padic->add_option("--prime", opt.primes, "Prime (repeatable)")->required();
  padic->add_option("--n-max", opt.n_max, "Largest layer")->check(CLI::PositiveNumber);
  padic->add_option("--seed", opt.seed, "Seed for the finite-field factorizer");
  padic->add_option("--precision", opt.precision, "Initial p-adic precision in digits")->check(CLI::Range(2U, 512U));
  padic->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(padic);
  add_output(padic);

  CLI::App* asymptotics = app.add_subcommand("asymptotics", "Compare log kappa with its Mahler-measure prediction");
  add_graph(asymptotics);
  asymptotics->add_option("--n-probe,--n-max", opt.n_probe, "Layer to probe")->check(CLI::PositiveNumber);
  add_output(asymptotics);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) {
      emit(opt, dump(to_json(towers_cli::generate(opt.family, opt.params))));
    } else if (*analyze) {
      emit(opt, dump(analyze_summary(read_graph(opt.graph_path), opt.primes)));
    } else if (*table) {
      const auto ta = ihara_towers::analyze(to_voltaged(read_graph(opt.graph_path)));
      const auto rows = table_rows(ta, opt.n_max, opt.jobs);
      emit(opt, wants_csv(opt) ? table_csv(rows) : dump(table_json(rows)));
    } else if (*verify) {
      return run_verify(opt);
    } else if (*padic) {
      const auto ta = ihara_towers::analyze(to_voltaged(read_graph(opt.graph_path)));
      const auto reports = padic_reports(ta, opt.primes, opt.n_max, padic_options(opt), opt.jobs);
      emit(opt, wants_csv(opt) ? padic_csv(reports) : dump(padic_json(reports)));
    } else if (*asymptotics) {
      const auto ta = ihara_towers::analyze(to_voltaged(read_graph(opt.graph_path)));
      emit(opt, dump(asymptotics_json(ta, opt.n_probe)));
    }
  } catch (const ihara_towers::HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return kHypothesis;
  } catch (const ihara_towers::ResourceError& e) {
    std::cerr << "resource exhausted: " << e.what() << "\n";
    return kResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "verification mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
