// qillum: sweeps, optimality checks and Helstrom queries for the
// post-selected quantum-illumination model.
//
// Exit codes: 0 success, 1 validation or usage error, 2 numerical check failed.
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qillum/analysis.hpp"
#include "qillum/report.hpp"
#include "qillum/state_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

// Margin below which the optimality check counts as failed.
constexpr double kMarginFloor = -1e-9;

struct SweepOptions {
  std::string eta;
  std::string dims;
  std::vector<std::string> families;
  double p0 = 0.5;
  std::string out;
  bool plot = false;
};

struct VerifyBellOptions {
  std::size_t d = 2;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  double eta = 0.5;
  double p0 = 0.5;
};

struct HelstromOptions {
  std::string state0;
  std::string state1;
  double p0 = 0.5;
  bool povm = false;
};

struct ProbeOptions {
  std::size_t d = 4;
  double eta = 0.5;
  double k = 2.0;
  std::size_t spectra = 20;
  std::uint64_t seed = 0;
};

int run_sweep_command(const SweepOptions& opt) {
  qillum::SweepGrid grid;
  grid.etas = qillum::parse_real_grid(opt.eta);
  grid.dims = qillum::parse_dim_grid(opt.dims);
  for (const auto& f : opt.families) grid.families.push_back(qillum::parse_family(f));
  grid.p0 = opt.p0;

  const auto records = qillum::run_sweep(grid);
  const std::string csv = qillum::sweep_csv(records);

  const std::filesystem::path out_path(opt.out);
  if (opt.plot) {
    auto script_path = out_path;
    script_path.replace_extension(".gp");
    const auto script = qillum::gnuplot_script(records, out_path.filename().string());
    qillum::write_file_atomically(out_path, csv);
    qillum::write_file_atomically(script_path, script);
  } else {
    qillum::write_file_atomically(out_path, csv);
  }
  return kExitOk;
}

int run_verify_bell_command(const VerifyBellOptions& opt) {
  if (opt.samples < 1) throw qillum::UsageError("--samples must be >= 1");
  if (opt.d < 2) throw qillum::UsageError("--d must be >= 2");
  const auto report = qillum::verify_bell_optimality(opt.d, opt.d, opt.samples, opt.seed, opt.eta, opt.p0);
  std::cout << qillum::to_json(report).dump(2) << '\n';
  return report.margin() >= kMarginFloor ? kExitOk : kExitNumerical;
}

int run_helstrom_command(const HelstromOptions& opt, double tol) {
  const auto rho0 = qillum::load_density_matrix(opt.state0, tol);
  const auto rho1 = qillum::load_density_matrix(opt.state1, tol);
  const qillum::DiscriminationProblem problem(rho0, rho1, opt.p0, tol);
  const double p_err = qillum::helstrom_error(problem);
  if (!opt.povm) {
    std::cout << qillum::format_number(p_err) << '\n';
    return kExitOk;
  }
  const auto povm = qillum::optimal_povm(problem);
  nlohmann::json out{{"p_error", p_err}, {"povm_error", qillum::povm_error(problem, povm)}};
  out["povm"] = nlohmann::json::array();
  for (const auto& element : povm.elements()) out["povm"].push_back(qillum::to_json(element));
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int run_probe_command(const ProbeOptions& opt) {
  const auto report = qillum::spectrum_dependence_probe(opt.d, opt.eta, opt.k, opt.spectra, opt.seed);
  std::cout << qillum::to_json(report).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-illumination distinguishability toolkit"};
  app.require_subcommand(1);

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate H01 and the Helstrom error over a grid");
  sweep_cmd->add_option("--eta", sweep.eta, "eta grid: list and/or start:step:stop ranges")->required();
  sweep_cmd->add_option("--d", sweep.dims, "signal dimension grid")->required();
  sweep_cmd->add_option("--family", sweep.families, "bell | uniform-rank:<r> | spectrum:<file>")
      ->required();
  sweep_cmd->add_option("--priors", sweep.p0, "prior p0 of the target-present hypothesis")
      ->default_val(0.5);
  sweep_cmd->add_option("--out", sweep.out, "CSV output path")->required();
  sweep_cmd->add_flag("--plot", sweep.plot, "also write a gnuplot script next to the CSV");

  VerifyBellOptions bell;
  auto* bell_cmd = app.add_subcommand("verify-bell", "Compare Haar-random inputs against the Bell state");
  bell_cmd->add_option("--d", bell.d, "signal and idler dimension")->required();
  bell_cmd->add_option("--samples", bell.samples, "number of Haar samples")->default_val(1000);
  bell_cmd->add_option("--seed", bell.seed, "generator seed")->default_val(0);
  bell_cmd->add_option("--eta", bell.eta, "signal fraction")->default_val(0.5);
  bell_cmd->add_option("--p0", bell.p0, "prior p0")->default_val(0.5);

  HelstromOptions helstrom;
  auto* helstrom_cmd = app.add_subcommand("helstrom", "Helstrom error between two states");
  helstrom_cmd->add_option("--state0", helstrom.state0, "JSON state file")->required();
  helstrom_cmd->add_option("--state1", helstrom.state1, "JSON state file")->required();
  helstrom_cmd->add_option("--p0", helstrom.p0, "prior of state0")->default_val(0.5);
  helstrom_cmd->add_flag("--povm", helstrom.povm, "also print the optimal POVM as JSON");

  ProbeOptions probe;
  auto* probe_cmd =
      app.add_subcommand("probe-spectrum", "Spread of the Helstrom error over spectra with equal K_I");
  probe_cmd->add_option("--d", probe.d, "signal dimension")->default_val(4);
  probe_cmd->add_option("--eta", probe.eta, "signal fraction")->default_val(0.5);
  probe_cmd->add_option("--k", probe.k, "target K_I")->default_val(2.0);
  probe_cmd->add_option("--spectra", probe.spectra, "number of spectra")->default_val(20);
  probe_cmd->add_option("--seed", probe.seed, "generator seed")->default_val(0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const double tol = qillum::tolerance_from_env();
    if (*sweep_cmd) return run_sweep_command(sweep);
    if (*bell_cmd) return run_verify_bell_command(bell);
    if (*helstrom_cmd) return run_helstrom_command(helstrom, tol);
    if (*probe_cmd) return run_probe_command(probe);
  } catch (const qillum::NumericalCheckError& e) {
    std::cerr << "qillum: numerical check failed: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const qillum::ConvergenceError& e) {
    std::cerr << "qillum: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "qillum: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
