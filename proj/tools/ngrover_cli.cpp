// ngrover: noisy Grover search experiments.
//
//   ngrover trajectory --n 64 --m 1 --eta 1,0.9 --steps 60 --engines closed,fullstate
//   ngrover sweep      --n 64 --m 1 --steps 60
//   ngrover verify     --n 16 --m 4 --engines closed,recursion,fullstate
//   ngrover figure     --figure-id psuc_case_i --out fig1.csv
//
// Exit codes: 0 success, 1 usage error, 2 verification failure, 3 I/O error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ngrover/experiments.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::uint64_t n = 64;
  std::uint64_t m = 1;
  std::vector<double> eta;
  std::size_t steps = 60;
  std::vector<std::string> engines;
  std::string out;
  std::string figure_id;
  int precision = 12;
  double degenerate_tol = ngrover::kDegenerateTolerance;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--n", f.n, "database size N (power of two)")->capture_default_str();
  cmd->add_option("--m", f.m, "number of marked items M")->capture_default_str();
  cmd->add_option("--eta", f.eta, "comma-separated damping strengths in (0, 1]")
      ->delimiter(',');
  cmd->add_option("--steps", f.steps, "number of Grover iterations");
  cmd->add_option("--engines", f.engines, "comma-separated subset of closed,recursion,fullstate")
      ->delimiter(',');
  cmd->add_option("--out", f.out, "output path (default: stdout)");
  cmd->add_option("--precision", f.precision, "significant digits in CSV output")
      ->capture_default_str();
  cmd->add_option("--degenerate-tol", f.degenerate_tol,
                  "band |eta - A+^2| treated as the degenerate spectrum")
      ->capture_default_str();
}

ngrover::ExperimentConfig to_config(const Flags& f, ngrover::ExperimentConfig cfg) {
  cfg.n_items = f.n;
  cfg.marked_count = f.m;
  if (!f.eta.empty()) cfg.eta_list = f.eta;
  cfg.output_path = f.out;
  cfg.precision = f.precision;
  cfg.degenerate_tol = f.degenerate_tol;
  if (!f.engines.empty()) {
    cfg.engines.clear();
    for (const auto& name : f.engines) {
      auto e = ngrover::parse_engine(name);
      if (!e) throw ngrover::ConfigError("unknown engine '" + name + "'");
      cfg.engines.push_back(*e);
    }
  }
  return cfg;
}

template <typename Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grover search under collective phase damping of the oracle queries"};
  app.require_subcommand(1);

  Flags flags;
  bool steps_given = false;
  auto* traj = app.add_subcommand("trajectory", "per-step rows for every engine and eta");
  auto* sweep = app.add_subcommand("sweep", "best success probability per eta");
  auto* verify = app.add_subcommand("verify", "compare engines pairwise");
  auto* figure = app.add_subcommand("figure", "wide CSV data for one figure");
  for (auto* cmd : {traj, sweep, verify, figure}) add_common(cmd, flags);
  figure->add_option("--figure-id", flags.figure_id, "psuc_case_i, psuc_case_ii or coherence_case_i")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  for (auto* cmd : {traj, sweep, verify, figure}) {
    if (cmd->parsed() && cmd->count("--steps") > 0) steps_given = true;
  }

  try {
    if (traj->parsed()) {
      auto cfg = to_config(flags, {});
      cfg.steps = flags.steps;
      const auto rows = ngrover::run_trajectory(cfg);
      emit(cfg.output_path, [&](std::ostream& os) { ngrover::write_csv(os, rows, cfg.precision); });
    } else if (sweep->parsed()) {
      ngrover::ExperimentConfig base;
      base.eta_list.clear();
      for (int k = 1; k <= 20; ++k) base.eta_list.push_back(k / 20.0);
      auto cfg = to_config(flags, base);
      cfg.steps = flags.steps;
      const auto rows = ngrover::run_sweep(cfg);
      emit(cfg.output_path, [&](std::ostream& os) { ngrover::write_csv(os, rows, cfg.precision); });
    } else if (verify->parsed()) {
      ngrover::ExperimentConfig base;
      base.eta_list = {0.05, 0.2, 0.5, 0.9, 0.99, 1.0};
      base.engines = {ngrover::Engine::Closed, ngrover::Engine::Recursion,
                      ngrover::Engine::Fullstate};
      auto cfg = to_config(flags, base);
      cfg.steps = steps_given ? flags.steps : 100;
      const auto report = ngrover::run_verify(cfg);
      emit(cfg.output_path, [&](std::ostream& os) { ngrover::write_report(os, report); });
      if (!report.passed()) {
        for (const auto& p : report.failures()) {
          std::cerr << "verification failed: N=" << report.n_items
                    << " M=" << report.marked_count << " eta=" << p.eta << " "
                    << ngrover::engine_name(p.first) << " vs " << ngrover::engine_name(p.second)
                    << " deviation " << p.max() << " at t=" << p.worst_t << "\n";
        }
        return kExitVerifyFailed;
      }
    } else if (figure->parsed()) {
      const auto id = ngrover::parse_figure(flags.figure_id);
      if (!id) throw ngrover::ConfigError("unknown figure id '" + flags.figure_id + "'");
      auto cfg = to_config(flags, ngrover::figure_defaults(*id));
      if (steps_given) cfg.steps = flags.steps;
      const auto fig = ngrover::emit_figure_data(*id, cfg);
      emit(cfg.output_path,
           [&](std::ostream& os) { ngrover::write_figure_csv(os, fig, cfg.precision); });
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    // Internal consistency failures such as subspace leakage.
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return 0;
}
