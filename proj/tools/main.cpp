// Command-line driver for the plate obstacle benchmarks: one subcommand per
// example, each running a level sweep and writing the convergence table,
// run manifest and coincidence-set point files.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "gfem/convergence.hpp"
#include "gfem/errors.hpp"
#include "gfem/report.hpp"

namespace {

struct CliOptions {
  std::string levels = "2..6";
  double delta = 1.0 / 3.0;
  std::string space = "q2";
  std::string out = "out";
  bool emit_matrix = false;
  bool pdas_log = false;
  bool warm_start = false;
  bool allow_high_levels = false;
};

std::vector<int> parse_levels(const std::string& text) {
  const auto dots = text.find("..");
  std::vector<int> levels;
  if (dots == std::string::npos) {
    levels.push_back(std::stoi(text));
  } else {
    const int a = std::stoi(text.substr(0, dots));
    const int b = std::stoi(text.substr(dots + 2));
    for (int l = a; l <= b; ++l) levels.push_back(l);
  }
  return levels;
}

std::string fmt(const std::optional<double>& v, const char* format = "%12.4e") {
  if (!v) return std::string(12, ' ');
  char buf[40];
  std::snprintf(buf, sizeof(buf), format, *v);
  return buf;
}

int run_example(int id, const CliOptions& cli) {
  const auto levels = parse_levels(cli.levels);
  for (int l : levels) {
    if (l >= 7 && !cli.allow_high_levels) {
      std::cerr << "level " << l
                << " needs --allow-high-levels (large memory/runtime)\n";
      return 3;
    }
  }

  gfem::RunOptions opts;
  opts.delta = cli.delta;
  opts.space = cli.space == "q3" ? gfem::SpaceKind::Q3 : gfem::SpaceKind::Q2;
  opts.warm_start = cli.warm_start;

  const std::filesystem::path out_dir(cli.out);
  std::filesystem::create_directories(out_dir);
  if (cli.emit_matrix) {
    opts.matrix_sink = [&, id](int level, const gfem::SparseSym& K) {
      const auto path = out_dir / ("example" + std::to_string(id) + "_level" +
                                   std::to_string(level) + "_K.txt");
      std::ofstream os(path);
      gfem::write_matrix_triplets(K, os);
    };
  }
  if (cli.pdas_log) {
    opts.pdas_log_sink = [&, id](int level,
                                 const std::vector<gfem::PdasIterationLog>& log) {
      const auto path = out_dir / ("example" + std::to_string(id) + "_level" +
                                   std::to_string(level) + "_pdas.csv");
      std::ofstream os(path);
      os << "iteration,lower_active,upper_active,kkt_residual\n";
      char buf[64];
      for (const auto& row : log) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%d,%.17g\n", row.iteration,
                      row.lower_active, row.upper_active, row.kkt_residual);
        os << buf;
      }
    };
  }

  const auto report = gfem::run_convergence(gfem::make_example(id), levels, opts);
  const auto files = gfem::emit_report(report, out_dir);

  std::printf("example %d (%s, delta=%g)\n", id, cli.space.c_str(), cli.delta);
  std::printf("%5s %12s %8s %12s %12s %12s %12s %6s %9s\n", "level", "h", "dofs",
              "energy_rel", "beta_h", "linf", "beta_inf", "pdas", "seconds");
  for (const auto& r : report.rows) {
    std::printf("%5d %12.5e %8d %s %s %s %s %6d %9.2f\n", r.level, r.h, r.dofs,
                fmt(r.energy_error).c_str(), fmt(r.beta_h, "%12.4f").c_str(),
                fmt(r.linf_error).c_str(), fmt(r.beta_inf, "%12.4f").c_str(),
                r.pdas_iterations, r.seconds);
  }
  for (const auto& f : files) std::printf("wrote %s\n", f.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flat-top partition-of-unity GFEM for clamped-plate obstacle problems"};
  app.require_subcommand(1);

  CliOptions cli;
  int picked = 0;
  for (int id = 1; id <= 4; ++id) {
    auto* sub = app.add_subcommand("example" + std::to_string(id),
                                   "Run benchmark example " + std::to_string(id));
    sub->add_option("--levels", cli.levels, "Level range a..b or a single level");
    sub->add_option("--delta", cli.delta, "Flat-top overlap fraction in (0,1)");
    sub->add_option("--space", cli.space, "Local polynomial space")
        ->check(CLI::IsMember({"q2", "q3"}));
    sub->add_option("--out", cli.out, "Output directory");
    sub->add_flag("--emit-matrix", cli.emit_matrix,
                  "Write the stiffness matrix as coordinate triplets per level");
    sub->add_flag("--pdas-log", cli.pdas_log, "Write the active-set iteration log");
    sub->add_flag("--warm-start", cli.warm_start,
                  "Seed each level's active set from the previous level");
    sub->add_flag("--allow-high-levels", cli.allow_high_levels,
                  "Permit levels >= 7");
    sub->callback([&picked, id]() { picked = id; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return run_example(picked, cli);
  } catch (const gfem::nonconvergence_error& e) {
    std::cerr << "solver nonconvergence: " << e.what() << '\n';
    return 2;
  } catch (const gfem::data_error& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 3;
  } catch (const gfem::capability_error& e) {
    std::cerr << "capability error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
