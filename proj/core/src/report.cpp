#include "gfem/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>

namespace gfem {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string opt(const std::optional<double>& v) { return v ? num(*v) : ""; }

std::ofstream open_file(const std::filesystem::path& p) {
  std::ofstream os(p);
  if (!os) throw std::runtime_error("emit_report: cannot open " + p.string());
  return os;
}

}  // namespace

std::vector<std::filesystem::path> emit_report(const ConvergenceReport& report,
                                               const std::filesystem::path& out_dir,
                                               const EmitOptions& options) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  const std::string stem = "example" + std::to_string(report.example_id);

  if (options.csv) {
    const auto path = out_dir / (stem + "_table.csv");
    auto os = open_file(path);
    os << "level,h,dofs,energy_error_rel,beta_h,linf_error,beta_inf,pdas_iters,seconds\n";
    for (const auto& r : report.rows) {
      os << r.level << ',' << num(r.h) << ',' << r.dofs << ',' << opt(r.energy_error)
         << ',' << opt(r.beta_h) << ',' << opt(r.linf_error) << ',' << opt(r.beta_inf)
         << ',' << r.pdas_iterations << ',' << num(r.seconds) << '\n';
    }
    if (!os.flush()) throw std::runtime_error("emit_report: write failed: " + path.string());
    written.push_back(path);
  }

  if (options.manifest) {
    nlohmann::json j;
    j["example"] = report.example_id;
    j["space"] = report.space == SpaceKind::Q2 ? "q2" : "q3";
    j["delta"] = report.delta;
    j["rule_order"] = report.rule_order;
    j["warm_start"] = report.warm_start;
    j["solver"] = {{"c", report.pdas_options.c},
                   {"tolerance", report.pdas_options.tolerance},
                   {"max_iterations", report.pdas_options.max_iterations}};
    j["normalization"] = {{"level", report.normalization_level},
                          {"energy_norm", report.normalization}};
    if (report.example_id == 4)
      j["l_element_n8"] = report.l_element_n8_moved ? "(1,0)" : "(0,1)";
    j["version"] = "0.1.0";
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
      nlohmann::json row;
      row["level"] = r.level;
      row["h"] = r.h;
      row["dofs"] = r.dofs;
      if (r.energy_error) row["energy_error_rel"] = *r.energy_error;
      if (r.energy_error_abs) row["energy_error_abs"] = *r.energy_error_abs;
      if (r.beta_h) row["beta_h"] = *r.beta_h;
      if (r.linf_error) row["linf_error"] = *r.linf_error;
      if (r.beta_inf) row["beta_inf"] = *r.beta_inf;
      row["pdas_iterations"] = r.pdas_iterations;
      row["kkt_pass"] = r.kkt_pass;
      row["coincidence_count"] = r.coincidence.size();
      row["seconds"] = r.seconds;
      rows.push_back(row);
    }
    j["rows"] = rows;

    const auto path = out_dir / (stem + "_manifest.json");
    auto os = open_file(path);
    os << j.dump(2) << '\n';
    if (!os.flush()) throw std::runtime_error("emit_report: write failed: " + path.string());
    written.push_back(path);
  }

  if (options.coincidence) {
    for (const auto& r : report.rows) {
      if (!r.energy_error) continue;  // no threshold at this level
      const auto path =
          out_dir / (stem + "_level" + std::to_string(r.level) + "_coincidence.xy");
      auto os = open_file(path);
      for (const auto& p : r.coincidence) os << num(p.x) << ' ' << num(p.y) << '\n';
      if (!os.flush())
        throw std::runtime_error("emit_report: write failed: " + path.string());
      written.push_back(path);
    }
  }
  return written;
}

}  // namespace gfem
