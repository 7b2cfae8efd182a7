#ifndef GFEM_REPORT_HPP
#define GFEM_REPORT_HPP

#include <filesystem>
#include <vector>

#include "gfem/convergence.hpp"

namespace gfem {

struct EmitOptions {
  bool csv = true;
  bool manifest = true;
  bool coincidence = true;
};

/// Writes exampleN_table.csv (level, h, dofs, relative energy error, beta_h,
/// linf error, beta_inf, pdas iterations, seconds), exampleN_manifest.json,
/// and per-level coincidence point files (x y per line). Numbers carry 17
/// significant digits. Returns the written paths; I/O failures surface as
/// std::runtime_error naming the path.
std::vector<std::filesystem::path> emit_report(const ConvergenceReport& report,
                                               const std::filesystem::path& out_dir,
                                               const EmitOptions& options = {});

}  // namespace gfem

#endif
