#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isospec/convergence.hpp"
#include "isospec/eigensolver.hpp"
#include "isospec/exact.hpp"
#include "isospec/surface.hpp"
#include "isospec_cli/config.hpp"

namespace isospec::cli {

struct CommandResult {
  int status = 0;
  nlohmann::json report;
  /// Human-readable summary printed to stdout.
  std::string text;
};

/// Surface named by `which`:
///   a subgroup spec (see parse_subgroup), glued along its Schreier graph;
///   `<subgroup>:quotient`, the quotient by the tile involution i -> i+4 mod 8;
///   `single`, the tile alone; `S` or `C`, the planar pair built on the tile.
SurfaceMesh make_surface(const RunConfig& cfg, const std::string& which, int k);

EigenOptions eigen_options(const RunConfig& cfg, int count);
EigenOptions transplant_eigen_options(const RunConfig& cfg);

/// Lowest cfg.count eigenvalues under cfg.bc and cfg.mode, with the report
/// metadata filled in. `skip_kernel` drops the constant modes of an
/// all-Neumann problem (one per connected component) before counting.
SpectrumReport surface_spectrum(const SurfaceMesh& m, const RunConfig& cfg, int k, bool skip_kernel = false);

/// Convergence study of surface_spectrum over `levels`.
ConvergenceResult spectrum_study(const RunConfig& cfg, const std::string& which, const std::vector<int>& levels,
                                 bool skip_kernel, std::vector<SpectrumReport>* reports = nullptr);

/// Intertwiner used to transplant from h1 to h2: the parametrised matrix for
/// (Γ1, Γ2), its inverse for (Γ2, Γ1), the identity for equal subgroups, and
/// otherwise the first invertible small-integer combination of the
/// intertwiner basis. Throws if none exists.
RationalMatrix choose_intertwiner(const RunConfig& cfg);

CommandResult triple_verify(const RunConfig& cfg);
CommandResult graph_build(const RunConfig& cfg);
CommandResult graph_orient(const RunConfig& cfg);
CommandResult chars_table(const RunConfig& cfg, bool csv);
CommandResult chars_decompose(const RunConfig& cfg);
CommandResult intertwine_solve(const RunConfig& cfg);
CommandResult surface_build(const RunConfig& cfg);
CommandResult surface_export(const RunConfig& cfg);
CommandResult spectrum_compute(const RunConfig& cfg);
/// With two CSV paths compares the files; otherwise computes both surfaces.
CommandResult compare(const RunConfig& cfg, const std::vector<std::string>& files);
CommandResult transplant_verify(const RunConfig& cfg);
CommandResult pipeline(const RunConfig& cfg);

/// Parses `args` (without the program name) and runs one subcommand.
/// Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isospec::cli
