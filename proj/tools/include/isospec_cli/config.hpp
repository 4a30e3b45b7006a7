#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isospec/finite_group.hpp"
#include "isospec/operators.hpp"
#include "isospec/surface.hpp"
#include "isospec/tile.hpp"

namespace isospec::cli {

/// Everything a subcommand needs. Flags fill it first; a `--config` file is
/// applied on top and wins.
struct RunConfig {
  std::string group = "gerst";
  std::string tile = "ytile";
  std::map<int, Point2> tile_points;
  /// "builtin" or "earclip".
  std::string coarse = "builtin";
  std::string subgroup = "gamma1";
  std::string h1 = "gamma1";
  std::string h2 = "gamma2";
  std::string gens = "sigma-t-u";
  std::vector<int> refine{8};
  /// Refinements of the Dirichlet stage of `pipeline`; empty means `refine`.
  std::vector<int> dirichlet_refine;
  std::string bc = "neumann";
  std::string mode = "fem";
  int count = 10;
  /// Eigenvalues compared by the Dirichlet stage of `pipeline`.
  int dirichlet_count = 3;
  double tol = 1e-9;
  double rel_tol = 1e-6;
  double transplant_tol = 1e-9;
  std::uint64_t seed = 20240601;
  std::string out;
  /// Transplantation parameters a, b, c, d.
  std::vector<std::int64_t> params{6, -2, 2, 2};
  /// Expected verdict per pipeline stage.
  std::map<std::string, std::string> expected;
};

/// Throws std::invalid_argument on tol <= 0, rel_tol < 0, count < 1,
/// non-ascending refinements or an unknown generator set or mode.
void validate(const RunConfig& cfg);

/// Applies `key = value` lines; `#` starts a comment. Unknown keys throw.
void apply_config_text(RunConfig& cfg, const std::string& text);
void apply_config_file(RunConfig& cfg, const std::string& path);

std::vector<int> parse_int_list(const std::string& s);

GeneratorSet parse_generator_set(const std::string& s);

/// gamma1, gamma2, cyclic8, trivial, whole, or `elements:<name>,<name>,...`
/// for the subgroup generated by the named elements.
Subgroup parse_subgroup(const FiniteGroup& g, const std::string& spec);

/// The built-in tile with overrides and the chosen coarse triangulation.
TileSpec make_tile(const RunConfig& cfg);

/// Coset action of the configured generators; cosets of Γ1 and Γ2 use the
/// transversal 1, s, ..., s^7.
CosetAction make_action(const FiniteGroup& g, const std::string& subgroup, const RunConfig& cfg);

/// `neumann`, `dirichlet`, `mirror` (Neumann on mirror arcs, Dirichlet
/// elsewhere) or `mixed:<file>`.
BCAssignment make_bc(const SurfaceMesh& m, const std::string& spec);

/// Mixed boundary file: `selector = neumann|dirichlet` per line, later lines
/// win. Selectors: `default`, `free`, `half`, `mirror`, `segment.<id>`, or a
/// tile id followed by a label such as `6T`.
BCAssignment parse_mixed_bc(const SurfaceMesh& m, const std::string& text);

}  // namespace isospec::cli
