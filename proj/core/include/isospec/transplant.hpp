#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isospec/eigensolver.hpp"
#include "isospec/exact.hpp"
#include "isospec/surface.hpp"

namespace isospec {

/// A function on a surface stored through its tile view: one value array per
/// tile copy on the shared tile mesh nodes.
struct DiscreteFunction {
  const SurfaceMesh* mesh = nullptr;
  std::vector<std::vector<double>> tiles;

  static DiscreteFunction from_nodes(const SurfaceMesh& m, const std::vector<double>& node_values);
  /// Value at each global node, read from its first tile copy.
  std::vector<double> node_values() const;
};

/// [H_0 … H_{n-1}] = [F_0 … F_{n-1}] A, i.e. H_j = Σ_i A(i,j) F_i on every tile node.
DiscreteFunction transplant(const DiscreteFunction& f, const SurfaceMesh& target, const RationalMatrix& a);

struct EdgeResidual {
  int gluing = 0;
  int tile_a = 0;
  int tile_b = 0;
  std::string label;
  double mismatch = 0.0;
  int worst_pair = -1;  // index into the gluing's node pairs
};

/// Largest difference between the two tile-side traces on each glued edge.
std::vector<EdgeResidual> check_edge_compatibility(const DiscreteFunction& h);
double max_mismatch(const std::vector<EdgeResidual>& r);

/// Exact graph-mode check of the lifted transplantation T: M1 nodes -> M2 nodes.
struct ExactTransplantCheck {
  bool block_equivariant = false;  // A P1(g) = P2(g) A for every label
  bool consistent = false;         // every tile copy of a glued node gives the same row of T
  bool commutes = false;           // M2⁻¹K2 T = T M1⁻¹K1
  std::size_t nonzero_defect = 0;  // entries of M2⁻¹K2 T − T M1⁻¹K1 that are not zero
  double max_defect = 0.0;
};

ExactTransplantCheck exact_transplant_check(const SurfaceMesh& m1, const SurfaceMesh& m2, const RationalMatrix& a);

struct TransplantEntry {
  double lambda = 0.0;
  double residual = 0.0;
  double edge_mismatch = 0.0;
  double inverse_lambda = 0.0;
  double inverse_residual = 0.0;
  double inverse_edge_mismatch = 0.0;
  double round_trip_error = 0.0;
};

struct TransplantReport {
  std::string mode;
  int count = 0;
  std::vector<TransplantEntry> entries;
  double max_residual = 0.0;
  double max_inverse_residual = 0.0;
  double max_edge_mismatch = 0.0;
  double max_round_trip_error = 0.0;
};

/// Transplants the lowest `count` Neumann eigenfunctions of m1 with A and
/// those of m2 with A⁻¹, reporting eigen-residuals on the target surface and
/// edge mismatches of the transplanted tile views.
TransplantReport verify_transplantation(const SurfaceMesh& m1, const SurfaceMesh& m2, const RationalMatrix& a,
                                        int count, DiscretizationMode mode, const EigenOptions& options);

nlohmann::json to_json(const ExactTransplantCheck& c);
nlohmann::json to_json(const TransplantReport& r);

}  // namespace isospec
