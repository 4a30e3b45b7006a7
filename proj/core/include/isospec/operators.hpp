#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "isospec/exact.hpp"
#include "isospec/surface.hpp"

namespace isospec {

enum class DiscretizationMode { Fem, Graph };

std::string to_string(DiscretizationMode mode);
DiscretizationMode parse_mode(const std::string& s);

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Generalized eigenproblem K x = λ M x on the free (non-Dirichlet) nodes.
struct DiscreteOperatorPair {
  SparseMatrix K;
  SparseMatrix M;
  std::vector<int> dof_of_node;  // -1 for eliminated nodes
  std::vector<int> node_of_dof;
  DiscretizationMode mode = DiscretizationMode::Fem;

  int dof_count() const { return static_cast<int>(node_of_dof.size()); }
  Eigen::VectorXd restrict_to_dofs(const std::vector<double>& node_values) const;
  /// Zero on eliminated nodes.
  std::vector<double> extend_to_nodes(const Eigen::VectorXd& x) const;
};

/// fem: piecewise-linear stiffness and consistent mass per triangle in its
/// tile chart. graph: per tile copy, weight 1 on edges interior to the tile
/// and 1/2 on tile boundary edges, lumped mass (incident triangles)/6, so
/// glued edges weigh 1 and interior lattice nodes have unit mass.
/// Dirichlet nodes are removed by row and column elimination.
DiscreteOperatorPair assemble(const SurfaceMesh& m, const BCAssignment& bc, DiscretizationMode mode);

/// Combinatorial Laplacian D - A with identity mass.
DiscreteOperatorPair graph_laplacian(int vertex_count, const std::vector<std::pair<int, int>>& edges);

/// xᵀKx / xᵀMx; throws std::domain_error on a zero denominator.
double rayleigh_quotient(const DiscreteOperatorPair& op, const Eigen::VectorXd& x);

/// Sparse rational matrix stored by rows.
struct ExactSparse {
  int size = 0;
  std::vector<std::map<int, Rational>> rows;
};

/// Graph-mode Neumann operator in exact arithmetic: stiffness and lumped mass diagonal.
struct ExactGraphOperator {
  ExactSparse stiffness;
  std::vector<Rational> mass;
};

ExactGraphOperator assemble_graph_exact(const SurfaceMesh& m);

/// Coordinate text format, one "row col value" line per stored entry (0-based).
void write_coordinate(std::ostream& os, const SparseMatrix& a);

}  // namespace isospec
