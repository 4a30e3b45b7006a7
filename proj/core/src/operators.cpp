#include "isospec/operators.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace isospec {

namespace {

using Triplet = Eigen::Triplet<double>;

/// Tile-local graph weights: 2 = interior edge (weight 1), 1 = tile boundary edge (weight 1/2).
std::map<std::pair<int, int>, int> local_edge_halves(const TileMesh& tm) {
  std::map<std::pair<int, int>, int> halves;
  for (const auto& t : tm.triangles)
    for (int i = 0; i < 3; ++i) ++halves[{std::min(t[i], t[(i + 1) % 3]), std::max(t[i], t[(i + 1) % 3])}];
  return halves;
}

std::vector<int> local_triangle_counts(const TileMesh& tm) {
  std::vector<int> count(tm.node_count(), 0);
  for (const auto& t : tm.triangles)
    for (int v : t) ++count[v];
  return count;
}

}  // namespace

std::string to_string(DiscretizationMode mode) { return mode == DiscretizationMode::Fem ? "fem" : "graph"; }

DiscretizationMode parse_mode(const std::string& s) {
  if (s == "fem") return DiscretizationMode::Fem;
  if (s == "graph") return DiscretizationMode::Graph;
  throw std::invalid_argument("unknown mode: " + s);
}

Eigen::VectorXd DiscreteOperatorPair::restrict_to_dofs(const std::vector<double>& node_values) const {
  Eigen::VectorXd x(dof_count());
  for (int d = 0; d < dof_count(); ++d) x[d] = node_values.at(node_of_dof[d]);
  return x;
}

std::vector<double> DiscreteOperatorPair::extend_to_nodes(const Eigen::VectorXd& x) const {
  std::vector<double> v(dof_of_node.size(), 0.0);
  for (int d = 0; d < dof_count(); ++d) v[node_of_dof[d]] = x[d];
  return v;
}

DiscreteOperatorPair assemble(const SurfaceMesh& m, const BCAssignment& bc, DiscretizationMode mode) {
  if (bc.per_segment.size() != m.boundary.size())
    throw std::invalid_argument("assemble: boundary condition assignment does not cover every segment");
  const auto& tm = *m.tile;
  std::vector<Triplet> kt, mt;

  if (mode == DiscretizationMode::Fem) {
    kt.reserve(9 * tm.triangles.size() * m.tile_count);
    mt.reserve(9 * tm.triangles.size() * m.tile_count);
    for (const auto& tri : tm.triangles) {
      const Point2 p[3] = {tm.nodes[tri[0]], tm.nodes[tri[1]], tm.nodes[tri[2]]};
      const double area = std::abs(triangle_area(p[0], p[1], p[2]));
      double b[3], c[3];
      for (int i = 0; i < 3; ++i) {
        b[i] = p[(i + 1) % 3].y - p[(i + 2) % 3].y;
        c[i] = p[(i + 2) % 3].x - p[(i + 1) % 3].x;
      }
      for (int t = 0; t < m.tile_count; ++t) {
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) {
            const int gi = m.local_to_global[t][tri[i]], gj = m.local_to_global[t][tri[j]];
            kt.emplace_back(gi, gj, (b[i] * b[j] + c[i] * c[j]) / (4 * area));
            mt.emplace_back(gi, gj, area / 12 * (i == j ? 2 : 1));
          }
        }
      }
    }
  } else {
    const auto halves = local_edge_halves(tm);
    const auto count = local_triangle_counts(tm);
    for (int t = 0; t < m.tile_count; ++t) {
      for (const auto& [e, h] : halves) {
        const int a = m.local_to_global[t][e.first], b = m.local_to_global[t][e.second];
        const double w = h / 2.0;
        kt.emplace_back(a, a, w);
        kt.emplace_back(b, b, w);
        kt.emplace_back(a, b, -w);
        kt.emplace_back(b, a, -w);
      }
      for (int v = 0; v < tm.node_count(); ++v) mt.emplace_back(m.local_to_global[t][v], m.local_to_global[t][v], count[v] / 6.0);
    }
  }

  DiscreteOperatorPair op;
  op.mode = mode;
  std::vector<bool> dirichlet(m.node_count, false);
  for (std::size_t s = 0; s < m.boundary.size(); ++s) {
    if (bc.per_segment[s] != BoundaryCondition::Dirichlet) continue;
    for (const auto& [a, b] : m.boundary[s].edges) dirichlet[a] = dirichlet[b] = true;
  }
  op.dof_of_node.assign(m.node_count, -1);
  for (int v = 0; v < m.node_count; ++v) {
    if (dirichlet[v]) continue;
    op.dof_of_node[v] = op.dof_count();
    op.node_of_dof.push_back(v);
  }
  if (op.dof_count() == 0) throw std::invalid_argument("assemble: every node is constrained");
  auto eliminate = [&](std::vector<Triplet>& trips) {
    std::vector<Triplet> kept;
    kept.reserve(trips.size());
    for (const auto& tr : trips) {
      const int r = op.dof_of_node[tr.row()], c = op.dof_of_node[tr.col()];
      if (r >= 0 && c >= 0) kept.emplace_back(r, c, tr.value());
    }
    SparseMatrix a(op.dof_count(), op.dof_count());
    a.setFromTriplets(kept.begin(), kept.end());
    return a;
  };
  op.K = eliminate(kt);
  op.M = eliminate(mt);
  return op;
}

DiscreteOperatorPair graph_laplacian(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count <= 0) throw std::invalid_argument("graph_laplacian: empty graph");
  std::vector<Triplet> kt, mt;
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count || a == b)
      throw std::invalid_argument("graph_laplacian: bad edge");
    kt.emplace_back(a, a, 1.0);
    kt.emplace_back(b, b, 1.0);
    kt.emplace_back(a, b, -1.0);
    kt.emplace_back(b, a, -1.0);
  }
  for (int v = 0; v < vertex_count; ++v) mt.emplace_back(v, v, 1.0);
  DiscreteOperatorPair op;
  op.mode = DiscretizationMode::Graph;
  op.K.resize(vertex_count, vertex_count);
  op.M.resize(vertex_count, vertex_count);
  op.K.setFromTriplets(kt.begin(), kt.end());
  op.M.setFromTriplets(mt.begin(), mt.end());
  for (int v = 0; v < vertex_count; ++v) {
    op.dof_of_node.push_back(v);
    op.node_of_dof.push_back(v);
  }
  return op;
}

double rayleigh_quotient(const DiscreteOperatorPair& op, const Eigen::VectorXd& x) {
  if (x.size() != op.dof_count()) throw std::invalid_argument("rayleigh_quotient: vector length mismatch");
  const double den = x.dot(op.M * x);
  if (!(den > 0)) throw std::domain_error("rayleigh_quotient: zero vector");
  return x.dot(op.K * x) / den;
}

ExactGraphOperator assemble_graph_exact(const SurfaceMesh& m) {
  const auto& tm = *m.tile;
  const auto halves = local_edge_halves(tm);
  const auto count = local_triangle_counts(tm);
  ExactGraphOperator op;
  op.stiffness.size = m.node_count;
  op.stiffness.rows.resize(m.node_count);
  op.mass.assign(m.node_count, Rational(0));
  auto& rows = op.stiffness.rows;
  for (int t = 0; t < m.tile_count; ++t) {
    for (const auto& [e, h] : halves) {
      const int a = m.local_to_global[t][e.first], b = m.local_to_global[t][e.second];
      const Rational w(h, 2);
      rows[a][a] += w;
      rows[b][b] += w;
      rows[a][b] -= w;
      rows[b][a] -= w;
    }
    for (int v = 0; v < tm.node_count(); ++v) op.mass[m.local_to_global[t][v]] += Rational(count[v], 6);
  }
  for (auto& row : rows)
    for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
  return op;
}

void write_coordinate(std::ostream& os, const SparseMatrix& a) {
  os << std::setprecision(17);
  for (int k = 0; k < a.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(a, k); it; ++it) os << it.row() << " " << it.col() << " " << it.value() << "\n";
}

}  // namespace isospec
