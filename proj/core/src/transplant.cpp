#include "isospec/transplant.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "isospec/operators.hpp"

namespace isospec {

DiscreteFunction DiscreteFunction::from_nodes(const SurfaceMesh& m, const std::vector<double>& values) {
  if (static_cast<int>(values.size()) != m.node_count)
    throw std::invalid_argument("DiscreteFunction: one value per global node required");
  DiscreteFunction f;
  f.mesh = &m;
  f.tiles.assign(m.tile_count, std::vector<double>(m.tile->node_count()));
  for (int t = 0; t < m.tile_count; ++t)
    for (int v = 0; v < m.tile->node_count(); ++v) f.tiles[t][v] = values[m.local_to_global[t][v]];
  return f;
}

std::vector<double> DiscreteFunction::node_values() const {
  std::vector<double> out(mesh->node_count);
  for (const auto& [t, v] : mesh->representatives()) out[mesh->local_to_global[t][v]] = tiles[t][v];
  return out;
}

DiscreteFunction transplant(const DiscreteFunction& f, const SurfaceMesh& target, const RationalMatrix& a) {
  const int n = static_cast<int>(f.tiles.size());
  if (static_cast<int>(a.rows()) != n || static_cast<int>(a.cols()) != target.tile_count)
    throw std::invalid_argument("transplant: matrix size does not match the tile counts");
  if (f.mesh->tile->node_count() != target.tile->node_count())
    throw std::invalid_argument("transplant: surfaces are built from different tile meshes");
  DiscreteFunction h;
  h.mesh = &target;
  const int nodes = target.tile->node_count();
  h.tiles.assign(target.tile_count, std::vector<double>(nodes, 0.0));
  for (int j = 0; j < target.tile_count; ++j) {
    for (int i = 0; i < n; ++i) {
      const double c = to_double(a(i, j));
      if (c == 0) continue;
      for (int v = 0; v < nodes; ++v) h.tiles[j][v] += c * f.tiles[i][v];
    }
  }
  return h;
}

std::vector<EdgeResidual> check_edge_compatibility(const DiscreteFunction& h) {
  const auto& m = *h.mesh;
  std::vector<EdgeResidual> out;
  for (std::size_t g = 0; g < m.gluings.size(); ++g) {
    const auto& gl = m.gluings[g];
    EdgeResidual r;
    r.gluing = static_cast<int>(g);
    r.tile_a = m.tile_ids[gl.tile_a];
    r.tile_b = m.tile_ids[gl.tile_b];
    r.label = gl.label >= 0 ? m.tile->spec.labels[gl.label] : "";
    for (std::size_t p = 0; p < gl.node_pairs.size(); ++p) {
      const double d = std::abs(h.tiles[gl.tile_a][gl.node_pairs[p].first] - h.tiles[gl.tile_b][gl.node_pairs[p].second]);
      if (r.worst_pair < 0 || d > r.mismatch) {
        r.mismatch = d;
        r.worst_pair = static_cast<int>(p);
      }
    }
    out.push_back(r);
  }
  return out;
}

double max_mismatch(const std::vector<EdgeResidual>& r) {
  double m = 0;
  for (const auto& e : r) m = std::max(m, e.mismatch);
  return m;
}

namespace {

using Row = std::map<int, Rational>;

void axpy(Row& y, const Rational& c, const Row& x) {
  if (c == 0) return;
  for (const auto& [k, v] : x) {
    auto& slot = y[k];
    slot += c * v;
  }
}

void prune(Row& r) {
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
}

}  // namespace

ExactTransplantCheck exact_transplant_check(const SurfaceMesh& m1, const SurfaceMesh& m2, const RationalMatrix& a) {
  ExactTransplantCheck c;
  const int n1 = m1.tile_count, n2 = m2.tile_count;
  if (static_cast<int>(a.rows()) != n1 || static_cast<int>(a.cols()) != n2)
    throw std::invalid_argument("exact_transplant_check: matrix size does not match the tile counts");
  if (m1.tile->node_count() != m2.tile->node_count())
    throw std::invalid_argument("exact_transplant_check: surfaces are built from different tile meshes");

  // Column convention H = F A means tile j of M2 reads column j of A; a
  // generator g permutes tiles, so equivariance is A P1(g) = P2(g) A.
  c.block_equivariant = true;
  if (m1.graph && m2.graph) {
    for (int l = 0; l < m1.graph->label_count(); ++l) {
      RationalMatrix p1(n1, n1), p2(n2, n2);
      for (int x = 0; x < n1; ++x) p1(m1.graph->partner(x, l), x) = 1;
      for (int x = 0; x < n2; ++x) p2(m2.graph->partner(x, l), x) = 1;
      if (!(transpose(a) * p1 == p2 * transpose(a))) c.block_equivariant = false;
    }
  } else {
    c.block_equivariant = false;
  }

  // Row of T for each M2 node, checked on every tile copy of the node.
  const int nodes = m1.tile->node_count();
  std::vector<Row> t(m2.node_count);
  std::vector<bool> seen(m2.node_count, false);
  c.consistent = true;
  for (int j = 0; j < n2; ++j) {
    for (int v = 0; v < nodes; ++v) {
      Row row;
      for (int i = 0; i < n1; ++i)
        if (a(i, j) != 0) row[m1.local_to_global[i][v]] += a(i, j);
      prune(row);
      const int q = m2.local_to_global[j][v];
      if (!seen[q]) {
        t[q] = std::move(row);
        seen[q] = true;
      } else if (t[q] != row) {
        c.consistent = false;
      }
    }
  }

  const auto op1 = assemble_graph_exact(m1);
  const auto op2 = assemble_graph_exact(m2);
  for (int q = 0; q < m2.node_count; ++q) {
    Row lhs;  // (M2⁻¹ K2 T)[q]
    for (const auto& [r, k] : op2.stiffness.rows[q]) axpy(lhs, k / op2.mass[q], t[r]);
    Row rhs;  // (T M1⁻¹ K1)[q]
    for (const auto& [p, w] : t[q]) axpy(rhs, w / op1.mass[p], op1.stiffness.rows[p]);
    Row diff = lhs;
    axpy(diff, Rational(-1), rhs);
    prune(diff);
    c.nonzero_defect += diff.size();
    for (const auto& [k, v] : diff) c.max_defect = std::max(c.max_defect, std::abs(to_double(v)));
  }
  c.commutes = c.nonzero_defect == 0;
  return c;
}

TransplantReport verify_transplantation(const SurfaceMesh& m1, const SurfaceMesh& m2, const RationalMatrix& a,
                                        int count, DiscretizationMode mode, const EigenOptions& options) {
  const RationalMatrix a_inv = inverse(a);
  const auto op1 = assemble(m1, BCAssignment::uniform(m1, BoundaryCondition::Neumann), mode);
  const auto op2 = assemble(m2, BCAssignment::uniform(m2, BoundaryCondition::Neumann), mode);
  EigenOptions opt = options;
  opt.count = count;
  const auto e1 = lowest_eigenpairs(op1, opt);
  const auto e2 = lowest_eigenpairs(op2, opt);

  TransplantReport rep;
  rep.mode = to_string(mode);
  rep.count = count;
  for (int k = 0; k < count; ++k) {
    TransplantEntry e;
    e.lambda = e1.report.eigenvalues[k];
    const auto f = DiscreteFunction::from_nodes(m1, op1.extend_to_nodes(e1.vectors.col(k)));
    const auto h = transplant(f, m2, a);
    e.edge_mismatch = max_mismatch(check_edge_compatibility(h));
    e.residual = residual_norm(op2, e.lambda, op2.restrict_to_dofs(h.node_values()));
    const auto back = transplant(h, m1, a_inv);
    for (int t = 0; t < m1.tile_count; ++t)
      for (std::size_t v = 0; v < back.tiles[t].size(); ++v)
        e.round_trip_error = std::max(e.round_trip_error, std::abs(back.tiles[t][v] - f.tiles[t][v]));

    e.inverse_lambda = e2.report.eigenvalues[k];
    const auto g = DiscreteFunction::from_nodes(m2, op2.extend_to_nodes(e2.vectors.col(k)));
    const auto g1 = transplant(g, m1, a_inv);
    e.inverse_edge_mismatch = max_mismatch(check_edge_compatibility(g1));
    e.inverse_residual = residual_norm(op1, e.inverse_lambda, op1.restrict_to_dofs(g1.node_values()));

    rep.max_residual = std::max(rep.max_residual, e.residual);
    rep.max_inverse_residual = std::max(rep.max_inverse_residual, e.inverse_residual);
    rep.max_edge_mismatch = std::max({rep.max_edge_mismatch, e.edge_mismatch, e.inverse_edge_mismatch});
    rep.max_round_trip_error = std::max(rep.max_round_trip_error, e.round_trip_error);
    rep.entries.push_back(e);
  }
  return rep;
}

nlohmann::json to_json(const ExactTransplantCheck& c) {
  return {{"block_equivariant", c.block_equivariant},
          {"consistent", c.consistent},
          {"commutes", c.commutes},
          {"nonzero_defect", c.nonzero_defect},
          {"max_defect", c.max_defect}};
}

nlohmann::json to_json(const TransplantReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"lambda", e.lambda},
                       {"residual", e.residual},
                       {"edge_mismatch", e.edge_mismatch},
                       {"inverse_lambda", e.inverse_lambda},
                       {"inverse_residual", e.inverse_residual},
                       {"inverse_edge_mismatch", e.inverse_edge_mismatch},
                       {"round_trip_error", e.round_trip_error}});
  }
  return {{"mode", r.mode},
          {"count", r.count},
          {"max_residual", r.max_residual},
          {"max_inverse_residual", r.max_inverse_residual},
          {"max_edge_mismatch", r.max_edge_mismatch},
          {"max_round_trip_error", r.max_round_trip_error},
          {"entries", entries}};
}

}  // namespace isospec
