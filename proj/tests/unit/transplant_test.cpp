#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "isospec/rep_theory.hpp"
#include "isospec/transplant.hpp"

using namespace isospec;

namespace {

SurfaceMesh gerst_surface(const std::string& tile, bool second, int k) {
  const FiniteGroup g = build_gerst_group();
  const auto gens = gerst_generators(g, GeneratorSet::SigmaTU);
  const auto h = second ? gerst_gamma2(g) : gerst_gamma1(g);
  return assemble_surface(build_schreier(coset_action(g, h, gens.elements, gens.labels, gerst_coset_reps())),
                          mesh_tile(builtin_tile(tile), k), second ? "M2" : "M1");
}

RationalMatrix default_a() { return transplantation_matrix(6, -2, 2, 2).entries; }

DiscreteFunction random_tiles(const SurfaceMesh& m, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(-1, 1);
  DiscreteFunction f{&m, {}};
  for (int t = 0; t < m.tile_count; ++t) {
    std::vector<double> v(m.tile->node_count());
    for (auto& x : v) x = d(rng);
    f.tiles.push_back(v);
  }
  return f;
}

EigenOptions opts(int count) {
  EigenOptions o;
  o.count = count;
  return o;
}

}  // namespace

TEST(Transplant, DefaultMatrixColumnZero) {
  const auto m1 = gerst_surface("hexagon3", false, 2);
  const auto m2 = gerst_surface("hexagon3", true, 2);
  const auto f = random_tiles(m1, 1);
  const auto h = transplant(f, m2, default_a());
  for (int n = 0; n < m1.tile->node_count(); ++n) {
    const auto& F = f.tiles;
    EXPECT_NEAR(h.tiles[0][n], F[0][n] + 2 * F[1][n] + F[4][n] + 2 * F[7][n], 1e-14);
    EXPECT_NEAR(h.tiles[4][n], F[0][n] + 2 * F[3][n] + F[4][n] + 2 * F[5][n], 1e-14);
  }
}

TEST(Transplant, ConstantsMapToConstants) {
  const auto m1 = gerst_surface("hexagon3", false, 2);
  const auto m2 = gerst_surface("hexagon3", true, 2);
  const auto f = DiscreteFunction::from_nodes(m1, std::vector<double>(m1.node_count, 1.0));
  const auto h = transplant(f, m2, default_a());
  for (const auto& tile : h.tiles)
    for (double v : tile) EXPECT_DOUBLE_EQ(v, 6.0);  // every column of A sums to 2(α+β+γ+δ)
  EXPECT_EQ(max_mismatch(check_edge_compatibility(h)), 0.0);
}

TEST(Transplant, NodeValuesRoundTrip) {
  const auto m = gerst_surface("ytile", true, 3);
  std::vector<double> v(m.node_count);
  for (int i = 0; i < m.node_count; ++i) v[i] = std::sin(0.37 * i);
  EXPECT_EQ(DiscreteFunction::from_nodes(m, v).node_values(), v);
}

TEST(EdgeCompatibility, CorruptedNodeIsReportedOnItsEdge) {
  const auto m = gerst_surface("hexagon3", true, 4);
  auto f = DiscreteFunction::from_nodes(m, std::vector<double>(m.node_count, 0.5));
  const auto& g = m.gluings.front();
  const auto [local_a, local_b] = g.node_pairs[g.node_pairs.size() / 2];
  const double eps = 3e-7;
  f.tiles[g.tile_a][local_a] += eps;
  const auto r = check_edge_compatibility(f);
  EXPECT_NEAR(r.front().mismatch, eps, 1e-15);
  for (std::size_t i = 1; i < r.size(); ++i) EXPECT_EQ(r[i].mismatch, 0.0);
}

TEST(EdgeCompatibility, TransplantedEigenfunctionFitsAcrossUEdge) {
  const auto m1 = gerst_surface("ytile", false, 4);
  const auto m2 = gerst_surface("ytile", true, 4);
  const auto op = assemble(m1, BCAssignment::uniform(m1, BoundaryCondition::Neumann), DiscretizationMode::Graph);
  const auto eig = lowest_eigenpairs(op, opts(3));
  const auto f = DiscreteFunction::from_nodes(m1, op.extend_to_nodes(eig.vectors.col(2)));
  const auto r = check_edge_compatibility(transplant(f, m2, default_a()));
  bool found = false;
  for (const auto& e : r) {
    if (e.label != "U") continue;
    if (!((e.tile_a == 0 && e.tile_b == 4) || (e.tile_a == 4 && e.tile_b == 0))) continue;
    found = true;
    EXPECT_LE(e.mismatch, 1e-12);
  }
  EXPECT_TRUE(found);
  EXPECT_LE(max_mismatch(r), 1e-12);
}

TEST(ExactCheck, GraphModeTransplantationCommutes) {
  const auto c = exact_transplant_check(gerst_surface("ytile", false, 3), gerst_surface("ytile", true, 3), default_a());
  EXPECT_TRUE(c.block_equivariant);
  EXPECT_TRUE(c.consistent);
  EXPECT_TRUE(c.commutes);
  EXPECT_EQ(c.nonzero_defect, 0u);
}

TEST(ExactCheck, NonIntertwinerFails) {
  const auto c = exact_transplant_check(gerst_surface("ytile", false, 2), gerst_surface("ytile", true, 2),
                                        RationalMatrix::identity(8));
  EXPECT_FALSE(c.block_equivariant);
  EXPECT_FALSE(c.commutes);
}

TEST(Verify, GraphModeResidualsAreAtRoundoff) {
  const auto m1 = gerst_surface("ytile", false, 4);
  const auto m2 = gerst_surface("ytile", true, 4);
  const auto r = verify_transplantation(m1, m2, default_a(), 20, DiscretizationMode::Graph, opts(20));
  ASSERT_EQ(r.entries.size(), 20u);
  EXPECT_LE(r.max_residual, 1e-9);
  EXPECT_LE(r.max_inverse_residual, 1e-9);
  EXPECT_LE(r.max_edge_mismatch, 1e-12);
}

TEST(Verify, ConstantModeTransplantsToConstant) {
  const auto m1 = gerst_surface("hexagon3", false, 3);
  const auto m2 = gerst_surface("hexagon3", true, 3);
  const auto r = verify_transplantation(m1, m2, default_a(), 1, DiscretizationMode::Graph, opts(1));
  EXPECT_NEAR(r.entries[0].lambda, 0.0, 1e-10);
  EXPECT_LE(r.entries[0].residual, 1e-10);
}

TEST(Verify, FemResidualsStayBelowDiscretisationScale) {
  double prev_gap = 1e300;
  for (int k : {2, 4, 8}) {
    const auto m1 = gerst_surface("ytile", false, k);
    const auto m2 = gerst_surface("ytile", true, k);
    const auto r = verify_transplantation(m1, m2, default_a(), 6, DiscretizationMode::Fem, opts(6));
    EXPECT_LE(r.max_residual, 1e-8) << k;
    EXPECT_LE(r.max_edge_mismatch, 1e-12) << k;
    const double gap = std::abs(r.entries[5].lambda - r.entries[5].inverse_lambda);
    EXPECT_LE(gap, std::max(prev_gap, 1e-9));
    prev_gap = gap;
  }
}
