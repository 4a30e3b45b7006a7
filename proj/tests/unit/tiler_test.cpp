#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "isospec/surface.hpp"
#include "isospec/tile.hpp"

using namespace isospec;

namespace {

const FiniteGroup& gerst() {
  static const FiniteGroup g = build_gerst_group();
  return g;
}

SchreierGraph graph(const Subgroup& h, GeneratorSet set) {
  const auto gens = gerst_generators(gerst(), set);
  return build_schreier(coset_action(gerst(), h, gens.elements, gens.labels, gerst_coset_reps()));
}

SurfaceMesh surface(const std::string& tile, const Subgroup& h, GeneratorSet set, int k) {
  return assemble_surface(graph(h, set), mesh_tile(builtin_tile(tile), k));
}

int count_origin(const SurfaceMesh& m, BoundaryOrigin o) {
  return static_cast<int>(std::count_if(m.boundary.begin(), m.boundary.end(),
                                        [&](const BoundarySegment& b) { return b.origin == o; }));
}

// Unit square with glue labels on the bottom and right edges.
TileSpec corner_square() {
  TileSpec t = builtin_tile("square");
  t.name = "corner_square";
  t.labels = {"A", "B"};
  t.segments = {{SegmentKind::Glue, 0}, {SegmentKind::Glue, 1}, {SegmentKind::Free, -1}, {SegmentKind::Free, -1}};
  validate(t);
  return t;
}

bool same_point_set(std::vector<Point2> a, std::vector<Point2> b, double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a) {
    auto it = std::find_if(b.begin(), b.end(),
                           [&](const Point2& q) { return std::hypot(p.x - q.x, p.y - q.y) < tol; });
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

}  // namespace

TEST(Tiles, HexagonHasSixSegmentsAndEachLabelOnce) {
  const auto t = builtin_tile("hexagon3");
  EXPECT_EQ(t.segments.size(), 6u);
  std::multiset<int> labels;
  for (const auto& s : t.segments)
    if (s.kind == SegmentKind::Glue) labels.insert(s.label);
  EXPECT_EQ(labels, (std::multiset<int>{0, 1, 2}));
}

TEST(Tiles, YtileHasAnOrderTwoIsometry) {
  const auto t = builtin_tile("ytile");
  ASSERT_FALSE(t.symmetries.empty());
  const auto& sym = t.symmetries.front();
  EXPECT_TRUE(is_symmetry(t, sym));
  EXPECT_NEAR(std::abs(sym.map.det()), 1.0, 1e-12);
  for (int i = 0; i < t.polygon_size; ++i) {
    const Point2 p = t.points[i];
    const Point2 q = sym.map(sym.map(p));
    EXPECT_NEAR(p.x, q.x, 1e-12);
    EXPECT_NEAR(p.y, q.y, 1e-12);
  }
}

TEST(Tiles, TriangleHasNoFreeSegments) {
  const auto t = builtin_tile("triangle");
  for (const auto& s : t.segments) EXPECT_EQ(s.kind, SegmentKind::Glue);
}

TEST(Tiles, AllBuiltinsValidate) {
  for (const auto& n : builtin_tile_names()) {
    EXPECT_NO_THROW(validate(builtin_tile(n))) << n;
    EXPECT_NO_THROW(validate(with_ear_clipping(builtin_tile(n)))) << n;
  }
  EXPECT_THROW(builtin_tile("nonagon"), std::invalid_argument);
}

TEST(Tiles, ValidateRejectsClockwisePolygon) {
  auto t = builtin_tile("square");
  std::reverse(t.points.begin(), t.points.end());
  t.coarse.clear();
  EXPECT_THROW(validate(t), std::invalid_argument);
}

TEST(Tiles, ValidateRejectsRepeatedLabel) {
  auto t = builtin_tile("triangle");
  t.segments[2].label = 0;
  EXPECT_THROW(validate(t), std::invalid_argument);
}

TEST(Tiles, PointOverrideMovesVertex) {
  const auto t = with_points(builtin_tile("hexagon3"), {{6, {2.1, 1.9}}});
  EXPECT_DOUBLE_EQ(t.points[6].x, 2.1);
  EXPECT_THROW(with_points(builtin_tile("square"), {{2, {-5, -5}}}), std::invalid_argument);
}

TEST(EarClip, TilesTheLPolygon) {
  const auto t = builtin_tile("ltile");
  const std::vector<Point2> poly(t.points.begin(), t.points.begin() + t.polygon_size);
  const auto tris = ear_clip(poly);
  EXPECT_EQ(tris.size(), poly.size() - 2);
  double area = 0;
  for (const auto& tr : tris) {
    const double a = triangle_area(poly[tr[0]], poly[tr[1]], poly[tr[2]]);
    EXPECT_GT(a, 0);
    area += a;
  }
  EXPECT_NEAR(area, t.area(), 1e-12);
}

TEST(EarClip, NoDegenerateTrianglesWithCollinearVertices) {
  // Three collinear vertices on the bottom edge.
  const std::vector<Point2> poly = {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}};
  for (const auto& tr : ear_clip(poly)) EXPECT_GT(triangle_area(poly[tr[0]], poly[tr[1]], poly[tr[2]]), 1e-6);
}

TEST(Mesh, TriangleAtRefinementOne) {
  const auto m = mesh_tile(builtin_tile("triangle"), 1);
  EXPECT_EQ(m.node_count(), 3);
  EXPECT_EQ(m.triangles.size(), 1u);
}

TEST(Mesh, TriangleNodeCountFormula) {
  for (int k : {2, 3, 5, 8}) EXPECT_EQ(mesh_tile(builtin_tile("triangle"), k).node_count(), (k + 1) * (k + 2) / 2) << k;
}

TEST(Mesh, TriangleCountAndAreaArePreserved) {
  const auto spec = builtin_tile("ytile");
  const int k = 5;
  const auto m = mesh_tile(spec, k);
  EXPECT_EQ(m.triangles.size(), spec.coarse.size() * k * k);
  double area = 0;
  for (const auto& t : m.triangles) area += triangle_area(m.nodes[t[0]], m.nodes[t[1]], m.nodes[t[2]]);
  EXPECT_NEAR(area, spec.area(), 1e-12);
}

TEST(Mesh, GlueSegmentsCarryEqualNodeCounts) {
  const auto spec = builtin_tile("hexagon3");
  const auto m = mesh_tile(spec, 4);
  std::set<std::size_t> counts;
  for (int l = 0; l < 3; ++l) counts.insert(m.segment_nodes[spec.glue_segment(l)].size());
  EXPECT_EQ(counts, (std::set<std::size_t>{5}));
}

TEST(Mesh, SymmetryMapsNodesOntoNodes) {
  const auto spec = builtin_tile("ytile");
  const auto m = mesh_tile(spec, 4);
  std::vector<Point2> image;
  for (const auto& p : m.nodes) image.push_back(spec.symmetries[0].map(p));
  EXPECT_TRUE(same_point_set(m.nodes, image));
}

TEST(Surface, GammaOneHexagonBoundary) {
  const auto m = surface("hexagon3", gerst_gamma1(gerst()), GeneratorSet::SigmaTU, 2);
  EXPECT_EQ(m.tile_count, 8);
  EXPECT_EQ(count_origin(m, BoundaryOrigin::FreeArc), 24);
  std::set<std::pair<int, std::string>> halves;
  for (const auto& b : m.boundary)
    if (b.origin == BoundaryOrigin::HalfEdge) halves.insert({m.tile_ids[b.tile], m.tile->spec.labels[b.label]});
  EXPECT_EQ(halves, (std::set<std::pair<int, std::string>>{{0, "T"}, {4, "T"}, {0, "U"}, {4, "U"}}));
}

TEST(Surface, GluedNodesAreShared) {
  const auto m = surface("hexagon3", gerst_gamma2(gerst()), GeneratorSet::SigmaTU, 3);
  for (const auto& g : m.gluings)
    for (const auto& [a, b] : g.node_pairs) EXPECT_EQ(m.global(g.tile_a, a), m.global(g.tile_b, b));
  EXPECT_NEAR(m.area(), 8 * m.tile->spec.area(), 1e-12);
}

TEST(Surface, TriangleGammaTwoIsAnAnnulus) {
  const auto topo = topology(surface("triangle", gerst_gamma2(gerst()), GeneratorSet::StTTu, 3));
  EXPECT_EQ(topo.euler_characteristic, 0);
  EXPECT_EQ(topo.boundary_components, 2);
}

TEST(Surface, SingleVertexWithThreeHalfEdgesIsTheTile) {
  const SchreierGraph g(1, {"Σ", "T", "U"}, {}, {{0, 0}, {0, 1}, {0, 2}});
  const auto m = assemble_surface(g, mesh_tile(builtin_tile("hexagon3"), 2));
  EXPECT_EQ(m.tile_count, 1);
  EXPECT_EQ(m.boundary.size(), 6u);
  EXPECT_EQ(m.node_count, m.tile->node_count());
  const auto topo = topology(m);
  EXPECT_EQ(topo.euler_characteristic, 1);
  EXPECT_EQ(topo.boundary_components, 1);
}

TEST(ConePoints, StTTuTriangleSurfaces) {
  EXPECT_TRUE(cone_points(surface("triangle", gerst_gamma1(gerst()), GeneratorSet::StTTu, 2)).empty());
  EXPECT_EQ(cone_points(surface("triangle", gerst_gamma2(gerst()), GeneratorSet::StTTu, 2)).size(), 1u);
}

TEST(ConePoints, SigmaTUTriangleSurfaces) {
  EXPECT_EQ(cone_points(surface("triangle", gerst_gamma1(gerst()), GeneratorSet::SigmaTU, 2)).size(), 1u);
  EXPECT_EQ(cone_points(surface("triangle", gerst_gamma2(gerst()), GeneratorSet::SigmaTU, 2)).size(), 2u);
}

TEST(ConePoints, FourSquaresAroundACornerAreFlat) {
  const SchreierGraph g(4, {"A", "B"}, {{0, 1, 0}, {2, 3, 0}, {0, 2, 1}, {1, 3, 1}}, {});
  const auto m = assemble_surface(g, mesh_tile(corner_square(), 3));
  EXPECT_TRUE(cone_points(m).empty());
  const auto topo = topology(m);
  EXPECT_EQ(topo.euler_characteristic, 1);
  EXPECT_EQ(topo.boundary_components, 1);
}

TEST(ConePoints, AngleIsReported) {
  const auto cones = cone_points(surface("triangle", gerst_gamma2(gerst()), GeneratorSet::StTTu, 1));
  ASSERT_EQ(cones.size(), 1u);
  EXPECT_GT(std::abs(cones[0].angle - 2 * std::numbers::pi), 1e-6);
}

TEST(Quotient, GammaOneMirrors) {
  std::vector<int> perm(8);
  for (int i = 0; i < 8; ++i) perm[i] = (i + 4) % 8;
  const auto q = quotient_by_involution(surface("ytile", gerst_gamma1(gerst()), GeneratorSet::SigmaTU, 2), perm);
  std::set<std::pair<int, std::string>> got(q.mirror_edges.begin(), q.mirror_edges.end());
  EXPECT_EQ(got, (std::set<std::pair<int, std::string>>{{6, "T"}, {6, "U"}}));
  EXPECT_EQ(q.mesh.tile_count, 4);
}

TEST(Quotient, GammaTwoMirrors) {
  std::vector<int> perm(8);
  for (int i = 0; i < 8; ++i) perm[i] = (i + 4) % 8;
  const auto q = quotient_by_involution(surface("ytile", gerst_gamma2(gerst()), GeneratorSet::SigmaTU, 2), perm);
  std::set<std::pair<int, std::string>> got(q.mirror_edges.begin(), q.mirror_edges.end());
  EXPECT_EQ(got, (std::set<std::pair<int, std::string>>{{6, "T"}, {4, "U"}}));
  for (std::size_t i = 0; i < q.mesh.boundary.size(); ++i)
    EXPECT_EQ(q.bc.per_segment[i] == BoundaryCondition::Neumann, q.mesh.boundary[i].origin == BoundaryOrigin::Mirror);
}

TEST(Quotient, NoFixedEdgesMeansAllDirichlet) {
  const SchreierGraph g(4, {"Σ", "T", "U"}, {{0, 1, 0}, {2, 3, 0}},
                        {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {0, 2}, {1, 2}, {2, 2}, {3, 2}});
  const auto q = quotient_by_involution(assemble_surface(g, mesh_tile(builtin_tile("hexagon3"), 1)), {2, 3, 0, 1});
  EXPECT_TRUE(q.mirror_edges.empty());
  for (auto bc : q.bc.per_segment) EXPECT_EQ(bc, BoundaryCondition::Dirichlet);
}

TEST(Quotient, RejectsNonAutomorphism) {
  const auto m = surface("ytile", gerst_gamma1(gerst()), GeneratorSet::SigmaTU, 1);
  EXPECT_THROW(quotient_by_involution(m, {1, 0, 2, 3, 4, 5, 6, 7}), std::invalid_argument);
}

TEST(Fefferman, SymmetriesAreaAndNonCongruence) {
  const auto l = builtin_tile("ltile");
  const auto pair = fefferman_domains(l, 2);
  EXPECT_NEAR(pair.s.area(), 2 * l.area(), 1e-12);
  EXPECT_NEAR(pair.c.area(), 2 * l.area(), 1e-12);

  // E is the bottom edge from (0,0) to (3,0).
  const auto c = planar_outline(pair.c);
  std::vector<Point2> c_reflected;
  for (const auto& p : c) c_reflected.push_back({p.x, -p.y});
  EXPECT_TRUE(same_point_set(c, c_reflected));

  const auto s = planar_outline(pair.s);
  std::vector<Point2> s_rotated;
  for (const auto& p : s) s_rotated.push_back({3.0 - p.x, -p.y});
  EXPECT_TRUE(same_point_set(s, s_rotated));

  EXPECT_FALSE(congruent_polygons(s, c));
  EXPECT_TRUE(congruent_polygons(s, s_rotated));
  std::reverse(c_reflected.begin(), c_reflected.end());
  EXPECT_TRUE(congruent_polygons(c, c_reflected));
}

TEST(Fefferman, RequiresOneGlueSegment) {
  EXPECT_THROW(fefferman_domains(builtin_tile("hexagon3"), 1), std::invalid_argument);
}
