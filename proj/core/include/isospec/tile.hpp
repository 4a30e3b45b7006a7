#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isospec/schreier.hpp"

namespace isospec {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Planar affine map p -> (a x + b y + e, c x + d y + f).
struct Affine2 {
  double a = 1, b = 0, c = 0, d = 1, e = 0, f = 0;

  Point2 operator()(Point2 p) const { return {a * p.x + b * p.y + e, c * p.x + d * p.y + f}; }
  double det() const { return a * d - b * c; }
  static Affine2 reflection(Point2 p, Point2 q);
  static Affine2 half_turn(Point2 center);
};

enum class SegmentKind { Glue, Free };

struct TileSegment {
  SegmentKind kind = SegmentKind::Free;
  int label = -1;  // index into TileSpec::labels for glue segments
};

struct TileSymmetry {
  std::string name;
  Affine2 map;
  /// label_perm[l] is the label that edge l is carried onto.
  std::vector<int> label_perm;
};

/// A polygonal fundamental tile.
///
/// `points[0..polygon_size)` are the polygon vertices in counter-clockwise
/// order; edge i runs from point i to point i+1. Further points may be used by
/// the coarse triangulation and must lie inside the polygon or on its edges.
/// Consecutive edges sharing a segment id form one boundary segment.
struct TileSpec {
  std::string name;
  std::vector<std::string> labels;
  std::vector<Point2> points;
  int polygon_size = 0;
  std::vector<int> edge_segment;
  std::vector<TileSegment> segments;
  /// Coarse triangulation over `points`; empty means ear clipping.
  std::vector<std::array<int, 3>> coarse;
  std::vector<TileSymmetry> symmetries;

  double area() const;
  double diameter() const;
  /// Polygon edges of a segment in boundary order.
  std::vector<int> segment_edges(int segment) const;
  /// Segment carrying a glue label; throws if absent.
  int glue_segment(int label) const;
  int label_index(const std::string& label) const;
  /// Cyclic segment order as consumed by boundary_walks, with labels
  /// re-indexed into `graph_labels`.
  std::vector<EdgeSlot> edge_order(const std::vector<std::string>& graph_labels) const;
};

/// Throws std::invalid_argument when the polygon is not simple and
/// counter-clockwise, a glue segment is not a single edge, a label does not
/// occur exactly once, or the coarse triangulation does not tile the polygon.
void validate(const TileSpec& spec);

/// One of hexagon3, ytile, triangle, ltile, square.
TileSpec builtin_tile(const std::string& name);
std::vector<std::string> builtin_tile_names();

/// Replaces polygon or auxiliary points by index and revalidates.
TileSpec with_points(TileSpec spec, const std::map<int, Point2>& overrides);

/// Same tile with its coarse triangulation replaced by ear clipping of the
/// polygon (auxiliary points dropped).
TileSpec with_ear_clipping(TileSpec spec);

/// Ear clipping of a simple counter-clockwise polygon.
std::vector<std::array<int, 3>> ear_clip(const std::vector<Point2>& polygon);

/// True if the map sends the polygon onto itself with the glue labels
/// permuted as declared.
bool is_symmetry(const TileSpec& spec, const TileSymmetry& sym, double tol = 1e-12);

enum class NodeKind { Interior, Glue, Free, Corner };

struct NodeClass {
  NodeKind kind = NodeKind::Interior;
  int segment = -1;   // for Glue and Free nodes
  int label = -1;     // for Glue nodes
  int param = -1;     // position along a glue segment, 0..param_count-1
  int param_count = 0;
};

struct TileBoundaryEdge {
  int a;
  int b;  // a -> b runs counter-clockwise
  int segment;
};

struct TileMesh {
  TileSpec spec;
  int refinement = 0;
  std::vector<Point2> nodes;
  std::vector<std::array<int, 3>> triangles;  // counter-clockwise
  std::vector<NodeClass> node_class;
  /// Nodes of each segment ordered from its start to its end, endpoints included.
  std::vector<std::vector<int>> segment_nodes;
  std::vector<TileBoundaryEdge> boundary_edges;

  int node_count() const { return static_cast<int>(nodes.size()); }
  double max_element_diameter() const;
};

/// Uniform refinement of every coarse triangle into k^2 similar triangles.
TileMesh mesh_tile(const TileSpec& spec, int k);

double triangle_area(Point2 a, Point2 b, Point2 c);
/// Interior angle at `a` of triangle (a, b, c).
double corner_angle(Point2 a, Point2 b, Point2 c);

nlohmann::json to_json(const TileSpec& spec);

}  // namespace isospec
