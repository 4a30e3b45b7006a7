#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "isospec/schreier.hpp"
#include "isospec/tile.hpp"

namespace isospec {

/// Identification of one tile segment of copy `tile_a` with the same segment of `tile_b`.
struct Gluing {
  int tile_a = 0;
  int tile_b = 0;
  int segment = 0;
  int label = -1;  // tile label index
  /// false: node at position i pairs with position i (reflection in the edge);
  /// true: position i pairs with position n-1-i (half-turn about the edge midpoint).
  bool reversed = false;
  std::vector<std::pair<int, int>> node_pairs;  // local node of tile_a, local node of tile_b
};

enum class BoundaryOrigin { FreeArc, HalfEdge, Mirror };

std::string to_string(BoundaryOrigin o);

struct BoundarySegment {
  int id = 0;
  int tile = 0;
  int segment = 0;
  BoundaryOrigin origin = BoundaryOrigin::FreeArc;
  int label = -1;  // tile label index for HalfEdge and Mirror segments
  std::vector<std::pair<int, int>> edges;  // global node pairs
};

/// Copies of one tile mesh with glued segments identified node by node.
struct SurfaceMesh {
  std::string name;
  std::shared_ptr<const TileMesh> tile;
  int tile_count = 0;
  /// Display name of each copy (the coset index it came from).
  std::vector<int> tile_ids;
  std::vector<std::vector<int>> local_to_global;
  int node_count = 0;
  std::vector<Gluing> gluings;
  std::vector<BoundarySegment> boundary;
  /// Side colour per copy when the surface is orientable.
  std::vector<int> orientation;
  /// Planar placement per copy for domains embedded in the plane.
  std::vector<Affine2> placements;
  std::optional<SchreierGraph> graph;

  int global(int tile_index, int local) const { return local_to_global[tile_index][local]; }
  double area() const;
  /// Global triangles with their (copy, local triangle) origin.
  std::vector<std::array<int, 3>> triangles() const;
  /// For each global node, its first (copy, local node) representative.
  std::vector<std::pair<int, int>> representatives() const;
};

struct Topology {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler_characteristic = 0;
  int boundary_components = 0;
  int connected_components = 0;
};

/// Counts edges after identification, so coarse meshes with parallel edges are handled.
Topology topology(const SurfaceMesh& m);

/// One copy per graph vertex; full edges glue the matching segments by the identity.
SurfaceMesh assemble_surface(const SchreierGraph& graph, const TileMesh& tmesh, const std::string& name = "surface");

/// The tile alone, every segment boundary.
SurfaceMesh single_tile_surface(const TileMesh& tmesh);

struct ConePoint {
  int node = 0;
  double angle = 0.0;
  Point2 local;  // position in the chart of its first copy
  int tile = 0;
};

/// Interior nodes whose incident corner angles do not sum to 2π within `tol`.
std::vector<ConePoint> cone_points(const SurfaceMesh& m, double tol = 1e-12);

enum class BoundaryCondition { Neumann, Dirichlet };

struct BCAssignment {
  std::vector<BoundaryCondition> per_segment;

  static BCAssignment uniform(const SurfaceMesh& m, BoundaryCondition bc);
  /// Neumann on Mirror segments, Dirichlet elsewhere.
  static BCAssignment mirror_neumann(const SurfaceMesh& m);
};

struct QuotientResult {
  SurfaceMesh mesh;
  BCAssignment bc;
  /// (tile id, label) of each mirror segment, e.g. (6, "T").
  std::vector<std::pair<int, std::string>> mirror_edges;
};

/// Quotient by an involution of the tiles that is a label-preserving graph
/// automorphism without fixed tiles. Edges joining a tile to its image become
/// mirror segments on the larger-indexed tile of the orbit.
QuotientResult quotient_by_involution(const SurfaceMesh& m, const std::vector<int>& tile_perm);

struct PlanarPair {
  SurfaceMesh s;  // L and its half-turn about the midpoint of E
  SurfaceMesh c;  // L and its mirror image in E
};

/// Requires a tile with exactly one glue segment lying on the tile's supporting line.
PlanarPair fefferman_domains(const TileSpec& l, int k);

/// Congruence of planar polygons compared through edge-length and turning-angle
/// sequences up to rotation of the start and reversal.
bool congruent_polygons(const std::vector<Point2>& a, const std::vector<Point2>& b, double tol = 1e-9);

/// Outer boundary polygon of a planar surface, counter-clockwise, collinear vertices removed.
std::vector<Point2> planar_outline(const SurfaceMesh& m);

nlohmann::json to_json(const SurfaceMesh& m);

}  // namespace isospec
