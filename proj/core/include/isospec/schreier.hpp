#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isospec/finite_group.hpp"

namespace isospec {

struct FullEdge {
  int a;
  int b;
  int label;
};

struct HalfEdge {
  int vertex;
  int label;
};

/// Undirected Schreier graph of an action by involutions: every 2-cycle of a
/// generator is a full edge and every fixed point a half-edge.
class SchreierGraph {
 public:
  SchreierGraph(int vertex_count, std::vector<std::string> labels, std::vector<FullEdge> full,
                std::vector<HalfEdge> half);

  int vertex_count() const { return vertex_count_; }
  int label_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<FullEdge>& full_edges() const { return full_; }
  const std::vector<HalfEdge>& half_edges() const { return half_; }

  /// Vertex joined to v by its `label` edge, or v itself for a half-edge.
  int partner(int v, int label) const { return partner_[label][v]; }

 private:
  int vertex_count_;
  std::vector<std::string> labels_;
  std::vector<FullEdge> full_;
  std::vector<HalfEdge> half_;
  std::vector<std::vector<int>> partner_;
};

/// Throws std::invalid_argument if a generator does not act as an involution.
SchreierGraph build_schreier(const CosetAction& action);

/// Relabels vertices: vertex v becomes perm[v].
SchreierGraph relabel(const SchreierGraph& g, const std::vector<int>& perm);

struct OrientabilityVerdict {
  bool orientable = false;
  /// Side colour (+1 / -1) per vertex when orientable.
  std::vector<int> coloring;
  /// Shortest odd cycle when nonorientable: vertices in walk order, and the
  /// label of the edge leaving each vertex.
  std::vector<int> odd_cycle;
  std::vector<int> odd_cycle_labels;
};

OrientabilityVerdict is_orientable(const SchreierGraph& g);

/// One slot of the cyclic sequence of tile boundary segments.
struct EdgeSlot {
  bool glue = false;
  int label = -1;
};

struct BoundaryStep {
  int vertex;   // tile copy
  int segment;  // index into the tile edge order
  int direction;
};

using BoundaryWalk = std::vector<BoundaryStep>;

/// Closed walks along free arcs and half-edge segments of the surface glued
/// from one tile per vertex; one walk per boundary component.
std::vector<BoundaryWalk> boundary_walks(const SchreierGraph& g, const std::vector<EdgeSlot>& tile_edge_order);

std::string to_dot(const SchreierGraph& g, const std::string& name = "schreier");
nlohmann::json to_json(const SchreierGraph& g);
nlohmann::json to_json(const SchreierGraph& g, const OrientabilityVerdict& v);

}  // namespace isospec
