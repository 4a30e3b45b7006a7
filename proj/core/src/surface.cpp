#include "isospec/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace isospec {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

struct GlueRequest {
  int a, b, segment;
  bool reversed;
};

struct BoundaryRequest {
  int tile, segment;
  BoundaryOrigin origin;
  int label;
};

SurfaceMesh build(std::shared_ptr<const TileMesh> tile, int count, const std::vector<GlueRequest>& glues,
                  const std::string& name) {
  const auto& tm = *tile;
  const int n = tm.node_count();
  SurfaceMesh m;
  m.name = name;
  m.tile = tile;
  m.tile_count = count;
  m.tile_ids.resize(count);
  std::iota(m.tile_ids.begin(), m.tile_ids.end(), 0);

  UnionFind uf(static_cast<std::size_t>(count) * n);
  std::set<std::pair<int, int>> glued;  // (tile, segment)
  for (const auto& g : glues) {
    const auto& nodes = tm.segment_nodes[g.segment];
    Gluing rec{g.a, g.b, g.segment, tm.spec.segments[g.segment].label, g.reversed, {}};
    const int len = static_cast<int>(nodes.size());
    for (int i = 0; i < len; ++i) {
      const int la = nodes[i];
      const int lb = g.reversed ? nodes[len - 1 - i] : nodes[i];
      rec.node_pairs.emplace_back(la, lb);
      uf.unite(static_cast<std::size_t>(g.a) * n + la, static_cast<std::size_t>(g.b) * n + lb);
    }
    glued.insert({g.a, g.segment});
    glued.insert({g.b, g.segment});
    m.gluings.push_back(std::move(rec));
  }

  std::map<std::size_t, int> root_id;
  m.local_to_global.assign(count, std::vector<int>(n));
  for (int t = 0; t < count; ++t) {
    for (int v = 0; v < n; ++v) {
      const std::size_t r = uf.find(static_cast<std::size_t>(t) * n + v);
      auto [it, inserted] = root_id.emplace(r, static_cast<int>(root_id.size()));
      m.local_to_global[t][v] = it->second;
    }
  }
  m.node_count = static_cast<int>(root_id.size());
  for (int t = 0; t < count; ++t) {
    std::set<int> seen(m.local_to_global[t].begin(), m.local_to_global[t].end());
    if (static_cast<int>(seen.size()) != n)
      throw std::logic_error("assemble: two nodes of one tile copy were identified");
  }

  for (int t = 0; t < count; ++t) {
    for (std::size_t s = 0; s < tm.spec.segments.size(); ++s) {
      if (glued.count({t, static_cast<int>(s)})) continue;
      const auto& seg = tm.spec.segments[s];
      BoundarySegment b;
      b.id = static_cast<int>(m.boundary.size());
      b.tile = t;
      b.segment = static_cast<int>(s);
      b.origin = seg.kind == SegmentKind::Glue ? BoundaryOrigin::HalfEdge : BoundaryOrigin::FreeArc;
      b.label = seg.label;
      for (const auto& e : tm.boundary_edges)
        if (e.segment == static_cast<int>(s)) b.edges.emplace_back(m.local_to_global[t][e.a], m.local_to_global[t][e.b]);
      m.boundary.push_back(std::move(b));
    }
  }
  return m;
}

}  // namespace

std::string to_string(BoundaryOrigin o) {
  switch (o) {
    case BoundaryOrigin::FreeArc: return "free";
    case BoundaryOrigin::HalfEdge: return "half_edge";
    case BoundaryOrigin::Mirror: return "mirror";
  }
  return "?";
}

double SurfaceMesh::area() const {
  double a = 0;
  for (const auto& t : tile->triangles) a += triangle_area(tile->nodes[t[0]], tile->nodes[t[1]], tile->nodes[t[2]]);
  return a * tile_count;
}

std::vector<std::array<int, 3>> SurfaceMesh::triangles() const {
  std::vector<std::array<int, 3>> out;
  out.reserve(tile->triangles.size() * tile_count);
  for (int t = 0; t < tile_count; ++t)
    for (const auto& tri : tile->triangles)
      out.push_back({local_to_global[t][tri[0]], local_to_global[t][tri[1]], local_to_global[t][tri[2]]});
  return out;
}

std::vector<std::pair<int, int>> SurfaceMesh::representatives() const {
  std::vector<std::pair<int, int>> rep(node_count, {-1, -1});
  for (int t = 0; t < tile_count; ++t)
    for (int v = 0; v < tile->node_count(); ++v)
      if (rep[local_to_global[t][v]].first < 0) rep[local_to_global[t][v]] = {t, v};
  return rep;
}

SurfaceMesh assemble_surface(const SchreierGraph& graph, const TileMesh& tmesh, const std::string& name) {
  std::vector<int> seg_of_label(graph.label_count());
  for (int l = 0; l < graph.label_count(); ++l) {
    const int tl = tmesh.spec.label_index(graph.labels()[l]);
    if (tl < 0) throw std::invalid_argument("assemble_surface: tile has no edge labeled " + graph.labels()[l]);
    seg_of_label[l] = tmesh.spec.glue_segment(tl);
    const int count = static_cast<int>(tmesh.segment_nodes[seg_of_label[l]].size());
    for (int v : tmesh.segment_nodes[seg_of_label[l]]) {
      const auto& c = tmesh.node_class[v];
      if (c.param_count != count) throw std::invalid_argument("assemble_surface: non-conforming glue edge layout");
    }
  }
  std::vector<GlueRequest> glues;
  for (const auto& e : graph.full_edges()) glues.push_back({e.a, e.b, seg_of_label[e.label], false});
  auto m = build(std::make_shared<const TileMesh>(tmesh), graph.vertex_count(), glues, name);
  m.graph = graph;
  const auto verdict = is_orientable(graph);
  if (verdict.orientable) m.orientation = verdict.coloring;
  return m;
}

SurfaceMesh single_tile_surface(const TileMesh& tmesh) {
  auto m = build(std::make_shared<const TileMesh>(tmesh), 1, {}, tmesh.spec.name);
  m.orientation = {1};
  m.placements = {Affine2{}};
  return m;
}

Topology topology(const SurfaceMesh& m) {
  const auto& tm = *m.tile;
  const int n = tm.node_count();
  std::map<std::pair<int, int>, int> local_edge;
  std::vector<int> local_edge_tris;
  for (const auto& t : tm.triangles) {
    for (int i = 0; i < 3; ++i) {
      const std::pair<int, int> key{std::min(t[i], t[(i + 1) % 3]), std::max(t[i], t[(i + 1) % 3])};
      auto [it, inserted] = local_edge.emplace(key, static_cast<int>(local_edge.size()));
      if (inserted) local_edge_tris.push_back(0);
      ++local_edge_tris[it->second];
    }
  }
  const int le = static_cast<int>(local_edge.size());
  UnionFind edges(static_cast<std::size_t>(le) * m.tile_count);
  for (const auto& g : m.gluings) {
    std::map<int, int> partner(g.node_pairs.begin(), g.node_pairs.end());
    for (const auto& be : tm.boundary_edges) {
      if (be.segment != g.segment) continue;
      const int a = partner.at(be.a), b = partner.at(be.b);
      const int ea = local_edge.at({std::min(be.a, be.b), std::max(be.a, be.b)});
      const int eb = local_edge.at({std::min(a, b), std::max(a, b)});
      edges.unite(static_cast<std::size_t>(g.tile_a) * le + ea, static_cast<std::size_t>(g.tile_b) * le + eb);
    }
  }
  std::map<std::size_t, int> class_tris;
  std::map<std::size_t, std::pair<int, int>> class_ends;
  for (int t = 0; t < m.tile_count; ++t) {
    for (const auto& [key, e] : local_edge) {
      const std::size_t r = edges.find(static_cast<std::size_t>(t) * le + e);
      class_tris[r] += local_edge_tris[e];
      class_ends[r] = {m.local_to_global[t][key.first], m.local_to_global[t][key.second]};
    }
  }
  Topology top;
  top.vertices = m.node_count;
  top.edges = static_cast<int>(class_tris.size());
  top.faces = static_cast<int>(tm.triangles.size()) * m.tile_count;
  top.euler_characteristic = top.vertices - top.edges + top.faces;

  UnionFind bnd(m.node_count);
  std::set<int> bnd_nodes;
  for (const auto& [r, tris] : class_tris) {
    if (tris != 1) continue;
    const auto [a, b] = class_ends[r];
    bnd.unite(a, b);
    bnd_nodes.insert(a);
    bnd_nodes.insert(b);
  }
  std::set<std::size_t> roots;
  for (int v : bnd_nodes) roots.insert(bnd.find(v));
  top.boundary_components = static_cast<int>(roots.size());

  UnionFind comp(m.node_count);
  for (const auto& t : m.triangles()) {
    comp.unite(t[0], t[1]);
    comp.unite(t[1], t[2]);
  }
  std::set<std::size_t> comps;
  for (int v = 0; v < m.node_count; ++v) comps.insert(comp.find(v));
  top.connected_components = static_cast<int>(comps.size());
  (void)n;
  return top;
}

std::vector<ConePoint> cone_points(const SurfaceMesh& m, double tol) {
  const auto& tm = *m.tile;
  std::vector<bool> on_boundary(m.node_count, false);
  for (const auto& b : m.boundary)
    for (const auto& [a, c] : b.edges) on_boundary[a] = on_boundary[c] = true;
  std::vector<double> angle(m.node_count, 0.0);
  for (int t = 0; t < m.tile_count; ++t) {
    for (const auto& tri : tm.triangles) {
      for (int i = 0; i < 3; ++i) {
        angle[m.local_to_global[t][tri[i]]] +=
            corner_angle(tm.nodes[tri[i]], tm.nodes[tri[(i + 1) % 3]], tm.nodes[tri[(i + 2) % 3]]);
      }
    }
  }
  const auto reps = m.representatives();
  std::vector<ConePoint> out;
  for (int v = 0; v < m.node_count; ++v) {
    if (on_boundary[v]) continue;
    if (std::abs(angle[v] - 2 * std::numbers::pi) > tol)
      out.push_back({v, angle[v], tm.nodes[reps[v].second], m.tile_ids[reps[v].first]});
  }
  return out;
}

BCAssignment BCAssignment::uniform(const SurfaceMesh& m, BoundaryCondition bc) {
  return {std::vector<BoundaryCondition>(m.boundary.size(), bc)};
}

BCAssignment BCAssignment::mirror_neumann(const SurfaceMesh& m) {
  BCAssignment a;
  for (const auto& b : m.boundary)
    a.per_segment.push_back(b.origin == BoundaryOrigin::Mirror ? BoundaryCondition::Neumann
                                                                 : BoundaryCondition::Dirichlet);
  return a;
}

QuotientResult quotient_by_involution(const SurfaceMesh& m, const std::vector<int>& perm) {
  if (!m.graph) throw std::invalid_argument("quotient_by_involution: surface has no Schreier graph");
  const auto& g = *m.graph;
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("quotient_by_involution: permutation size");
  for (int v = 0; v < n; ++v) {
    if (perm[v] < 0 || perm[v] >= n || perm[perm[v]] != v)
      throw std::invalid_argument("quotient_by_involution: not an involution");
    if (perm[v] == v) throw std::invalid_argument("quotient_by_involution: involution fixes a tile");
    for (int l = 0; l < g.label_count(); ++l)
      if (g.partner(perm[v], l) != perm[g.partner(v, l)])
        throw std::invalid_argument("quotient_by_involution: permutation is not a graph automorphism");
  }
  std::vector<int> reps;
  for (int v = 0; v < n; ++v)
    if (v > perm[v]) reps.push_back(v);
  std::vector<int> index(n);
  for (int v = 0; v < n; ++v)
    index[v] = static_cast<int>(std::find(reps.begin(), reps.end(), std::max(v, perm[v])) - reps.begin());

  std::set<std::tuple<int, int, int>> full;
  std::set<std::pair<int, int>> half;
  std::set<std::pair<int, int>> mirror;
  for (const auto& e : g.full_edges()) {
    if (perm[e.a] == e.b) {
      half.insert({index[e.a], e.label});
      mirror.insert({index[e.a], e.label});
    } else {
      const int a = index[e.a], b = index[e.b];
      full.insert({std::min(a, b), std::max(a, b), e.label});
    }
  }
  for (const auto& h : g.half_edges()) half.insert({index[h.vertex], h.label});
  std::vector<FullEdge> fe;
  for (const auto& [a, b, l] : full) fe.push_back({a, b, l});
  std::vector<HalfEdge> he;
  for (const auto& [v, l] : half) he.push_back({v, l});
  std::sort(fe.begin(), fe.end(), [](const FullEdge& x, const FullEdge& y) {
    return std::tie(x.label, x.a, x.b) < std::tie(y.label, y.a, y.b);
  });
  std::sort(he.begin(), he.end(), [](const HalfEdge& x, const HalfEdge& y) {
    return std::tie(x.label, x.vertex) < std::tie(y.label, y.vertex);
  });
  SchreierGraph qg(static_cast<int>(reps.size()), g.labels(), fe, he);

  QuotientResult q;
  q.mesh = assemble_surface(qg, *m.tile, m.name + "/quotient");
  q.mesh.tile = m.tile;
  q.mesh.tile_ids.clear();
  for (int r : reps) q.mesh.tile_ids.push_back(m.tile_ids[r]);
  for (auto& b : q.mesh.boundary) {
    if (b.origin != BoundaryOrigin::HalfEdge) continue;
    const int gl = std::find(g.labels().begin(), g.labels().end(), m.tile->spec.labels[b.label]) - g.labels().begin();
    if (mirror.count({b.tile, gl})) {
      b.origin = BoundaryOrigin::Mirror;
      q.mirror_edges.emplace_back(q.mesh.tile_ids[b.tile], m.tile->spec.labels[b.label]);
    }
  }
  q.bc = BCAssignment::mirror_neumann(q.mesh);
  return q;
}

PlanarPair fefferman_domains(const TileSpec& l, int k) {
  int glue = -1;
  for (std::size_t s = 0; s < l.segments.size(); ++s) {
    if (l.segments[s].kind != SegmentKind::Glue) continue;
    if (glue >= 0) throw std::invalid_argument("fefferman_domains: tile must have exactly one glue segment");
    glue = static_cast<int>(s);
  }
  if (glue < 0) throw std::invalid_argument("fefferman_domains: tile must have exactly one glue segment");
  const int e = l.segment_edges(glue)[0];
  const Point2 p = l.points[e], q = l.points[(e + 1) % l.polygon_size];
  const double scale = l.diameter();
  for (int i = 0; i < l.polygon_size; ++i) {
    const double side = (q.x - p.x) * (l.points[i].y - p.y) - (q.y - p.y) * (l.points[i].x - p.x);
    if (side < -1e-12 * scale * scale) throw std::invalid_argument("fefferman_domains: tile overlaps its image");
  }
  auto tile = std::make_shared<const TileMesh>(mesh_tile(l, k));
  auto make = [&](bool reversed, const Affine2& place, const std::string& name) {
    auto m = build(tile, 2, {{0, 1, glue, reversed}}, name);
    m.placements = {Affine2{}, place};
    m.orientation = {1, place.det() > 0 ? 1 : -1};
    for (const auto& [a, b] : m.gluings[0].node_pairs) {
      const Point2 pa = m.placements[0](tile->nodes[a]);
      const Point2 pb = m.placements[1](tile->nodes[b]);
      if (std::hypot(pa.x - pb.x, pa.y - pb.y) > 1e-9 * scale)
        throw std::logic_error("fefferman_domains: glue edge nodes are not symmetric about the edge midpoint");
    }
    return m;
  };
  PlanarPair out;
  out.c = make(false, Affine2::reflection(p, q), "C");
  out.s = make(true, Affine2::half_turn({(p.x + q.x) / 2, (p.y + q.y) / 2}), "S");
  return out;
}

std::vector<Point2> planar_outline(const SurfaceMesh& m) {
  if (static_cast<int>(m.placements.size()) != m.tile_count)
    throw std::invalid_argument("planar_outline: surface has no planar placement");
  const auto reps = m.representatives();
  auto pos = [&](int v) { return m.placements[reps[v].first](m.tile->nodes[reps[v].second]); };
  std::map<int, std::vector<int>> adj;
  for (const auto& b : m.boundary)
    for (const auto& [a, c] : b.edges) {
      adj[a].push_back(c);
      adj[c].push_back(a);
    }
  if (adj.empty()) return {};
  for (const auto& [v, nb] : adj)
    if (nb.size() != 2) throw std::invalid_argument("planar_outline: boundary is not a single simple loop");
  std::vector<int> loop{adj.begin()->first};
  int prev = -1;
  while (true) {
    const int cur = loop.back();
    const int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    if (next == loop.front()) break;
    prev = cur;
    loop.push_back(next);
    if (loop.size() > adj.size()) throw std::invalid_argument("planar_outline: boundary does not close");
  }
  if (loop.size() != adj.size()) throw std::invalid_argument("planar_outline: boundary has several components");
  std::vector<Point2> pts;
  for (int v : loop) pts.push_back(pos(v));
  double area = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    area += pts[i].x * pts[(i + 1) % pts.size()].y - pts[(i + 1) % pts.size()].x * pts[i].y;
  if (area < 0) std::reverse(pts.begin(), pts.end());
  std::vector<Point2> out;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = pts[(i + n - 1) % n], b = pts[i], c = pts[(i + 1) % n];
    const double cr = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
    if (std::abs(cr) > 1e-12 * std::hypot(b.x - a.x, b.y - a.y) * std::hypot(c.x - b.x, c.y - b.y)) out.push_back(b);
  }
  return out;
}

namespace {

std::vector<std::pair<double, double>> descriptor(const std::vector<Point2>& p) {
  const std::size_t n = p.size();
  std::vector<std::pair<double, double>> d;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = p[i], b = p[(i + 1) % n], c = p[(i + 2) % n];
    const double ux = b.x - a.x, uy = b.y - a.y, vx = c.x - b.x, vy = c.y - b.y;
    d.emplace_back(std::hypot(ux, uy), std::atan2(ux * vy - uy * vx, ux * vx + uy * vy));
  }
  return d;
}

}  // namespace

bool congruent_polygons(const std::vector<Point2>& a, const std::vector<Point2>& b, double tol) {
  if (a.size() != b.size()) return false;
  const auto da = descriptor(a);
  std::vector<Point2> mirrored;
  for (auto it = b.rbegin(); it != b.rend(); ++it) mirrored.push_back({-it->x, it->y});
  for (const auto& cand : {b, mirrored}) {
    const auto db = descriptor(cand);
    for (std::size_t shift = 0; shift < db.size(); ++shift) {
      bool same = true;
      for (std::size_t i = 0; i < da.size() && same; ++i) {
        const auto& x = da[i];
        const auto& y = db[(i + shift) % db.size()];
        same = std::abs(x.first - y.first) <= tol && std::abs(x.second - y.second) <= tol;
      }
      if (same) return true;
    }
  }
  return false;
}

nlohmann::json to_json(const SurfaceMesh& m) {
  nlohmann::json j;
  j["name"] = m.name;
  j["tile"] = to_json(m.tile->spec);
  j["refinement"] = m.tile->refinement;
  j["tile_count"] = m.tile_count;
  j["tile_ids"] = m.tile_ids;
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& [t, v] : m.representatives()) nodes.push_back({{"tile", t}, {"local", v}});
  j["nodes"] = nodes;
  nlohmann::json local = nlohmann::json::array();
  for (const auto& p : m.tile->nodes) local.push_back({p.x, p.y});
  j["tile_nodes"] = local;
  j["tile_triangles"] = m.tile->triangles;
  j["local_to_global"] = m.local_to_global;
  nlohmann::json glue = nlohmann::json::array();
  for (const auto& g : m.gluings) {
    glue.push_back({{"tile_a", g.tile_a},
                    {"tile_b", g.tile_b},
                    {"label", g.label >= 0 ? m.tile->spec.labels[g.label] : ""},
                    {"reversed", g.reversed},
                    {"node_pairs", g.node_pairs}});
  }
  j["gluings"] = glue;
  nlohmann::json bnd = nlohmann::json::array();
  for (const auto& b : m.boundary) {
    bnd.push_back({{"id", b.id},
                   {"tile", m.tile_ids[b.tile]},
                   {"origin", to_string(b.origin)},
                   {"label", b.label >= 0 ? m.tile->spec.labels[b.label] : ""},
                   {"edges", b.edges}});
  }
  j["boundary"] = bnd;
  j["orientation"] = m.orientation;
  nlohmann::json place = nlohmann::json::array();
  for (const auto& p : m.placements) place.push_back({p.a, p.b, p.c, p.d, p.e, p.f});
  j["placements"] = place;
  return j;
}

}  // namespace isospec
