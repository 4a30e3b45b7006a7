#include "isospec/tile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace isospec {

namespace {

double cross(Point2 o, Point2 a, Point2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }
double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, {a.x + t * dx, a.y + t * dy});
}

bool segments_intersect(Point2 p1, Point2 p2, Point2 q1, Point2 q2) {
  const double d1 = cross(q1, q2, p1), d2 = cross(q1, q2, p2);
  const double d3 = cross(p1, p2, q1), d4 = cross(p1, p2, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  const double eps = 1e-14;
  return (std::abs(d1) < eps && point_segment_distance(p1, q1, q2) < eps) ||
         (std::abs(d2) < eps && point_segment_distance(p2, q1, q2) < eps) ||
         (std::abs(d3) < eps && point_segment_distance(q1, p1, p2) < eps) ||
         (std::abs(d4) < eps && point_segment_distance(q2, p1, p2) < eps);
}

bool point_in_triangle(Point2 p, Point2 a, Point2 b, Point2 c) {
  return cross(a, b, p) >= 0 && cross(b, c, p) >= 0 && cross(c, a, p) >= 0;
}

std::vector<Point2> polygon_of(const TileSpec& spec) {
  return {spec.points.begin(), spec.points.begin() + spec.polygon_size};
}

double polygon_area(const std::vector<Point2>& poly) {
  double a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return a / 2;
}

/// Polygon edges each point lies on.
std::vector<std::vector<int>> point_edges(const TileSpec& spec) {
  const int n = spec.polygon_size;
  const double tol = 1e-10 * spec.diameter();
  std::vector<std::vector<int>> out(spec.points.size());
  for (int p = 0; p < static_cast<int>(spec.points.size()); ++p) {
    if (p < n) {
      out[p] = {std::min((p + n - 1) % n, p), std::max((p + n - 1) % n, p)};
      continue;
    }
    for (int e = 0; e < n; ++e)
      if (point_segment_distance(spec.points[p], spec.points[e], spec.points[(e + 1) % n]) <= tol) out[p].push_back(e);
  }
  return out;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

std::vector<std::array<int, 3>> oriented_coarse(const TileSpec& spec) {
  auto coarse = spec.coarse.empty() ? ear_clip(polygon_of(spec)) : spec.coarse;
  for (auto& t : coarse)
    if (cross(spec.points[t[0]], spec.points[t[1]], spec.points[t[2]]) < 0) std::swap(t[1], t[2]);
  return coarse;
}

}  // namespace

Affine2 Affine2::reflection(Point2 p, Point2 q) {
  const double dx = q.x - p.x, dy = q.y - p.y;
  const double len2 = dx * dx + dy * dy;
  const double c2 = (dx * dx - dy * dy) / len2;
  const double s2 = 2 * dx * dy / len2;
  Affine2 m{c2, s2, s2, -c2, 0, 0};
  const Point2 img = m(p);
  m.e = p.x - img.x;
  m.f = p.y - img.y;
  return m;
}

Affine2 Affine2::half_turn(Point2 center) { return {-1, 0, 0, -1, 2 * center.x, 2 * center.y}; }

double TileSpec::area() const { return polygon_area(polygon_of(*this)); }

double TileSpec::diameter() const {
  double d = 0;
  for (int i = 0; i < polygon_size; ++i)
    for (int j = i + 1; j < polygon_size; ++j) d = std::max(d, dist(points[i], points[j]));
  return d;
}

std::vector<int> TileSpec::segment_edges(int segment) const {
  const int n = polygon_size;
  std::vector<int> edges;
  int start = -1;
  for (int i = 0; i < n; ++i)
    if (edge_segment[i] == segment && edge_segment[(i + n - 1) % n] != segment) start = i;
  if (start < 0) {
    if (std::all_of(edge_segment.begin(), edge_segment.end(), [&](int s) { return s == segment; })) start = 0;
    else throw std::invalid_argument("TileSpec: unknown segment");
  }
  for (int i = start; edges.size() < static_cast<std::size_t>(n) && edge_segment[i % n] == segment; ++i)
    edges.push_back(i % n);
  return edges;
}

int TileSpec::glue_segment(int label) const {
  for (std::size_t s = 0; s < segments.size(); ++s)
    if (segments[s].kind == SegmentKind::Glue && segments[s].label == label) return static_cast<int>(s);
  throw std::invalid_argument("TileSpec: no glue segment for label " + std::to_string(label));
}

int TileSpec::label_index(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

std::vector<EdgeSlot> TileSpec::edge_order(const std::vector<std::string>& graph_labels) const {
  std::vector<EdgeSlot> order;
  for (const auto& seg : segments) {
    EdgeSlot slot;
    if (seg.kind == SegmentKind::Glue) {
      auto it = std::find(graph_labels.begin(), graph_labels.end(), labels[seg.label]);
      if (it != graph_labels.end()) {
        slot.glue = true;
        slot.label = static_cast<int>(it - graph_labels.begin());
      }
    }
    order.push_back(slot);
  }
  return order;
}

void validate(const TileSpec& spec) {
  const int n = spec.polygon_size;
  auto fail = [&](const std::string& what) { throw std::invalid_argument("tile " + spec.name + ": " + what); };
  if (n < 3 || static_cast<int>(spec.points.size()) < n) fail("polygon needs at least three vertices");
  if (static_cast<int>(spec.edge_segment.size()) != n) fail("one segment id per polygon edge required");
  for (const auto& p : spec.points)
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) fail("non-finite coordinate");

  const auto poly = polygon_of(spec);
  if (!(polygon_area(poly) > 0)) fail("polygon must be counter-clockwise with positive area");
  for (int i = 0; i < n; ++i) {
    if (dist(poly[i], poly[(i + 1) % n]) == 0) fail("zero-length edge");
    for (int j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_intersect(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n])) fail("polygon is not simple");
    }
  }

  // Segments: contiguous runs, numbered in boundary order.
  const int segs = static_cast<int>(spec.segments.size());
  for (int s : spec.edge_segment)
    if (s < 0 || s >= segs) fail("segment id out of range");
  std::vector<int> runs;
  int first = 0;
  while (first < n && spec.edge_segment[first] == spec.edge_segment[(first + n - 1) % n]) ++first;
  if (first == n) {
    runs.push_back(spec.edge_segment[0]);
  } else {
    for (int i = 0; i < n; ++i) {
      const int e = (first + i) % n;
      if (i == 0 || spec.edge_segment[e] != spec.edge_segment[(e + n - 1) % n]) runs.push_back(spec.edge_segment[e]);
    }
  }
  if (static_cast<int>(runs.size()) != segs) fail("every segment must be one contiguous run of edges");
  auto zero = std::find(runs.begin(), runs.end(), 0);
  std::rotate(runs.begin(), zero, runs.end());
  for (int s = 0; s < segs; ++s)
    if (runs[s] != s) fail("segments must be numbered in boundary order");

  std::vector<int> label_uses(spec.labels.size(), 0);
  for (int s = 0; s < segs; ++s) {
    const auto& seg = spec.segments[s];
    if (seg.kind != SegmentKind::Glue) continue;
    if (seg.label < 0 || seg.label >= static_cast<int>(spec.labels.size())) fail("glue label out of range");
    ++label_uses[seg.label];
    if (spec.segment_edges(s).size() != 1) fail("glue segment " + spec.labels[seg.label] + " must be a single edge");
  }
  for (std::size_t l = 0; l < label_uses.size(); ++l)
    if (label_uses[l] != 1) fail("label " + spec.labels[l] + " must occur exactly once");

  if (!spec.coarse.empty()) {
    const auto pe = point_edges(spec);
    for (std::size_t p = n; p < spec.points.size(); ++p) {
      if (!pe[p].empty()) continue;
      double wind = 0;
      for (int i = 0; i < n; ++i) {
        const Point2 a{poly[i].x - spec.points[p].x, poly[i].y - spec.points[p].y};
        const Point2 b{poly[(i + 1) % n].x - spec.points[p].x, poly[(i + 1) % n].y - spec.points[p].y};
        wind += std::atan2(a.x * b.y - a.y * b.x, a.x * b.x + a.y * b.y);
      }
      if (std::abs(wind) < std::numbers::pi) fail("auxiliary point outside the polygon");
    }
    double total = 0;
    std::map<std::pair<int, int>, int> directed;
    for (const auto& t : spec.coarse) {
      for (int v : t)
        if (v < 0 || v >= static_cast<int>(spec.points.size())) fail("coarse triangle index out of range");
      const double a = triangle_area(spec.points[t[0]], spec.points[t[1]], spec.points[t[2]]);
      if (!(std::abs(a) > 1e-12 * spec.area())) fail("degenerate coarse triangle");
      total += std::abs(a);
      const bool ccw = a > 0;
      for (int i = 0; i < 3; ++i) {
        int u = t[i], v = t[(i + 1) % 3];
        if (!ccw) std::swap(u, v);
        if (++directed[{u, v}] > 1) fail("coarse triangulation overlaps itself");
      }
    }
    if (std::abs(total - spec.area()) > 1e-12 * std::max(1.0, spec.area())) fail("coarse triangles do not cover the polygon");
    for (const auto& [edge, count] : directed) {
      if (directed.count({edge.second, edge.first})) continue;
      if (intersect(pe[edge.first], pe[edge.second]).empty()) fail("coarse triangulation is not conforming");
    }
  }
  for (const auto& sym : spec.symmetries)
    if (!is_symmetry(spec, sym, 1e-9 * spec.diameter())) fail("declared symmetry " + sym.name + " does not hold");
}

bool is_symmetry(const TileSpec& spec, const TileSymmetry& sym, double tol) {
  const auto& m = sym.map;
  // Orthogonal linear part.
  if (std::abs(m.a * m.a + m.c * m.c - 1) > 1e-12 || std::abs(m.b * m.b + m.d * m.d - 1) > 1e-12 ||
      std::abs(m.a * m.b + m.c * m.d) > 1e-12)
    return false;
  if (sym.label_perm.size() != spec.labels.size()) return false;
  const int n = spec.polygon_size;
  auto find_vertex = [&](Point2 p) {
    for (int i = 0; i < n; ++i)
      if (dist(p, spec.points[i]) <= tol) return i;
    return -1;
  };
  for (int i = 0; i < n; ++i)
    if (find_vertex(m(spec.points[i])) < 0) return false;
  for (const auto& seg : spec.segments) {
    if (seg.kind != SegmentKind::Glue) continue;
    const int e = spec.segment_edges(spec.glue_segment(seg.label))[0];
    const int target = spec.segment_edges(spec.glue_segment(sym.label_perm[seg.label]))[0];
    const int a = find_vertex(m(spec.points[e]));
    const int b = find_vertex(m(spec.points[(e + 1) % n]));
    const std::set<int> image{a, b};
    const std::set<int> want{target, (target + 1) % n};
    if (image != want) return false;
  }
  return true;
}

std::vector<std::array<int, 3>> ear_clip(const std::vector<Point2>& poly) {
  std::vector<int> idx(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) idx[i] = static_cast<int>(i);
  std::vector<std::array<int, 3>> out;
  while (idx.size() > 3) {
    const int m = static_cast<int>(idx.size());
    int best = -1;
    double best_quality = -1;
    for (int i = 0; i < m; ++i) {
      const int a = idx[(i + m - 1) % m], b = idx[i], c = idx[(i + 1) % m];
      if (cross(poly[a], poly[b], poly[c]) <= 0) continue;
      bool empty = true;
      for (int j = 0; j < m && empty; ++j) {
        const int p = idx[j];
        if (p == a || p == b || p == c) continue;
        if (point_in_triangle(poly[p], poly[a], poly[b], poly[c])) empty = false;
      }
      if (!empty) continue;
      const double q = std::min({corner_angle(poly[a], poly[b], poly[c]), corner_angle(poly[b], poly[c], poly[a]),
                                 corner_angle(poly[c], poly[a], poly[b])});
      if (q > best_quality + 1e-12) {
        best_quality = q;
        best = i;
      }
    }
    if (best < 0) throw std::invalid_argument("ear_clip: polygon is not simple or not counter-clockwise");
    out.push_back({idx[(best + m - 1) % m], idx[best], idx[(best + 1) % m]});
    idx.erase(idx.begin() + best);
  }
  out.push_back({idx[0], idx[1], idx[2]});

  // Collinear polygon vertices can leave zero-area ears; merge each into the
  // triangle across its long edge.
  double scale = 0;
  for (const auto& p : poly) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  const double eps = 1e-12 * std::max(scale * scale, 1.0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t t = 0; t < out.size() && !changed; ++t) {
      const auto tri = out[t];
      if (std::abs(cross(poly[tri[0]], poly[tri[1]], poly[tri[2]])) > eps) continue;
      int mid = 0;
      for (int r = 1; r < 3; ++r)
        if (dist(poly[tri[(r + 1) % 3]], poly[tri[(r + 2) % 3]]) >
            dist(poly[tri[(mid + 1) % 3]], poly[tri[(mid + 2) % 3]]))
          mid = r;
      const int b = tri[mid], a = tri[(mid + 1) % 3], c = tri[(mid + 2) % 3];
      for (std::size_t u = 0; u < out.size(); ++u) {
        if (u == t) continue;
        const auto& o = out[u];
        for (int r = 0; r < 3; ++r) {
          if (!((o[r] == a && o[(r + 1) % 3] == c) || (o[r] == c && o[(r + 1) % 3] == a))) continue;
          const int d = o[(r + 2) % 3];
          const std::array<int, 3> t1{o[r], b, d}, t2{b, o[(r + 1) % 3], d};
          out[u] = t1;
          out[t] = t2;
          changed = true;
          break;
        }
        if (changed) break;
      }
      if (!changed) throw std::invalid_argument("ear_clip: degenerate triangle on the polygon boundary");
    }
  }
  return out;
}

namespace {

TileSpec make_triangle() {
  TileSpec t;
  t.name = "triangle";
  t.labels = {"Σ", "T", "U"};
  t.points = {{0, 0}, {4, 0}, {0, 3}};
  t.polygon_size = 3;
  t.edge_segment = {0, 1, 2};
  t.segments = {{SegmentKind::Glue, 1}, {SegmentKind::Glue, 0}, {SegmentKind::Glue, 2}};
  t.coarse = {{0, 1, 2}};
  return t;
}

TileSpec make_hexagon3() {
  TileSpec t;
  t.name = "hexagon3";
  t.labels = {"Σ", "T", "U"};
  t.points = {{0, 0}, {3, 0}, {4.5, 1.5}, {4, 3.5}, {1.5, 4}, {-0.5, 2}, {2, 2}};
  t.polygon_size = 6;
  t.edge_segment = {0, 1, 2, 3, 4, 5};
  t.segments = {{SegmentKind::Glue, 0}, {SegmentKind::Free, -1}, {SegmentKind::Glue, 1},
                {SegmentKind::Free, -1}, {SegmentKind::Glue, 2}, {SegmentKind::Free, -1}};
  for (int i = 0; i < 6; ++i) t.coarse.push_back({6, i, (i + 1) % 6});
  return t;
}

TileSpec make_ytile() {
  TileSpec t;
  t.name = "ytile";
  t.labels = {"Σ", "T", "U"};
  auto hex = [](int j) {
    const double a = std::numbers::pi / 3 * j;
    return Point2{std::cos(a), std::sin(a)};
  };
  auto arm = [&](int j, double len) {
    const double a = std::numbers::pi / 3 * j + std::numbers::pi / 6;
    const Point2 n{std::cos(a), std::sin(a)};
    const Point2 p = hex(j), q = hex(j + 1);
    return std::pair<Point2, Point2>{{p.x + len * n.x, p.y + len * n.y}, {q.x + len * n.x, q.y + len * n.y}};
  };
  const auto [a, b] = arm(0, 0.2);
  const auto [c, d] = arm(2, 0.2);
  const auto [e, f] = arm(4, 0.3);
  t.points = {a, b, hex(1), hex(2), c, d, hex(3), hex(4), e, f, hex(5), hex(0), {0, 0}};
  t.polygon_size = 12;
  t.edge_segment = {0, 1, 1, 1, 2, 3, 3, 3, 4, 5, 5, 5};
  t.segments = {{SegmentKind::Glue, 2}, {SegmentKind::Free, -1}, {SegmentKind::Glue, 1},
                {SegmentKind::Free, -1}, {SegmentKind::Glue, 0}, {SegmentKind::Free, -1}};
  const int center = 12;
  const int ring[6] = {11, 2, 3, 6, 7, 10};
  for (int j = 0; j < 6; ++j) t.coarse.push_back({center, ring[j], ring[(j + 1) % 6]});
  t.coarse.insert(t.coarse.end(), {{11, 0, 1}, {11, 1, 2}, {3, 4, 5}, {3, 5, 6}, {7, 8, 9}, {7, 9, 10}});
  t.symmetries.push_back({"mirror_y", Affine2{-1, 0, 0, 1, 0, 0}, {0, 2, 1}});
  return t;
}

TileSpec make_ltile() {
  TileSpec t;
  t.name = "ltile";
  t.labels = {"E"};
  t.points = {{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 2}, {0, 2}, {1, 0}, {2, 0}, {0, 1}, {2, 1}};
  t.polygon_size = 6;
  t.edge_segment = {0, 1, 1, 1, 1, 1};
  t.segments = {{SegmentKind::Glue, 0}, {SegmentKind::Free, -1}};
  t.coarse = {{0, 6, 3}, {0, 3, 8}, {6, 7, 9}, {6, 9, 3}, {7, 1, 2}, {7, 2, 9}, {8, 3, 4}, {8, 4, 5}};
  return t;
}

TileSpec make_square() {
  TileSpec t;
  t.name = "square";
  t.points = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  t.polygon_size = 4;
  t.edge_segment = {0, 1, 2, 3};
  t.segments = {{}, {}, {}, {}};
  t.coarse = {{0, 1, 2}, {0, 2, 3}};
  return t;
}

}  // namespace

std::vector<std::string> builtin_tile_names() { return {"hexagon3", "ytile", "triangle", "ltile", "square"}; }

TileSpec builtin_tile(const std::string& name) {
  TileSpec t;
  if (name == "triangle") t = make_triangle();
  else if (name == "hexagon3") t = make_hexagon3();
  else if (name == "ytile") t = make_ytile();
  else if (name == "ltile") t = make_ltile();
  else if (name == "square") t = make_square();
  else throw std::invalid_argument("unknown tile: " + name);
  validate(t);
  return t;
}

TileSpec with_points(TileSpec spec, const std::map<int, Point2>& overrides) {
  for (const auto& [i, p] : overrides) {
    if (i < 0 || i >= static_cast<int>(spec.points.size()))
      throw std::invalid_argument("tile " + spec.name + ": point index " + std::to_string(i) + " out of range");
    spec.points[i] = p;
  }
  validate(spec);
  return spec;
}

TileSpec with_ear_clipping(TileSpec spec) {
  spec.points.resize(spec.polygon_size);
  spec.coarse = ear_clip(spec.points);
  validate(spec);
  return spec;
}

double triangle_area(Point2 a, Point2 b, Point2 c) { return cross(a, b, c) / 2; }

double corner_angle(Point2 a, Point2 b, Point2 c) {
  const double ux = b.x - a.x, uy = b.y - a.y, vx = c.x - a.x, vy = c.y - a.y;
  return std::abs(std::atan2(ux * vy - uy * vx, ux * vx + uy * vy));
}

double TileMesh::max_element_diameter() const {
  double d = 0;
  for (const auto& t : triangles)
    d = std::max({d, dist(nodes[t[0]], nodes[t[1]]), dist(nodes[t[1]], nodes[t[2]]), dist(nodes[t[2]], nodes[t[0]])});
  return d;
}

TileMesh mesh_tile(const TileSpec& spec, int k) {
  if (k < 1) throw std::invalid_argument("mesh_tile: refinement must be at least 1");
  validate(spec);
  const auto coarse = oriented_coarse(spec);
  const auto pe = point_edges(spec);
  const int n = spec.polygon_size;

  TileMesh mesh;
  mesh.spec = spec;
  mesh.refinement = k;

  // Lattice nodes are keyed by their barycentric support on coarse vertices,
  // so nodes on shared coarse edges are created once.
  using Key = std::vector<std::pair<int, int>>;
  std::map<Key, int> index;
  std::vector<std::vector<int>> node_edges;
  auto node_at = [&](const std::array<int, 3>& tri, int i, int j) {
    const int w[3] = {k - i - j, i, j};
    Key key;
    for (int v = 0; v < 3; ++v)
      if (w[v] > 0) key.emplace_back(tri[v], w[v]);
    std::sort(key.begin(), key.end());
    auto [it, inserted] = index.emplace(key, static_cast<int>(mesh.nodes.size()));
    if (inserted) {
      Point2 p{0, 0};
      std::vector<int> edges = pe[key[0].first];
      for (const auto& [v, wt] : key) {
        p.x += wt * spec.points[v].x;
        p.y += wt * spec.points[v].y;
        edges = intersect(edges, pe[v]);
      }
      mesh.nodes.push_back({p.x / k, p.y / k});
      node_edges.push_back(edges);
    }
    return it->second;
  };

  for (const auto& tri : coarse) {
    std::vector<std::vector<int>> lattice(k + 1);
    for (int i = 0; i <= k; ++i)
      for (int j = 0; i + j <= k; ++j) lattice[i].push_back(node_at(tri, i, j));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; i + j < k; ++j) {
        mesh.triangles.push_back({lattice[i][j], lattice[i + 1][j], lattice[i][j + 1]});
        if (i + j + 1 < k) mesh.triangles.push_back({lattice[i + 1][j], lattice[i + 1][j + 1], lattice[i][j + 1]});
      }
    }
  }

  mesh.node_class.resize(mesh.nodes.size());
  for (std::size_t v = 0; v < mesh.nodes.size(); ++v) {
    auto& cls = mesh.node_class[v];
    if (node_edges[v].size() >= 2) {
      cls.kind = NodeKind::Corner;
    } else if (node_edges[v].size() == 1) {
      cls.segment = spec.edge_segment[node_edges[v][0]];
      const auto& seg = spec.segments[cls.segment];
      cls.kind = seg.kind == SegmentKind::Glue ? NodeKind::Glue : NodeKind::Free;
      cls.label = seg.label;
    }
  }

  mesh.segment_nodes.resize(spec.segments.size());
  for (std::size_t s = 0; s < spec.segments.size(); ++s) {
    auto& list = mesh.segment_nodes[s];
    for (int e : spec.segment_edges(static_cast<int>(s))) {
      const Point2 a = spec.points[e], b = spec.points[(e + 1) % n];
      std::vector<std::pair<double, int>> on_edge;
      for (std::size_t v = 0; v < mesh.nodes.size(); ++v) {
        if (!std::binary_search(node_edges[v].begin(), node_edges[v].end(), e)) continue;
        const double t = ((mesh.nodes[v].x - a.x) * (b.x - a.x) + (mesh.nodes[v].y - a.y) * (b.y - a.y));
        on_edge.emplace_back(t, static_cast<int>(v));
      }
      std::sort(on_edge.begin(), on_edge.end());
      for (const auto& [t, v] : on_edge)
        if (list.empty() || list.back() != v) list.push_back(v);
    }
    if (spec.segments[s].kind == SegmentKind::Glue) {
      const int count = static_cast<int>(list.size());
      for (int i = 0; i < count; ++i) {
        auto& cls = mesh.node_class[list[i]];
        cls.param = i;
        cls.param_count = count;
        if (cls.kind != NodeKind::Corner) cls.label = spec.segments[s].label;
      }
    }
  }

  std::map<std::pair<int, int>, int> edge_use;
  for (const auto& t : mesh.triangles)
    for (int i = 0; i < 3; ++i) ++edge_use[{std::min(t[i], t[(i + 1) % 3]), std::max(t[i], t[(i + 1) % 3])}];
  for (const auto& t : mesh.triangles) {
    for (int i = 0; i < 3; ++i) {
      const int a = t[i], b = t[(i + 1) % 3];
      if (edge_use[{std::min(a, b), std::max(a, b)}] != 1) continue;
      const auto common = intersect(node_edges[a], node_edges[b]);
      if (common.size() != 1) throw std::logic_error("mesh_tile: boundary edge not on a polygon edge");
      mesh.boundary_edges.push_back({a, b, spec.edge_segment[common[0]]});
    }
  }
  return mesh;
}

nlohmann::json to_json(const TileSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["labels"] = spec.labels;
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : spec.points) pts.push_back({p.x, p.y});
  j["points"] = pts;
  j["polygon_size"] = spec.polygon_size;
  j["edge_segment"] = spec.edge_segment;
  nlohmann::json segs = nlohmann::json::array();
  for (const auto& s : spec.segments) {
    if (s.kind == SegmentKind::Glue) segs.push_back({{"kind", "glue"}, {"label", spec.labels[s.label]}});
    else segs.push_back({{"kind", "free"}});
  }
  j["segments"] = segs;
  j["coarse"] = spec.coarse;
  nlohmann::json syms = nlohmann::json::array();
  for (const auto& s : spec.symmetries) {
    const auto& m = s.map;
    syms.push_back({{"name", s.name}, {"affine", {m.a, m.b, m.c, m.d, m.e, m.f}}, {"label_perm", s.label_perm}});
  }
  j["symmetries"] = syms;
  return j;
}

}  // namespace isospec
