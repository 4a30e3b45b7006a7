#include "isospec/schreier.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace isospec {

SchreierGraph::SchreierGraph(int vertex_count, std::vector<std::string> labels, std::vector<FullEdge> full,
                             std::vector<HalfEdge> half)
    : vertex_count_(vertex_count), labels_(std::move(labels)), full_(std::move(full)), half_(std::move(half)) {
  partner_.assign(labels_.size(), std::vector<int>(vertex_count_, -1));
  auto set = [&](int v, int label, int w) {
    if (label < 0 || label >= label_count() || v < 0 || v >= vertex_count_ || w < 0 || w >= vertex_count_)
      throw std::invalid_argument("SchreierGraph: edge out of range");
    if (partner_[label][v] >= 0) throw std::invalid_argument("SchreierGraph: vertex meets a label twice");
    partner_[label][v] = w;
  };
  for (const auto& e : full_) {
    if (e.a == e.b) throw std::invalid_argument("SchreierGraph: full edge is a loop");
    set(e.a, e.label, e.b);
    set(e.b, e.label, e.a);
  }
  for (const auto& h : half_) set(h.vertex, h.label, h.vertex);
  for (const auto& row : partner_)
    for (int w : row)
      if (w < 0) throw std::invalid_argument("SchreierGraph: vertex misses a label");
}

SchreierGraph build_schreier(const CosetAction& action) {
  std::vector<FullEdge> full;
  std::vector<HalfEdge> half;
  for (std::size_t k = 0; k < action.perm.size(); ++k) {
    if (!action.is_involutive(k))
      throw std::invalid_argument("build_schreier: generator " + action.generator_labels[k] + " is not an involution");
    const int label = static_cast<int>(k);
    for (int x = 0; x < action.coset_count; ++x) {
      const int y = action.perm[k][x];
      if (y == x) {
        half.push_back({x, label});
      } else if (x < y) {
        full.push_back({x, y, label});
      }
    }
  }
  return SchreierGraph(action.coset_count, action.generator_labels, std::move(full), std::move(half));
}

SchreierGraph relabel(const SchreierGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count()) throw std::invalid_argument("relabel: wrong permutation size");
  std::vector<FullEdge> full;
  std::vector<HalfEdge> half;
  for (const auto& e : g.full_edges()) full.push_back({perm[e.a], perm[e.b], e.label});
  for (const auto& h : g.half_edges()) half.push_back({perm[h.vertex], h.label});
  return SchreierGraph(g.vertex_count(), g.labels(), std::move(full), std::move(half));
}

namespace {

// Neighbours over full edges, ascending by vertex then label; parallel edges
// collapse onto the smallest label.
std::vector<std::vector<std::pair<int, int>>> simple_adjacency(const SchreierGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int l = 0; l < g.label_count(); ++l) {
      const int w = g.partner(v, l);
      if (w == v) continue;
      auto it = std::find_if(adj[v].begin(), adj[v].end(), [&](auto& p) { return p.first == w; });
      if (it == adj[v].end()) adj[v].push_back({w, l});
    }
    std::sort(adj[v].begin(), adj[v].end());
  }
  return adj;
}

int label_between(const std::vector<std::vector<std::pair<int, int>>>& adj, int a, int b) {
  for (const auto& [w, l] : adj[a])
    if (w == b) return l;
  return -1;
}

}  // namespace

OrientabilityVerdict is_orientable(const SchreierGraph& g) {
  const auto adj = simple_adjacency(g);
  const int n = g.vertex_count();
  OrientabilityVerdict v;

  // Reflection gluing swaps the two sides of a tile, so the surface is
  // orientable exactly when full edges admit a proper 2-colouring.
  std::vector<int> color(n, 0);
  bool bipartite = true;
  for (int s = 0; s < n && bipartite; ++s) {
    if (color[s] != 0) continue;
    color[s] = 1;
    std::deque<int> q{s};
    while (!q.empty() && bipartite) {
      const int x = q.front();
      q.pop_front();
      for (const auto& [y, l] : adj[x]) {
        if (color[y] == 0) {
          color[y] = -color[x];
          q.push_back(y);
        } else if (color[y] == color[x]) {
          bipartite = false;
          break;
        }
      }
    }
  }
  if (bipartite) {
    v.orientable = true;
    v.coloring = std::move(color);
    return v;
  }

  // Shortest odd cycle: BFS from every root; an edge joining two vertices at
  // equal depth closes an odd walk, which is a cycle when the tree paths only
  // share the root.
  std::size_t best_len = std::numeric_limits<std::size_t>::max();
  std::vector<int> best;
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1), parent(n, -1);
    dist[root] = 0;
    std::deque<int> q{root};
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (const auto& [y, l] : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push_back(y);
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      if (dist[x] <= 0) continue;
      for (const auto& [y, l] : adj[x]) {
        if (y <= x || dist[y] != dist[x]) continue;
        const std::size_t len = 2 * static_cast<std::size_t>(dist[x]) + 1;
        if (len >= best_len) continue;
        std::vector<int> px, py;
        for (int z = x; z != root; z = parent[z]) px.push_back(z);
        for (int z = y; z != root; z = parent[z]) py.push_back(z);
        std::set<int> sx(px.begin(), px.end());
        bool disjoint = true;
        for (int z : py) disjoint = disjoint && !sx.count(z);
        if (!disjoint) continue;
        std::vector<int> cycle{root};
        cycle.insert(cycle.end(), px.rbegin(), px.rend());
        cycle.insert(cycle.end(), py.begin(), py.end());
        best_len = len;
        best = std::move(cycle);
      }
    }
  }
  // Start at the smallest vertex and walk towards its smaller cycle neighbour.
  auto min_it = std::min_element(best.begin(), best.end());
  std::rotate(best.begin(), min_it, best.end());
  if (best.size() > 2 && best.back() < best[1]) std::reverse(best.begin() + 1, best.end());
  v.odd_cycle = best;
  for (std::size_t i = 0; i < best.size(); ++i)
    v.odd_cycle_labels.push_back(label_between(adj, best[i], best[(i + 1) % best.size()]));
  return v;
}

std::vector<BoundaryWalk> boundary_walks(const SchreierGraph& g, const std::vector<EdgeSlot>& order) {
  const int n = static_cast<int>(order.size());
  if (n == 0) throw std::invalid_argument("boundary_walks: empty tile edge order");
  for (const auto& s : order)
    if (s.glue && (s.label < 0 || s.label >= g.label_count()))
      throw std::invalid_argument("boundary_walks: tile edge label not present in graph");

  auto is_boundary = [&](int tile, int seg) {
    const auto& s = order[seg];
    return !s.glue || g.partner(tile, s.label) == tile;
  };
  auto wrap = [n](int i) { return ((i % n) + n) % n; };

  std::vector<std::vector<bool>> visited(g.vertex_count(), std::vector<bool>(n, false));
  std::vector<BoundaryWalk> walks;
  const int guard = 4 * g.vertex_count() * n + 8;
  for (int x0 = 0; x0 < g.vertex_count(); ++x0) {
    for (int p0 = 0; p0 < n; ++p0) {
      if (visited[x0][p0] || !is_boundary(x0, p0)) continue;
      BoundaryWalk walk;
      BoundaryStep cur{x0, p0, +1};
      for (int steps = 0;; ++steps) {
        if (steps > guard) throw std::logic_error("boundary_walks: walk did not close");
        visited[cur.vertex][cur.segment] = true;
        walk.push_back(cur);
        // Rotate around the end vertex through glued edges until the next boundary segment.
        int tile = cur.vertex;
        int a = cur.segment;
        int b = wrap(cur.segment + cur.direction);
        for (int turn = 0; !is_boundary(tile, b); ++turn) {
          if (turn > guard) throw std::logic_error("boundary_walks: vertex link did not terminate");
          tile = g.partner(tile, order[b].label);
          std::swap(a, b);
        }
        const int dir = (b == wrap(a + 1)) ? +1 : -1;
        cur = {tile, b, dir};
        if (cur.vertex == x0 && cur.segment == p0) break;
      }
      walks.push_back(std::move(walk));
    }
  }
  return walks;
}

std::string to_dot(const SchreierGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << " [shape=circle];\n";
  for (const auto& e : g.full_edges())
    os << "  " << e.a << " -- " << e.b << " [label=\"" << g.labels()[e.label] << "\"];\n";
  int stub = 0;
  for (const auto& h : g.half_edges()) {
    os << "  h" << stub << " [shape=point, width=0.05];\n";
    os << "  " << h.vertex << " -- h" << stub << " [label=\"" << g.labels()[h.label] << "\", style=dashed];\n";
    ++stub;
  }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const SchreierGraph& g) {
  nlohmann::json j;
  j["vertex_count"] = g.vertex_count();
  j["labels"] = g.labels();
  nlohmann::json full = nlohmann::json::array();
  for (const auto& e : g.full_edges()) full.push_back({{"a", e.a}, {"b", e.b}, {"label", g.labels()[e.label]}});
  nlohmann::json half = nlohmann::json::array();
  for (const auto& h : g.half_edges()) half.push_back({{"vertex", h.vertex}, {"label", g.labels()[h.label]}});
  j["full_edges"] = full;
  j["half_edges"] = half;
  return j;
}

nlohmann::json to_json(const SchreierGraph& g, const OrientabilityVerdict& v) {
  nlohmann::json j;
  j["orientable"] = v.orientable;
  if (v.orientable) {
    j["coloring"] = v.coloring;
  } else {
    j["odd_cycle"] = v.odd_cycle;
    std::vector<std::string> labels;
    for (int l : v.odd_cycle_labels) labels.push_back(l >= 0 ? g.labels()[l] : "?");
    j["odd_cycle_labels"] = labels;
  }
  return j;
}

}  // namespace isospec
