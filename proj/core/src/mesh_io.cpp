#include "isospec/mesh_io.hpp"

#include <fstream>
#include <iomanip>
#include <stdexcept>

namespace isospec {

void write_off(std::ostream& os, const SurfaceMesh& m) {
  const auto& tm = *m.tile;
  os << std::setprecision(17);
  os << "OFF\n";
  if (static_cast<int>(m.placements.size()) == m.tile_count) {
    const auto reps = m.representatives();
    const auto tris = m.triangles();
    os << m.node_count << " " << tris.size() << " 0\n";
    for (const auto& [t, v] : reps) {
      const Point2 p = m.placements[t](tm.nodes[v]);
      os << p.x << " " << p.y << " 0\n";
    }
    // Reflected copies are drawn with their triangles flipped.
    std::size_t i = 0;
    for (int t = 0; t < m.tile_count; ++t) {
      for (std::size_t k = 0; k < tm.triangles.size(); ++k, ++i) {
        auto tri = tris[i];
        if (m.placements[t].det() < 0) std::swap(tri[1], tri[2]);
        os << "3 " << tri[0] << " " << tri[1] << " " << tri[2] << "\n";
      }
    }
    return;
  }
  const double gap = 1.25 * tm.spec.diameter();
  const int columns = 4;
  const int n = tm.node_count();
  os << n * m.tile_count << " " << tm.triangles.size() * m.tile_count << " 0\n";
  for (int t = 0; t < m.tile_count; ++t) {
    const double dx = gap * (t % columns), dy = -gap * (t / columns);
    for (const auto& p : tm.nodes) os << p.x + dx << " " << p.y + dy << " 0\n";
  }
  for (int t = 0; t < m.tile_count; ++t)
    for (const auto& tri : tm.triangles)
      os << "3 " << tri[0] + t * n << " " << tri[1] + t * n << " " << tri[2] + t * n << "\n";
}

void write_off(const std::string& path, const SurfaceMesh& m) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  write_off(os, m);
}

void write_mesh_json(const std::string& path, const SurfaceMesh& m) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << to_json(m).dump(1) << "\n";
}

}  // namespace isospec
