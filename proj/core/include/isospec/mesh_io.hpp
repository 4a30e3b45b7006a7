#pragma once

#include <iosfwd>
#include <string>

#include "isospec/surface.hpp"

namespace isospec {

/// OFF polygon file. Planar surfaces are written in their embedding with
/// shared vertices; abstract surfaces are written as an exploded layout with
/// every tile copy laid out on a grid, so glued nodes appear once per copy.
void write_off(std::ostream& os, const SurfaceMesh& m);
void write_off(const std::string& path, const SurfaceMesh& m);

/// JSON dump: tile, nodes, triangles, gluing records, boundary tags.
void write_mesh_json(const std::string& path, const SurfaceMesh& m);

}  // namespace isospec
