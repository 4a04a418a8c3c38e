#pragma once

#include <string>

#include "fgcell/coords.hpp"
#include "fgcell/surface.hpp"

namespace fg {

// Relabeling-invariant encodings: a breadth-first serialization from every
// starting side, keeping the lexicographically least. Coordinates, when
// given, must live on the same chart.
std::string canonical_encoding(const Triangulation& tri, const ACoords* coords = nullptr);

// Encodes the cells (polygons and kept triangles) glued along kept edges,
// with the kept-edge parameters and the parameters of kept triangles. It does
// not depend on how the polygons are subdivided.
std::string canonical_encoding(const CellDecomposition& cell, const ACoords* coords = nullptr);

}  // namespace fg
