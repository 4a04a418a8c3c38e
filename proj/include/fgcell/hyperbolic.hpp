#pragma once

#include <vector>

#include "fgcell/coords.hpp"
#include "fgcell/surface.hpp"

namespace fg {

struct LambdaLengths {
  Triangulation chart;
  std::vector<double> lambda;  // by edge
};

// Both orientations of an edge get lambda^2; a triangle with edge values
// a, b, c gets sqrt(2abc). Float backend.
ACoords embed_penner(const LambdaLengths& l);

// sqrt(ab)(c + d - e) + sqrt(cd)(a + b - e), with e the squared length of the
// edge and a, b (c, d) the squared lengths of the other sides of the two
// triangles at it. Throws UNKNOWN_EDGE.
double hyperbolic_outitude_value(const LambdaLengths& l, int e);
bool hyperbolic_outitude_positive(const LambdaLengths& l, int e);

// Lengths of the diagonals d_1 .. d_{n-3} of the regular n-gon with unit
// sides, where d_k spans k+1 sides. From the Chebyshev recurrence
// d_k = d_1 d_{k-1} - d_{k-2}, d_0 = 1, d_1 = 2 cos(pi/n).
std::vector<double> diagonal_lambdas(int n);
// The same values from d_k = (d_{k-1}^2 - 1) / d_{k-2}.
std::vector<double> diagonal_lambdas_ratio(int n);

// Unit lambda lengths on kept edges and regular-polygon diagonals on the fan
// diagonals of every polygon.
LambdaLengths cell_center_lambdas(const CellDecomposition& cell);
ACoords cell_center(const CellDecomposition& cell);

}  // namespace fg
