#pragma once

#include "fgcell/coords.hpp"
#include "fgcell/linalg.hpp"
#include "fgcell/surface.hpp"

namespace fg {

// Step matrices without their cube-root normalizations, so they are only
// meaningful projectively. eps = -1 gives the exact inverse of eps = +1.
// Throw NONPOSITIVE_PARAMETER.
Mat3 triangle_matrix(const Scalar& t, int eps = 1);
Mat3 edge_matrix(const Scalar& q_plus, const Scalar& q_minus);

// Product of step matrices along a path. A triangle step turning clockwise
// (slot s to slot s+2) contributes T(t)^{-1}, counter-clockwise T(t); an edge
// step leaving side s contributes E(q_s, q_opp(s)). The path is first reduced:
// consecutive turns in one triangle are merged and immediate edge backtracks
// cancelled. Throws MALFORMED_PATH if the steps do not chain.
Mat3 path_matrix(const XCoords& x, const MonodromyPath& path);

// Triple eigenvalue and not a multiple of the identity. Float input is tested
// with a relative tolerance. Throws SINGULAR_MATRIX.
bool is_parabolic(const Mat3& m);
bool is_scalar_matrix(const Mat3& m);

Mat3 peripheral_holonomy(const ACoords& coords, int puncture);

}  // namespace fg
