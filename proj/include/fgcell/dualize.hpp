#pragma once

#include "fgcell/coords.hpp"

namespace fg {

// Projective duality: every oriented edge takes the parameter of the opposite
// orientation, and a triangle parameter A becomes (P + P') / A where P and P'
// are the products of the triangle's three edge parameters in either cyclic
// direction. An involution.
ACoords dual_coords(const ACoords& c);

}  // namespace fg
