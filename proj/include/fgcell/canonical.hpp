#pragma once

#include <string>
#include <vector>

#include "fgcell/coords.hpp"
#include "fgcell/surface.hpp"

namespace fg {

struct CanonicalResult {
  ACoords coords;                  // on the final chart
  std::vector<std::string> flips;  // in the order performed
};

// Flips negative-outitude edges, most negative first (ties by edge name),
// until none is left. Edges whose two sides lie on one triangle cannot be
// flipped and are skipped. Throws FLIP_BUDGET_EXCEEDED or NOT_CANONICAL.
CanonicalResult canonicalize(const ACoords& coords, int max_flips = 1000);

// Keeps the edges with positive outitude; the zero-outitude edges become
// polygon diagonals, re-fanned as a standard subdivision. Throws NOT_CANONICAL.
CellDecomposition extract_cell_decomposition(const ACoords& coords);

enum class Membership { Interior, ClosureBoundary, Outside };
std::string membership_name(Membership m);

struct MembershipReport {
  Membership verdict = Membership::Outside;
  bool borderline = false;  // float backend: some kept-edge |Out| < tolerance
};

// Coordinates must already live on the cell's chart (CHART_MISMATCH).
MembershipReport cell_membership(const ACoords& coords, const CellDecomposition& cell);

// Point of the cell with the given triangle parameters: kept edges get 1,
// the diagonals of every polygon a geometric sequence outward and the
// zero-outitude solution inward.
ACoords sample_cell(const CellDecomposition& cell, const std::vector<Scalar>& triangle_params);

// Moves kept-edge and outward diagonal parameters linearly toward 1 (t = 1 is
// the identity) and re-solves the inward diagonal parameters. Throws
// NOT_IN_CELL unless the input is interior.
ACoords deform_toward_one(const ACoords& coords, const CellDecomposition& cell, const Scalar& t);

}  // namespace fg
