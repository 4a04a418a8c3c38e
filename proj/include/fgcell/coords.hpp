#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgcell/scalar.hpp"
#include "fgcell/surface.hpp"

namespace fg {

// One parameter per triangle (det of its vertex matrix) and one per side. The
// parameter stored at side (t, k) belongs to the oriented edge along that side
// with tail at corner k, i.e. r_k . C_{k+1} in triangle t.
struct ACoords {
  Triangulation chart;
  Backend backend = Backend::Rational;
  std::vector<Scalar> tri;   // by triangle index
  std::vector<Scalar> side;  // by side index

  const Scalar& at(Side s) const { return side[Triangulation::side_index(s)]; }
  Scalar& at(Side s) { return side[Triangulation::side_index(s)]; }

  static ACoords ones(const Triangulation& chart, Backend backend = Backend::Rational);

  // Throws NONPOSITIVE_PARAMETER, or MALFORMED_INPUT on size/backend mismatch.
  void validate() const;
  ACoords to(Backend b) const;

  bool operator==(const ACoords& o) const;
};

struct XCoords {
  Triangulation chart;
  std::vector<Scalar> triple;     // by triangle
  std::vector<Scalar> quadruple;  // by side: the oriented edge along it
};

// Parameters around an edge, named after the quadrilateral C0 C1 C2 C3 with
// the edge C0C2. Triangle A = (C2, C0, C1) meets the edge at slot k; triangle
// B = (C0, C2, C3) at slot j. Values are read per side, so self-glued
// neighbourhoods are handled like any lift.
struct EdgeNeighborhood {
  Side sa, sb;  // sides of the edge in A and B
  Scalar A, B;
  Scalar e_plus, e_minus;  // C0 -> C2 and C2 -> C0
  Scalar a_plus, a_minus, b_plus, b_minus, c_plus, c_minus, d_plus, d_minus;
};

EdgeNeighborhood edge_neighborhood(const ACoords& c, int e);

Scalar outitude(const ACoords& c, int e);
Scalar outitude(const ACoords& c, const std::string& e);
std::vector<Scalar> outitudes(const ACoords& c);

// Coordinates of the same structure after flipping e; the flipped chart comes
// from flip_edge.
ACoords flip_transform(const ACoords& c, int e);
ACoords flip_transform(const ACoords& c, const std::string& e);
ACoords chart_transition(const ACoords& c, const std::vector<std::string>& flips);

// Edge-id preserving isomorphism from `a` onto `b` (old side index -> new side),
// if there is one.
std::optional<std::vector<Side>> edge_preserving_isomorphism(const Triangulation& a, const Triangulation& b);
// All of them; there can be several when the surface has edge-fixing symmetries
// (the elliptic involution of the torus).
std::vector<std::vector<Side>> edge_preserving_isomorphisms(const Triangulation& a, const Triangulation& b);
// Moves coordinates along a chart isomorphism.
ACoords transport(const ACoords& c, const Triangulation& target, const std::vector<Side>& iso);
// Same structure, compared up to the edge-id preserving relabeling of charts.
bool same_structure(const ACoords& a, const ACoords& b);

// Throws NONPOSITIVE_SCALE for lambda <= 0.
ACoords rescale_vector(const ACoords& c, int puncture, const Scalar& lambda);
ACoords rescale_covector(const ACoords& c, int puncture, const Scalar& lambda);

XCoords to_x_coords(const ACoords& c);

struct FiniteAreaResidual {
  Scalar outgoing;  // product of quadruple ratios leaving the puncture
  Scalar incoming;  // product of incoming quadruple ratios and triple ratios
};
std::vector<FiniteAreaResidual> finite_area_residuals(const XCoords& x);

// Scales into the slice where the triangle parameters sum to one and the
// parameters leaving each puncture sum to one. Float backend only.
ACoords normalize_decorations(const ACoords& c);

// Value of the parameter at side `unknown` (a side of edge e) that makes the
// outitude of e vanish, all other parameters fixed. NONPOSITIVE_PARAMETER if
// the solution is not positive.
Scalar solve_zero_outitude(const ACoords& c, int e, Side unknown);

}  // namespace fg
