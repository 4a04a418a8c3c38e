#pragma once

#include <array>
#include <string>
#include <vector>

#include "fgcell/coords.hpp"
#include "fgcell/linalg.hpp"

namespace fg {

// Vectors C_0, C_1, C_2 and covectors r_0, r_1, r_2 of a triangle, indexed by
// the corners of the chart triangle.
struct ConcreteTriangle {
  std::array<Vec3, 3> C;
  std::array<Vec3, 3> r;

  Scalar det() const { return det_cols(C[0], C[1], C[2]); }
  // r_i . C_j
  Scalar pairing(int i, int j) const { return dot(r[i], C[j]); }
};

// Normalized so that C = diag(A, 1, 1).
ConcreteTriangle base_triangle(const ACoords& c, int t);

struct Flag {
  Vec3 r, C;
};

// The flag (r3, C3) on the far side of the edge C0 C2 of a known triangle with
// e03 = r0.C3, e23 = r2.C3, A023 = det(C0|C2|C3), r3.C0 = x and r3.C2 = y.
// Throws SINGULAR_SYSTEM.
Flag extend_across_edge(const Flag& f0, const Flag& f2, const Scalar& e03, const Scalar& e23, const Scalar& a023,
                        const Scalar& x, const Scalar& y);
// The same vector C3 from the explicit inverse of the system matrix, whose
// columns are C2, C0 and r2 x r0 scaled by the pairings of the known edge.
Vec3 next_vertex_closed_form(const Flag& f0, const Flag& f2, const Scalar& e03, const Scalar& e23,
                             const Scalar& a023);

struct LiftedTriangle {
  int tri;                   // chart triangle
  std::vector<int> word;     // slots crossed from the base, in order
  std::array<int, 3> flags;  // flag ids at corners 0..2
  int parent = -1;           // lifted index, -1 for the base
  int parent_slot = -1;      // slot of this triangle glued to the parent
  int depth = 0;
};

struct Development {
  ACoords coords;
  int depth = 0;
  std::vector<Flag> flags;
  std::vector<LiftedTriangle> triangles;  // breadth-first order; 0 is the base

  ConcreteTriangle concrete(int lifted) const;
  std::string lifted_name(int lifted) const;  // base id plus crossing word
};

// Lifts every triangle within `depth` crossings of the base in the universal
// cover (so the torus gives 1, 4, 10, 22, 46 triangles for depth 0..4).
Development develop(const ACoords& c, int base, int depth);

struct DevelopmentReport {
  bool determinants_positive = true;
  bool pairings_positive = true;
  bool round_trip_exact = true;
  std::vector<std::string> violations;
  bool ok() const { return determinants_positive && pairings_positive && round_trip_exact; }
};

DevelopmentReport verify_development(const Development& dev);

// e+ e- (det D + det D' - det C - det C') for the edge between a lifted
// triangle and its parent.
Scalar tetrahedron_outitude(const Development& dev, int lifted);

struct RenderOptions {
  int frame = 0;                           // lifted triangle fixing the affine chart
  const std::vector<bool>* highlight = nullptr;  // per chart edge
};

// Flag vectors in the affine chart where the covector sum of the frame
// triangle is one, in coordinates where the frame triangle is equilateral.
// Throws PROJECTION_FAILURE.
std::vector<std::array<double, 2>> project_development(const Development& dev, int frame = 0);

std::string render_svg(const Development& dev, int width_px, const RenderOptions& opt = {});

}  // namespace fg
