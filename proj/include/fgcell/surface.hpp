#pragma once

#include <array>
#include <compare>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fg {

struct SurfaceSignature {
  int genus = 0;
  int punctures = 1;
  bool operator==(const SurfaceSignature&) const = default;
};

// Slot i of a triangle is the side from corner i to corner i+1 (mod 3); the
// corners are ordered by the surface orientation. A side also names the
// oriented edge running along it, whose tail is corner `slot`.
struct Side {
  int tri = 0;
  int slot = 0;
  auto operator<=>(const Side&) const = default;
};

inline int mod3(int i) { return ((i % 3) + 3) % 3; }
inline Side rotate(Side s, int by) { return {s.tri, mod3(s.slot + by)}; }

struct Gluing {
  std::string edge;
  std::array<std::pair<std::string, int>, 2> sides;
};

class Triangulation {
 public:
  // Validates and builds. Throws fg::Error with COUNT_MISMATCH, UNGLUED_SLOT,
  // DUPLICATE_SLOT, DISCONNECTED or PUNCTURE_MISMATCH.
  static Triangulation build(SurfaceSignature sig, std::vector<std::string> triangles,
                             const std::vector<Gluing>& gluings);

  const SurfaceSignature& signature() const { return sig_; }
  int num_triangles() const { return static_cast<int>(tri_names_.size()); }
  int num_edges() const { return static_cast<int>(edge_names_.size()); }
  int num_sides() const { return 3 * num_triangles(); }
  int num_punctures() const { return static_cast<int>(puncture_corners_.size()); }

  const std::string& triangle_name(int t) const { return tri_names_[t]; }
  const std::string& edge_name(int e) const { return edge_names_[e]; }
  int triangle_index(const std::string& name) const;  // MALFORMED_INPUT if absent
  int edge_index(const std::string& name) const;      // UNKNOWN_EDGE if absent
  bool has_edge(const std::string& name) const { return edge_ids_.count(name) > 0; }

  static int side_index(Side s) { return 3 * s.tri + s.slot; }
  static Side side_at(int index) { return {index / 3, index % 3}; }

  int edge_at(Side s) const { return side_edge_[side_index(s)]; }
  Side opposite(Side s) const { return opp_[side_index(s)]; }
  const std::array<Side, 2>& sides(int e) const { return edge_sides_[e]; }

  // Punctures are the orbits of corners; corner k of triangle t is written as
  // the Side (t, k) whose tail it is.
  int puncture_of_corner(Side corner) const { return corner_puncture_[side_index(corner)]; }
  int tail_puncture(Side s) const { return puncture_of_corner(s); }
  int head_puncture(Side s) const { return puncture_of_corner(rotate(s, 1)); }
  // Corners around puncture p in counter-clockwise order.
  const std::vector<Side>& puncture_corners(int p) const { return puncture_corners_[p]; }
  std::string puncture_name(int p) const { return "p" + std::to_string(p); }
  int puncture_index(const std::string& name) const;

  // Next corner counter-clockwise around the same puncture.
  Side next_corner_ccw(Side corner) const { return opposite(rotate(corner, 2)); }

  std::vector<Gluing> gluings() const;
  const std::vector<std::string>& triangle_names() const { return tri_names_; }

  bool operator==(const Triangulation& o) const;

 private:
  SurfaceSignature sig_;
  std::vector<std::string> tri_names_;
  std::vector<std::string> edge_names_;
  std::unordered_map<std::string, int> tri_ids_;
  std::unordered_map<std::string, int> edge_ids_;
  std::vector<int> side_edge_;
  std::vector<Side> opp_;
  std::vector<std::array<Side, 2>> edge_sides_;
  std::vector<int> corner_puncture_;
  std::vector<std::vector<Side>> puncture_corners_;
};

struct FlipResult {
  Triangulation tri;
  // side_map[old side index] = new side. The four sides of the surrounding
  // quadrilateral keep their meaning; the two sides of the flipped edge map to
  // the two sides of the new diagonal, which keeps the edge id.
  std::vector<Side> side_map;
};

// Flipping an edge whose two sides lie on one (self-folded) triangle is not
// possible and raises MALFORMED_INPUT.
bool is_flippable(const Triangulation& tri, int e);
FlipResult flip_edge(const Triangulation& tri, int e);
FlipResult flip_edge(const Triangulation& tri, const std::string& e);

// --- monodromy graph ---------------------------------------------------------

// Nodes are the sides (3 per triangle, index Triangulation::side_index).
struct MonodromyGraph {
  struct TriangleLink {
    int tri;
    int from, to;  // node from -> node to follows the triangle orientation
  };
  struct EdgeLink {
    int edge;
    int a, b;  // the two sides of the edge; each carries the quadruple ratio
               // of the oriented edge along it
  };
  int num_nodes = 0;
  std::vector<TriangleLink> triangle_links;
  std::vector<EdgeLink> edge_links;
};

MonodromyGraph monodromy_graph(const Triangulation& tri);

struct PathStep {
  enum class Kind { Triangle, Edge };
  Kind kind;
  int from;  // node (side index)
  int to;
};
using MonodromyPath = std::vector<PathStep>;

// Closed path once counter-clockwise around the puncture, alternating a
// triangle step (clockwise inside the triangle) and an edge crossing.
MonodromyPath peripheral_path(const Triangulation& tri, int puncture);

// --- cell decompositions ------------------------------------------------------

struct Polygon {
  int n = 0;                    // number of sides
  std::vector<int> triangles;   // A_0 .. A_{n-3}; A_m has corners V_0, V_{m+1}, V_{m+2}
  std::vector<int> v0_corner;   // corner of A_m at V_0
  std::vector<int> diagonals;   // a_0 .. a_{n-4}; a_m joins V_0 and V_{m+2}
  std::vector<Side> boundary;   // b_0 .. b_{n-1}; b_i runs from V_i to V_{i+1}

  // Side of a_m carrying the parameter of the orientation away from V_0
  // (inside A_{m+1}) and towards V_0 (inside A_m).
  Side outward_side(int m) const { return {triangles[m + 1], v0_corner[m + 1]}; }
  Side inward_side(int m) const { return {triangles[m], mod3(v0_corner[m] + 2)}; }
};

struct CellDecomposition {
  Triangulation chart;        // a standard subdivision
  std::vector<bool> kept;     // per edge of chart
  std::vector<Polygon> polygons;
  std::vector<std::string> flips;  // flip word taking the input chart to `chart`

  std::vector<std::string> kept_edges() const;  // sorted names
  bool is_triangulation() const { return polygons.empty(); }
};

// Re-triangulates every complementary polygon of `kept` as a fan from its
// designated corner (least (triangle index, corner) in the polygon) using
// edge flips. Throws UNKNOWN_EDGE or NOT_A_CELL_DECOMPOSITION.
CellDecomposition standard_subdivision(const Triangulation& chart, const std::vector<std::string>& kept);

}  // namespace fg
