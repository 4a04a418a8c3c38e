#pragma once

#include <array>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "fgcell/coords.hpp"
#include "fgcell/surface.hpp"

namespace fg {
// Readable gtest diagnostics.
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.str(); }
}  // namespace fg

namespace fgtest {

using fg::ACoords;
using fg::Scalar;
using fg::Triangulation;

// Once-punctured torus: triangles A, B; c = (A,0)-(B,2), a = (A,1)-(B,0),
// b = (A,2)-(B,1).
Triangulation torus();
// Coordinates from the tuple (A, B, a+, a-, b+, b-, c+, c-).
ACoords torus_coords(const std::array<Scalar, 8>& v);
ACoords torus_coords(const Triangulation& chart, const std::array<Scalar, 8>& v);
std::array<Scalar, 8> torus_tuple(const ACoords& c);
ACoords torus_alpha0();

// Thrice-punctured sphere: the double of a triangle.
Triangulation s03();
// Four-punctured sphere as the boundary of a tetrahedron with faces
// F0 = (1,2,3), F1 = (0,3,2), F2 = (0,1,3), F3 = (0,2,1); edge "eij" joins
// vertices i < j.
Triangulation s04();
// Genus two with one puncture, triangles T0..T5 and edges b0..b8.
Triangulation genus2();
ACoords genus2_alpha();

Triangulation load_surface(const std::string& file);  // relative to data/
ACoords load_coords(const std::string& file, const Triangulation& chart);

Scalar q(long num, long den = 1);
Scalar random_rational(std::mt19937_64& rng, int max_num = 30, int max_den = 12);
ACoords random_coords(const Triangulation& chart, std::mt19937_64& rng);
std::vector<Scalar> random_triangle_params(const Triangulation& chart, std::mt19937_64& rng);
// A random word of flippable edges of length `len`, with the chart it ends on.
std::vector<std::string> random_flip_word(const Triangulation& chart, int len, std::mt19937_64& rng);

// Cells used across the suites.
fg::CellDecomposition square_cell();    // torus without c
fg::CellDecomposition pentagon_cell();  // S_{0,4} without e23, e03
fg::CellDecomposition hexagon_cell();   // S_{0,4} without e23, e03, e01
fg::CellDecomposition octagon_cell();   // genus two keeping b0..b3

}  // namespace fgtest
