#pragma once

#include <json.hpp>
#include <string>

#include "fgcell/coords.hpp"
#include "fgcell/linalg.hpp"
#include "fgcell/surface.hpp"

namespace fg {

using nlohmann::json;

Triangulation surface_from_json(const json& j);
json surface_to_json(const Triangulation& t);

// Edge parameters are keyed "tail_<triangle>_s<slot>" by the side whose tail
// corner they leave from.
std::string side_key(const Triangulation& t, Side s);
ACoords coords_from_json(const json& j, const Triangulation& chart);
json coords_to_json(const ACoords& c);

// Rationals as "p/q" strings, doubles as numbers.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, Backend backend);

json xcoords_to_json(const XCoords& x);
json matrix_to_json(const Mat3& m);

// "-" means standard input / output.
json read_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace fg
