#include "fixtures.hpp"

#include <map>

#include "fgcell/io.hpp"

namespace fgtest {

using fg::Gluing;
using fg::Side;

Triangulation torus() {
  return Triangulation::build({1, 1}, {"A", "B"},
                              {{"a", {std::pair{"A", 1}, std::pair{"B", 0}}},
                               {"b", {std::pair{"A", 2}, std::pair{"B", 1}}},
                               {"c", {std::pair{"A", 0}, std::pair{"B", 2}}}});
}

ACoords torus_coords(const Triangulation& T, const std::array<Scalar, 8>& v) {
  ACoords c = ACoords::ones(T, v[0].backend());
  c.tri = {v[0], v[1]};
  c.at({1, 0}) = v[2];
  c.at({0, 1}) = v[3];
  c.at({1, 1}) = v[4];
  c.at({0, 2}) = v[5];
  c.at({1, 2}) = v[6];
  c.at({0, 0}) = v[7];
  return c;
}

ACoords torus_coords(const std::array<Scalar, 8>& v) { return torus_coords(torus(), v); }

std::array<Scalar, 8> torus_tuple(const ACoords& c) {
  return {c.tri[0], c.tri[1], c.at({1, 0}), c.at({0, 1}), c.at({1, 1}), c.at({0, 2}), c.at({1, 2}), c.at({0, 0})};
}

ACoords torus_alpha0() {
  return torus_coords({q(107, 12), q(95, 18), q(1), q(1), q(17, 6), q(25, 12), q(1145, 72), q(1289, 72)});
}

Triangulation s03() {
  return Triangulation::build({0, 3}, {"t0", "t1"},
                              {{"e0", {std::pair{"t0", 0}, std::pair{"t1", 2}}},
                               {"e1", {std::pair{"t0", 1}, std::pair{"t1", 1}}},
                               {"e2", {std::pair{"t0", 2}, std::pair{"t1", 0}}}});
}

Triangulation s04() {
  const std::vector<std::array<int, 3>> faces{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  std::map<std::pair<int, int>, std::vector<std::pair<std::string, int>>> by_edge;
  for (int f = 0; f < 4; ++f)
    for (int k = 0; k < 3; ++k) {
      int u = faces[f][k], v = faces[f][(k + 1) % 3];
      by_edge[{std::min(u, v), std::max(u, v)}].push_back({"F" + std::to_string(f), k});
    }
  std::vector<Gluing> gl;
  for (const auto& [uv, sides] : by_edge)
    gl.push_back({"e" + std::to_string(uv.first) + std::to_string(uv.second), {sides[0], sides[1]}});
  return Triangulation::build({0, 4}, {"F0", "F1", "F2", "F3"}, gl);
}

Triangulation genus2() {
  const std::vector<std::tuple<std::string, int, int, int, int>> g{
      {"b0", 0, 1, 2, 0}, {"b1", 0, 2, 4, 0}, {"b2", 5, 0, 3, 1}, {"b3", 1, 1, 5, 1}, {"b4", 0, 0, 1, 2},
      {"b5", 1, 0, 2, 2}, {"b6", 2, 1, 3, 2}, {"b7", 3, 0, 4, 2}, {"b8", 4, 1, 5, 2}};
  std::vector<Gluing> gl;
  for (const auto& [e, t0, s0, t1, s1] : g)
    gl.push_back({e, {std::pair{"T" + std::to_string(t0), s0}, std::pair{"T" + std::to_string(t1), s1}}});
  return Triangulation::build({2, 1}, {"T0", "T1", "T2", "T3", "T4", "T5"}, gl);
}

ACoords genus2_alpha() {
  ACoords c = ACoords::ones(genus2());
  // b0+, b2+, b5-, b6-, b7+ are 2 and b6+ is 3; the first side of each gluing
  // carries the + orientation.
  for (Side s : {Side{0, 1}, Side{5, 0}, Side{2, 2}, Side{3, 2}, Side{3, 0}}) c.at(s) = q(2);
  c.at({2, 1}) = q(3);
  return c;
}

Triangulation load_surface(const std::string& file) {
  return fg::surface_from_json(fg::read_json(std::string(FGCELL_DATA_DIR) + "/" + file));
}

ACoords load_coords(const std::string& file, const Triangulation& chart) {
  return fg::coords_from_json(fg::read_json(std::string(FGCELL_DATA_DIR) + "/" + file), chart);
}

Scalar q(long num, long den) { return Scalar::fraction(num, den); }

Scalar random_rational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<long> n(1, max_num), d(1, max_den);
  return q(n(rng), d(rng));
}

ACoords random_coords(const Triangulation& chart, std::mt19937_64& rng) {
  ACoords c = ACoords::ones(chart);
  for (auto& v : c.tri) v = random_rational(rng);
  for (auto& v : c.side) v = random_rational(rng);
  return c;
}

std::vector<Scalar> random_triangle_params(const Triangulation& chart, std::mt19937_64& rng) {
  std::vector<Scalar> out;
  for (int t = 0; t < chart.num_triangles(); ++t) out.push_back(random_rational(rng));
  return out;
}

std::vector<std::string> random_flip_word(const Triangulation& chart, int len, std::mt19937_64& rng) {
  std::vector<std::string> word;
  Triangulation cur = chart;
  for (int i = 0; i < len; ++i) {
    std::vector<int> ok;
    for (int e = 0; e < cur.num_edges(); ++e)
      if (fg::is_flippable(cur, e)) ok.push_back(e);
    if (ok.empty()) break;
    const int e = ok[std::uniform_int_distribution<size_t>(0, ok.size() - 1)(rng)];
    word.push_back(cur.edge_name(e));
    cur = fg::flip_edge(cur, e).tri;
  }
  return word;
}

fg::CellDecomposition square_cell() { return fg::standard_subdivision(torus(), {"a", "b"}); }
fg::CellDecomposition pentagon_cell() { return fg::standard_subdivision(s04(), {"e01", "e02", "e12", "e13"}); }
fg::CellDecomposition hexagon_cell() { return fg::standard_subdivision(s04(), {"e02", "e12", "e13"}); }
fg::CellDecomposition octagon_cell() { return fg::standard_subdivision(genus2(), {"b0", "b1", "b2", "b3"}); }

}  // namespace fgtest
