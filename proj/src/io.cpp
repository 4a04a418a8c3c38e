#include "fgcell/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

#include "fgcell/errors.hpp"

namespace fg {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::MalformedInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::MalformedInput, std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

Triangulation surface_from_json(const json& j) {
  SurfaceSignature sig{field<int>(j, "genus"), field<int>(j, "punctures")};
  auto tris = field<std::vector<std::string>>(j, "triangles");
  std::vector<Gluing> gl;
  for (const json& g : field<json>(j, "gluings")) {
    Gluing x;
    x.edge = field<std::string>(g, "edge");
    const json sides = field<json>(g, "sides");
    if (!sides.is_array() || sides.size() != 2)
      throw Error(ErrorCode::MalformedInput, "edge '" + x.edge + "' needs exactly two sides");
    for (int i = 0; i < 2; ++i) {
      const json& s = sides[i];
      if (!s.is_array() || s.size() != 2 || !s[0].is_string() || !s[1].is_number_integer())
        throw Error(ErrorCode::MalformedInput, "side of edge '" + x.edge + "' must be [triangle, slot]");
      x.sides[i] = {s[0].get<std::string>(), s[1].get<int>()};
    }
    gl.push_back(std::move(x));
  }
  return Triangulation::build(sig, std::move(tris), gl);
}

json surface_to_json(const Triangulation& t) {
  json g = json::array();
  for (const Gluing& x : t.gluings())
    g.push_back({{"edge", x.edge},
                 {"sides", json::array({json::array({x.sides[0].first, x.sides[0].second}),
                                        json::array({x.sides[1].first, x.sides[1].second})})}});
  return {{"genus", t.signature().genus},
          {"punctures", t.signature().punctures},
          {"triangles", t.triangle_names()},
          {"gluings", g}};
}

std::string side_key(const Triangulation& t, Side s) {
  return "tail_" + t.triangle_name(s.tri) + "_s" + std::to_string(s.slot);
}

json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) return s.str();
  return s.to_double();
}

Scalar scalar_from_json(const json& j, Backend backend) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), backend);
  if (j.is_number_integer()) return Scalar(mpq_class(j.dump())).to(backend);
  if (j.is_number()) return Scalar::parse(j.dump(), backend);
  throw Error(ErrorCode::MalformedInput, "expected a number or a rational string, got " + j.dump());
}

ACoords coords_from_json(const json& j, const Triangulation& chart) {
  const Backend backend = parse_backend(field<std::string>(j, "backend"));
  ACoords c = ACoords::ones(chart, backend);
  const json tp = field<json>(j, "triangle_params");
  const json ep = field<json>(j, "edge_params");
  if (!tp.is_object() || !ep.is_object()) throw Error(ErrorCode::MalformedInput, "parameter maps must be objects");
  if (static_cast<int>(tp.size()) != chart.num_triangles())
    throw Error(ErrorCode::MalformedInput, "expected " + std::to_string(chart.num_triangles()) + " triangle parameters");
  for (auto it = tp.begin(); it != tp.end(); ++it) c.tri[chart.triangle_index(it.key())] = scalar_from_json(*it, backend);
  if (static_cast<int>(ep.size()) != chart.num_edges())
    throw Error(ErrorCode::MalformedInput, "expected " + std::to_string(chart.num_edges()) + " edge entries");
  for (auto it = ep.begin(); it != ep.end(); ++it) {
    const int e = chart.edge_index(it.key());
    if (!it->is_object() || it->size() != 2)
      throw Error(ErrorCode::MalformedInput, "edge '" + it.key() + "' needs two oriented parameters");
    for (Side s : chart.sides(e)) {
      const std::string key = side_key(chart, s);
      if (!it->contains(key)) throw Error(ErrorCode::MalformedInput, "edge '" + it.key() + "' lacks '" + key + "'");
      c.at(s) = scalar_from_json(it->at(key), backend);
    }
  }
  c.validate();
  return c;
}

json coords_to_json(const ACoords& c) {
  const Triangulation& T = c.chart;
  json tp = json::object(), ep = json::object();
  for (int t = 0; t < T.num_triangles(); ++t) tp[T.triangle_name(t)] = scalar_to_json(c.tri[t]);
  for (int e = 0; e < T.num_edges(); ++e) {
    json o = json::object();
    for (Side s : T.sides(e)) o[side_key(T, s)] = scalar_to_json(c.at(s));
    ep[T.edge_name(e)] = o;
  }
  return {{"backend", std::string(backend_name(c.backend))}, {"triangle_params", tp}, {"edge_params", ep}};
}

json xcoords_to_json(const XCoords& x) {
  const Triangulation& T = x.chart;
  json tr = json::object(), q = json::object();
  for (int t = 0; t < T.num_triangles(); ++t) tr[T.triangle_name(t)] = scalar_to_json(x.triple[t]);
  for (int e = 0; e < T.num_edges(); ++e) {
    json o = json::object();
    for (Side s : T.sides(e)) o[side_key(T, s)] = scalar_to_json(x.quadruple[Triangulation::side_index(s)]);
    q[T.edge_name(e)] = o;
  }
  return {{"triple_ratios", tr}, {"quadruple_ratios", q}};
}

json matrix_to_json(const Mat3& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(scalar_to_json(v));
    out.push_back(r);
  }
  return out;
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, "invalid JSON in '" + path + "': " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::MalformedInput, "cannot write '" + path + "'");
  out << text;
}

}  // namespace fg
