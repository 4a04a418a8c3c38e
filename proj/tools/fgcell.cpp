// Command-line front end: every subcommand reads a surface file and, where it
// needs one, a coordinates file, and writes JSON with sorted keys.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>

#include "fgcell/canonical.hpp"
#include "fgcell/develop.hpp"
#include "fgcell/dualize.hpp"
#include "fgcell/errors.hpp"
#include "fgcell/holonomy.hpp"
#include "fgcell/hyperbolic.hpp"
#include "fgcell/io.hpp"

using namespace fg;

namespace {

struct Common {
  std::string surface;
  std::string coords;
  std::string output = "-";
  std::string backend;
};

void add_common(CLI::App* cmd, Common& c, bool needs_coords) {
  cmd->add_option("--surface", c.surface, "surface JSON file ('-' for stdin)")->required();
  auto* o = cmd->add_option("--coords", c.coords, "coordinates JSON file ('-' for stdin)");
  if (needs_coords) o->required();
  cmd->add_option("--output", c.output, "output file ('-' for stdout)");
  cmd->add_option("--backend", c.backend, "rational or float")->check(CLI::IsMember({"rational", "float"}));
}

Triangulation load_chart(const Common& c) { return surface_from_json(read_json(c.surface)); }

ACoords load_coords(const Common& c, const Triangulation& chart) {
  ACoords a = coords_from_json(read_json(c.coords), chart);
  if (!c.backend.empty()) a = a.to(parse_backend(c.backend));
  return a;
}

std::vector<std::string> split_edges(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

json outitude_map(const ACoords& c) {
  json o = json::object();
  for (int e = 0; e < c.chart.num_edges(); ++e) o[c.chart.edge_name(e)] = scalar_to_json(outitude(c, e));
  return o;
}

void emit(const Common& c, const json& j) { write_text(c.output, j.dump(2) + "\n"); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fock-Goncharov A-coordinates, canonical cell decompositions and holonomy"};
  app.require_subcommand(1);

  Common validate_o, outitude_o, flip_o, canon_o, member_o, sample_o, deform_o, xco_o, hol_o, dual_o, penner_o,
      center_o, dev_o;

  auto* validate = app.add_subcommand("validate", "check a surface file");
  add_common(validate, validate_o, false);

  auto* outit = app.add_subcommand("outitude", "outitude of every edge");
  add_common(outit, outitude_o, true);

  std::string flip_edge_name;
  auto* flip = app.add_subcommand("flip", "flip one edge");
  add_common(flip, flip_o, false);
  flip->add_option("--edge", flip_edge_name, "edge id")->required();

  int max_flips = 1000;
  auto* canon = app.add_subcommand("canonicalize", "flip to a canonical triangulation");
  add_common(canon, canon_o, true);
  canon->add_option("--max-flips", max_flips, "flip budget")->check(CLI::PositiveNumber);

  std::string member_cell;
  auto* member = app.add_subcommand("membership", "classify coordinates against a cell");
  add_common(member, member_o, true);
  member->add_option("--cell", member_cell, "comma-separated kept edges")->required();

  std::string sample_cell_list, sample_params;
  auto* sample = app.add_subcommand("sample-cell", "explicit interior point of a cell");
  add_common(sample, sample_o, false);
  sample->add_option("--cell", sample_cell_list, "comma-separated kept edges")->required();
  sample->add_option("--triangle-params", sample_params, "JSON object of triangle parameters (default all 1)");

  std::string deform_cell, deform_t;
  auto* deform = app.add_subcommand("deform", "move an interior point toward the all-ones structure");
  add_common(deform, deform_o, true);
  deform->add_option("--cell", deform_cell, "comma-separated kept edges")->required();
  deform->add_option("--t", deform_t, "parameter in (0, 1], e.g. 1/2")->required();

  auto* xco = app.add_subcommand("xcoords", "triple and quadruple ratios");
  add_common(xco, xco_o, true);

  std::string puncture;
  auto* hol = app.add_subcommand("holonomy", "peripheral holonomy at a puncture");
  add_common(hol, hol_o, true);
  hol->add_option("--puncture", puncture, "puncture id (p0, p1, ...)")->required();

  auto* dual = app.add_subcommand("dual", "projective dual coordinates");
  add_common(dual, dual_o, true);

  std::string lambdas_file;
  auto* penner = app.add_subcommand("embed-penner", "hyperbolic structure from lambda lengths");
  add_common(penner, penner_o, false);
  penner->add_option("--lambdas", lambdas_file, "JSON object edge -> lambda length")->required();

  std::string center_cell;
  auto* center = app.add_subcommand("center", "centre of a cell");
  add_common(center, center_o, false);
  center->add_option("--cell", center_cell, "comma-separated kept edges")->required();

  std::string base, svg_file;
  int depth = 2, width = 800;
  bool highlight = false, dump_flags = false;
  auto* dev = app.add_subcommand("develop", "develop into R^3 and optionally render");
  add_common(dev, dev_o, true);
  dev->add_option("--base", base, "base triangle id")->required();
  dev->add_option("--depth", depth, "crossings from the base")->check(CLI::NonNegativeNumber);
  dev->add_option("--svg", svg_file, "write an SVG drawing");
  dev->add_option("--width", width, "SVG width in pixels")->check(CLI::PositiveNumber);
  dev->add_flag("--highlight-cell", highlight, "mark edges with positive outitude");
  dev->add_flag("--json", dump_flags, "include every flag");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*validate) {
      Triangulation T = load_chart(validate_o);
      json val = json::array();
      for (int p = 0; p < T.num_punctures(); ++p) val.push_back(T.puncture_corners(p).size());
      emit(validate_o, {{"valid", true},
                        {"triangles", T.num_triangles()},
                        {"edges", T.num_edges()},
                        {"punctures", T.num_punctures()},
                        {"puncture_valences", val}});
    } else if (*outit) {
      ACoords c = load_coords(outitude_o, load_chart(outitude_o));
      emit(outitude_o, {{"outitudes", outitude_map(c)}});
    } else if (*flip) {
      Triangulation T = load_chart(flip_o);
      json out;
      if (!flip_o.coords.empty()) {
        ACoords c = flip_transform(load_coords(flip_o, T), flip_edge_name);
        out = {{"chart", surface_to_json(c.chart)}, {"coords", coords_to_json(c)}};
      } else {
        out = {{"chart", surface_to_json(flip_edge(T, flip_edge_name).tri)}};
      }
      emit(flip_o, out);
    } else if (*canon) {
      CanonicalResult r = canonicalize(load_coords(canon_o, load_chart(canon_o)), max_flips);
      CellDecomposition cell = extract_cell_decomposition(r.coords);
      emit(canon_o, {{"flips", r.flips},
                     {"final_chart", surface_to_json(r.coords.chart)},
                     {"final_coords", coords_to_json(r.coords)},
                     {"outitudes", outitude_map(r.coords)},
                     {"cell", {{"kept_edges", cell.kept_edges()}, {"subdivision_flips", cell.flips}}}});
    } else if (*member) {
      Triangulation T = load_chart(member_o);
      CellDecomposition cell = standard_subdivision(T, split_edges(member_cell));
      ACoords c = chart_transition(load_coords(member_o, T), cell.flips);
      MembershipReport rep = cell_membership(c, cell);
      emit(member_o, {{"membership", membership_name(rep.verdict)},
                      {"borderline", rep.borderline},
                      {"subdivision_flips", cell.flips}});
    } else if (*sample) {
      Triangulation T = load_chart(sample_o);
      CellDecomposition cell = standard_subdivision(T, split_edges(sample_cell_list));
      const Backend be = sample_o.backend.empty() ? Backend::Rational : parse_backend(sample_o.backend);
      std::vector<Scalar> tp(cell.chart.num_triangles(), Scalar(1).to(be));
      if (!sample_params.empty()) {
        json j = read_json(sample_params);
        if (!j.is_object() || static_cast<int>(j.size()) != cell.chart.num_triangles())
          throw Error(ErrorCode::MalformedInput, "triangle parameters must name every triangle once");
        for (auto it = j.begin(); it != j.end(); ++it)
          tp[cell.chart.triangle_index(it.key())] = scalar_from_json(*it, be);
      }
      ACoords c = sample_cell(cell, tp);
      emit(sample_o, {{"chart", surface_to_json(c.chart)},
                      {"coords", coords_to_json(c)},
                      {"subdivision_flips", cell.flips}});
    } else if (*deform) {
      Triangulation T = load_chart(deform_o);
      CellDecomposition cell = standard_subdivision(T, split_edges(deform_cell));
      ACoords c = chart_transition(load_coords(deform_o, T), cell.flips);
      ACoords d = deform_toward_one(c, cell, Scalar::parse(deform_t, c.backend));
      emit(deform_o, {{"chart", surface_to_json(d.chart)}, {"coords", coords_to_json(d)}});
    } else if (*xco) {
      ACoords c = load_coords(xco_o, load_chart(xco_o));
      XCoords x = to_x_coords(c);
      json res = json::object();
      auto r = finite_area_residuals(x);
      for (int p = 0; p < c.chart.num_punctures(); ++p)
        res[c.chart.puncture_name(p)] = {scalar_to_json(r[p].outgoing), scalar_to_json(r[p].incoming)};
      json out = xcoords_to_json(x);
      out["finite_area_residuals"] = res;
      emit(xco_o, out);
    } else if (*hol) {
      ACoords c = load_coords(hol_o, load_chart(hol_o));
      Mat3 m = peripheral_holonomy(c, c.chart.puncture_index(puncture));
      emit(hol_o, {{"puncture", puncture}, {"matrix", matrix_to_json(m)}, {"parabolic", is_parabolic(m)}});
    } else if (*dual) {
      ACoords c = load_coords(dual_o, load_chart(dual_o));
      emit(dual_o, coords_to_json(dual_coords(c)));
    } else if (*penner) {
      Triangulation T = load_chart(penner_o);
      json j = read_json(lambdas_file);
      LambdaLengths l{T, std::vector<double>(T.num_edges(), 0.0)};
      if (!j.is_object() || static_cast<int>(j.size()) != T.num_edges())
        throw Error(ErrorCode::MalformedInput, "lambda lengths must name every edge once");
      for (auto it = j.begin(); it != j.end(); ++it)
        l.lambda[T.edge_index(it.key())] = scalar_from_json(*it, Backend::Float).to_double();
      emit(penner_o, coords_to_json(embed_penner(l)));
    } else if (*center) {
      Triangulation T = load_chart(center_o);
      CellDecomposition cell = standard_subdivision(T, split_edges(center_cell));
      ACoords c = cell_center(cell);
      emit(center_o, {{"chart", surface_to_json(c.chart)},
                      {"coords", coords_to_json(c)},
                      {"outitudes", outitude_map(c)},
                      {"subdivision_flips", cell.flips}});
    } else if (*dev) {
      ACoords c = load_coords(dev_o, load_chart(dev_o));
      Development d = develop(c, c.chart.triangle_index(base), depth);
      DevelopmentReport rep = verify_development(d);
      json out = {{"base", base},
                  {"depth", depth},
                  {"triangles", d.triangles.size()},
                  {"flags", d.flags.size()},
                  {"determinants_positive", rep.determinants_positive},
                  {"pairings_positive", rep.pairings_positive},
                  {"round_trip_exact", rep.round_trip_exact}};
      if (dump_flags) {
        json flags = json::array();
        for (const Flag& f : d.flags) {
          json v = json::array(), r = json::array();
          for (int i = 0; i < 3; ++i) {
            v.push_back(scalar_to_json(f.C[i]));
            r.push_back(scalar_to_json(f.r[i]));
          }
          flags.push_back({{"vector", v}, {"covector", r}});
        }
        json tris = json::array();
        for (size_t i = 0; i < d.triangles.size(); ++i)
          tris.push_back({{"name", d.lifted_name(static_cast<int>(i))}, {"flags", d.triangles[i].flags}});
        out["flag_data"] = flags;
        out["lifted_triangles"] = tris;
      }
      if (!svg_file.empty()) {
        std::vector<bool> kept(c.chart.num_edges());
        for (int e = 0; e < c.chart.num_edges(); ++e) kept[e] = outitude(c, e).sign_tol() > 0;
        RenderOptions opt;
        if (highlight) opt.highlight = &kept;
        write_text(svg_file, render_svg(d, width, opt));
      }
      emit(dev_o, out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_validation_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: INTERNAL: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
