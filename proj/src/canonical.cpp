#include "fgcell/canonical.hpp"

#include <cmath>

#include "fgcell/errors.hpp"

namespace fg {

CanonicalResult canonicalize(const ACoords& coords, int max_flips) {
  if (max_flips < 1) throw Error(ErrorCode::MalformedInput, "max_flips must be positive");
  coords.validate();
  CanonicalResult res{coords, {}};
  for (;;) {
    int pick = -1;
    Scalar worst;
    bool stuck = false;
    for (int e = 0; e < res.coords.chart.num_edges(); ++e) {
      Scalar out = outitude(res.coords, e);
      if (out.sign_tol() >= 0) continue;
      if (!is_flippable(res.coords.chart, e)) {
        stuck = true;
        continue;
      }
      if (pick < 0 || out < worst ||
          (out == worst && res.coords.chart.edge_name(e) < res.coords.chart.edge_name(pick))) {
        pick = e;
        worst = out;
      }
    }
    if (pick < 0) {
      if (stuck) throw Error(ErrorCode::NotCanonical, "only self-folded edges have negative outitude");
      return res;
    }
    if (static_cast<int>(res.flips.size()) >= max_flips) {
      std::string neg;
      for (int e = 0; e < res.coords.chart.num_edges(); ++e)
        if (outitude(res.coords, e).sign_tol() < 0) neg += (neg.empty() ? "" : ", ") + res.coords.chart.edge_name(e);
      throw Error(ErrorCode::FlipBudgetExceeded,
                  std::to_string(max_flips) + " flips done, negative edges remain: " + neg);
    }
    res.flips.push_back(res.coords.chart.edge_name(pick));
    res.coords = flip_transform(res.coords, pick);
  }
}

CellDecomposition extract_cell_decomposition(const ACoords& coords) {
  std::vector<std::string> kept;
  for (int e = 0; e < coords.chart.num_edges(); ++e) {
    int s = outitude(coords, e).sign_tol();
    if (s < 0)
      throw Error(ErrorCode::NotCanonical, "edge '" + coords.chart.edge_name(e) + "' has negative outitude");
    if (s > 0) kept.push_back(coords.chart.edge_name(e));
  }
  return standard_subdivision(coords.chart, kept);
}

std::string membership_name(Membership m) {
  switch (m) {
    case Membership::Interior: return "INTERIOR";
    case Membership::ClosureBoundary: return "CLOSURE_BOUNDARY";
    case Membership::Outside: return "OUTSIDE";
  }
  return "";
}

MembershipReport cell_membership(const ACoords& coords, const CellDecomposition& cell) {
  if (!(coords.chart == cell.chart))
    throw Error(ErrorCode::ChartMismatch, "coordinates are not on the cell's chart; apply its flips first");
  MembershipReport rep{Membership::Interior, false};
  bool inside_closure = true;
  for (int e = 0; e < coords.chart.num_edges(); ++e) {
    Scalar out = outitude(coords, e);
    int s = out.sign_tol();
    if (cell.kept[e]) {
      if (s < 0) inside_closure = false;
      if (s == 0 && rep.verdict == Membership::Interior) rep.verdict = Membership::ClosureBoundary;
      if (!out.is_exact() && std::abs(out.to_double()) < kTolerance) rep.borderline = true;
    } else if (s != 0) {
      inside_closure = false;
    }
  }
  if (!inside_closure) rep.verdict = Membership::Outside;
  return rep;
}

namespace {

void check_chart_params(const CellDecomposition& cell, const std::vector<Scalar>& tri) {
  if (static_cast<int>(tri.size()) != cell.chart.num_triangles())
    throw Error(ErrorCode::MalformedInput, "need one parameter per triangle of the cell chart");
  for (const auto& v : tri)
    if (v.sign() <= 0) throw Error(ErrorCode::NonpositiveParameter, "triangle parameters must be positive");
}

void solve_inward(ACoords& c, const CellDecomposition& cell) {
  for (const Polygon& P : cell.polygons)
    for (int m = 0; m + 1 < P.n - 2; ++m) c.at(P.inward_side(m)) = solve_zero_outitude(c, P.diagonals[m], P.inward_side(m));
}

}  // namespace

ACoords sample_cell(const CellDecomposition& cell, const std::vector<Scalar>& triangle_params) {
  check_chart_params(cell, triangle_params);
  const Backend backend = triangle_params.empty() ? Backend::Rational : triangle_params[0].backend();
  ACoords c = ACoords::ones(cell.chart, backend);
  c.tri = triangle_params;
  for (const Polygon& P : cell.polygons) {
    Scalar lo = c.tri[P.triangles[0]], hi = lo;
    for (int t : P.triangles) {
      if (c.tri[t] < lo) lo = c.tri[t];
      if (c.tri[t] > hi) hi = c.tri[t];
    }
    const Scalar eps = lo / (lo + hi);
    Scalar power = Scalar(1).to(backend), value = Scalar(1).to(backend);
    for (int m = 0; m + 1 < P.n - 2; ++m) {
      value += power;  // 1 + eps^0 + ... + eps^m
      power *= eps;
      c.at(P.outward_side(m)) = value;
    }
  }
  solve_inward(c, cell);
  return c;
}

ACoords deform_toward_one(const ACoords& coords, const CellDecomposition& cell, const Scalar& t) {
  if (t.sign() <= 0 || t > Scalar(1))
    throw Error(ErrorCode::MalformedInput, "deformation parameter must lie in (0, 1]");
  if (cell_membership(coords, cell).verdict != Membership::Interior)
    throw Error(ErrorCode::NotInCell, "coordinates are not in the interior of the cell");
  const Scalar one = Scalar(1).to(coords.backend);
  auto phi = [&](const Scalar& x) { return t * x + one - t; };
  ACoords c = coords;
  for (int i = 0; i < c.chart.num_sides(); ++i)
    if (cell.kept[c.chart.edge_at(Triangulation::side_at(i))]) c.side[i] = phi(c.side[i]);
  for (const Polygon& P : cell.polygons)
    for (int m = 0; m + 1 < P.n - 2; ++m) c.at(P.outward_side(m)) = phi(c.at(P.outward_side(m)));
  solve_inward(c, cell);
  return c;
}

}  // namespace fg
