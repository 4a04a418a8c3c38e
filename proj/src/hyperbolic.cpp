#include "fgcell/hyperbolic.hpp"

#include <cmath>
#include <numbers>

#include "fgcell/errors.hpp"

namespace fg {

namespace {

void check(const LambdaLengths& l) {
  if (static_cast<int>(l.lambda.size()) != l.chart.num_edges())
    throw Error(ErrorCode::MalformedInput, "need one lambda length per edge");
  for (double v : l.lambda)
    if (!(v > 0) || !std::isfinite(v)) throw Error(ErrorCode::NonpositiveParameter, "lambda lengths must be positive");
}

}  // namespace

ACoords embed_penner(const LambdaLengths& l) {
  check(l);
  const Triangulation& T = l.chart;
  ACoords c = ACoords::ones(T, Backend::Float);
  auto sq = [&](Side s) { return l.lambda[T.edge_at(s)] * l.lambda[T.edge_at(s)]; };
  for (int i = 0; i < T.num_sides(); ++i) c.side[i] = Scalar(sq(Triangulation::side_at(i)));
  for (int t = 0; t < T.num_triangles(); ++t)
    c.tri[t] = Scalar(std::sqrt(2 * sq({t, 0}) * sq({t, 1}) * sq({t, 2})));
  return c;
}

double hyperbolic_outitude_value(const LambdaLengths& l, int e) {
  check(l);
  const Triangulation& T = l.chart;
  if (e < 0 || e >= T.num_edges()) throw Error(ErrorCode::UnknownEdge, "edge index out of range");
  auto sq = [&](Side s) { return l.lambda[T.edge_at(s)] * l.lambda[T.edge_at(s)]; };
  const Side sa = T.sides(e)[0], sb = T.sides(e)[1];
  const double a = sq(rotate(sa, 1)), b = sq(rotate(sa, 2)), c = sq(rotate(sb, 1)), d = sq(rotate(sb, 2));
  const double ee = l.lambda[e] * l.lambda[e];
  return std::sqrt(a * b) * (c + d - ee) + std::sqrt(c * d) * (a + b - ee);
}

bool hyperbolic_outitude_positive(const LambdaLengths& l, int e) { return hyperbolic_outitude_value(l, e) > kTolerance; }

std::vector<double> diagonal_lambdas(int n) {
  if (n < 4) throw Error(ErrorCode::MalformedInput, "polygons need at least 4 sides to have diagonals");
  const double d1 = 2 * std::cos(std::numbers::pi / n);
  std::vector<double> d{1.0, d1};
  for (int k = 2; k <= n - 3; ++k) d.push_back(d1 * d[k - 1] - d[k - 2]);
  return {d.begin() + 1, d.begin() + (n - 2)};
}

std::vector<double> diagonal_lambdas_ratio(int n) {
  if (n < 4) throw Error(ErrorCode::MalformedInput, "polygons need at least 4 sides to have diagonals");
  std::vector<double> d{1.0, 2 * std::cos(std::numbers::pi / n)};
  for (int k = 2; k <= n - 3; ++k) d.push_back((d[k - 1] * d[k - 1] - 1) / d[k - 2]);
  return {d.begin() + 1, d.begin() + (n - 2)};
}

LambdaLengths cell_center_lambdas(const CellDecomposition& cell) {
  LambdaLengths l{cell.chart, std::vector<double>(cell.chart.num_edges(), 1.0)};
  for (const Polygon& P : cell.polygons) {
    const auto d = diagonal_lambdas(P.n);
    for (int m = 0; m < static_cast<int>(P.diagonals.size()); ++m) l.lambda[P.diagonals[m]] = d[m];  // a_m spans m + 2 sides
  }
  return l;
}

ACoords cell_center(const CellDecomposition& cell) { return embed_penner(cell_center_lambdas(cell)); }

}  // namespace fg
