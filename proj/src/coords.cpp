#include "fgcell/coords.hpp"

#include <cmath>

#include "fgcell/errors.hpp"

namespace fg {

ACoords ACoords::ones(const Triangulation& chart, Backend backend) {
  Scalar one = Scalar(1).to(backend);
  return {chart, backend, std::vector<Scalar>(chart.num_triangles(), one),
          std::vector<Scalar>(chart.num_sides(), one)};
}

void ACoords::validate() const {
  if (static_cast<int>(tri.size()) != chart.num_triangles() || static_cast<int>(side.size()) != chart.num_sides())
    throw Error(ErrorCode::MalformedInput, "coordinate count does not match the chart");
  for (int t = 0; t < chart.num_triangles(); ++t) {
    if (tri[t].backend() != backend)
      throw Error(ErrorCode::MalformedInput, "mixed backends in coordinates");
    if (tri[t].sign() <= 0)
      throw Error(ErrorCode::NonpositiveParameter, "triangle '" + chart.triangle_name(t) + "' has parameter " +
                                                       tri[t].str());
  }
  for (int i = 0; i < chart.num_sides(); ++i) {
    if (side[i].backend() != backend)
      throw Error(ErrorCode::MalformedInput, "mixed backends in coordinates");
    if (side[i].sign() <= 0) {
      Side s = Triangulation::side_at(i);
      throw Error(ErrorCode::NonpositiveParameter, "edge '" + chart.edge_name(chart.edge_at(s)) + "' at (" +
                                                       chart.triangle_name(s.tri) + ", " + std::to_string(s.slot) +
                                                       ") has parameter " + side[i].str());
    }
  }
}

ACoords ACoords::to(Backend b) const {
  ACoords out = *this;
  out.backend = b;
  for (auto& v : out.tri) v = v.to(b);
  for (auto& v : out.side) v = v.to(b);
  return out;
}

bool ACoords::operator==(const ACoords& o) const {
  return backend == o.backend && chart == o.chart && tri == o.tri && side == o.side;
}

EdgeNeighborhood edge_neighborhood(const ACoords& c, int e) {
  const Triangulation& T = c.chart;
  if (e < 0 || e >= T.num_edges()) throw Error(ErrorCode::UnknownEdge, "edge index out of range");
  const Side sa = T.sides(e)[0], sb = T.sides(e)[1];
  auto P = [&](Side s) { return c.at(s); };
  auto Q = [&](Side s) { return c.at(T.opposite(s)); };
  EdgeNeighborhood n;
  n.sa = sa;
  n.sb = sb;
  n.A = c.tri[sa.tri];
  n.B = c.tri[sb.tri];
  n.e_minus = P(sa);
  n.e_plus = P(sb);
  n.a_minus = P(rotate(sa, 1));
  n.a_plus = Q(rotate(sa, 1));
  n.b_minus = P(rotate(sa, 2));
  n.b_plus = Q(rotate(sa, 2));
  n.c_plus = P(rotate(sb, 1));
  n.c_minus = Q(rotate(sb, 1));
  n.d_plus = P(rotate(sb, 2));
  n.d_minus = Q(rotate(sb, 2));
  return n;
}

Scalar outitude(const ACoords& c, int e) {
  const EdgeNeighborhood n = edge_neighborhood(c, e);
  const Scalar ee = n.e_plus * n.e_minus;
  return n.A * (n.e_plus * n.c_plus + n.e_minus * n.d_minus - ee) +
         n.B * (n.e_plus * n.b_plus + n.e_minus * n.a_minus - ee);
}

Scalar outitude(const ACoords& c, const std::string& e) { return outitude(c, c.chart.edge_index(e)); }

std::vector<Scalar> outitudes(const ACoords& c) {
  std::vector<Scalar> out;
  for (int e = 0; e < c.chart.num_edges(); ++e) out.push_back(outitude(c, e));
  return out;
}

ACoords flip_transform(const ACoords& c, int e) {
  const EdgeNeighborhood n = edge_neighborhood(c, e);
  FlipResult fr = flip_edge(c.chart, e);
  const Scalar C = (n.A * n.c_plus + n.B * n.b_plus) / n.e_minus;
  const Scalar D = (n.A * n.d_minus + n.B * n.a_minus) / n.e_plus;
  const Scalar f_plus = (C * n.a_plus + D * n.b_minus) / n.A;
  const Scalar f_minus = (C * n.d_plus + D * n.c_minus) / n.B;

  ACoords out{std::move(fr.tri), c.backend, c.tri, c.side};
  for (int i = 0; i < c.chart.num_sides(); ++i) out.at(fr.side_map[i]) = c.side[i];
  const int tA = n.sa.tri, tB = n.sb.tri;
  out.tri[tA] = C;
  out.tri[tB] = D;
  out.at({tA, 0}) = f_minus;
  out.at({tB, 1}) = f_plus;
  return out;
}

ACoords flip_transform(const ACoords& c, const std::string& e) { return flip_transform(c, c.chart.edge_index(e)); }

ACoords chart_transition(const ACoords& c, const std::vector<std::string>& flips) {
  ACoords cur = c;
  for (const auto& e : flips) cur = flip_transform(cur, e);
  return cur;
}

std::vector<std::vector<Side>> edge_preserving_isomorphisms(const Triangulation& a, const Triangulation& b) {
  std::vector<std::vector<Side>> found;
  if (a.num_sides() != b.num_sides() || a.num_edges() != b.num_edges() || !(a.signature() == b.signature()))
    return found;
  if (a.num_sides() == 0) return {std::vector<Side>{}};
  const int e0 = a.edge_at({0, 0});
  if (!b.has_edge(a.edge_name(e0))) return found;
  for (Side start : b.sides(b.edge_index(a.edge_name(e0)))) {
    std::vector<Side> map(a.num_sides(), Side{-1, 0});
    std::vector<Side> stack{{0, 0}};
    map[0] = start;
    bool ok = true;
    while (ok && !stack.empty()) {
      Side s = stack.back();
      stack.pop_back();
      Side t = map[Triangulation::side_index(s)];
      if (a.edge_name(a.edge_at(s)) != b.edge_name(b.edge_at(t))) {
        ok = false;
        break;
      }
      for (auto [from, to] : {std::pair{rotate(s, 1), rotate(t, 1)}, std::pair{a.opposite(s), b.opposite(t)}}) {
        Side& m = map[Triangulation::side_index(from)];
        if (m.tri < 0) {
          m = to;
          stack.push_back(from);
        } else if (!(m == to)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<bool> hit(b.num_sides(), false);
    for (Side s : map) {
      if (s.tri < 0 || hit[Triangulation::side_index(s)]) ok = false;
      if (s.tri >= 0) hit[Triangulation::side_index(s)] = true;
    }
    if (ok) found.push_back(std::move(map));
  }
  return found;
}

std::optional<std::vector<Side>> edge_preserving_isomorphism(const Triangulation& a, const Triangulation& b) {
  auto all = edge_preserving_isomorphisms(a, b);
  if (all.empty()) return std::nullopt;
  return all.front();
}

ACoords transport(const ACoords& c, const Triangulation& target, const std::vector<Side>& iso) {
  ACoords out{target, c.backend, c.tri, c.side};
  for (int i = 0; i < c.chart.num_sides(); ++i) out.at(iso[i]) = c.side[i];
  for (int t = 0; t < c.chart.num_triangles(); ++t) out.tri[iso[Triangulation::side_index({t, 0})].tri] = c.tri[t];
  return out;
}

bool same_structure(const ACoords& a, const ACoords& b) {
  if (a.chart == b.chart) return a == b;
  for (const auto& iso : edge_preserving_isomorphisms(a.chart, b.chart))
    if (transport(a, b.chart, iso) == b) return true;
  return false;
}

namespace {

void check_scale(const ACoords& c, int puncture, const Scalar& lambda) {
  if (lambda.sign() <= 0) throw Error(ErrorCode::NonpositiveScale, "scale factor must be positive");
  if (puncture < 0 || puncture >= c.chart.num_punctures())
    throw Error(ErrorCode::MalformedInput, "puncture index out of range");
}

}  // namespace

ACoords rescale_vector(const ACoords& c, int puncture, const Scalar& lambda) {
  check_scale(c, puncture, lambda);
  ACoords out = c;
  for (int i = 0; i < c.chart.num_sides(); ++i) {
    Side s = Triangulation::side_at(i);
    if (c.chart.head_puncture(s) == puncture) out.side[i] *= lambda;
    if (c.chart.puncture_of_corner(s) == puncture) out.tri[s.tri] *= lambda;
  }
  return out;
}

ACoords rescale_covector(const ACoords& c, int puncture, const Scalar& lambda) {
  check_scale(c, puncture, lambda);
  ACoords out = c;
  for (int i = 0; i < c.chart.num_sides(); ++i)
    if (c.chart.tail_puncture(Triangulation::side_at(i)) == puncture) out.side[i] *= lambda;
  return out;
}

XCoords to_x_coords(const ACoords& c) {
  const Triangulation& T = c.chart;
  XCoords x{T, {}, {}};
  for (int t = 0; t < T.num_triangles(); ++t) {
    Scalar fwd(1), bwd(1);
    for (int k = 0; k < 3; ++k) {
      fwd *= c.at({t, k});
      bwd *= c.at(T.opposite({t, k}));
    }
    x.triple.push_back(fwd / bwd);
  }
  for (int i = 0; i < T.num_sides(); ++i) {
    Side f = Triangulation::side_at(i), b = T.opposite(f);
    x.quadruple.push_back(c.tri[b.tri] * c.at(T.opposite(rotate(f, 2))) / (c.tri[f.tri] * c.at(rotate(b, 1))));
  }
  if (c.backend == Backend::Float)
    for (auto* v : {&x.triple, &x.quadruple})
      for (auto& s : *v) s = s.to(Backend::Float);
  return x;
}

std::vector<FiniteAreaResidual> finite_area_residuals(const XCoords& x) {
  const Triangulation& T = x.chart;
  std::vector<FiniteAreaResidual> out;
  for (int p = 0; p < T.num_punctures(); ++p) {
    FiniteAreaResidual r{Scalar(1), Scalar(1)};
    for (Side c : T.puncture_corners(p)) {
      r.outgoing *= x.quadruple[Triangulation::side_index(c)];
      r.incoming *= x.quadruple[Triangulation::side_index(rotate(c, 2))] * x.triple[c.tri];
    }
    out.push_back(r);
  }
  return out;
}

ACoords normalize_decorations(const ACoords& c) {
  if (c.backend != Backend::Float)
    throw Error(ErrorCode::ExactBackendUnsupported, "normalization needs a cube root; use the float backend");
  Scalar total(0.0);
  for (const auto& t : c.tri) total += t;
  const Scalar lambda(1.0 / std::cbrt(total.to_double()));
  ACoords out = c;
  for (auto& t : out.tri) t *= lambda * lambda * lambda;
  for (auto& s : out.side) s *= lambda;
  for (int p = 0; p < c.chart.num_punctures(); ++p) {
    Scalar sum(0.0);
    for (int i = 0; i < c.chart.num_sides(); ++i)
      if (c.chart.tail_puncture(Triangulation::side_at(i)) == p) sum += out.side[i];
    out = rescale_covector(out, p, Scalar(1.0) / sum);
  }
  return out;
}

Scalar solve_zero_outitude(const ACoords& c, int e, Side unknown) {
  const auto& sd = c.chart.sides(e);
  if (!(unknown == sd[0]) && !(unknown == sd[1]))
    throw Error(ErrorCode::MalformedInput, "unknown parameter must sit on the edge itself");
  // Out is affine in either parameter of the edge.
  ACoords probe = c;
  probe.at(unknown) = Scalar(0).to(c.backend);
  const Scalar out0 = outitude(probe, e);
  probe.at(unknown) = Scalar(1).to(c.backend);
  const Scalar slope = outitude(probe, e) - out0;
  if (slope.sign_tol() == 0)
    throw Error(ErrorCode::NonpositiveParameter, "outitude of '" + c.chart.edge_name(e) + "' cannot be made zero");
  Scalar x = -out0 / slope;
  if (x.sign_tol() <= 0)
    throw Error(ErrorCode::NonpositiveParameter,
                "zero-outitude solve for '" + c.chart.edge_name(e) + "' gives nonpositive value " + x.str());
  return x;
}

}  // namespace fg
