#include "fgcell/holonomy.hpp"

#include <cmath>

#include "fgcell/errors.hpp"

namespace fg {

namespace {

Mat3 inverse(const Mat3& m) {
  const Scalar d = det(m);
  if (d.sign_tol() == 0) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  Mat3 r = adjugate(m);
  for (auto& row : r)
    for (auto& v : row) v /= d;
  return r;
}

void require_positive(const Scalar& v, const char* what) {
  if (v.sign() <= 0) throw Error(ErrorCode::NonpositiveParameter, std::string(what) + " must be positive");
}

}  // namespace

Mat3 triangle_matrix(const Scalar& t, int eps) {
  require_positive(t, "triple ratio");
  const Scalar z = Scalar(0).to(t.backend()), one = Scalar(1).to(t.backend());
  Mat3 m{Vec3{z, z, one}, Vec3{z, -one, -one}, Vec3{t, t + one, one}};
  if (eps == 1) return m;
  if (eps == -1) return inverse(m);
  throw Error(ErrorCode::MalformedInput, "eps must be +1 or -1");
}

Mat3 edge_matrix(const Scalar& q_plus, const Scalar& q_minus) {
  require_positive(q_plus, "quadruple ratio");
  require_positive(q_minus, "quadruple ratio");
  const Scalar z = Scalar(0).to(q_plus.backend()), one = Scalar(1).to(q_plus.backend());
  return Mat3{Vec3{z, z, q_minus}, Vec3{z, -one, z}, Vec3{one / q_plus, z, one}};
}

Mat3 path_matrix(const XCoords& x, const MonodromyPath& path) {
  const Triangulation& T = x.chart;
  // Tokens: a turn by r in {1, 2} inside a triangle, or an edge crossing from
  // side `from`.
  struct Tok {
    bool turn;
    int tri, r;     // turn
    int from, to;   // crossing
  };
  std::vector<Tok> toks;
  for (size_t i = 0; i < path.size(); ++i) {
    const PathStep& s = path[i];
    if (s.from < 0 || s.from >= T.num_sides() || s.to < 0 || s.to >= T.num_sides())
      throw Error(ErrorCode::MalformedPath, "node out of range at step " + std::to_string(i));
    if (i > 0 && path[i - 1].to != s.from)
      throw Error(ErrorCode::MalformedPath, "steps " + std::to_string(i - 1) + " and " + std::to_string(i) + " do not chain");
    Side a = Triangulation::side_at(s.from), b = Triangulation::side_at(s.to);
    if (s.kind == PathStep::Kind::Triangle) {
      if (a.tri != b.tri || a.slot == b.slot)
        throw Error(ErrorCode::MalformedPath, "triangle step " + std::to_string(i) + " must turn inside one triangle");
      toks.push_back({true, a.tri, mod3(b.slot - a.slot), 0, 0});
    } else {
      if (!(T.opposite(a) == b))
        throw Error(ErrorCode::MalformedPath, "edge step " + std::to_string(i) + " must cross an edge");
      toks.push_back({false, 0, 0, s.from, s.to});
    }
  }

  std::vector<Tok> red;
  for (const Tok& t : toks) {
    if (!red.empty()) {
      Tok& b = red.back();
      if (t.turn && b.turn && b.tri == t.tri) {
        b.r = mod3(b.r + t.r);
        if (b.r == 0) red.pop_back();
        continue;
      }
      if (!t.turn && !b.turn && b.from == t.to && b.to == t.from) {
        red.pop_back();
        continue;
      }
    }
    red.push_back(t);
  }

  const Backend be = x.triple.empty() ? Backend::Rational : x.triple[0].backend();
  Mat3 m = identity3();
  if (be == Backend::Float)
    for (auto& row : m)
      for (auto& v : row) v = v.to(be);
  for (const Tok& t : red) {
    if (t.turn)
      m = m * triangle_matrix(x.triple[t.tri], t.r == 1 ? 1 : -1);
    else
      m = m * edge_matrix(x.quadruple[t.from], x.quadruple[t.to]);
  }
  return m;
}

bool is_scalar_matrix(const Mat3& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!approx_equal(m[i][j], i == j ? m[0][0] : Scalar(0)) ) return false;
  return true;
}

bool is_parabolic(const Mat3& m) {
  const Scalar d = det(m);
  if (d.sign_tol() == 0) throw Error(ErrorCode::SingularMatrix, "determinant vanishes");
  const Scalar tau = trace(m), sigma = minor_sum(m);
  bool triple = false;
  if (tau.is_exact() && sigma.is_exact() && d.is_exact()) {
    triple = tau * tau == Scalar(3) * sigma && tau * tau * tau == Scalar(27) * d;
  } else {
    // Scale so that the determinant has modulus one before comparing.
    const double s = 1.0 / std::cbrt(d.to_double());
    const double t = tau.to_double() * s, g = sigma.to_double() * s * s, dd = d.to_double() * s * s * s;
    triple = std::fabs(t * t - 3 * g) <= 1e-7 * std::max(1.0, t * t) &&
             std::fabs(t * t * t - 27 * dd) <= 1e-7 * std::max(1.0, std::fabs(t * t * t));
  }
  return triple && !is_scalar_matrix(m);
}

Mat3 peripheral_holonomy(const ACoords& coords, int puncture) {
  return path_matrix(to_x_coords(coords), peripheral_path(coords.chart, puncture));
}

}  // namespace fg
