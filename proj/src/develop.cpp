#include "fgcell/develop.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

#include "fgcell/errors.hpp"

namespace fg {

ConcreteTriangle base_triangle(const ACoords& c, int t) {
  const Triangulation& T = c.chart;
  const Scalar z = Scalar(0).to(c.backend), one = Scalar(1).to(c.backend);
  const Scalar A = c.tri[t];
  ConcreteTriangle tr;
  tr.C = {Vec3{A, z, z}, Vec3{z, one, z}, Vec3{z, z, one}};
  for (int i = 0; i < 3; ++i) {
    std::array<Scalar, 3> rc;  // row i of R.C
    rc[i] = z;
    rc[mod3(i + 1)] = c.at({t, i});
    rc[mod3(i - 1)] = c.at(T.opposite({t, mod3(i - 1)}));
    tr.r[i] = {rc[0] / A, rc[1], rc[2]};
  }
  return tr;
}

Flag extend_across_edge(const Flag& f0, const Flag& f2, const Scalar& e03, const Scalar& e23, const Scalar& a023,
                        const Scalar& x, const Scalar& y) {
  const Vec3 n = cross(f0.C, f2.C);
  const Mat3 M{f0.r, f2.r, n};
  const Scalar d = det(M);
  if (d.sign_tol() == 0) throw Error(ErrorCode::SingularSystem, "next-vertex system is singular");
  const Vec3 rhs{e03, e23, a023};
  // Cramer's rule.
  Vec3 C3;
  for (int i = 0; i < 3; ++i) {
    Mat3 Mi = M;
    for (int r = 0; r < 3; ++r) Mi[r][i] = rhs[r];
    C3[i] = det(Mi) / d;
  }
  const Scalar dd = det_cols(f0.C, f2.C, C3);
  if (dd.sign_tol() == 0) throw Error(ErrorCode::SingularSystem, "new triangle is degenerate");
  Vec3 r3 = (x / dd) * cross(f2.C, C3) + (y / dd) * cross(C3, f0.C);
  return {r3, C3};
}

Vec3 next_vertex_closed_form(const Flag& f0, const Flag& f2, const Scalar& e03, const Scalar& e23,
                             const Scalar& a023) {
  const Scalar e02 = dot(f0.r, f2.C), e20 = dot(f2.r, f0.C);
  return (e03 / e02) * f2.C + (e23 / e20) * f0.C + (a023 / (e02 * e20)) * cross(f2.r, f0.r);
}

ConcreteTriangle Development::concrete(int lifted) const {
  ConcreteTriangle tr;
  for (int i = 0; i < 3; ++i) {
    tr.C[i] = flags[triangles[lifted].flags[i]].C;
    tr.r[i] = flags[triangles[lifted].flags[i]].r;
  }
  return tr;
}

std::string Development::lifted_name(int lifted) const {
  const LiftedTriangle& L = triangles[lifted];
  std::string s = coords.chart.triangle_name(triangles[0].tri);
  for (int w : L.word) s += "/" + std::to_string(w);
  return s;
}

Development develop(const ACoords& c, int base, int depth) {
  if (base < 0 || base >= c.chart.num_triangles()) throw Error(ErrorCode::MalformedInput, "base triangle out of range");
  if (depth < 0) throw Error(ErrorCode::MalformedInput, "depth must be nonnegative");
  c.validate();
  const Triangulation& T = c.chart;
  Development dev{c, depth, {}, {}};
  const ConcreteTriangle b = base_triangle(c, base);
  for (int i = 0; i < 3; ++i) dev.flags.push_back({b.r[i], b.C[i]});
  dev.triangles.push_back({base, {}, {0, 1, 2}, -1, -1, 0});

  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int li = queue.front();
    queue.pop_front();
    if (dev.triangles[li].depth >= depth) continue;
    for (int s = 0; s < 3; ++s) {
      const LiftedTriangle L = dev.triangles[li];
      if (s == L.parent_slot) continue;
      const Side child = T.opposite({L.tri, s});
      const int t = child.tri, k = child.slot;
      const Flag& f0 = dev.flags[L.flags[mod3(s + 1)]];
      const Flag& f2 = dev.flags[L.flags[s]];
      Flag f3 = extend_across_edge(f0, f2, c.at(T.opposite({t, mod3(k + 2)})), c.at({t, mod3(k + 1)}), c.tri[t],
                                   c.at({t, mod3(k + 2)}), c.at(T.opposite({t, mod3(k + 1)})));
      LiftedTriangle N;
      N.tri = t;
      N.word = L.word;
      N.word.push_back(s);
      N.flags[k] = L.flags[mod3(s + 1)];
      N.flags[mod3(k + 1)] = L.flags[s];
      N.flags[mod3(k + 2)] = static_cast<int>(dev.flags.size());
      N.parent = li;
      N.parent_slot = k;
      N.depth = L.depth + 1;
      dev.flags.push_back(std::move(f3));
      dev.triangles.push_back(std::move(N));
      queue.push_back(static_cast<int>(dev.triangles.size()) - 1);
    }
  }
  return dev;
}

DevelopmentReport verify_development(const Development& dev) {
  DevelopmentReport rep;
  const ACoords& c = dev.coords;
  const Triangulation& T = c.chart;
  auto same = [](const Scalar& a, const Scalar& b) { return approx_equal(a, b); };
  for (int li = 0; li < static_cast<int>(dev.triangles.size()); ++li) {
    const ConcreteTriangle tr = dev.concrete(li);
    const int t = dev.triangles[li].tri;
    const std::string where = dev.lifted_name(li);
    const Scalar d = tr.det();
    if (d.sign_tol() <= 0) {
      rep.determinants_positive = false;
      rep.violations.push_back("det of " + where + " is " + d.str());
    }
    bool ok = same(d, c.tri[t]);
    for (int i = 0; i < 3; ++i) {
      ok = ok && tr.pairing(i, i).sign_tol() == 0;
      ok = ok && same(tr.pairing(i, mod3(i + 1)), c.at({t, i}));
      ok = ok && same(tr.pairing(i, mod3(i - 1)), c.at(T.opposite({t, mod3(i - 1)})));
    }
    if (!ok) {
      rep.round_trip_exact = false;
      rep.violations.push_back("parameters of " + where + " do not reproduce the coordinates");
    }
  }
  const int nf = static_cast<int>(dev.flags.size());
  for (int a = 0; a < nf; ++a)
    for (int b = 0; b < nf; ++b) {
      if (a == b) continue;
      const Scalar p = dot(dev.flags[a].r, dev.flags[b].C);
      if (p.sign_tol() <= 0) {
        rep.pairings_positive = false;
        rep.violations.push_back("r" + std::to_string(a) + ".C" + std::to_string(b) + " = " + p.str());
      }
    }
  return rep;
}

Scalar tetrahedron_outitude(const Development& dev, int lifted) {
  const LiftedTriangle& L = dev.triangles.at(lifted);
  if (L.parent < 0) throw Error(ErrorCode::MalformedInput, "the base triangle has no parent edge");
  const LiftedTriangle& P = dev.triangles[L.parent];
  const int s = L.word.back();
  const Flag& f2 = dev.flags[P.flags[s]];
  const Flag& f0 = dev.flags[P.flags[mod3(s + 1)]];
  const Flag& f1 = dev.flags[P.flags[mod3(s + 2)]];
  const Flag& f3 = dev.flags[L.flags[mod3(L.parent_slot + 2)]];
  const Scalar ep = dot(f0.r, f2.C), em = dot(f2.r, f0.C);
  return ep * em *
         (det_cols(f0.C, f1.C, f3.C) + det_cols(f3.C, f1.C, f2.C) - det_cols(f0.C, f1.C, f2.C) -
          det_cols(f0.C, f2.C, f3.C));
}

std::vector<std::array<double, 2>> project_development(const Development& dev, int frame) {
  if (frame < 0 || frame >= static_cast<int>(dev.triangles.size()))
    throw Error(ErrorCode::MalformedInput, "frame triangle out of range");
  const ConcreteTriangle F = dev.concrete(frame);
  const Vec3 ell = F.r[0] + F.r[1] + F.r[2];
  auto proj = [&](const Vec3& v) {
    const Scalar w = dot(ell, v);
    if (w.sign_tol() <= 0) throw Error(ErrorCode::ProjectionFailure, "a vector leaves the affine chart");
    return (Scalar(1) / w) * v;
  };
  std::array<Vec3, 3> P;
  for (int i = 0; i < 3; ++i) P[i] = proj(F.C[i]);
  const Scalar d = det_cols(P[0], P[1], P[2]);
  const double h = std::sqrt(3.0) / 2;
  std::vector<std::array<double, 2>> out;
  for (const Flag& f : dev.flags) {
    const Vec3 p = proj(f.C);
    const double b1 = (det_cols(P[0], p, P[2]) / d).to_double();
    const double b2 = (det_cols(P[0], P[1], p) / d).to_double();
    out.push_back({b1 + 0.5 * b2, h * b2});
  }
  return out;
}

std::string render_svg(const Development& dev, int width_px, const RenderOptions& opt) {
  if (width_px <= 0) throw Error(ErrorCode::MalformedInput, "width must be positive");
  const auto pts = project_development(dev, opt.frame);
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
  for (const auto& p : pts) {
    x0 = std::min(x0, p[0]);
    x1 = std::max(x1, p[0]);
    y0 = std::min(y0, p[1]);
    y1 = std::max(y1, p[1]);
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-12});
  const double pad = 0.05 * span;
  const double scale = width_px / (span + 2 * pad);
  const int height_px = static_cast<int>(std::ceil((y1 - y0 + 2 * pad) * scale));
  auto X = [&](const std::array<double, 2>& p) { return (p[0] - x0 + pad) * scale; };
  auto Y = [&](const std::array<double, 2>& p) { return (y1 - p[1] + pad) * scale; };
  const double stroke = 0.005 * width_px;

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px << "\" height=\"" << height_px
     << "\" viewBox=\"0 0 " << width_px << " " << height_px << "\">\n";
  const Triangulation& T = dev.coords.chart;
  for (size_t li = 0; li < dev.triangles.size(); ++li) {
    const auto& L = dev.triangles[li];
    os << "<polygon data-triangle=\"" << T.triangle_name(L.tri) << "\" points=\"";
    for (int i = 0; i < 3; ++i) os << (i ? " " : "") << X(pts[L.flags[i]]) << "," << Y(pts[L.flags[i]]);
    os << "\" fill=\"#dfe8f5\" stroke=\"#334\" stroke-width=\"" << stroke << "\"/>\n";
  }
  if (opt.highlight) {
    for (const auto& L : dev.triangles)
      for (int s = 0; s < 3; ++s) {
        const int e = T.edge_at({L.tri, s});
        if (!(*opt.highlight)[e]) continue;
        const auto& a = pts[L.flags[s]];
        const auto& b = pts[L.flags[mod3(s + 1)]];
        os << "<line data-edge=\"" << T.edge_name(e) << "\" x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(b)
           << "\" y2=\"" << Y(b) << "\" stroke=\"#c22\" stroke-width=\"" << 2 * stroke << "\"/>\n";
      }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace fg
