#include "fgcell/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fgcell/errors.hpp"

namespace fg {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

Triangulation Triangulation::build(SurfaceSignature sig, std::vector<std::string> triangles,
                                   const std::vector<Gluing>& gluings) {
  if (sig.genus < 0 || sig.punctures < 1 || 2 * sig.genus + sig.punctures <= 2)
    throw Error(ErrorCode::MalformedInput, "signature must have genus >= 0, punctures >= 1 and 2g+n > 2");
  const int want_t = 4 * sig.genus - 4 + 2 * sig.punctures;
  const int want_e = 6 * sig.genus - 6 + 3 * sig.punctures;
  if (static_cast<int>(triangles.size()) != want_t || static_cast<int>(gluings.size()) != want_e)
    throw Error(ErrorCode::CountMismatch, "S_{" + std::to_string(sig.genus) + "," + std::to_string(sig.punctures) +
                                              "} needs " + std::to_string(want_t) + " triangles and " +
                                              std::to_string(want_e) + " edges, got " +
                                              std::to_string(triangles.size()) + " and " +
                                              std::to_string(gluings.size()));

  Triangulation T;
  T.sig_ = sig;
  T.tri_names_ = std::move(triangles);
  for (int t = 0; t < T.num_triangles(); ++t)
    if (!T.tri_ids_.emplace(T.tri_names_[t], t).second)
      throw Error(ErrorCode::MalformedInput, "duplicate triangle id '" + T.tri_names_[t] + "'");

  const int ns = 3 * T.num_triangles();
  T.side_edge_.assign(ns, -1);
  T.opp_.assign(ns, Side{});
  for (const Gluing& g : gluings) {
    const int e = static_cast<int>(T.edge_names_.size());
    if (!T.edge_ids_.emplace(g.edge, e).second)
      throw Error(ErrorCode::MalformedInput, "duplicate edge id '" + g.edge + "'");
    T.edge_names_.push_back(g.edge);
    std::array<Side, 2> sd;
    for (int i = 0; i < 2; ++i) {
      auto it = T.tri_ids_.find(g.sides[i].first);
      if (it == T.tri_ids_.end())
        throw Error(ErrorCode::MalformedInput, "edge '" + g.edge + "' refers to unknown triangle '" +
                                                   g.sides[i].first + "'");
      if (g.sides[i].second < 0 || g.sides[i].second > 2)
        throw Error(ErrorCode::MalformedInput, "edge '" + g.edge + "' uses slot " +
                                                   std::to_string(g.sides[i].second) + " outside 0..2");
      sd[i] = {it->second, g.sides[i].second};
    }
    for (int i = 0; i < 2; ++i) {
      int idx = side_index(sd[i]);
      if (T.side_edge_[idx] != -1 || (i == 1 && sd[0] == sd[1]))
        throw Error(ErrorCode::DuplicateSlot, "slot (" + T.tri_names_[sd[i].tri] + ", " +
                                                  std::to_string(sd[i].slot) + ") is glued twice");
      T.side_edge_[idx] = e;
    }
    T.opp_[side_index(sd[0])] = sd[1];
    T.opp_[side_index(sd[1])] = sd[0];
    T.edge_sides_.push_back(sd);
  }
  for (int i = 0; i < ns; ++i)
    if (T.side_edge_[i] == -1) {
      Side s = side_at(i);
      throw Error(ErrorCode::UngluedSlot,
                  "slot (" + T.tri_names_[s.tri] + ", " + std::to_string(s.slot) + ") is not glued");
    }

  UnionFind uf(T.num_triangles());
  int comps = T.num_triangles();
  for (const auto& sd : T.edge_sides_)
    if (uf.unite(sd[0].tri, sd[1].tri)) --comps;
  if (comps != 1) throw Error(ErrorCode::Disconnected, "gluing graph has " + std::to_string(comps) + " components");

  T.corner_puncture_.assign(ns, -1);
  for (int i = 0; i < ns; ++i) {
    if (T.corner_puncture_[i] != -1) continue;
    const int p = static_cast<int>(T.puncture_corners_.size());
    std::vector<Side> orbit;
    Side c = side_at(i);
    do {
      T.corner_puncture_[side_index(c)] = p;
      orbit.push_back(c);
      c = T.next_corner_ccw(c);
    } while (!(c == side_at(i)));
    T.puncture_corners_.push_back(std::move(orbit));
  }
  if (T.num_punctures() != sig.punctures)
    throw Error(ErrorCode::PunctureMismatch, "found " + std::to_string(T.num_punctures()) +
                                                 " corner orbits, signature says " + std::to_string(sig.punctures));
  return T;
}

int Triangulation::triangle_index(const std::string& name) const {
  auto it = tri_ids_.find(name);
  if (it == tri_ids_.end()) throw Error(ErrorCode::MalformedInput, "unknown triangle '" + name + "'");
  return it->second;
}

int Triangulation::edge_index(const std::string& name) const {
  auto it = edge_ids_.find(name);
  if (it == edge_ids_.end()) throw Error(ErrorCode::UnknownEdge, "unknown edge '" + name + "'");
  return it->second;
}

int Triangulation::puncture_index(const std::string& name) const {
  for (int p = 0; p < num_punctures(); ++p)
    if (puncture_name(p) == name) return p;
  throw Error(ErrorCode::MalformedInput, "unknown puncture '" + name + "'");
}

std::vector<Gluing> Triangulation::gluings() const {
  std::vector<Gluing> out;
  for (int e = 0; e < num_edges(); ++e) {
    const auto& sd = edge_sides_[e];
    out.push_back({edge_names_[e],
                   {std::pair{tri_names_[sd[0].tri], sd[0].slot}, std::pair{tri_names_[sd[1].tri], sd[1].slot}}});
  }
  return out;
}

bool Triangulation::operator==(const Triangulation& o) const {
  return sig_ == o.sig_ && tri_names_ == o.tri_names_ && edge_names_ == o.edge_names_ && opp_ == o.opp_ &&
         side_edge_ == o.side_edge_;
}

// --- flips ------------------------------------------------------------------

bool is_flippable(const Triangulation& tri, int e) {
  const auto& sd = tri.sides(e);
  return sd[0].tri != sd[1].tri;
}

FlipResult flip_edge(const Triangulation& tri, int e) {
  if (e < 0 || e >= tri.num_edges()) throw Error(ErrorCode::UnknownEdge, "edge index out of range");
  if (!is_flippable(tri, e))
    throw Error(ErrorCode::MalformedInput, "edge '" + tri.edge_name(e) + "' lies in a self-folded triangle");
  const Side sa = tri.sides(e)[0], sb = tri.sides(e)[1];
  const int tA = sa.tri, tB = sb.tri;

  // Quadrilateral C0 C1 C2 C3 with tA = (C2, C0, C1) from slot k and
  // tB = (C0, C2, C3) from slot j. Afterwards tA = (C3, C1, C2) and
  // tB = (C0, C1, C3); the new diagonal is slot 0 of tA and slot 1 of tB.
  std::vector<Side> m(tri.num_sides());
  for (int i = 0; i < tri.num_sides(); ++i) m[i] = Triangulation::side_at(i);
  auto set = [&](Side from, Side to) { m[Triangulation::side_index(from)] = to; };
  set(sa, {tA, 0});
  set(sb, {tB, 1});
  set(rotate(sa, 2), {tA, 1});  // C1 -> C2
  set(rotate(sb, 1), {tA, 2});  // C2 -> C3
  set(rotate(sa, 1), {tB, 0});  // C0 -> C1
  set(rotate(sb, 2), {tB, 2});  // C3 -> C0

  std::vector<Gluing> gl;
  for (int f = 0; f < tri.num_edges(); ++f) {
    const auto& sd = tri.sides(f);
    Side x = m[Triangulation::side_index(sd[0])], y = m[Triangulation::side_index(sd[1])];
    gl.push_back({tri.edge_name(f),
                  {std::pair{tri.triangle_name(x.tri), x.slot}, std::pair{tri.triangle_name(y.tri), y.slot}}});
  }
  return {Triangulation::build(tri.signature(), tri.triangle_names(), gl), std::move(m)};
}

FlipResult flip_edge(const Triangulation& tri, const std::string& e) { return flip_edge(tri, tri.edge_index(e)); }

// --- monodromy graph --------------------------------------------------------

MonodromyGraph monodromy_graph(const Triangulation& tri) {
  MonodromyGraph g;
  g.num_nodes = tri.num_sides();
  for (int t = 0; t < tri.num_triangles(); ++t)
    for (int s = 0; s < 3; ++s)
      g.triangle_links.push_back({t, Triangulation::side_index({t, s}), Triangulation::side_index({t, mod3(s + 1)})});
  for (int e = 0; e < tri.num_edges(); ++e)
    g.edge_links.push_back(
        {e, Triangulation::side_index(tri.sides(e)[0]), Triangulation::side_index(tri.sides(e)[1])});
  return g;
}

MonodromyPath peripheral_path(const Triangulation& tri, int puncture) {
  if (puncture < 0 || puncture >= tri.num_punctures())
    throw Error(ErrorCode::MalformedInput, "puncture index out of range");
  MonodromyPath path;
  for (Side c : tri.puncture_corners(puncture)) {
    Side out = rotate(c, 2);  // the side ending at the puncture
    path.push_back({PathStep::Kind::Triangle, Triangulation::side_index(c), Triangulation::side_index(out)});
    path.push_back(
        {PathStep::Kind::Edge, Triangulation::side_index(out), Triangulation::side_index(tri.opposite(out))});
  }
  return path;
}

// --- standard subdivisions ----------------------------------------------------

std::vector<std::string> CellDecomposition::kept_edges() const {
  std::vector<std::string> out;
  for (int e = 0; e < chart.num_edges(); ++e)
    if (kept[e]) out.push_back(chart.edge_name(e));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Polygon vertex labels for the corners of the triangles in one region.
using CornerLabels = std::vector<int>;  // indexed by side index; -1 outside

// Next boundary side counter-clockwise along the polygon after `s`.
Side next_boundary(const Triangulation& tri, const std::vector<bool>& kept, Side s) {
  Side u = rotate(s, 1);
  while (!kept[tri.edge_at(u)]) u = rotate(tri.opposite(u), 1);
  return u;
}

std::vector<Side> boundary_cycle(const Triangulation& tri, const std::vector<bool>& kept, Side start) {
  std::vector<Side> cyc;
  Side s = start;
  do {
    cyc.push_back(s);
    s = next_boundary(tri, kept, s);
  } while (!(s == start));
  return cyc;
}

// Labels every corner of the polygon whose boundary cycle is `cyc`: the corner
// at the start of cyc[i] gets label i.
void label_corners(const Triangulation& tri, const std::vector<bool>& kept, const std::vector<Side>& cyc,
                   CornerLabels& lab) {
  const int n = static_cast<int>(cyc.size());
  for (int i = 0; i < n; ++i) {
    Side u = rotate(cyc[i], 1);
    const int v = (i + 1) % n;
    lab[Triangulation::side_index(u)] = v;
    while (!kept[tri.edge_at(u)]) {
      u = rotate(tri.opposite(u), 1);
      lab[Triangulation::side_index(u)] = v;
    }
  }
}

}  // namespace

CellDecomposition standard_subdivision(const Triangulation& chart, const std::vector<std::string>& kept_names) {
  std::vector<bool> kept(chart.num_edges(), false);
  for (const auto& name : kept_names) kept[chart.edge_index(name)] = true;

  const int T = chart.num_triangles();
  UnionFind uf(T);
  for (int e = 0; e < chart.num_edges(); ++e) {
    if (kept[e]) continue;
    const auto& sd = chart.sides(e);
    if (!uf.unite(sd[0].tri, sd[1].tri))
      throw Error(ErrorCode::NotACellDecomposition,
                  "removing '" + chart.edge_name(e) + "' leaves a region that is not a disc");
  }
  // A region whose removed edges form a tree is a disc.

  struct Region {
    std::vector<int> tris;
    std::vector<Side> cycle;
    int v0 = 0;
  };
  std::vector<Region> regions;
  std::vector<int> region_of(T, -1);
  for (int t = 0; t < T; ++t) {
    int r = uf.find(t);
    if (region_of[r] == -1) {
      region_of[r] = static_cast<int>(regions.size());
      regions.emplace_back();
    }
    regions[region_of[r]].tris.push_back(t);
  }

  CornerLabels lab(chart.num_sides(), -1);
  std::vector<Region> polys;
  for (Region& R : regions) {
    if (R.tris.size() < 2) continue;
    Side start{-1, 0};
    for (int t : R.tris) {
      for (int s = 0; s < 3 && start.tri < 0; ++s)
        if (kept[chart.edge_at({t, s})]) start = {t, s};
      if (start.tri >= 0) break;
    }
    if (start.tri < 0) throw Error(ErrorCode::NotACellDecomposition, "a region has no boundary");
    R.cycle = boundary_cycle(chart, kept, start);
    if (static_cast<int>(R.cycle.size()) != static_cast<int>(R.tris.size()) + 2)
      throw Error(ErrorCode::NotACellDecomposition, "a complementary region is not a polygon");
    label_corners(chart, kept, R.cycle, lab);
    // Designated corner: least (triangle index, corner) of the region.
    const Side fan{R.tris.front(), 0};
    const int v = lab[Triangulation::side_index(fan)];
    std::rotate(R.cycle.begin(), R.cycle.begin() + v, R.cycle.end());
    const int n = static_cast<int>(R.cycle.size());
    for (int t : R.tris)
      for (int c = 0; c < 3; ++c) {
        int& l = lab[Triangulation::side_index({t, c})];
        l = ((l - v) % n + n) % n;
      }
    polys.push_back(std::move(R));
  }

  CellDecomposition cell{chart, kept, {}, {}};
  Triangulation cur = chart;
  for (Region& R : polys) {
    const std::set<int> in_region(R.tris.begin(), R.tris.end());
    auto L = [&](Side s) { return lab[Triangulation::side_index(s)]; };
    for (;;) {
      // A diagonal not at V_0 whose triangle on one side has V_0 opposite.
      int pick = -1;
      for (int e = 0; e < cur.num_edges() && pick < 0; ++e) {
        if (kept[e]) continue;
        const auto& sd = cur.sides(e);
        if (!in_region.count(sd[0].tri)) continue;
        if (L(sd[0]) == 0 || L(rotate(sd[0], 1)) == 0) continue;
        for (Side s : sd)
          if (L(rotate(s, 2)) == 0) pick = e;
      }
      if (pick < 0) break;
      const Side sa = cur.sides(pick)[0], sb = cur.sides(pick)[1];
      const int c0 = L(rotate(sa, 1)), c1 = L(rotate(sa, 2)), c2 = L(sa), c3 = L(rotate(sb, 2));
      FlipResult fr = flip_edge(cur, pick);
      cur = std::move(fr.tri);
      const std::array<int, 3> top{c3, c1, c2}, bot{c0, c1, c3};
      for (int c = 0; c < 3; ++c) {
        lab[Triangulation::side_index({sa.tri, c})] = top[c];
        lab[Triangulation::side_index({sb.tri, c})] = bot[c];
      }
      cell.flips.push_back(cur.edge_name(pick));
    }

    Polygon P;
    P.n = static_cast<int>(R.cycle.size());
    P.triangles.assign(P.n - 2, -1);
    P.v0_corner.assign(P.n - 2, -1);
    for (int t : R.tris) {
      int c = -1;
      for (int k = 0; k < 3; ++k)
        if (L({t, k}) == 0) c = k;
      const int m = L({t, mod3(c + 1)}) - 1;
      if (c < 0 || m < 0 || m >= P.n - 2 || L({t, mod3(c + 2)}) != m + 2)
        throw Error(ErrorCode::NotACellDecomposition, "fan construction failed");
      P.triangles[m] = t;
      P.v0_corner[m] = c;
    }
    for (int m = 0; m + 1 < P.n - 2; ++m) P.diagonals.push_back(cur.edge_at(P.outward_side(m)));
    P.boundary.push_back({P.triangles[0], P.v0_corner[0]});
    for (int m = 0; m < P.n - 2; ++m) P.boundary.push_back({P.triangles[m], mod3(P.v0_corner[m] + 1)});
    P.boundary.push_back({P.triangles[P.n - 3], mod3(P.v0_corner[P.n - 3] + 2)});
    cell.polygons.push_back(std::move(P));
  }
  cell.chart = std::move(cur);
  return cell;
}

}  // namespace fg
