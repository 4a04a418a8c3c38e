#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fgcell/encoding.hpp"
#include "fgcell/errors.hpp"
#include "fixtures.hpp"

using namespace fg;
using namespace fgtest;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::MalformedInput;
}

// Renames everything, permutes triangles and rotates each triangle's slots.
struct Relabeled {
  Triangulation tri;
  std::vector<Side> side_map;  // old side index -> new side
};

Relabeled relabel(const Triangulation& T, std::mt19937_64& rng) {
  std::vector<int> perm(T.num_triangles());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> rot(T.num_triangles());
  for (auto& r : rot) r = std::uniform_int_distribution<int>(0, 2)(rng);
  std::vector<Side> map(T.num_sides());
  for (int i = 0; i < T.num_sides(); ++i) {
    Side s = Triangulation::side_at(i);
    map[i] = {perm[s.tri], mod3(s.slot + rot[s.tri])};
  }
  std::vector<std::string> names(T.num_triangles());
  for (int t = 0; t < T.num_triangles(); ++t) names[perm[t]] = "x" + std::to_string(perm[t] * 7 + 3);
  std::vector<int> eorder(T.num_edges());
  std::iota(eorder.begin(), eorder.end(), 0);
  std::shuffle(eorder.begin(), eorder.end(), rng);
  std::vector<Gluing> gl;
  for (int e : eorder) {
    std::array<Side, 2> sd = T.sides(e);
    if (rng() & 1) std::swap(sd[0], sd[1]);
    Side a = map[Triangulation::side_index(sd[0])], b = map[Triangulation::side_index(sd[1])];
    gl.push_back({"y" + std::to_string(e * 13 + 5), {std::pair{names[a.tri], a.slot}, std::pair{names[b.tri], b.slot}}});
  }
  return {Triangulation::build(T.signature(), names, gl), map};
}

int valence_sum(const Triangulation& T) {
  int s = 0;
  for (int p = 0; p < T.num_punctures(); ++p) s += static_cast<int>(T.puncture_corners(p).size());
  return s;
}

}  // namespace

TEST(Surface, TorusHasOnePunctureOfValenceSix) {
  Triangulation T = torus();
  EXPECT_EQ(T.num_triangles(), 2);
  EXPECT_EQ(T.num_edges(), 3);
  ASSERT_EQ(T.num_punctures(), 1);
  EXPECT_EQ(T.puncture_corners(0).size(), 6u);
}

TEST(Surface, ThreePuncturedSphereHasValenceTwoPunctures) {
  Triangulation T = s03();
  ASSERT_EQ(T.num_punctures(), 3);
  for (int p = 0; p < 3; ++p) EXPECT_EQ(T.puncture_corners(p).size(), 2u);
}

TEST(Surface, FixturesAgreeWithDataFiles) {
  EXPECT_EQ(load_surface("torus_surface.json"), torus());
  EXPECT_EQ(load_surface("genus2_surface.json"), genus2());
  EXPECT_EQ(genus2().num_punctures(), 1);
  EXPECT_EQ(s04().num_punctures(), 4);
}

TEST(Surface, ValidationErrors) {
  using P = std::pair<std::string, int>;
  EXPECT_EQ(code_of([] { Triangulation::build({1, 1}, {"A", "B", "C"}, {}); }), ErrorCode::CountMismatch);
  EXPECT_EQ(code_of([] {
              Triangulation::build({1, 1}, {"A", "B"},
                                   {{"a", {P{"A", 1}, P{"B", 0}}}, {"b", {P{"A", 1}, P{"B", 1}}},
                                    {"c", {P{"A", 0}, P{"B", 2}}}});
            }),
            ErrorCode::DuplicateSlot);
  EXPECT_EQ(code_of([] {
              Triangulation::build({0, 4}, {"A", "B", "C", "D"},
                                   {{"a", {P{"A", 0}, P{"B", 2}}}, {"b", {P{"A", 1}, P{"B", 1}}},
                                    {"c", {P{"A", 2}, P{"B", 0}}}, {"d", {P{"C", 0}, P{"D", 2}}},
                                    {"e", {P{"C", 1}, P{"D", 1}}}, {"f", {P{"C", 2}, P{"D", 0}}}});
            }),
            ErrorCode::Disconnected);
  EXPECT_EQ(code_of([] {
              Triangulation::build({0, 3}, {"A", "B"},
                                   {{"a", {P{"A", 1}, P{"B", 0}}}, {"b", {P{"A", 2}, P{"B", 1}}},
                                    {"c", {P{"A", 0}, P{"B", 2}}}});
            }),
            ErrorCode::PunctureMismatch);
  EXPECT_EQ(code_of([] { Triangulation::build({0, 2}, {}, {}); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { flip_edge(torus(), "zz"); }), ErrorCode::UnknownEdge);
}

TEST(Surface, FlipEveryTorusEdgeGivesAValidTorus) {
  Triangulation T = torus();
  for (const char* e : {"a", "b", "c"}) {
    FlipResult r = flip_edge(T, e);
    EXPECT_EQ(r.tri.num_punctures(), 1);
    EXPECT_EQ(r.tri.puncture_corners(0).size(), 6u);
    // Every torus triangulation is combinatorially the same.
    EXPECT_EQ(canonical_encoding(r.tri), canonical_encoding(T));
  }
}

TEST(Surface, FlipKeepsEdgeIdsAndMovesSidesBijectively) {
  std::mt19937_64 rng(7);
  Triangulation T = genus2();
  for (int round = 0; round < 30; ++round) {
    const int e = std::uniform_int_distribution<int>(0, T.num_edges() - 1)(rng);
    FlipResult r = flip_edge(T, e);
    std::set<Side> image(r.side_map.begin(), r.side_map.end());
    EXPECT_EQ(static_cast<int>(image.size()), T.num_sides());
    for (int i = 0; i < T.num_sides(); ++i)
      EXPECT_EQ(r.tri.edge_name(r.tri.edge_at(r.side_map[i])), T.edge_name(T.edge_at(Triangulation::side_at(i))));
    EXPECT_EQ(valence_sum(r.tri), 3 * r.tri.num_triangles());
    T = r.tri;
  }
}

TEST(Surface, FlipTwiceIsIsomorphicToTheInput) {
  for (Triangulation T : {torus(), s03(), s04(), genus2()})
    for (int e = 0; e < T.num_edges(); ++e) {
      if (!is_flippable(T, e)) continue;
      Triangulation back = flip_edge(flip_edge(T, e).tri, e).tri;
      EXPECT_TRUE(edge_preserving_isomorphism(T, back).has_value()) << T.edge_name(e);
    }
}

TEST(Surface, SelfFoldedEdgeCannotBeFlipped) {
  using P = std::pair<std::string, int>;
  // S_{0,3} with a self-folded triangle A: its side 1 is glued to side 2.
  Triangulation T = Triangulation::build(
      {0, 3}, {"A", "B"}, {{"f", {P{"A", 1}, P{"A", 2}}}, {"g", {P{"A", 0}, P{"B", 0}}}, {"h", {P{"B", 1}, P{"B", 2}}}});
  EXPECT_FALSE(is_flippable(T, T.edge_index("f")));
  EXPECT_TRUE(is_flippable(T, T.edge_index("g")));
  EXPECT_EQ(code_of([&] { flip_edge(T, "f"); }), ErrorCode::MalformedInput);
}

TEST(Surface, ValenceSumIsThreeTimesTriangles) {
  std::mt19937_64 rng(11);
  for (Triangulation T : {torus(), s03(), s04(), genus2()}) {
    for (const auto& e : random_flip_word(T, 10, rng)) {
      T = flip_edge(T, e).tri;
      EXPECT_EQ(valence_sum(T), 3 * T.num_triangles());
    }
  }
}

TEST(Surface, MonodromyGraphCounts) {
  for (Triangulation T : {torus(), s03()}) {
    MonodromyGraph g = monodromy_graph(T);
    EXPECT_EQ(g.num_nodes, 6);
    EXPECT_EQ(g.triangle_links.size(), 6u);
    EXPECT_EQ(g.edge_links.size(), 3u);
  }
  // Each triangle contributes one 3-cycle.
  MonodromyGraph g = monodromy_graph(genus2());
  for (int t = 0; t < 6; ++t) {
    int node = 3 * t;
    for (int i = 0; i < 3; ++i) {
      auto it = std::find_if(g.triangle_links.begin(), g.triangle_links.end(),
                             [&](const auto& l) { return l.from == node; });
      ASSERT_NE(it, g.triangle_links.end());
      EXPECT_EQ(it->tri, t);
      node = it->to;
    }
    EXPECT_EQ(node, 3 * t);
  }
}

TEST(Surface, PeripheralPathsAreClosedAndHaveLengthTwiceValence) {
  for (Triangulation T : {torus(), s03(), s04(), genus2()})
    for (int p = 0; p < T.num_punctures(); ++p) {
      MonodromyPath path = peripheral_path(T, p);
      EXPECT_EQ(path.size(), 2 * T.puncture_corners(p).size());
      for (size_t i = 0; i < path.size(); ++i) {
        EXPECT_EQ(path[i].kind, i % 2 == 0 ? PathStep::Kind::Triangle : PathStep::Kind::Edge);
        EXPECT_EQ(path[i].to, path[(i + 1) % path.size()].from);
      }
    }
  std::set<int> nodes;
  for (const auto& s : peripheral_path(torus(), 0)) nodes.insert(s.from);
  EXPECT_EQ(nodes.size(), 6u);
  EXPECT_EQ(peripheral_path(s03(), 2).size(), 4u);
}

TEST(Encoding, InvariantUnderRelabeling) {
  std::mt19937_64 rng(3);
  Triangulation T = genus2();
  for (const auto& e : random_flip_word(T, 5, rng)) T = flip_edge(T, e).tri;
  ACoords c = random_coords(T, rng);
  const std::string plain = canonical_encoding(T), with = canonical_encoding(T, &c);
  for (int i = 0; i < 100; ++i) {
    Relabeled r = relabel(T, rng);
    ACoords rc = ACoords::ones(r.tri);
    for (int s = 0; s < T.num_sides(); ++s) rc.at(r.side_map[s]) = c.side[s];
    for (int t = 0; t < T.num_triangles(); ++t) rc.tri[r.side_map[3 * t].tri] = c.tri[t];
    EXPECT_EQ(canonical_encoding(r.tri), plain);
    EXPECT_EQ(canonical_encoding(r.tri, &rc), with);
  }
}

TEST(Encoding, DistinguishesSurfacesAndCoordinates) {
  EXPECT_NE(canonical_encoding(torus()), canonical_encoding(s03()));
  ACoords ones = ACoords::ones(torus());
  ACoords alpha2 = torus_coords({q(1), q(1), q(1), q(1), q(1), q(3, 2), q(1), q(1, 2)});
  EXPECT_NE(canonical_encoding(torus(), &ones), canonical_encoding(torus(), &alpha2));
}

TEST(Subdivision, SquareOnTheTorus) {
  CellDecomposition cell = square_cell();
  ASSERT_EQ(cell.polygons.size(), 1u);
  const Polygon& P = cell.polygons[0];
  EXPECT_EQ(P.n, 4);
  ASSERT_EQ(P.diagonals.size(), 1u);
  EXPECT_EQ(cell.chart.edge_name(P.diagonals[0]), "c");
  EXPECT_TRUE(cell.flips.empty());
  EXPECT_EQ(cell.kept_edges(), (std::vector<std::string>{"a", "b"}));
}

TEST(Subdivision, AllEdgesKeptIsTheTriangulation) {
  CellDecomposition cell = standard_subdivision(genus2(), {"b0", "b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8"});
  EXPECT_TRUE(cell.is_triangulation());
  EXPECT_EQ(cell.chart, genus2());
}

TEST(Subdivision, OctagonHasFiveFannedDiagonals) {
  CellDecomposition cell = octagon_cell();
  ASSERT_EQ(cell.polygons.size(), 1u);
  const Polygon& P = cell.polygons[0];
  EXPECT_EQ(P.n, 8);
  EXPECT_EQ(P.diagonals.size(), 5u);
  EXPECT_EQ(P.triangles.size(), 6u);
}

TEST(Subdivision, FanStructureAndKeptEdgesRecovered) {
  for (const CellDecomposition& cell : {square_cell(), pentagon_cell(), hexagon_cell(), octagon_cell()}) {
    const Triangulation& T = cell.chart;
    std::vector<std::string> kept;
    for (int e = 0; e < T.num_edges(); ++e)
      if (cell.kept[e]) kept.push_back(T.edge_name(e));
    std::sort(kept.begin(), kept.end());
    EXPECT_EQ(kept, cell.kept_edges());
    for (const Polygon& P : cell.polygons) {
      EXPECT_EQ(static_cast<int>(P.boundary.size()), P.n);
      for (Side b : P.boundary) EXPECT_TRUE(cell.kept[T.edge_at(b)]);
      for (int m = 0; m + 1 < P.n - 2; ++m) {
        // a_m leaves V_0 inside A_{m+1} and arrives at V_0 inside A_m.
        EXPECT_EQ(T.edge_at(P.outward_side(m)), P.diagonals[m]);
        EXPECT_EQ(T.edge_at(P.inward_side(m)), P.diagonals[m]);
        EXPECT_EQ(T.opposite(P.outward_side(m)), P.inward_side(m));
        EXPECT_FALSE(cell.kept[P.diagonals[m]]);
      }
      // Consecutive boundary sides chain head to tail.
      for (int i = 0; i < P.n; ++i)
        EXPECT_EQ(T.head_puncture(P.boundary[i]), T.tail_puncture(P.boundary[(i + 1) % P.n]));
    }
  }
}

TEST(Subdivision, RejectsRegionsThatAreNotDiscs) {
  EXPECT_EQ(code_of([] { standard_subdivision(torus(), {"a"}); }), ErrorCode::NotACellDecomposition);
  EXPECT_EQ(code_of([] { standard_subdivision(torus(), {}); }), ErrorCode::NotACellDecomposition);
  EXPECT_EQ(code_of([] { standard_subdivision(torus(), {"a", "zz"}); }), ErrorCode::UnknownEdge);
}
