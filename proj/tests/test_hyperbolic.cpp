#include <gtest/gtest.h>

#include <cmath>

#include "fgcell/canonical.hpp"
#include "fgcell/dualize.hpp"
#include "fgcell/errors.hpp"
#include "fgcell/hyperbolic.hpp"
#include "fixtures.hpp"

using namespace fg;
using namespace fgtest;

namespace {

LambdaLengths random_lambdas(const Triangulation& T, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.3, 3.0);
  LambdaLengths l{T, {}};
  for (int e = 0; e < T.num_edges(); ++e) l.lambda.push_back(u(rng));
  return l;
}

// a+ = a- on every edge and A^2 = 2abc on every triangle.
bool on_subvariety(const ACoords& c) {
  const Triangulation& T = c.chart;
  for (int e = 0; e < T.num_edges(); ++e)
    if (!approx_equal(c.at(T.sides(e)[0]), c.at(T.sides(e)[1]))) return false;
  for (int t = 0; t < T.num_triangles(); ++t) {
    Scalar p = Scalar(2.0);
    for (int k = 0; k < 3; ++k) p *= c.at({t, k});
    if (!approx_equal(c.tri[t] * c.tri[t], p)) return false;
  }
  return true;
}

double d(const ACoords& c, int e) { return c.at(c.chart.sides(e)[0]).to_double(); }

}  // namespace

TEST(Penner, UnitLambdas) {
  ACoords c = embed_penner({torus(), {1, 1, 1}});
  EXPECT_EQ(c.backend, Backend::Float);
  for (const auto& s : c.side) EXPECT_EQ(s.to_double(), 1.0);
  for (const auto& t : c.tri) EXPECT_NEAR(t.to_double(), std::sqrt(2.0), 1e-15);
  for (int e = 0; e < 3; ++e) {
    EXPECT_TRUE(hyperbolic_outitude_positive({torus(), {1, 1, 1}}, e));
    EXPECT_NEAR(hyperbolic_outitude_value({torus(), {1, 1, 1}}, e), 2.0, 1e-15);
  }
}

TEST(Penner, SqrtTwoOnOneEdge) {
  ACoords c = embed_penner({torus(), {1, 1, std::sqrt(2.0)}});
  EXPECT_NEAR(d(c, 2), 2.0, 1e-12);
  for (const auto& t : c.tri) EXPECT_NEAR(t.to_double(), 2.0, 1e-12);
  EXPECT_TRUE(on_subvariety(c));
  EXPECT_NEAR(hyperbolic_outitude_value({torus(), {1, 1, std::sqrt(2.0)}}, 2), 0.0, 1e-12);
}

TEST(Penner, CriterionAgreesWithOutitude) {
  std::mt19937_64 rng(149);
  for (Triangulation T : {torus(), s04(), genus2()})
    for (int i = 0; i < 200; ++i) {
      LambdaLengths l = random_lambdas(T, rng);
      ACoords c = embed_penner(l);
      EXPECT_TRUE(on_subvariety(c));
      for (int e = 0; e < T.num_edges(); ++e) {
        const double out = outitude(c, e).to_double();
        if (std::fabs(out) < 1e-9) continue;
        EXPECT_EQ(hyperbolic_outitude_positive(l, e), out > 0);
      }
    }
  EXPECT_THROW(hyperbolic_outitude_value({torus(), {1, 1, 1}}, 5), Error);
}

TEST(Penner, SubvarietyPreservedByFlipsAndDuality) {
  std::mt19937_64 rng(151);
  for (Triangulation T : {torus(), s04()})
    for (int i = 0; i < 30; ++i) {
      ACoords c = embed_penner(random_lambdas(T, rng));
      EXPECT_TRUE(on_subvariety(dual_coords(c)));
      EXPECT_TRUE(on_subvariety(chart_transition(c, random_flip_word(T, 4, rng))));
    }
}

TEST(Diagonals, SmallPolygons) {
  auto four = diagonal_lambdas(4);
  ASSERT_EQ(four.size(), 1u);
  EXPECT_NEAR(four[0], std::sqrt(2.0), 1e-15);
  auto six = diagonal_lambdas(6);
  ASSERT_EQ(six.size(), 3u);
  EXPECT_NEAR(six[0], std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(six[1], 2.0, 1e-12);
  EXPECT_NEAR(six[2], std::sqrt(3.0), 1e-12);
}

TEST(Diagonals, RecurrencesAgreeWithSines) {
  for (int n = 4; n <= 48; ++n) {
    auto a = diagonal_lambdas(n), b = diagonal_lambdas_ratio(n);
    ASSERT_EQ(a.size(), static_cast<size_t>(n - 3));
    ASSERT_EQ(b.size(), a.size());
    for (int k = 1; k <= n - 3; ++k) {
      const double sine = std::sin((k + 1) * M_PI / n) / std::sin(M_PI / n);
      EXPECT_NEAR(a[k - 1], sine, 1e-9) << n << " " << k;
      EXPECT_NEAR(b[k - 1], sine, 1e-9) << n << " " << k;
    }
  }
}

TEST(Centre, FullTriangulation) {
  std::vector<std::string> all;
  for (int e = 0; e < 9; ++e) all.push_back("b" + std::to_string(e));
  ACoords c = cell_center(standard_subdivision(genus2(), all));
  for (const auto& s : c.side) EXPECT_EQ(s.to_double(), 1.0);
  for (const auto& t : c.tri) EXPECT_NEAR(t.to_double(), std::sqrt(2.0), 1e-15);
}

TEST(Centre, Square) {
  CellDecomposition cell = square_cell();
  ACoords c = cell_center(cell);
  const Polygon& P = cell.polygons[0];
  const int diag = P.diagonals[0];
  EXPECT_NEAR(d(c, diag), 2.0, 1e-12);
  for (const auto& t : c.tri) EXPECT_NEAR(t.to_double(), 2.0, 1e-12);
  EXPECT_LT(std::fabs(outitude(c, diag).to_double()), 1e-9);
  for (int e = 0; e < 3; ++e)
    if (e != diag) EXPECT_GT(outitude(c, e).to_double(), 0);
}

TEST(Centre, HexagonDiagonals) {
  CellDecomposition cell = hexagon_cell();
  ACoords c = cell_center(cell);
  const Polygon& P = cell.polygons.at(0);
  ASSERT_EQ(P.n, 6);
  const double want[] = {3, 4, 3};
  for (int m = 0; m < 3; ++m) {
    EXPECT_NEAR(d(c, P.diagonals[m]), want[m], 1e-12);
    EXPECT_LT(std::fabs(outitude(c, P.diagonals[m]).to_double()), 1e-9);
  }
}

TEST(Centre, InteriorOfItsCell) {
  for (const CellDecomposition& cell : {square_cell(), pentagon_cell(), hexagon_cell(), octagon_cell()}) {
    MembershipReport rep = cell_membership(cell_center(cell), cell);
    EXPECT_EQ(rep.verdict, Membership::Interior);
    EXPECT_FALSE(rep.borderline);
  }
}
