#include <gtest/gtest.h>

#include <random>

#include "sheafradon/cohomology.hpp"
#include "support.hpp"

using namespace sheafradon;
using namespace sheafradon::testing;

namespace {

ComplexPtr g4() { return grid({0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}); }

}  // namespace

TEST(Hcc, ClosedSquareIsPoint) {
  auto c = g4();
  EXPECT_EQ(hcc(closed_box(c, Box(q(1), q(3), q(1), q(3)))), (GradedDims{{0, 1}}));
}

TEST(Hcc, OpenSquareIsShiftedByTwo) {
  auto c = g4();
  EXPECT_EQ(hcc(open_box(c, Box(q(1), q(3), q(1), q(3)))), (GradedDims{{2, 1}}));
}

TEST(Hcc, HalfOpenSquareIsAcyclic) {
  auto c = g4();
  Box b(q(1), q(3), q(1), q(3));
  CellSet z = cells_where(c, [&](const Point& p) { return b.contains(p) && p.x != q(3); });
  EXPECT_TRUE(z.is_locally_closed());
  EXPECT_TRUE(hcc(z).is_zero());
}

TEST(Hcc, AnnulusHasOneLoop) {
  auto c = g4();
  CellSet ring = closed_box(c, Box(q(0), q(4), q(0), q(4))).minus(open_box(c, Box(q(1), q(3), q(1), q(3))));
  EXPECT_EQ(hcc(ring), (GradedDims{{0, 1}, {1, 1}}));
  EXPECT_EQ(euler_c(ring), 0);
}

TEST(Hcc, NotchedSquareHasOnlyDegreeOne) {
  // closed square without its closed top and bottom sides, [-1,1] x (-1,1)
  auto c = grid({-1, 0, 1}, {-1, 0, 1});
  CellSet z = cells_where(c, [](const Point& p) { return p.y != q(1) && p.y != q(-1); });
  EXPECT_TRUE(z.is_locally_closed());
  EXPECT_EQ(hcc(z), (GradedDims{{1, 1}}));
  EXPECT_EQ(euler_c(z), -1);
}

TEST(Hcc, RejectsNonLocallyClosed) {
  auto c = g4();
  CellSet z = open_box(c, Box(q(1), q(2), q(1), q(2))).united(cells_where(c, [](const Point& p) {
    return p == Point{q(1), q(1)};
  }));
  EXPECT_THROW(hcc(z), std::invalid_argument);
}

TEST(Hcc, DependsOnlyOnSetNotCells) {
  auto c = g4();
  CellSet z = closed_box(c, Box(q(0), q(3), q(1), q(2))).minus(open_box(c, Box(q(1), q(2), q(0), q(4))));
  const GradedDims before = hcc(z);
  Refinement r = refine_by_line(*c, Direction(1, 2), q(7, 2));
  EXPECT_EQ(hcc(z.transported(r)), before);
}

TEST(Les, ExactOnSquareAndItsBoundary) {
  auto c = g4();
  CellSet z = closed_box(c, Box(q(1), q(3), q(1), q(3)));
  CellSet a = z.minus(open_box(c, Box(q(1), q(3), q(1), q(3))));
  auto rep = long_exact_sequence(z, a, Field(3));
  EXPECT_TRUE(rep.exact) << (rep.failures.empty() ? "" : rep.failures.front());
  // H^1_c(boundary) -> H^2_c(open square) is an isomorphism
  EXPECT_EQ(connecting_map(z, a, Field(3)).induced_rank(1), 1u);
  EXPECT_EQ(restriction_to_closed(z, a, Field(3)).induced_rank(0), 1u);
}

TEST(Les, RestrictionRankFromSquareToTwoPoints) {
  auto c = g4();
  CellSet z = closed_box(c, Box(q(0), q(4), q(0), q(4)));
  CellSet a = cells_where(c, [](const Point& p) { return p == Point{q(0), q(0)} || p == Point{q(4), q(4)}; });
  auto m = restriction_to_closed(z, a);
  EXPECT_EQ(m.induced_rank(0), 1u);
  EXPECT_EQ(hcc(a), (GradedDims{{0, 2}}));
}
