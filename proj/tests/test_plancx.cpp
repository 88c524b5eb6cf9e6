#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace sheafradon;
using namespace sheafradon::testing;

TEST(Grid, CellCountsAndEuler) {
  auto c = grid({0, 1, 2, 3}, {0, 1, 2});
  EXPECT_EQ(c->vertex_count(), 12u);
  EXPECT_EQ(c->edge_count(), 17u);
  EXPECT_EQ(c->face_count(), 6u);
  EXPECT_NO_THROW(c->validate());
  // boundary of boundary vanishes
  for (std::size_t f = 0; f < c->face_count(); ++f) {
    std::map<std::size_t, int> dd;
    for (auto [e, s] : c->boundary(c->face_cell(f)))
      for (auto [v, t] : c->boundary(e)) dd[v] += s * t;
    for (auto [v, n] : dd) EXPECT_EQ(n, 0);
  }
}

TEST(Grid, LocateFindsRelativeInteriors) {
  auto c = grid({0, 1, 2}, {0, 1});
  auto v = c->locate({q(1), q(0)});
  ASSERT_TRUE(v);
  EXPECT_EQ(c->dim(*v), 0);
  auto e = c->locate({q(1), q(1, 2)});
  ASSERT_TRUE(e);
  EXPECT_EQ(c->dim(*e), 1);
  auto f = c->locate({q(3, 2), q(1, 3)});
  ASSERT_TRUE(f);
  EXPECT_EQ(c->dim(*f), 2);
  EXPECT_FALSE(c->locate({q(3), q(0)}));
  for (std::size_t i = 0; i < c->cell_count(); ++i) EXPECT_EQ(c->locate(c->representative(i)), i);
}

TEST(CellSet, ClosedOpenLocallyClosed) {
  auto c = grid({0, 1, 2, 3}, {0, 1, 2, 3});
  Box mid(q(1), q(2), q(1), q(2));
  CellSet cl = closed_box(c, mid);
  CellSet op = open_box(c, mid);
  EXPECT_TRUE(cl.is_closed());
  EXPECT_FALSE(cl.is_open());
  EXPECT_TRUE(op.is_open());
  EXPECT_EQ(closure(op), cl);
  EXPECT_TRUE(star(op) == op);
  // an open square plus one of its corners skips the edges in between
  CellSet bad = op.united(cells_where(c, [](const Point& p) { return p == Point{q(1), q(1)}; }));
  EXPECT_FALSE(bad.is_locally_closed());
  EXPECT_TRUE(bad.violation().has_value());
  EXPECT_TRUE(cl.has_closed_part(cl.minus(op)));
  EXPECT_TRUE(cl.has_open_part(op));
}

TEST(CellSet, TransportedAlongLineRefinement) {
  auto c = grid({0, 2}, {0, 2});
  CellSet all = CellSet::all(c);
  Refinement r = refine_by_line(*c, Direction(1, 1), q(2));  // the diagonal
  EXPECT_EQ(r.complex->face_count(), 2u);
  EXPECT_NO_THROW(r.complex->validate());
  CellSet moved = all.transported(r);
  EXPECT_EQ(moved.size(), r.complex->cell_count());
  CellSet below = halfplane_cells(r.complex, Direction(1, 1), q(2));
  EXPECT_TRUE(below.is_closed());
  EXPECT_EQ(below.size(), 3u + 3u + 1u);
  CellSet strictly = halfplane_cells(r.complex, Direction(1, 1), q(2), HalfPlane::open_below);
  EXPECT_EQ(strictly.size(), 1u + 2u + 1u);
}

TEST(Direction, RejectsZeroAndKeepsAngle) {
  EXPECT_THROW(Direction(0, 0), std::invalid_argument);
  EXPECT_EQ(Direction(-3, 4).l1(), 7);
  EXPECT_NEAR(Direction(0, 1).angle(), std::acos(0.0), 1e-15);
}

TEST(Box, DilationGrowsEverySide) {
  std::vector<Box> boxes{Box(q(0), q(1), q(0), q(1)), Box(q(3), q(4), q(0), q(1))};
  auto d = linf_dilate(boxes, q(1, 2));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].xmin, q(-1, 2));
  EXPECT_EQ(d[1].xmax, q(9, 2));
  EXPECT_EQ(d[1].ymin, q(-1, 2));
  EXPECT_FALSE(d[0].contains({q(2), q(0)}));
}
