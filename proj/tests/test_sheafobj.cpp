#include <gtest/gtest.h>

#include "sheafradon/reference_scenes.hpp"
#include "sheafradon/scene.hpp"
#include "sheafradon/sheaf.hpp"
#include "support.hpp"

using namespace sheafradon;
using namespace sheafradon::testing;

namespace {

SheafObject notched(Backend b) { return compile(notched_square_scene(b)); }

}  // namespace

TEST(ConvexBody, SupportMinimumOfDiscAndPolygon) {
  ConvexBody disc = ConvexBody::disc({q(0), q(0)}, q(2));
  EXPECT_EQ(disc.support_min(Direction(1, 0)), Surd(q(-2)));
  EXPECT_EQ(disc.support_min(Direction(1, 1)), -Surd::sqrt_of(2, q(2)));
  ConvexBody sq = ConvexBody::polygon({{q(-1), q(-1)}, {q(1), q(-1)}, {q(1), q(1)}, {q(-1), q(1)}});
  EXPECT_EQ(sq.support_min(Direction(2, -1)), Surd(q(-3)));
  EXPECT_TRUE(sq.contains({q(1), q(0)}));
  EXPECT_FALSE(sq.contains({q(1), q(2)}));
}

TEST(ConvexBody, MeetsBallAgreesWithDirectTest) {
  ConvexBody sq = ConvexBody::polygon({{q(0), q(0)}, {q(2), q(0)}, {q(2), q(1)}, {q(0), q(1)}});
  for (int i = -6; i <= 10; ++i) {
    for (int j = -6; j <= 8; ++j) {
      Point x{q(i, 2), q(j, 2)};
      for (Norm n : {Norm::l2, Norm::linf}) {
        EXPECT_EQ(sq.meets_ball(x, q(1), n), sq.meets_ball_direct(x, q(1), n)) << to_string(x);
      }
    }
  }
}

TEST(ConvexRankRule, HolesShiftClassToDegreeOne) {
  EXPECT_EQ(convex_rank_rule(true, 0), (GradedDims{{0, 1}}));
  EXPECT_TRUE(convex_rank_rule(true, 1).is_zero());
  EXPECT_EQ(convex_rank_rule(true, 3), (GradedDims{{1, 2}}));
  EXPECT_TRUE(convex_rank_rule(false, 0).is_zero());
}

TEST(Stalk, IndicatorIsOneExactlyOnSupport) {
  for (Backend b : {Backend::grid, Backend::convex}) {
    SheafObject f = notched(b);
    EXPECT_EQ(stalk(f, {q(0), q(0)}), (GradedDims{{0, 1}}));
    EXPECT_EQ(stalk(f, {q(-1), q(0)}), (GradedDims{{0, 1}}));
    EXPECT_TRUE(stalk(f, {q(0), q(1)}).is_zero());
    EXPECT_TRUE(stalk(f, {q(2), q(0)}).is_zero());
    EXPECT_EQ(f.euler_c(), -1);
  }
}

TEST(Stalk, OutsideWindowThrows) {
  SheafObject f = notched(Backend::grid);
  EXPECT_THROW(stalk(f, {q(100), q(0)}), std::out_of_range);
}

TEST(Convolve, NotchedSquareThreshold) {
  // the centre stalk H^*_c of [-1,1] x (-1,1) cut by the ball: open in y until
  // the ball reaches past both removed sides
  for (Backend b : {Backend::grid, Backend::convex}) {
    SheafObject f = notched(b);
    const Norm n = b == Backend::grid ? Norm::linf : Norm::l2;
    EXPECT_EQ(convolve_stalk(f, {n, q(99, 100)}, {q(0), q(0)}), (GradedDims{{0, 1}}));
    EXPECT_EQ(convolve_stalk(f, {n, q(1)}, {q(0), q(0)}), (GradedDims{{1, 1}}));
    EXPECT_EQ(convolve_stalk(f, {n, q(0)}, {q(0), q(1)}), GradedDims{});
  }
}

TEST(Convolve, MatchesKernelComposition) {
  SheafObject f = notched(Backend::grid);
  for (int i = -6; i <= 6; ++i) {
    Point x{q(i, 3), q(i * i - 12, 12)};
    for (auto a : {q(0), q(1, 2), q(3, 2)}) {
      EXPECT_EQ(convolve_stalk(f, {Norm::linf, a}, x), compose_kernel_stalk(KernelSpec::delta(a, Norm::linf), f, x))
          << to_string(x);
    }
  }
}

TEST(Convolve, MarginIsEnforced) {
  SheafObject f = notched(Backend::grid);
  EXPECT_NO_THROW(f.check_margin(q(2)));
  EXPECT_THROW(f.check_margin(q(5, 2)), MarginError);
}

TEST(ConvolveGrid, SquareThickensToBiggerSquare) {
  SheafObject f = compile(square_scene(Backend::grid));
  StalkField sf = convolve_grid(f, q(1, 2));
  IndicatorResult h0 = recognize_indicator(sf, 0);
  ASSERT_TRUE(h0.support) << h0.diagnostic;
  EXPECT_TRUE(h0.support->is_closed());
  EXPECT_EQ(sf.at({q(3, 2), q(-3, 2)}), (GradedDims{{0, 1}}));
  EXPECT_TRUE(sf.at({q(8, 5), q(0)}).is_zero());
  EXPECT_EQ(sf.degrees(), std::vector<int>{0});
}

TEST(ConvolveGrid, NegativeRadiusErodes) {
  // open ball inside the closed square gives H^2_c, moved back to degree 0
  SheafObject f = compile(square_scene(Backend::grid));
  StalkField sf = convolve_grid(f, q(-1, 2));
  IndicatorResult h0 = recognize_indicator(sf, 0);
  ASSERT_TRUE(h0.support) << h0.diagnostic;
  EXPECT_TRUE(h0.support->is_closed());
  EXPECT_EQ(sf.at({q(0), q(0)}), (GradedDims{{0, 1}}));
  EXPECT_EQ(sf.at({q(1, 2), q(-1, 2)}), (GradedDims{{0, 1}}));
  EXPECT_TRUE(sf.at({q(3, 5), q(0)}).is_zero());
}

TEST(ConvolveGrid, ZeroRadiusIsIdentity) {
  SheafObject f = notched(Backend::grid);
  StalkField sf = convolve_grid(f, q(0));
  auto back = field_as_object(sf);
  ASSERT_TRUE(back);
  for (std::size_t i = 0; i < f.grid()->cell_count(); ++i) {
    Point x = f.grid()->representative(i);
    EXPECT_EQ(stalk(*back, x), stalk(f, x)) << to_string(x);
  }
}

TEST(ConvolveGrid, TwiceMatchesSum) {
  SheafObject f = compile(square_scene(Backend::grid));
  std::string why;
  auto twice = convolve_twice(f, q(1, 2), q(1, 2), &why);
  ASSERT_TRUE(twice) << why;
  EXPECT_FALSE(first_difference(*twice, convolve_grid(f, q(1))));
}
