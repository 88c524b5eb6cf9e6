#include <gtest/gtest.h>

#include <random>

#include "sheafradon/distance.hpp"
#include "sheafradon/reference_scenes.hpp"
#include "sheafradon/scene.hpp"
#include "support.hpp"

using namespace sheafradon;
using namespace sheafradon::testing;

namespace {

Bar closed_bar(int deg, Rational b, Rational e) {
  return {deg, {BirthKind::at_point, Surd(b)}, {DeathKind::at_point, Surd(e)}, 1};
}
Bar open_bar(int deg, Rational b, Rational e) {
  return {deg, {BirthKind::just_after, Surd(b)}, {DeathKind::just_before, Surd(e)}, 1};
}
Bar ray(int deg, Rational b) { return {deg, {BirthKind::at_point, Surd(b)}, {}, 1}; }
Bar line(int deg) { return {deg, {}, {}, 1}; }

DecoratedBarcode bc(std::vector<Bar> bars) { return DecoratedBarcode(std::move(bars)); }

}  // namespace

TEST(IntervalCost, RaysDifferByBirth) {
  EXPECT_EQ(interval_cost(ray(0, q(0)), ray(0, q(3, 2))), Cost::of(Surd(q(3, 2))));
  EXPECT_EQ(interval_cost(ray(0, q(0)), ray(1, q(0))), Cost::inf());
  EXPECT_EQ(interval_cost(ray(0, q(1)), closed_bar(0, q(1), q(2))), Cost::inf());
  EXPECT_EQ(interval_cost(closed_bar(0, q(0), q(2)), closed_bar(0, q(0), q(2))), Cost::of(Surd(q(0))));
}

TEST(DeletionCost, HalfOfLengthOrInfinite) {
  EXPECT_EQ(deletion_cost(closed_bar(0, q(0), q(2))), Cost::of(Surd(q(1))));
  EXPECT_EQ(deletion_cost(ray(0, q(0))), Cost::inf());
  EXPECT_EQ(deletion_cost(line(1)), Cost::inf());
}

TEST(ConvolutionAction, TableCases) {
  EXPECT_EQ(convolution_action(bc({ray(0, q(0))}), q(1)), bc({ray(0, q(-1))}));
  auto b = bc({closed_bar(0, q(0), q(1)), open_bar(1, q(0), q(6)), ray(2, q(3))});
  EXPECT_EQ(convolution_action(b, q(0)), b);
  EXPECT_EQ(convolution_action(bc({open_bar(0, q(0), q(4))}), q(3)), bc({closed_bar(1, q(1), q(3))}));
  EXPECT_EQ(convolution_action(bc({open_bar(0, q(0), q(4))}), q(1)), bc({open_bar(0, q(1), q(3))}));
  EXPECT_EQ(convolution_action(bc({closed_bar(0, q(0), q(1))}), q(1, 2)), bc({closed_bar(0, q(-1, 2), q(3, 2))}));
  Bar half_open{0, {BirthKind::at_point, Surd(q(0))}, {DeathKind::just_before, Surd(q(2))}, 1};
  Bar shifted{0, {BirthKind::at_point, Surd(q(-1))}, {DeathKind::just_before, Surd(q(1))}, 1};
  EXPECT_EQ(convolution_action(bc({half_open}), q(1)), bc({shifted}));
}

TEST(Bottleneck, ReferenceValues) {
  auto r = bottleneck(bc({ray(0, q(0))}), bc({ray(0, q(1))}));
  EXPECT_EQ(r.value, Cost::of(Surd(q(1))));
  EXPECT_EQ(r.kind, BoundKind::exact);
  EXPECT_EQ(bottleneck(bc({ray(0, q(0))}), bc({ray(0, q(1)), ray(0, q(5))})).value, Cost::inf());
  EXPECT_EQ(bottleneck(bc({}), bc({})).value, Cost::of(Surd(q(0))));
}

TEST(Bottleneck, PrefersDeletionWhenCheaper) {
  auto left = bc({closed_bar(0, q(0), q(1)), ray(0, q(0))});
  auto right = bc({closed_bar(0, q(10), q(11)), ray(0, q(0))});
  auto r = bottleneck(left, right);
  EXPECT_EQ(r.value, Cost::of(Surd(q(1, 2))));
  ASSERT_TRUE(r.matching);
  std::string why;
  EXPECT_TRUE(r.matching->validate(left, right, &why)) << why;
  EXPECT_EQ(r.matching->deleted_left.size(), 1u);
  EXPECT_EQ(r.matching->deleted_right.size(), 1u);
}

TEST(Bottleneck, MultiplicitiesAreExpanded) {
  Bar twice = ray(1, q(0));
  twice.mult = 2;
  EXPECT_EQ(expand(bc({twice})).size(), 2u);
  EXPECT_EQ(bottleneck(bc({twice}), bc({ray(1, q(0))})).value, Cost::inf());
  EXPECT_EQ(bottleneck(bc({twice}), bc({ray(1, q(1)), ray(1, q(-1))})).value, Cost::of(Surd(q(1))));
}

TEST(Bottleneck, IrrationalLevelsCompareExactly) {
  Bar a{0, {BirthKind::at_point, -Surd::sqrt_of(2)}, {}, 1};
  auto r = bottleneck(bc({a}), bc({ray(0, q(-1))}));
  EXPECT_EQ(r.value, Cost::of(Surd::sqrt_of(2) - Surd(q(1))));
}

TEST(Certificate, TamperedMatchingFails) {
  auto left = bc({ray(0, q(0))});
  auto right = bc({ray(0, q(2))});
  auto r = bottleneck(left, right);
  ASSERT_TRUE(r.matching);
  MatchingCertificate c = *r.matching;
  c.value = Cost::of(Surd(q(1)));
  EXPECT_FALSE(c.validate(left, right));
  MatchingCertificate d = *r.matching;
  d.matched.clear();
  EXPECT_FALSE(d.validate(left, right));
}

TEST(LocalizedStrip, RemovesOnlyFullLines) {
  EXPECT_TRUE(localized_strip(bc({line(0)})).empty());
  auto mixed = bc({line(0), ray(1, q(0)), closed_bar(0, q(0), q(1))});
  EXPECT_EQ(localized_strip(mixed), bc({ray(1, q(0)), closed_bar(0, q(0), q(1))}));
}

TEST(Distances, DiscPairPinchesAtOne) {
  auto f = compile(disc_scene(q(1)));
  auto g = compile(disc_scene(q(2)));
  auto dirs = default_directions(16);
  auto lower = sup_direction_distance({f, std::nullopt}, {g, std::nullopt}, dirs);
  EXPECT_EQ(lower.kind, BoundKind::lower_bound);
  EXPECT_EQ(lower.value, Cost::of(Surd(q(1))));
  auto a = thickening_radius(f, g, Norm::l2);
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, q(1));
  auto upper = shift_upper_bound(f, *a);
  EXPECT_EQ(upper.kind, BoundKind::upper_bound);
  ASSERT_TRUE(upper.shift);
  EXPECT_TRUE(upper.shift->validate());
  EXPECT_EQ(upper.value, lower.value);
}

TEST(Distances, SelfDistanceIsZero) {
  auto f = compile(notched_square_scene(Backend::grid));
  auto r = sup_direction_distance({f, std::nullopt}, {f, std::nullopt}, default_directions(8));
  EXPECT_EQ(r.value, Cost::of(Surd(q(0))));
  EXPECT_EQ(shift_upper_bound(f, q(0)).value, Cost::of(Surd(q(0))));
}

TEST(Distances, ThickeningIsAtDistanceA) {
  auto f = compile(square_scene(Backend::grid));
  ConvolvedSheaf thick{f, BallSpec{Norm::linf, q(1, 2)}};
  auto r = sup_direction_distance({f, std::nullopt}, thick, default_directions(8));
  EXPECT_EQ(r.value, Cost::of(Surd(q(1, 2))));
  auto loc = sup_direction_distance({f, std::nullopt}, thick, default_directions(8), true);
  EXPECT_TRUE(localized_bound_check(loc, r));
}

TEST(Distances, ShiftUpperBoundNeedsMargin) {
  auto f = compile(square_scene(Backend::grid));
  EXPECT_THROW(shift_upper_bound(f, q(2)), MarginError);
  EXPECT_THROW(shift_upper_bound(f, q(-1)), std::invalid_argument);
}

TEST(LocalizedBound, RespectsBoundKinds) {
  DistanceReport lo{Cost::of(Surd(q(1))), BoundKind::lower_bound, {}, {}, {}};
  DistanceReport up{Cost::of(Surd(q(2))), BoundKind::upper_bound, {}, {}, {}};
  EXPECT_TRUE(localized_bound_check(lo, up));
  DistanceReport big{Cost::of(Surd(q(3))), BoundKind::exact, {}, {}, {}};
  EXPECT_FALSE(localized_bound_check(big, up));
}
