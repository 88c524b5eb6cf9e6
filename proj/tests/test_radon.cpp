#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "sheafradon/reference_scenes.hpp"
#include "sheafradon/radon.hpp"
#include "sheafradon/scene.hpp"
#include "support.hpp"

using namespace sheafradon;
using namespace sheafradon::testing;

namespace {

ConvolvedSheaf plain(const Scene& s) { return {compile(s), std::nullopt}; }

Bar half_line(int degree, Surd birth) { return {degree, {BirthKind::at_point, birth}, {}, 1}; }

}  // namespace

TEST(Directions, DefaultSetIsPrimitiveAndDistinct) {
  auto d = default_directions(64);
  ASSERT_EQ(d.size(), 64u);
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const auto& x : d) {
    EXPECT_EQ(std::gcd(x.p, x.q), 1);
    EXPECT_TRUE(seen.insert({x.p, x.q}).second) << x.to_string();
  }
  EXPECT_EQ(d.front().p, 1);
  EXPECT_EQ(d.front().q, 0);
  EXPECT_THROW(default_directions(0), std::invalid_argument);
}

TEST(CriticalLevels, VerticalDirectionOnSquare) {
  auto lv = critical_levels(plain(square_scene(Backend::grid)), Direction(0, 1));
  EXPECT_NE(std::find(lv.begin(), lv.end(), Surd(q(-1))), lv.end());
  EXPECT_NE(std::find(lv.begin(), lv.end(), Surd(q(1))), lv.end());
  EXPECT_TRUE(std::is_sorted(lv.begin(), lv.end()));
}

TEST(Profile, DiscGivesOneHalfLine) {
  for (auto r : {q(1, 2), q(2)}) {
    auto f = plain(disc_scene(r));
    for (const auto& d : default_directions(8)) {
      DecoratedBarcode b = decompose(profile(f, d));
      // the support minimum of a radius-r disc in direction d is -r|d|
      const Surd birth = -Surd::sqrt_of(d.p * d.p + d.q * d.q, r);
      EXPECT_EQ(b, DecoratedBarcode({half_line(0, birth)})) << d.to_string() << ' ' << b.to_string();
      EXPECT_EQ(to_unit(birth, d), Surd(-r));
    }
  }
}

TEST(Profile, NotchedSquareIsEpigraph) {
  for (Backend be : {Backend::grid, Backend::convex}) {
    auto f = plain(notched_square_scene(be));
    for (const auto& d : default_directions(12)) {
      DecoratedBarcode b = decompose(profile(f, d));
      auto phi = epigraph_level(b);
      ASSERT_TRUE(phi) << b.to_string();
      EXPECT_EQ(*phi, Surd(q(std::abs(d.q) - std::abs(d.p)))) << d.to_string();
    }
  }
}

TEST(Profile, PersistenceAgreesWithRestrictionRanks) {
  auto f = plain(notched_square_scene(Backend::grid));
  for (const auto& d : default_directions(6)) {
    auto a = profile(f, d, RankMethod::persistence);
    auto b = profile(f, d, RankMethod::restriction);
    EXPECT_EQ(a.ranks, b.ranks) << d.to_string();
  }
}

TEST(Profile, OpenSquareIsBornAtFarSide) {
  // (-1, t] x (-1, 1) is acyclic until the sweep has passed the whole square
  Scene s = square_scene(Backend::grid);
  s.generators[0].region.closed = {false, false, false, false};
  DecoratedBarcode b = decompose(profile(plain(s), Direction(1, 0)));
  Bar expect{2, {BirthKind::at_point, Surd(q(1))}, {}, 1};
  EXPECT_EQ(b, DecoratedBarcode({expect})) << b.to_string();
}

TEST(Profile, MissingRightSideDiesJustBefore) {
  Scene s = square_scene(Backend::grid);
  s.generators[0].region.closed = {true, false, true, true};
  DecoratedBarcode b = decompose(profile(plain(s), Direction(1, 0)));
  ASSERT_EQ(b.bars().size(), 1u) << b.to_string();
  const Bar& bar = b.bars()[0];
  EXPECT_EQ(bar.degree, 0);
  EXPECT_EQ(bar.birth.level, Surd(q(-1)));
  EXPECT_EQ(bar.death.kind, DeathKind::just_before);
  EXPECT_EQ(bar.death.level, Surd(q(1)));
  EXPECT_TRUE(bar.contains(Surd(q(99, 100))));
  EXPECT_FALSE(bar.contains(Surd(q(1))));
}

TEST(Profile, ThickeningShiftsBirth) {
  auto f = compile(square_scene(Backend::grid));
  ConvolvedSheaf t{f, BallSpec{Norm::linf, q(1, 2)}};
  Direction d(2, 1);
  DecoratedBarcode b = decompose(profile(t, d));
  EXPECT_EQ(b, DecoratedBarcode({half_line(0, Surd(q(-9, 2)))})) << b.to_string();
  EXPECT_TRUE(shift_identity_check(f, *t.ball, d).ok);
}

TEST(Barcode, MergesEqualBars) {
  DecoratedBarcode b({half_line(1, Surd(q(0))), half_line(1, Surd(q(0))), half_line(0, Surd(q(2)))});
  ASSERT_EQ(b.bars().size(), 2u);
  EXPECT_EQ(b.dim_at(1, Surd(q(5))), 2);
  EXPECT_EQ(b.dim_at(0, Surd(q(1))), 0);
  DecoratedBarcode moved = translate(b, Surd(q(-1)));
  EXPECT_EQ(moved.dim_at(0, Surd(q(1))), 1);
  EXPECT_EQ(moved.dim_at(1, Surd(q(-1))), 2);
}

TEST(Summary, EulerCharacteristicIsConserved) {
  for (const auto& s : suite_scenes()) {
    auto f = plain(s.scene);
    auto rep = chi_c_conservation(f, default_directions(8));
    EXPECT_TRUE(rep.ok) << s.name << ": " << (rep.details.empty() ? "" : rep.details.front());
  }
}

TEST(HalfplaneStalk, SmallLatticeHasNoCounterexample) {
  std::vector<Rational> ts{q(-1), q(0), q(1, 2)};
  std::vector<Point> xs;
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) xs.push_back({q(i, 2), q(j, 2)});
  auto rep = halfplane_stalk_verify(default_directions(4), ts, xs, {q(1, 2)});
  EXPECT_EQ(rep.counterexamples, 0u);
  EXPECT_GT(rep.boundary_cases, 0u);
  EXPECT_EQ(rep.samples, 4u * 3u * 25u);
}
