#include "sheafradon/reference_scenes.hpp"

namespace sheafradon {

namespace {

const Rational kMargin = make_rational(5, 2);

}  // namespace

Scene notched_square_scene(Backend backend) {
  Scene s;
  s.backend = backend;
  s.margin = kMargin;
  Region top = Region::segment(Point(-1, 1), Point(1, 1));
  Region bottom = Region::segment(Point(-1, -1), Point(1, -1));
  s.generators.push_back({Region::diff(Region::box(Point(-1, -1), Point(1, 1)), {top, bottom}), 0, 1});
  return s;
}

Scene square_scene(Backend backend) {
  Scene s;
  s.backend = backend;
  s.margin = kMargin;
  s.generators.push_back({Region::box(Point(-1, -1), Point(1, 1)), 0, 1});
  return s;
}

Scene disc_scene(const Rational& r) {
  Scene s;
  s.backend = Backend::convex;
  s.margin = 3;
  s.generators.push_back({Region::disc(Point(0, 0), r), 0, 1});
  return s;
}

std::vector<SuiteScene> suite_scenes() {
  return {
      {"disc r=1 (convex, L2)", disc_scene(1), Norm::l2},
      {"square (convex, L2)", square_scene(Backend::convex), Norm::l2},
      {"square (grid, Linf)", square_scene(Backend::grid), Norm::linf},
      {"notched square (convex, L2)", notched_square_scene(Backend::convex), Norm::l2},
      {"notched square (grid, Linf)", notched_square_scene(Backend::grid), Norm::linf},
  };
}

}  // namespace sheafradon
