#pragma once

#include <string>
#include <vector>

#include "sheafradon/scene.hpp"

namespace sheafradon {

/// The closed square [-1,1]^2 minus its top and bottom edges.
Scene notched_square_scene(Backend backend);
/// The closed square [-1,1]^2.
Scene square_scene(Backend backend);
/// Closed disc of radius r about the origin (convex backend).
Scene disc_scene(const Rational& r);

struct SuiteScene {
  std::string name;
  Scene scene;
  Norm norm;  // ball used to thicken it
};

/// Scenes the verification suite runs over.
std::vector<SuiteScene> suite_scenes();

}  // namespace sheafradon
