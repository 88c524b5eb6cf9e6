#include <gtest/gtest.h>

#include <filesystem>

#include "sheafradon/reference_scenes.hpp"
#include "sheafradon/scene.hpp"
#include "support.hpp"

using namespace sheafradon;
using namespace sheafradon::testing;

TEST(Scene, RoundTripsSuiteScenes) {
  for (const auto& s : suite_scenes()) {
    EXPECT_EQ(parse_scene(write_scene(s.scene)), s.scene) << s.name;
  }
}

TEST(Scene, RoundTripsEveryRegionKind) {
  Scene s;
  s.backend = Backend::convex;
  s.margin = q(7, 3);
  Region box = Region::box({q(0), q(0)}, {q(1, 3), q(2)});
  box.closed = {true, false, true, false};
  Region seg = Region::segment({q(0), q(0)}, {q(1), q(1)});
  seg.closed = {false, true, true, true};
  s.generators.push_back({box, 1, 3});
  s.generators.push_back({seg, 0, 1});
  s.generators.push_back({Region::polygon({{q(0), q(0)}, {q(2), q(0)}, {q(0), q(2)}}, false), 2, 1});
  s.generators.push_back({Region::union_of({Region::disc({q(5), q(5)}, q(1, 2)), Region::disc({q(9), q(5)}, q(1))}), 0, 2});
  s.generators.push_back(
      {Region::diff(Region::box({q(-1), q(-1)}, {q(1), q(1)}), {Region::segment({q(-1), q(0)}, {q(1), q(0)})}), 1, 1});
  EXPECT_EQ(parse_scene(write_scene(s)), s);
  auto path = std::filesystem::temp_directory_path() / "sheafradon_scene_roundtrip.json";
  save_scene(s, path.string());
  EXPECT_EQ(load_scene(path.string()), s);
  std::filesystem::remove(path);
}

TEST(Scene, ParsesHandWrittenNotchedSquare) {
  const char* text = R"({
    "field": 2, "backend": "grid", "margin": "5/2",
    "generators": [{"region": {"diff": {
        "outer": {"box": {"min": [-1, -1], "max": [1, 1]}},
        "holes": [{"segment": {"a": [-1, 1], "b": [1, 1]}},
                  {"segment": {"a": ["-1", "-1"], "b": [1, -1]}}]}},
      "degree": 0, "mult": 1}]})";
  EXPECT_EQ(parse_scene(text), notched_square_scene(Backend::grid));
}

TEST(Scene, EmptyGeneratorListIsZeroObject) {
  Scene s = parse_scene(R"({"field": 3, "backend": "convex", "margin": 1, "generators": []})");
  SheafObject f = compile(s);
  EXPECT_EQ(f.generator_count(), 0u);
  EXPECT_EQ(f.euler_c(), 0);
  EXPECT_FALSE(f.support_box());
}

TEST(Scene, GridRejectsDisc) {
  Scene s = disc_scene(q(1));
  s.backend = Backend::grid;
  EXPECT_THROW(compile(s), InputError);
}

TEST(Scene, GridRejectsSlantedSegment) {
  Scene s;
  s.generators.push_back({Region::segment({q(0), q(0)}, {q(1), q(1)}), 0, 1});
  EXPECT_THROW(compile(s), InputError);
}

TEST(Scene, ConvexRejectsOpenFlags) {
  Scene s = square_scene(Backend::convex);
  s.generators[0].region.closed[2] = false;
  EXPECT_THROW(compile(s), InputError);
}

TEST(Scene, SchemaErrorsNameTheirLocation) {
  try {
    parse_scene(R"({"field": 2, "backend": "grid", "margin": 1, "generators": [{"region": {"box": {"min": [0]}}}]})");
    FAIL() << "accepted a malformed box";
  } catch (const InputError& e) {
    EXPECT_NE(e.where().find("/generators/0/region"), std::string::npos) << e.where();
  }
  EXPECT_THROW(parse_scene("{"), InputError);
  EXPECT_THROW(parse_scene(R"({"field": 4, "backend": "grid", "margin": 1, "generators": []})"), InputError);
  EXPECT_THROW(parse_scene(R"({"field": 2, "backend": "mesh", "margin": 1, "generators": []})"), InputError);
  EXPECT_THROW(parse_scene(R"({"field": 2, "backend": "grid", "margin": 0, "generators": []})"), InputError);
}

TEST(Scene, OverlappingUnionRejected) {
  Scene s;
  s.backend = Backend::convex;
  s.generators.push_back({Region::union_of({Region::disc({q(0), q(0)}, q(1)), Region::disc({q(1), q(0)}, q(1))}), 0, 1});
  EXPECT_THROW(compile(s), InputError);
}

TEST(Region, ContainsRespectsFlags) {
  Region b = Region::box({q(0), q(0)}, {q(1), q(1)});
  b.closed = {true, false, true, true};
  EXPECT_TRUE(b.contains({q(0), q(1, 2)}));
  EXPECT_FALSE(b.contains({q(1), q(1, 2)}));
  Region tri = Region::polygon({{q(0), q(0)}, {q(2), q(0)}, {q(0), q(2)}}, false);
  EXPECT_FALSE(tri.contains({q(1), q(1)}));
  EXPECT_TRUE(tri.contains({q(1, 2), q(1, 2)}));
  Region d = Region::diff(Region::box({q(-1), q(-1)}, {q(1), q(1)}), {Region::segment({q(-1), q(1)}, {q(1), q(1)})});
  EXPECT_FALSE(d.contains({q(1), q(1)}));
  EXPECT_TRUE(d.contains({q(1), q(0)}));
}

TEST(Compile, GridCutsIncludeWindow) {
  SheafObject f = compile(notched_square_scene(Backend::grid));
  const Box w = f.window();
  EXPECT_EQ(w.xmin, q(-7, 2));
  EXPECT_EQ(w.ymax, q(7, 2));
  EXPECT_EQ(f.grid()->bounds().xmin, w.xmin);
}
