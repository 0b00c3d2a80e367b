#include <gtest/gtest.h>

#include "permuton/models.hpp"
#include "permuton/report.hpp"

using namespace permuton;

TEST(Report, ExactValuesAreStrings) {
  auto r = born_full({1, 3, 2}, {1, 1, 2});
  Json j = to_json(r);
  EXPECT_EQ(j["probability"], "16/21");
  EXPECT_EQ(j["fraction"], "16/21");
  EXPECT_TRUE(j["is_rational"].get<bool>());
  Json hinted = to_json(r, true);
  EXPECT_EQ(hinted["probability"]["exact"], "16/21");
  EXPECT_TRUE(hinted["probability"]["approx"].is_string());
  EXPECT_TRUE(free_of_floats(hinted));
}

TEST(Report, RenderRejectsFloats) {
  Json ok = {{"a", 1}, {"b", Json::array({"x", true, nullptr})}};
  EXPECT_NO_THROW(render(ok));
  Json nested = ok;
  nested["b"].push_back(Json{{"deep", 0.5}});
  EXPECT_FALSE(free_of_floats(nested));
  try {
    render(nested);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::consistency);
  }
}

TEST(Report, RoundTripAndDeterminism) {
  auto g = model_group("a5-icosahedron");
  Json j;
  j["table"] = to_json(character_table(g));
  j["geometry"] = to_json(IcosahedronGeometry::standard());
  auto s3 = model_group("s3-natural");
  auto action = GroupAction::natural(s3);
  j["interference"] = to_json(find_interference(nontrivial_projector(action, character_table(s3)), 2));
  j["blocks"] = to_json(blocks(GroupAction::natural(g)).front());
  std::string text = render(j);
  EXPECT_EQ(Json::parse(text), j);
  EXPECT_EQ(render(Json::parse(text)), text);
  EXPECT_EQ(j["table"]["source"], "builtin");
  EXPECT_EQ(j["table"]["rows"][1]["label"], "3");
  EXPECT_EQ(j["geometry"]["complement"]["1"], 7);
  EXPECT_EQ(j["blocks"].size(), 6u);
}

TEST(Report, CheckResultShape) {
  CheckResult r{"k", "title", false, "detail"};
  Json j = to_json(r);
  EXPECT_EQ(j.dump(), R"({"key":"k","title":"title","passed":false,"detail":"detail"})");
}
