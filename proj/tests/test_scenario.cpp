#include "encircle/scenario.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <string>

using namespace encircle;

namespace {

const std::filesystem::path kData = ENCIRCLE_TEST_DATA;

std::string parse_error_of(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

TEST(LoadScenario, MinimalFileTakesDefaults) {
  const auto s = load_scenario(kData / "minimal_scenario.json");
  ASSERT_EQ(s.nodes.size(), 2u);
  EXPECT_EQ(s.nodes[1].point, Point2d(-3, 4));
  EXPECT_EQ(s.nodes[0].weight, 0.5);
  EXPECT_EQ(s.capacity, 2u);
  EXPECT_EQ(s.altitude, 50.0);
  EXPECT_EQ(s.los.a, LosParamsd{}.a);
  EXPECT_EQ(s.los.b, LosParamsd{}.b);
  EXPECT_EQ(s.channel.beta0, ChannelParamsd{}.beta0);
  EXPECT_EQ(s.channel.mu, ChannelParamsd{}.mu);
  EXPECT_EQ(s.seed.value, 0u);
  EXPECT_EQ(s.tolerance.eps_contain, 1e-9);
  EXPECT_DOUBLE_EQ(s.tolerance.eps_degenerate, 1e-12 * 16.0);
}

TEST(LoadScenario, NegativeWeightNamesField) {
  try {
    load_scenario(kData / "negative_weight.json");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("nodes[0].w"), std::string::npos) << e.what();
  }
}

TEST(LoadScenario, SyntaxErrorReportsLine) {
  try {
    load_scenario(kData / "malformed.json");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(LoadScenario, MissingFileIsIoError) {
  EXPECT_THROW(load_scenario(kData / "does_not_exist.json"), IoError);
}

TEST(ParseScenario, RejectsInvalidFields) {
  const std::string base = R"({"nodes":[{"x":0,"y":0,"w":1},{"x":1,"y":0,"w":1}],)";
  EXPECT_NE(parse_error_of(base + R"("capacity":1,"altitude":10})").find("capacity"), std::string::npos);
  EXPECT_NE(parse_error_of(base + R"("capacity":2,"altitude":0})").find("altitude"), std::string::npos);
  EXPECT_NE(parse_error_of(base + R"("capacity":2})").find("altitude"), std::string::npos);
  EXPECT_NE(parse_error_of(base + R"("capacity":2.5,"altitude":10})").find("capacity"), std::string::npos);
  EXPECT_NE(parse_error_of(base + R"("capacity":2,"altitude":1e999})").find("overflow"), std::string::npos);
  EXPECT_NE(parse_error_of(base + R"("capacity":2,"altitude":10,"los":{"a":-1}})").find("los"), std::string::npos);
  EXPECT_NE(parse_error_of(base + R"("capacity":2,"altitude":10,"channel":{"mu":2}})").find("channel"),
            std::string::npos);
  EXPECT_NE(parse_error_of(base + R"("capacity":2,"altitude":10,"tolerance":{"eps_degenerate":0}})").find("tolerance"),
            std::string::npos);
  EXPECT_NE(parse_error_of(base + R"("capacity":2,"altitude":10,"seed":-4})").find("seed"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"nodes":[{"x":0,"y":0,"w":1}],"capacity":2,"altitude":10})").find("nodes"),
            std::string::npos);
  EXPECT_NE(parse_error_of(R"({"nodes":[{"x":0,"w":1},{"x":1,"y":0,"w":1}],"capacity":2,"altitude":10})")
                .find("nodes[0].y"),
            std::string::npos);
  EXPECT_NE(parse_error_of("[1,2]").find("scenario"), std::string::npos);
}

TEST(ParseScenario, CapacityAboveNodeCountIsAllowed) {
  const auto s = parse_scenario(R"({"nodes":[{"x":0,"y":0,"w":1},{"x":1,"y":0,"w":1}],"capacity":9,"altitude":10})");
  EXPECT_EQ(s.capacity, 9u);
}

TEST(ScenarioJson, SaveLoadIdentity) {
  const auto tmp = std::filesystem::temp_directory_path() / "encircle_roundtrip.json";
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto s = generate_scenario(25, 5, 750.0, {seed}, 120.0);
    s.los = {12.08, 0.11};
    s.channel = {1.41e-4, 2.1, 3.3, 0.35};
    save_scenario(s, tmp);
    EXPECT_EQ(load_scenario(tmp), s);
  }
  std::filesystem::remove(tmp);
}

TEST(GenerateScenario, DeterministicBytes) {
  EXPECT_EQ(scenario_to_json(generate_scenario(50, 6, 500.0, {12})),
            scenario_to_json(generate_scenario(50, 6, 500.0, {12})));
  EXPECT_NE(scenario_to_json(generate_scenario(50, 6, 500.0, {12})),
            scenario_to_json(generate_scenario(50, 6, 500.0, {13})));
}

TEST(GenerateScenario, MinimalAndBounds) {
  const auto small = generate_scenario(2, 2, 10.0, {0});
  EXPECT_EQ(small.nodes.size(), 2u);
  EXPECT_NO_THROW(validate(small));

  const auto big = generate_scenario(1000, 10, 1000.0, {5});
  ASSERT_EQ(big.nodes.size(), 1000u);
  for (const auto& n : big.nodes) {
    EXPECT_GE(n.point.x(), 0.0);
    EXPECT_LE(n.point.x(), 1000.0);
    EXPECT_GE(n.point.y(), 0.0);
    EXPECT_LE(n.point.y(), 1000.0);
    EXPECT_GE(n.weight, 0.0);
    EXPECT_LE(n.weight, 1.0);
  }
  EXPECT_THROW(generate_scenario(1, 2, 10.0, {0}), std::invalid_argument);
}

TEST(WriteText, UnwritablePathIsIoError) {
  EXPECT_THROW(write_text("/nonexistent-dir/out.json", "x"), IoError);
}

}  // namespace
