#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "biharm/cli.hpp"

using namespace biharm::cli;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Alpha) {
  const auto r = call({"alpha", "--m", "5", "--ell", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["sin2alpha"], "3/4");
  const auto none = call({"alpha", "--m", "7", "--ell", "1"});
  EXPECT_EQ(none.code, kOk);
  EXPECT_TRUE(Json::parse(none.out)["sin2alpha"].is_null());
}

TEST(Cli, AtlasCsv) {
  const auto r = call({"atlas", "--m-max", "60", "--ell-max", "3", "--format", "csv"});
  ASSERT_EQ(r.code, kOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "m,ell,sin2alpha_num,sin2alpha_den,quadratic_margin,verdict,source");
  int rows = 0, stable = 0;
  while (std::getline(in, line)) {
    ++rows;
    if (line.find("ProperStrictlyStable") != std::string::npos) ++stable;
  }
  EXPECT_EQ(rows, 2 + 3 * 58);  // m = 2 has ell 1, 2
  EXPECT_EQ(stable, 15 + 2);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, VerifyIdentities) {
  const auto r = call({"verify-identities", "--m", "4", "--ell", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["all_passed"].get<bool>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"verify-identities", "--m", "1001", "--ell", "2"}).code, kInfeasible);
  EXPECT_EQ(call({"hessian", "--m", "7", "--ell", "1"}).code, kInvalidConfig);
  EXPECT_EQ(call({"alpha", "--m", "3", "--ell", "4"}).code, kInvalidConfig);
  EXPECT_EQ(call({"alpha", "--format", "xml"}).code, kInvalidConfig);
  EXPECT_EQ(call({"nope"}).code, kInvalidConfig);
  EXPECT_EQ(call({"sobolev", "--annulus-inner", "0.7"}).code, kInvalidConfig);
  EXPECT_EQ(call({"--help"}).code, kOk);
}

TEST(Cli, ThresholdAndHardy) {
  const auto t = call({"threshold"});
  ASSERT_EQ(t.code, kOk);
  const Json j = Json::parse(t.out);
  EXPECT_EQ(j["thresholds"][0]["threshold"], 33);
  EXPECT_EQ(j["thresholds"][1]["threshold"], 46);
  EXPECT_EQ(j["thresholds"][2]["threshold"], 59);
  const auto h = call({"hardy", "--m", "6", "--format", "csv"});
  EXPECT_EQ(h.code, kOk);
  EXPECT_EQ(h.out.substr(0, h.out.find('\n')), "profile_index,ratio");
}

TEST(Cli, SobolevDeterministic) {
  const std::vector<std::string> args = {"sobolev", "--m", "5", "--ell", "1", "--mc-samples", "20000", "--seed", "7"};
  const auto a = call(args), b = call(args);
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_TRUE(j["monte_carlo"]["bienergy"]["within_3_sigma"].get<bool>());
  auto c = args;
  c.back() = "8";
  EXPECT_NE(call(c).out, a.out);
  EXPECT_EQ(call({"sobolev", "--m", "4", "--ell", "1"}).code, kOk);
}

TEST(Cli, SearchInstability) {
  const auto r = call({"search-instability", "--m", "5", "--ell", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["equivariant_hessian"]["negative_direction_found"].get<bool>());
  const auto s = call({"search-instability", "--m", "33", "--ell", "1"});
  ASSERT_EQ(s.code, kOk) << s.err;
  EXPECT_GT(Json::parse(s.out)["sufficient_form"]["min_rayleigh"].get<double>(), 0);
}

TEST(Cli, WritesFile) {
  const std::string path = ::testing::TempDir() + "atlas_out.csv";
  const auto r = call({"atlas", "--m-max", "6", "--ell-max", "1", "--format", "csv", "--out", path});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str().substr(0, 2), "m,");
  std::remove(path.c_str());
}
