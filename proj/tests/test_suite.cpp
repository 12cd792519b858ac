#include <gtest/gtest.h>

#include <sstream>

#include "homdom/suite.hpp"

using namespace homdom;

namespace {

SuiteConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in, "test");
}

const char* kSmall = R"(
# comment
[check b-levi]
kind = levi
target = M_plus
seed = 3
samples = 5

[check a-line]
kind = line_witness
target = D_plus(side=>)

[check c-gamma]
kind = invariance
target = gamma(alpha=1)
seed = 9
samples = 3
generators = phi, mu
)";

}  // namespace

TEST(Config, ParsesBlocks) {
  const SuiteConfig cfg = parse(kSmall);
  ASSERT_EQ(cfg.checks.size(), 3u);
  EXPECT_EQ(cfg.checks[0].id, "b-levi");
  EXPECT_EQ(cfg.checks[0].seed, 3u);
  EXPECT_EQ(cfg.checks[0].params.at("samples"), "5");
  EXPECT_EQ(cfg.checks[2].params.at("generators"), "phi, mu");
  EXPECT_EQ(cfg.checks[1].path, CheckPath::both);
}

TEST(Config, Errors) {
  EXPECT_THROW(parse("kind = levi\n"), ConfigError);
  EXPECT_THROW(parse("[check a]\nkind = levi\ntarget = M_plus\n[check a]\nkind = levi\ntarget = M_plus\n"), ConfigError);
  EXPECT_THROW(parse("[check a]\nkind = frobnicate\ntarget = M_plus\n"), ConfigError);
  EXPECT_THROW(parse("[check a]\nkind = levi\ntarget = nowhere\n"), ConfigError);
  EXPECT_THROW(parse("[check a]\nkind = levi\n"), ConfigError);
  EXPECT_THROW(parse("[check a]\nkind = levi\ntarget = M_plus\npath = sideways\n"), ConfigError);
  EXPECT_THROW(parse("[check a]\nkind levi\n"), ConfigError);
  EXPECT_THROW(parse("[block a]\n"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.cfg"), ConfigError);
}

TEST(Suite, EmptyConfigPasses) {
  const SuiteReport r = run_suite(parse("# nothing\n"));
  EXPECT_TRUE(r.results.empty());
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(to_ndjson(r), "");
}

TEST(Suite, ResultsSortedAndSerialized) {
  const SuiteReport r = run_suite(parse(kSmall));
  ASSERT_EQ(r.results.size(), 3u);
  EXPECT_EQ(r.results[0].id, "a-line");
  EXPECT_EQ(r.results[2].id, "c-gamma");
  EXPECT_TRUE(r.all_pass()) << to_ndjson(r);
  const auto j = to_json(r.results[2]);
  EXPECT_TRUE(j["details"].contains("exact"));
  EXPECT_TRUE(j["details"].contains("factor"));
  EXPECT_TRUE(j.contains("wall_time_ms"));
  EXPECT_FALSE(to_json(r.results[2], false).contains("wall_time_ms"));
  EXPECT_NE(to_markdown(r).find("| a-line |"), std::string::npos);
}

TEST(Suite, RationalsSerializeAsFractions) {
  const SuiteReport r = run_suite(parse("[check p]\nkind = invariance\ntarget = P_plus\np.q = 2\np.b = -1\np.d = 4\n"));
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.results[0].status, CheckStatus::pass);
  EXPECT_EQ(r.results[0].details["factor"][0], "16/1");
}

TEST(Suite, NegativeControlFails) {
  const SuiteReport r = run_suite(parse("[check p]\nkind = invariance\ntarget = P_plus\np.q = 2\np.b = -1\np.d = 5\n"));
  EXPECT_EQ(r.results[0].status, CheckStatus::fail);
  EXPECT_FALSE(r.all_pass());
  const SuiteReport rej = run_suite(
      parse("[check p]\nkind = invariance\ntarget = P_plus\nexpect = reject\np.q = 2\np.b = -1\np.d = 5\n"));
  EXPECT_EQ(rej.results[0].status, CheckStatus::pass);
}

TEST(Suite, BadParametersBecomeErrors) {
  const SuiteReport r = run_suite(parse(
      "[check a]\nkind = levi\ntarget = M_plus\nsamplez = 3\n[check b]\nkind = lie\ntarget = sl3\ntest = nope\n"
      "[check c]\nkind = rank\ntarget = gamma(alpha=1)\n"));
  ASSERT_EQ(r.results.size(), 3u);
  for (const auto& res : r.results) {
    EXPECT_EQ(res.status, CheckStatus::error) << res.id;
    EXPECT_FALSE(res.message.empty());
  }
}

TEST(Suite, FailFastSkipsRemaining) {
  const std::string text =
      "[check a]\nkind = invariance\ntarget = P_plus\np.q = 2\np.b = -1\np.d = 5\n"
      "[check b]\nkind = lie\ntarget = sl3\ntest = killing\n";
  RunOptions opts;
  opts.fail_fast = true;
  const SuiteReport r = run_suite(parse(text), opts);
  EXPECT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.skipped, 1u);
}

TEST(Suite, DeterministicAcrossRunsAndThreads) {
  const SuiteConfig cfg = parse(kSmall);
  RunOptions parallel;
  parallel.jobs = 3;
  const std::string a = to_ndjson(run_suite(cfg), false);
  const std::string b = to_ndjson(run_suite(cfg), false);
  const std::string c = to_ndjson(run_suite(cfg, parallel), false);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Suite, SeedOverrideChangesDraws) {
  const SuiteConfig cfg = parse(kSmall);
  RunOptions opts;
  opts.seed_override = 12345;
  const SuiteReport r = run_suite(cfg, opts);
  EXPECT_TRUE(r.all_pass());
  EXPECT_NE(to_ndjson(r, false), to_ndjson(run_suite(cfg), false));
}
