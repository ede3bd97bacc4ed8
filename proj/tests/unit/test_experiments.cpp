#include <gtest/gtest.h>

#include "ffdist/experiments.hpp"

using namespace ffdist;

namespace {

ExperimentConfig config(Generator g, std::uint64_t q = 7, int k = 2, int l = 2) {
  ExperimentConfig cfg;
  cfg.q = q;
  cfg.k = k;
  cfg.l = l;
  cfg.generator = g;
  cfg.seed = 42;
  return cfg;
}

nlohmann::ordered_json without_duration(const RunReport& r) {
  auto j = r.to_json();
  j.erase("duration_ms");
  return j;
}

}  // namespace

TEST(Rng, CounterStreamsAreStable) {
  EXPECT_EQ(counter_bits(1, 2, 3), counter_bits(1, 2, 3));
  EXPECT_NE(counter_bits(1, 2, 3), counter_bits(1, 2, 4));
  EXPECT_NE(counter_bits(1, 2, 3), counter_bits(1, 3, 3));
  for (std::uint64_t c = 0; c < 1000; ++c) {
    const double u = counter_uniform(9, 0, c);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Generators, BernoulliIsDeterministic) {
  auto cfg = config(Generator::kBernoulli);
  cfg.density = 0.3;
  const auto a = generate_set(cfg, Which::kE);
  EXPECT_EQ(a.members(), generate_set(cfg, Which::kE).members());
  EXPECT_NE(a.members(), generate_set(cfg, Which::kF).members());
  cfg.seed = 43;
  EXPECT_NE(a.members(), generate_set(cfg, Which::kE).members());
  // density 0.3 of 2401 points: well within 5 standard deviations
  EXPECT_NEAR(double(a.size()), 720.3, 5 * 22.5);
}

TEST(Generators, FullAndCircles) {
  EXPECT_EQ(generate_set(config(Generator::kFull, 3), Which::kE).size(), 81u);
  const auto e = generate_set(config(Generator::kCircles, 3), Which::kE);
  const auto f = generate_set(config(Generator::kCircles, 3), Which::kF);
  EXPECT_EQ(e.size(), 4u);
  for (auto x : e.members()) EXPECT_EQ(e.tail(x), 0u);
  for (auto y : f.members()) EXPECT_EQ(f.head(y), 0u);
}

TEST(Generators, Strip) {
  auto cfg = config(Generator::kStrip);
  EXPECT_EQ(cfg.effective_strip_len(), 4u);
  cfg.strip_len = 2;
  EXPECT_EQ(generate_set(cfg, Which::kE).size(), 98u);
  cfg.k = 3;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Generators, Validation) {
  auto cfg = config(Generator::kSharpProduct);
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.k = 3;
  EXPECT_NO_THROW(cfg.validate());
  cfg = config(Generator::kBernoulli);
  cfg.density = 1.5;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = config(Generator::kBernoulli, 8);
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_THROW(parse_generator("spiral"), std::invalid_argument);
  EXPECT_EQ(parse_generator("sharp-product"), Generator::kSharpProduct);
}

TEST(Sampling, DistinctAndDeterministic) {
  const auto fld = make_field(5);
  const auto s = sample_points(fld, 3, 40, 7, 1);
  EXPECT_EQ(s.size(), 40u);
  EXPECT_EQ(s.members(), sample_points(fld, 3, 40, 7, 1).members());
  EXPECT_EQ(sample_points(fld, 2, 25, 7, 1).size(), 25u);
  EXPECT_THROW(sample_points(fld, 2, 26, 7, 1), std::invalid_argument);
}

TEST(SharpSubset, MissesADistance) {
  const auto fld = make_field(3);
  const auto r = search_sharp_subset(fld, 3, 2000, 5);
  EXPECT_FALSE(r.set.empty());
  EXPECT_EQ(distance_set(r.set), r.distances);
  EXPECT_FALSE(r.distances.contains(r.missing_distance));
  EXPECT_LT(r.distances.size(), 3u);
}

TEST(Suites, EachPassesAndIsReproducible) {
  for (auto name : kSuites) {
    auto cfg = config(Generator::kBernoulli, 7);
    cfg.seed = 3;
    cfg.density = 0.3;
    const auto a = run_suite(name, cfg);
    EXPECT_TRUE(a.pass()) << name << "\n" << a.to_json().dump(1);
    EXPECT_FALSE(a.checks.empty());
    EXPECT_EQ(without_duration(a), without_duration(run_suite(name, cfg))) << name;
    const auto j = a.to_json();
    EXPECT_EQ(j["schema"], RunReport::kSchema);
    for (const auto& c : j["checks"]) {
      EXPECT_TRUE(c.contains("paper_ref"));
      EXPECT_TRUE(c.contains("payload"));
    }
    EXPECT_EQ(a.to_csv().rfind("name,pass\n", 0), 0u);
  }
}

TEST(Suites, UnknownSuiteThrows) {
  EXPECT_THROW(run_suite("everything", config(Generator::kBernoulli)), std::invalid_argument);
}

TEST(Suites, GeneratorMismatchThrows) {
  EXPECT_THROW(run_suite("theorem1", config(Generator::kSharpProduct, 7, 2, 2)), std::invalid_argument);
}
