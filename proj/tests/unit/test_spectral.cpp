#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ffdist/spectral.hpp"

using namespace ffdist;

TEST(Transform, SphereCoefficientExample) {
  const auto f = make_field(3);
  const auto sphere = sphere_transform(f, 2, 1);
  const PointCodec c(f, 2);
  const Complex v = sphere.coeffs[c.encode(Vector{1, 0})];
  EXPECT_NEAR(v.real(), 1.0 / 9.0, 1e-12);
  EXPECT_NEAR(v.imag(), 0.0, 1e-12);
}

TEST(Transform, ExactPhaseHistogramExample) {
  const auto f = make_field(3);
  const auto sphere = enumerate_sphere(f, 2, 1);
  const PointSet s(f, 2, sphere.points);
  const auto h = exact_phase_histogram(s, Vector{1, 0});
  EXPECT_EQ(h.counts, (std::vector<std::uint64_t>{2, 1, 1}));
  EXPECT_EQ(h.total(), 4u);
  EXPECT_NEAR(std::abs(h.evaluate(f, 2) - Complex{1.0 / 9.0, 0.0}), 0.0, 1e-12);
}

TEST(Transform, SeparableMatchesDirect) {
  std::mt19937_64 rng(7);
  for (auto [q, d] : {std::pair{3, 2}, {5, 2}, {3, 3}, {7, 1}}) {
    const auto f = make_field(q);
    auto g = zero_density(f, d);
    std::normal_distribution<double> n;
    for (auto& v : g.values) v = {n(rng), n(rng)};
    const auto a = forward_transform(g);
    const auto b = forward_transform_direct(g);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) EXPECT_NEAR(std::abs(a.coeffs[i] - b.coeffs[i]), 0.0, 1e-10);
  }
}

TEST(Transform, RoundTrip) {
  const auto f = make_field(7);
  auto g = zero_density(f, 3);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (auto& v : g.values) v = {u(rng), u(rng)};
  const auto back = inverse_transform(forward_transform(g));
  for (std::size_t i = 0; i < g.values.size(); ++i) EXPECT_NEAR(std::abs(back.values[i] - g.values[i]), 0.0, 1e-9);
}

TEST(Transform, PlancherelOnIndicators) {
  std::mt19937_64 rng(5);
  for (auto [q, d] : {std::pair{3, 4}, {5, 3}, {11, 2}}) {
    const auto f = make_field(q);
    const auto full = PointSet::full(f, d);
    std::vector<PointIndex> pick;
    std::bernoulli_distribution coin(0.4);
    for (auto m : full.members()) if (coin(rng)) pick.push_back(m);
    EXPECT_LT(plancherel_gap(indicator(PointSet(f, d, pick))), 1e-12);
    EXPECT_LT(plancherel_gap(indicator(PointSet(f, d, std::vector<PointIndex>{}))), 1e-15);
  }
}

TEST(Transform, Orthogonality) {
  for (auto [q, d] : {std::pair{2, 3}, {3, 3}, {7, 2}, {13, 1}}) {
    const auto r = orthogonality_check(make_field(q), d);
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.zero_frequency_sum.real(), std::pow(double(q), d), 1e-9);
    EXPECT_EQ(r.frequencies_checked, space_size(make_field(q), d));
  }
}

TEST(Kloosterman, SmallCase) {
  const auto r = verify_kloosterman(make_field(3), 2);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.bound, 2.0 / std::pow(3.0, 1.5), 1e-12);
  const auto hat = sphere_transform(make_field(3), 2, 1);
  EXPECT_NEAR(std::abs(hat.coeffs[3]) / r.bound, 0.2886751345948129, 1e-12);
  // the largest coefficient modulus on F_3^2 is 2/9, e.g. at m = (1, 1)
  EXPECT_NEAR(r.max_ratio, (2.0 / 9.0) / r.bound, 1e-9);
}

TEST(Kloosterman, HoldsAcrossSmallGrid) {
  for (std::uint64_t q : {3, 5, 7, 11, 13, 17, 19}) {
    for (int d = 2; d <= 4; ++d) {
      if (std::pow(double(q), d) > 2e5) continue;
      const auto r = verify_kloosterman(make_field(q), d);
      EXPECT_TRUE(r.pass) << q << " " << d << " ratio " << r.max_ratio;
      EXPECT_GT(r.max_ratio, 0.0);
    }
  }
}

TEST(Transform, IndicatorZeroCoefficientIsDensity) {
  const auto f = make_field(5);
  const PointSet s(f, 2, std::vector<PointIndex>{0, 3, 7, 24});
  const auto hat = forward_transform(indicator(s));
  EXPECT_NEAR(hat.coeffs[0].real(), 4.0 / 25.0, 1e-14);
}
