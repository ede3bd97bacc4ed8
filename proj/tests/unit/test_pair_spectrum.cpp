#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "ffdist/pair_spectrum.hpp"

using namespace ffdist;

namespace {

// Independent reference: decode every pair and sum squares per block.
std::vector<std::uint64_t> spectrum_oracle(const SplitPointSet& e, const SplitPointSet& f) {
  const Scalar q = e.field().q();
  const int d = e.k() + e.l();
  const PointCodec c(e.field(), d);
  std::vector<std::uint64_t> s(std::size_t{q} * q, 0);
  for (auto x : e.members()) {
    const auto xv = c.decode(x);
    for (auto y : f.members()) {
      const auto yv = c.decode(y);
      std::uint64_t a = 0, b = 0;
      for (int i = 0; i < d; ++i) {
        const std::uint64_t diff = (xv[i] + q - yv[i]) % q;
        (i < e.k() ? a : b) += diff * diff;
      }
      ++s[(a % q) * q + b % q];
    }
  }
  return s;
}

SplitPointSet random_set(std::uint64_t q, int k, int l, double p, std::uint64_t seed) {
  const auto fld = make_field(q);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<PointIndex> m;
  for (PointIndex i = 0; i < space_size(fld, k + l); ++i) if (coin(rng)) m.push_back(i);
  if (m.empty()) m.push_back(0);
  return SplitPointSet(PointSet(fld, k + l, m), k, l);
}

SplitPointSet from_points(std::uint64_t q, int k, int l, const std::vector<Vector>& pts) {
  return SplitPointSet(PointSet(make_field(q), k + l, pts), k, l);
}

}  // namespace

TEST(DistanceSet, Examples) {
  const auto f3 = make_field(3);
  EXPECT_EQ(distance_set(PointSet(f3, 2, std::vector<Vector>{{0, 0}, {1, 0}})), (std::set<Scalar>{0, 1}));
  EXPECT_EQ(distance_set(PointSet(f3, 2, std::vector<Vector>{{0, 0}})), (std::set<Scalar>{0}));
  EXPECT_EQ(distance_set(PointSet::full(f3, 2)), (std::set<Scalar>{0, 1, 2}));
  // (1,1) - (0,0) has norm 2, and both points differ by the same vector
  EXPECT_EQ(distance_set(PointSet(f3, 2, std::vector<Vector>{{0, 0}, {1, 1}})), (std::set<Scalar>{0, 2}));
  EXPECT_THROW(distance_set(PointSet(f3, 2, std::vector<PointIndex>{})), std::invalid_argument);
}

TEST(DistanceSet, LargeSetUsesSameAnswerAsPairs) {
  const auto s = random_set(7, 2, 2, 0.2, 3);
  std::set<Scalar> expect;
  const PointCodec c(s.field(), 4);
  for (auto x : s.members()) {
    for (auto y : s.members()) {
      const auto xv = c.decode(x), yv = c.decode(y);
      Vector diff(4);
      for (int i = 0; i < 4; ++i) diff[i] = s.field().sub(xv[i], yv[i]);
      expect.insert(norm(s.field(), diff));
    }
  }
  EXPECT_EQ(distance_set(s.points()), expect);
}

TEST(Spectrum, NaiveAndFastMatchOracle) {
  for (auto [q, k, l] : {std::tuple{3, 1, 1}, {3, 2, 2}, {5, 2, 2}, {5, 1, 3}, {7, 2, 2}, {3, 2, 3}}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto e = random_set(q, k, l, 0.3, seed);
      const auto f = random_set(q, k, l, 0.5, seed + 100);
      const auto naive = pair_spectrum_naive(e, f);
      EXPECT_EQ(naive.s, spectrum_oracle(e, f));
      EXPECT_EQ(pair_spectrum_fast(e, f), naive);
      EXPECT_EQ(naive.total(), e.size() * f.size());
    }
  }
}

TEST(Spectrum, SymmetricInArguments) {
  const auto e = random_set(5, 2, 2, 0.2, 9);
  const auto f = random_set(5, 2, 2, 0.3, 10);
  EXPECT_EQ(pair_spectrum_fast(e, f), pair_spectrum_fast(f, e));
}

TEST(Spectrum, CirclesExample) {
  for (std::uint64_t q : {3, 7, 11}) {
    const auto fld = make_field(q);
    const auto circle = enumerate_sphere(fld, 2, 1).points;
    std::vector<Vector> ep, fp;
    for (const auto& c : circle) {
      ep.push_back({c[0], c[1], 0, 0});
      fp.push_back({0, 0, c[0], c[1]});
    }
    const auto e = from_points(q, 2, 2, ep), f = from_points(q, 2, 2, fp);
    const auto spec = pair_spectrum_fast(e, f);
    EXPECT_EQ(b_set(spec), (PairSet{{1, 1}}));
    EXPECT_EQ(spec.at(1, 1), circle.size() * circle.size());
  }
}

TEST(Spectrum, FullSpaceFormula) {
  for (auto [q, k, l] : {std::tuple{3, 2, 2}, {5, 1, 2}, {3, 1, 3}}) {
    const auto fld = make_field(q);
    const SplitPointSet full(PointSet::full(fld, k + l), k, l);
    const auto spec = pair_spectrum_fast(full, full);
    const auto sk = norm_fiber_sizes(fld, k), sl = norm_fiber_sizes(fld, l);
    const auto n = space_size(fld, k + l);
    for (Scalar a = 0; a < q; ++a)
      for (Scalar b = 0; b < q; ++b) EXPECT_EQ(spec.at(a, b), n * sk[a] * sl[b]);
  }
}

TEST(Spectrum, DifferenceHistogramCountsDifferences) {
  const auto fld = make_field(3);
  const PointSet e(fld, 2, std::vector<Vector>{{0, 0}, {1, 2}});
  const PointSet f(fld, 2, std::vector<Vector>{{1, 1}});
  const auto c = difference_histogram(e, f);
  const PointCodec codec(fld, 2);
  EXPECT_EQ(c[codec.encode(Vector{2, 2})], 1u);
  EXPECT_EQ(c[codec.encode(Vector{0, 1})], 1u);
  EXPECT_EQ(std::accumulate(c.begin(), c.end(), std::uint64_t{0}), 2u);
}

TEST(Spectrum, CsvAndFileRoundTrip) {
  const auto e = random_set(3, 1, 2, 0.4, 1);
  std::stringstream buf;
  write_split_point_set(buf, e);
  const auto back = read_split_point_set(buf);
  EXPECT_EQ(back.members(), e.members());
  EXPECT_EQ(back.k(), 1);
  std::istringstream no_split("q=3 dims=3\n0,0,0\n");
  EXPECT_THROW(read_split_point_set(no_split), std::runtime_error);
  std::ostringstream csv;
  write_spectrum_csv(csv, pair_spectrum_fast(e, e));
  const std::string text = csv.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
}

TEST(Discrepancy, BoundHoldsAndMainTermIsExact) {
  for (auto [q, k, l] : {std::tuple{3, 2, 2}, {5, 2, 2}, {5, 2, 3}, {7, 2, 2}}) {
    const auto e = random_set(q, k, l, 0.25, q + k);
    const auto f = random_set(q, k, l, 0.6, q + l + 50);
    const auto rep = discrepancy_report(e, f);
    EXPECT_TRUE(rep.all_pass);
    EXPECT_EQ(rep.entries.size(), std::size_t(q) * q);
    const auto sk = norm_fiber_sizes(e.field(), k), sl = norm_fiber_sizes(e.field(), l);
    for (const auto& ent : rep.entries) {
      const Rational main = Rational(BigInt(e.size() * f.size() * sk[ent.a] * sl[ent.b])) / ipow(q, k + l);
      EXPECT_EQ(ent.main_term, main);
      EXPECT_EQ(ent.main_term + ent.discrepancy, Rational(ent.s));
    }
  }
}

TEST(Discrepancy, FullSpaceHasNoRemainderOffZero) {
  const auto fld = make_field(5);
  const SplitPointSet full(PointSet::full(fld, 4), 2, 2);
  for (const auto& ent : discrepancy_report(full, full).entries) EXPECT_EQ(ent.discrepancy, Rational(0));
}

TEST(Theorem1, SurjectiveAboveThreshold) {
  const auto fld = make_field(5);
  const SplitPointSet full(PointSet::full(fld, 4), 2, 2);
  // 625^2 < 16 * 5^7, so the hypothesis fails but the implication still holds
  const auto r = theorem1_check(full, full);
  EXPECT_FALSE(r.threshold_met);
  EXPECT_TRUE(r.surjective);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.pairs_covered, 25u);
  EXPECT_TRUE(theorem1_check(full, full, 1).threshold_met);
  EXPECT_THROW(theorem1_check(random_set(3, 1, 2, 0.5, 1), random_set(3, 1, 2, 0.5, 2)), std::invalid_argument);
  EXPECT_THROW(theorem1_check(random_set(3, 3, 2, 0.5, 1), random_set(3, 3, 2, 0.5, 2)), std::invalid_argument);
}

TEST(Energy, SumSquaresMatchesOctupleCount) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto e = random_set(3, 2, 2, 0.3, seed);
    const auto f = random_set(3, 2, 2, 0.2, seed + 7);
    if (e.size() > 60 || f.size() > 60) continue;
    EXPECT_EQ(sum_s_squared(pair_spectrum_fast(e, f)), sum_s_squared_bruteforce(e, f));
  }
}

TEST(Energy, CauchySchwarzLowerBound) {
  const auto fld = make_field(3);
  const SplitPointSet full(PointSet::full(fld, 4), 2, 2);
  const auto lb = cs_lower_bound(full, full);
  EXPECT_LE(lb, Rational(9));
  EXPECT_GT(lb, Rational(0));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto e = random_set(5, 2, 2, 0.1, seed);
    const auto f = random_set(5, 2, 2, 0.1, seed + 1);
    const auto spec = pair_spectrum_fast(e, f);
    EXPECT_LE(cs_lower_bound(e.size(), f.size(), spec), Rational(b_set(spec).size()));
  }
}

TEST(MixedMass, BoundAndSaturation) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto r = mixed_zero_mass(random_set(5, 2, 2, 0.3, seed));
    EXPECT_TRUE(r.within_bound);
    EXPECT_TRUE(r.agrees);
    EXPECT_LE(r.exact, r.bound);
  }
  // all of {x'} x F_q^l: a single full fibre reaches the bound
  const auto fld = make_field(3);
  std::vector<Vector> fibre;
  for (Scalar a = 0; a < 3; ++a)
    for (Scalar b = 0; b < 3; ++b) fibre.push_back({1, 2, a, b});
  const auto r = mixed_zero_mass(from_points(3, 2, 2, fibre));
  EXPECT_TRUE(r.saturated);
  EXPECT_EQ(r.exact, r.bound);
  EXPECT_EQ(r.bound, Rational(9) / Rational(81));
}
