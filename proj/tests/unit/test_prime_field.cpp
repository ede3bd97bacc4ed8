#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ffdist/prime_field.hpp"

using namespace ffdist;

namespace {

// brute-force Legendre symbol: scan all squares
int legendre_by_scan(Scalar q, Scalar t) {
  if (t % q == 0) return 0;
  for (Scalar x = 1; x < q; ++x) {
    if ((x * x) % q == t % q) return 1;
  }
  return -1;
}

}  // namespace

TEST(PrimeField, RecordsResidueClass) {
  EXPECT_EQ(make_field(3).q(), 3u);
  EXPECT_EQ(make_field(3).q_mod_4(), 3u);
  EXPECT_EQ(make_field(17).q_mod_4(), 1u);
}

TEST(PrimeField, RejectsComposite) {
  try {
    make_field(9);
    FAIL() << "9 accepted";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("not prime"), std::string::npos);
  }
  EXPECT_THROW(make_field(1), std::invalid_argument);
  EXPECT_THROW(make_field(0), std::invalid_argument);
  EXPECT_THROW(make_field(kMaxModulus + 3), std::invalid_argument);
  EXPECT_NO_THROW(make_field(2));
}

TEST(PrimeField, CharacterIsAHomomorphism) {
  for (std::uint64_t q : {2, 3, 7, 13}) {
    const auto f = make_field(q);
    EXPECT_NEAR(std::abs(f.chi(0) - Complex{1.0, 0.0}), 0.0, 1e-15);
    for (Scalar a = 0; a < q; ++a) {
      for (Scalar b = 0; b < q; ++b) {
        EXPECT_NEAR(std::abs(f.chi(a) * f.chi(b) - f.chi(f.add(a, b))), 0.0, 1e-12);
      }
    }
  }
}

TEST(PrimeField, ArithmeticReducesCanonically) {
  const auto f = make_field(7);
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_EQ(f.reduce(-15), 6u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.neg(0), 0u);
  EXPECT_EQ(f.mul(6, 6), 1u);
  const auto big = make_field(999'983);
  EXPECT_EQ(big.mul(999'982, 999'982), 1u);
}

TEST(QuadraticCharacter, SpecExamples) {
  EXPECT_EQ(quadratic_character(make_field(3), 0), 0);
  EXPECT_EQ(quadratic_character(make_field(3), 2), legendre_by_scan(3, 2));
  EXPECT_EQ(quadratic_character(make_field(3), 2), -1);
  EXPECT_EQ(quadratic_character(make_field(7), 2), legendre_by_scan(7, 2));
  EXPECT_EQ(quadratic_character(make_field(7), 2), 1);
  EXPECT_EQ(quadratic_character(make_field(7), -5), 1);
}

TEST(QuadraticCharacter, MatchesScanForSmallPrimes) {
  for (std::uint64_t q = 2; q < 60; ++q) {
    if (!is_prime(q)) continue;
    const auto f = make_field(q);
    for (Scalar t = 0; t < q; ++t) EXPECT_EQ(f.quadratic_character(t), legendre_by_scan(q, t)) << q << " " << t;
  }
}

TEST(So2, SmallEnumerations) {
  const auto r3 = enumerate_so2(make_field(3));
  const std::vector<Rotation> expected3{{0, 1}, {0, 2}, {1, 0}, {2, 0}};
  EXPECT_EQ(r3, expected3);
  EXPECT_EQ(enumerate_so2(make_field(7)).size(), 8u);
  for (std::uint64_t q : {3, 5, 7, 11, 13}) {
    const auto rs = enumerate_so2(make_field(q));
    EXPECT_NE(std::find(rs.begin(), rs.end(), Rotation{1, 0}), rs.end());
    EXPECT_TRUE(std::is_sorted(rs.begin(), rs.end()));
  }
}

TEST(So2, OrderIsQMinusCharacterOfMinusOne) {
  for (std::uint64_t q = 3; q <= 50; ++q) {
    if (!is_prime(q)) continue;
    const auto f = make_field(q);
    const auto size = enumerate_so2(f).size();
    EXPECT_EQ(static_cast<std::int64_t>(size), static_cast<std::int64_t>(q) - quadratic_character(f, -1)) << q;
    EXPECT_EQ(size == q + 1, q % 4 == 3) << q;
  }
}

TEST(So2, ClosedUnderCompositionAndInverse) {
  for (std::uint64_t q : {3, 5, 7, 11, 13}) {
    const auto f = make_field(q);
    const auto rs = enumerate_so2(f);
    const std::set<Rotation> group(rs.begin(), rs.end());
    for (const auto& a : rs) {
      EXPECT_EQ(rotation_compose(f, a, rotation_inverse(f, a)), (Rotation{1, 0}));
      for (const auto& b : rs) EXPECT_TRUE(group.contains(rotation_compose(f, a, b)));
    }
  }
}

TEST(So2, ApplyExamples) {
  EXPECT_EQ(rotation_apply(make_field(7), {1, 0}, {5, 2}), (Vec2{5, 2}));
  EXPECT_EQ(rotation_apply(make_field(3), {0, 1}, {1, 0}), (Vec2{0, 1}));
  EXPECT_EQ(rotation_apply(make_field(3), {2, 0}, {1, 2}), (Vec2{2, 1}));
}

TEST(So2, PreservesNorm) {
  for (std::uint64_t q = 3; q <= 23; ++q) {
    if (!is_prime(q)) continue;
    const auto f = make_field(q);
    for (const auto& r : enumerate_so2(f)) {
      for (Scalar x = 0; x < q; ++x) {
        for (Scalar y = 0; y < q; ++y) {
          const Vec2 w = rotation_apply(f, r, {x, y});
          ASSERT_EQ(f.add(f.square(w.x), f.square(w.y)), f.add(f.square(x), f.square(y)));
        }
      }
    }
  }
}

TEST(So2, SimplyTransitiveOnCircles) {
  for (std::uint64_t q : {3, 7, 11, 19, 23}) {
    const auto r = so2_orbit_check(make_field(q));
    EXPECT_TRUE(r.pass) << q << ": " << r.counterexample.value_or("");
    EXPECT_EQ(r.pairs_checked, (q * q - 1) * (q * q - 1));
  }
}

TEST(So2, OrbitCheckRequiresThreeModFour) {
  try {
    so2_orbit_check(make_field(5));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("3 mod 4"), std::string::npos);
  }
}
