#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "ffdist/lattice.hpp"

using namespace ffdist;

TEST(Norm, Examples) {
  EXPECT_EQ(norm(make_field(3), Vector{1, 1}), 2u);
  EXPECT_EQ(norm(make_field(7), Vector{2, 3, 1}), 0u);
  EXPECT_EQ(norm(make_field(5), Vector{}), 0u);
}

TEST(Codec, LexicographicRoundTrip) {
  const auto f = make_field(5);
  const PointCodec c(f, 3);
  EXPECT_EQ(c.size(), 125u);
  EXPECT_EQ(c.encode(Vector{1, 2, 3}), 25u + 10u + 3u);
  EXPECT_EQ(c.stride(0), 25u);
  for (PointIndex i = 0; i < c.size(); ++i) EXPECT_EQ(c.encode(c.decode(i)), i);
  for (PointIndex i = 1; i < c.size(); ++i) EXPECT_LT(c.decode(i - 1), c.decode(i));
}

TEST(Codec, SpaceSizeGuard) {
  EXPECT_THROW(space_size(make_field(101), 5), std::length_error);
  EXPECT_EQ(space_size(make_field(3), 4), 81u);
}

TEST(Sphere, Examples) {
  const auto s = enumerate_sphere(make_field(3), 2, 1);
  const std::vector<Vector> expected{{0, 1}, {0, 2}, {1, 0}, {2, 0}};
  EXPECT_EQ(s.points, expected);
  const auto zero = enumerate_sphere(make_field(3), 2, 0);
  EXPECT_EQ(zero.points, (std::vector<Vector>{{0, 0}}));
  // q = 3 mod 4 makes -1 a non-square, so the odd-dimensional count is q^2 - q
  EXPECT_EQ(enumerate_sphere(make_field(7), 3, 1).points.size(), 42u);
  EXPECT_EQ(enumerate_sphere(make_field(5), 3, 1).points.size(), 30u);
}

TEST(Sphere, FiberSizes) {
  EXPECT_EQ(norm_fiber_sizes(make_field(3), 1), (std::vector<std::uint64_t>{1, 2, 0}));
  EXPECT_EQ(norm_fiber_sizes(make_field(3), 2), (std::vector<std::uint64_t>{1, 4, 4}));
}

TEST(Sphere, FiberSizesMatchEnumeration) {
  for (std::uint64_t q : {3, 5, 7}) {
    const auto f = make_field(q);
    for (int d = 1; d <= 3; ++d) {
      const auto sizes = norm_fiber_sizes(f, d);
      std::uint64_t total = 0;
      for (Scalar t = 0; t < q; ++t) {
        EXPECT_EQ(enumerate_sphere(f, d, t).points.size(), sizes[t]);
        total += sizes[t];
      }
      EXPECT_EQ(total, space_size(f, d));
    }
  }
}

// | |S_t| - q^(d-1) | <= 2 q^(d-2) for t != 0, d >= 2
TEST(Sphere, CardinalityLaw) {
  for (std::uint64_t q = 3; q <= 23; ++q) {
    if (!is_prime(q)) continue;
    const auto f = make_field(q);
    for (int d = 2; d <= 4; ++d) {
      const auto sizes = norm_fiber_sizes(f, d);
      const double main = std::pow(double(q), d - 1);
      for (Scalar t = 1; t < q; ++t) {
        EXPECT_LE(std::abs(double(sizes[t]) - main), 2.0 * std::pow(double(q), d - 2)) << q << " " << d << " " << t;
      }
    }
  }
}

TEST(PointSet, SortsAndRejectsDuplicates) {
  const auto f = make_field(3);
  const PointSet s(f, 2, std::vector<Vector>{{2, 0}, {0, 1}});
  EXPECT_EQ(s.members(), (std::vector<PointIndex>{1, 6}));
  EXPECT_TRUE(s.contains(6));
  EXPECT_FALSE(s.contains(0));
  EXPECT_THROW(PointSet(f, 2, std::vector<Vector>{{1, 1}, {1, 1}}), std::invalid_argument);
  EXPECT_EQ(PointSet::full(f, 3).size(), 27u);
}

TEST(PointSetFile, RoundTrip) {
  const auto f = make_field(5);
  const PointSet s(f, 3, std::vector<Vector>{{0, 1, 2}, {4, 4, 4}});
  std::stringstream buf;
  write_point_set(buf, s, std::pair{1, 2});
  const auto parsed = parse_point_set(buf);
  EXPECT_EQ(parsed.header.q, 5u);
  EXPECT_EQ(parsed.header.dims, 3);
  EXPECT_EQ(parsed.header.split, (std::pair{1, 2}));
  EXPECT_EQ(parsed.points, s.points());
}

TEST(PointSetFile, CommentsAreIgnored) {
  std::istringstream in("# generated\nq=3 dims=2\n# a point\n1,2\n\n0,0\n");
  const auto parsed = parse_point_set(in);
  EXPECT_FALSE(parsed.header.split.has_value());
  EXPECT_EQ(parsed.points.size(), 2u);
}

TEST(PointSetFile, ErrorsCarryLineNumbers) {
  const auto message = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_point_set(in);
    } catch (const std::runtime_error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message("q=3 dims=2\n1,2\n1,x\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("q=3 dims=2\n1,2,0\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("q=3 dims=2\n3,0\n").find("line 2"), std::string::npos);
  EXPECT_FALSE(message("dims=2\n").empty());
  EXPECT_FALSE(message("").empty());
}
