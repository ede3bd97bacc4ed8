#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ffdist/lattice.hpp"
#include "ffdist/prime_field.hpp"
#include "ffdist/rational.hpp"

namespace ffdist {

/// Points of F_q^(k+l) with the coordinate split x = (x', x''), x' in F_q^k.
class SplitPointSet {
 public:
  SplitPointSet(PointSet points, int k, int l);

  const PointSet& points() const noexcept { return points_; }
  const PrimeField& field() const noexcept { return points_.field(); }
  int k() const noexcept { return k_; }
  int l() const noexcept { return l_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<PointIndex>& members() const noexcept { return points_.members(); }

  /// Encoded x' of an encoded point (index in F_q^k).
  PointIndex head(PointIndex idx) const noexcept { return idx / tail_size_; }
  /// Encoded x'' of an encoded point (index in F_q^l).
  PointIndex tail(PointIndex idx) const noexcept { return idx % tail_size_; }

 private:
  PointSet points_;
  int k_;
  int l_;
  std::uint64_t tail_size_;
};

/// Requires a `split=<k>,<l>` header.
SplitPointSet read_split_point_set(std::istream& in);
void write_split_point_set(std::ostream& out, const SplitPointSet& set);

/// Raised when a rounded convolution value is more than 1e-3 from an integer.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest |E||F| the double-loop paths accept.
inline constexpr std::uint64_t kMaxNaivePairs = 100'000'000;

/// s(a, b), stored row-major with a indexing rows.
struct PairSpectrum {
  Scalar q = 0;
  std::vector<std::uint64_t> s;

  std::uint64_t at(Scalar a, Scalar b) const { return s[std::size_t{a} * q + b]; }
  std::uint64_t total() const;
  bool operator==(const PairSpectrum&) const = default;
};

/// q rows of q comma-separated integers.
void write_spectrum_csv(std::ostream& out, const PairSpectrum& spectrum);

std::set<Scalar> distance_set(const PointSet& set);

/// c(u) = #{(X, Y) in E x F : X - Y = u}, via transform, pointwise product and
/// inverse transform, rounded to integers. Throws PrecisionError on drift.
std::vector<std::uint64_t> difference_histogram(const PointSet& e, const PointSet& f);

PairSpectrum pair_spectrum_naive(const SplitPointSet& e, const SplitPointSet& f);
PairSpectrum pair_spectrum_fast(const SplitPointSet& e, const SplitPointSet& f);
/// Aggregates a difference histogram over F_q^(k+l) into s(a, b).
PairSpectrum spectrum_from_differences(const PrimeField& fld, int k, int l,
                                       const std::vector<std::uint64_t>& differences);

using PairSet = std::vector<std::pair<Scalar, Scalar>>;

/// {(a, b) : s(a, b) > 0}, lexicographic.
PairSet b_set(const PairSpectrum& spectrum);

struct DiscrepancyEntry {
  Scalar a = 0;
  Scalar b = 0;
  std::uint64_t s = 0;
  Rational main_term;
  Rational discrepancy;
  double bound = 0.0;
  bool pass = true;
};

struct DiscrepancyReport {
  std::vector<DiscrepancyEntry> entries;
  /// max over (a, b) of |D| / bound
  double max_ratio = 0.0;
  bool all_pass = true;
};

/**
 * Splits s(a, b) into the main term |E||F||S_a^{k-1}||S_b^{l-1}| q^-(k+l) and
 * the remainder D, and checks
 *   |D| <= 2 q^((k-1)/2) sqrt(|E||F|) |S_b^{l-1}| + 2 q^((l-1)/2) sqrt(|E||F|) |S_a^{k-1}|
 *          + 4 q^((k+l)/2 - 1) sqrt(|E||F|)
 * with relative tolerance 1e-6 on the bound.
 */
DiscrepancyReport discrepancy_report(const SplitPointSet& e, const SplitPointSet& f);
DiscrepancyReport discrepancy_report(const SplitPointSet& e, const SplitPointSet& f,
                                     const PairSpectrum& spectrum);

inline constexpr std::uint64_t kSurjectivityConstant = 16;

struct Theorem1Check {
  bool threshold_met = false;
  bool surjective = false;
  /// threshold_met implies surjective
  bool holds = true;
  std::size_t pairs_covered = 0;
};

/// Throws std::invalid_argument unless l >= k >= 2 and both sets share (q, k, l).
Theorem1Check theorem1_check(const SplitPointSet& e, const SplitPointSet& f,
                             std::uint64_t constant = kSurjectivityConstant);
Theorem1Check theorem1_check(const SplitPointSet& e, const SplitPointSet& f,
                             const PairSpectrum& spectrum,
                             std::uint64_t constant = kSurjectivityConstant);

BigInt sum_s_squared(const PairSpectrum& spectrum);
/// Counts (X, Y, Z, W) in E x F x E x F with matching split norms directly.
/// Both sets must have at most 60 points.
BigInt sum_s_squared_bruteforce(const SplitPointSet& e, const SplitPointSet& f);

/// |E|^2 |F|^2 / sum s(a,b)^2, which never exceeds |B_{k,l}(E, F)|.
Rational cs_lower_bound(const SplitPointSet& e, const SplitPointSet& f);
Rational cs_lower_bound(std::size_t e_size, std::size_t f_size, const PairSpectrum& spectrum);

struct MixedMassReport {
  /// sum_{m'} |E^(m', 0)|^2 = q^(-k-2l) sum_{x'} n(x')^2
  Rational exact;
  /// q^(-k-l) |E|
  Rational bound;
  /// the same sum read off the floating-point transform
  double spectral = 0.0;
  bool within_bound = true;
  bool saturated = false;
  bool agrees = true;
};

MixedMassReport mixed_zero_mass(const SplitPointSet& e);

}  // namespace ffdist
