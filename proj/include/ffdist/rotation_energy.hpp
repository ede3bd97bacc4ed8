#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "ffdist/pair_spectrum.hpp"
#include "ffdist/prime_field.hpp"
#include "ffdist/rational.hpp"
#include "ffdist/spectral.hpp"

namespace ffdist {

/// r(u', u'') = #{(x, z) in E x E : x' - theta z' = u', x'' - phi z'' = u''}, indexed
/// by the encoded (u', u'') in F_q^4.
struct CorrelationTable {
  Rotation theta;
  Rotation phi;
  std::vector<std::uint64_t> r;

  std::uint64_t total() const;
};

/// Throws unless the set is split (2, 2); |E|^2 is limited to kMaxNaivePairs.
CorrelationTable rotation_correlation(const SplitPointSet& e, Rotation theta, Rotation phi);

struct FourierIdentityReport {
  /// max over M of |r^(M) - q^4 E^(M) conj(E^(theta^T m', phi^T m''))|
  double max_deviation = 0.0;
  bool pass = true;
};

/// Compares the transform of the correlation table with the product of transforms
/// of E. The rotation enters the product through its transpose (= inverse).
FourierIdentityReport correlation_fourier_check(const SplitPointSet& e, Rotation theta, Rotation phi);
FourierIdentityReport correlation_fourier_check(const SplitPointSet& e, const SpectralTable& e_hat,
                                                Rotation theta, Rotation phi);

/// sum over theta, phi of q^12 sum_M E^(M) conj(E^(RM)) conj(F^(M)) F^(RM), split by
/// which halves of M vanish.
struct FourierEnergySplit {
  double zero_term = 0.0;
  double nonzero_term = 0.0;
  double mixed_term = 0.0;
  /// largest |imaginary part| of the three sums
  double imaginary_residue = 0.0;

  double total() const { return zero_term + nonzero_term + mixed_term; }
};

FourierEnergySplit fourier_energy_split(const SplitPointSet& e, const SplitPointSet& f,
                                        const SpectralTable& e_hat, const SpectralTable& f_hat);

struct EnergyReport {
  /// sum_{a,b} s(a,b)^2
  BigInt lhs;
  /// sum_{theta,phi} sum_U r^E(U) r^F(U), counted directly
  BigInt rhs;
  bool chain_holds = true;

  /// ((q+1)^2 - 1) s(0,0)^2 + q sum_{b != 0} (s(0,b)^2 + s(b,0)^2)
  BigInt zero_difference_overcount;
  bool overcount_matches = true;

  /// q^12 sum_{theta,phi} |E^(0)|^2 |F^(0)|^2, accumulated exactly
  Rational zero_term;
  /// q^-4 |E|^2 |F|^2 |SO_2|^2
  Rational zero_term_expected;
  bool zero_term_matches = true;

  FourierEnergySplit fourier;
  /// q^4 |E||F|
  double nonzero_bound = 0.0;
  bool nonzero_within_bound = true;
  double fourier_relative_error = 0.0;
  bool fourier_agrees = true;

  std::size_t rotation_pairs = 0;
  bool pass = true;
};

/// Requires k = l = 2 and q = 3 mod 4.
EnergyReport energy_chain_check(const SplitPointSet& e, const SplitPointSet& f);

struct CircleEnergyReport {
  Scalar q = 0;
  Scalar a = 0;
  std::uint64_t sphere_size = 0;
  /// #{(u, v, u', v') in S_a^4 : u + v = u' + v'}
  std::uint64_t energy = 0;
  /// 3 |S_a|^2
  std::uint64_t bound = 0;
  bool pass = true;
};

/// Quadruple brute force over the circle of radius a != 0; requires q = 3 mod 4.
CircleEnergyReport circle_energy(const PrimeField& fld, Scalar a);

struct SphereMassReport {
  Scalar a = 0;
  /// sum_{|m| = a} |E^(m, 0)|^2
  double mass = 0.0;
  /// sqrt(3) q^-6 |E|^(3/2)
  double bound = 0.0;
  bool pass = true;
};

SphereMassReport sphere_restricted_mass(const SplitPointSet& e, Scalar a);

struct Theorem2Report {
  double constant = 0.0;
  /// |E||F| / (3 q^4), (|E||F|)^(3/4) / (3 C q^3), q^4 / (3 |SO_2|^2)
  std::array<double, 3> branches{};
  double min_bound = 0.0;
  std::size_t observed_b = 0;
  double mixed_term = 0.0;
  /// mixed_term / (q^3 (|E||F|)^(5/4)): the least C whose middle branch covers this instance
  double empirical_c = 0.0;
  /// min_bound <= observed_b
  bool holds = true;
  /// C >= empirical_c, in which case `holds` is guaranteed
  bool constant_covers = true;
};

Theorem2Report theorem2_bound(const SplitPointSet& e, const SplitPointSet& f, double constant);

struct RemarkSharpnessReport {
  Scalar p = 0;
  Scalar strip_len = 0;
  std::size_t set_size = 0;
  std::size_t b_size = 0;
  std::set<Scalar> strip_distances;
  /// B(E, E) == F_p x Delta(L)
  bool matches = true;
};

/// E = F_p^2 x {(a, 0) : 0 <= a < strip_len}; requires p = 3 mod 4, 1 <= strip_len <= p.
RemarkSharpnessReport remark_sharpness_scan(std::uint64_t p, std::uint64_t strip_len);

/// Strip set used by remark_sharpness_scan.
SplitPointSet strip_set(const PrimeField& fld, Scalar strip_len);

}  // namespace ffdist
