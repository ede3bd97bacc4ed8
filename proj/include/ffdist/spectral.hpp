#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ffdist/lattice.hpp"
#include "ffdist/prime_field.hpp"

namespace ffdist {

/// A function F_q^d -> C, indexed by PointIndex.
struct DensityTable {
  PrimeField field;
  int d;
  std::vector<Complex> values;
};

/// Fourier coefficients f^(m) = q^-d sum_x chi(-x.m) f(x), indexed by the encoded frequency.
struct SpectralTable {
  PrimeField field;
  int d;
  std::vector<Complex> coeffs;
};

DensityTable zero_density(const PrimeField& fld, int d);
DensityTable indicator(const PointSet& set);

/// Axis-by-axis transform, O(d q^(d+1)).
SpectralTable forward_transform(const DensityTable& f);
/// The defining double sum, O(q^(2d)); kept as a reference for the separable path.
SpectralTable forward_transform_direct(const DensityTable& f);
/// f(x) = sum_m chi(x.m) f^(m); no normalisation.
DensityTable inverse_transform(const SpectralTable& spectrum);

/// |sum_m |f^(m)|^2 - q^-d sum_x |f(x)|^2|. For 0/1-valued inputs the right-hand
/// side is the exact q^-d |support|.
double plancherel_gap(const DensityTable& f);

struct OrthogonalityReport {
  bool pass = true;
  /// max over m != 0 of |sum_x chi(x.m)|
  double max_nonzero_modulus = 0.0;
  Complex zero_frequency_sum;
  std::uint64_t frequencies_checked = 0;
};

/// Checks sum_x chi(x.m) = q^d [m = 0] for every m, with |.| < 1e-8 q^d off zero.
OrthogonalityReport orthogonality_check(const PrimeField& fld, int d);

/// Fourier transform of the indicator of S_t^{d-1}.
SpectralTable sphere_transform(const PrimeField& fld, int d, Scalar t);

struct KloostermanReport {
  bool pass = true;
  /// max over t != 0, m != 0 of |S_t^(m)| / (2 q^(-(d+1)/2))
  double max_ratio = 0.0;
  Scalar argmax_t = 0;
  Vector argmax_m;
  double bound = 0.0;
};

/// Scans every nonzero radius and nonzero frequency of F_q^d.
KloostermanReport verify_kloosterman(const PrimeField& fld, int d);

/// counts[j] = #{x in support : -x.m = j mod q}; q^d f^(m) = sum_j counts[j] chi(j)
/// for the indicator f of the support.
struct ExactPhaseHistogram {
  Vector m;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  /// sum_j counts[j] chi(j) q^-d, the Fourier coefficient at m.
  Complex evaluate(const PrimeField& fld, int d) const;
};

ExactPhaseHistogram exact_phase_histogram(const PointSet& set, std::span<const Scalar> m);

/// Dot product x.m mod q on encoded points.
Scalar dot(const PrimeField& fld, std::span<const Scalar> x, std::span<const Scalar> m);

}  // namespace ffdist
