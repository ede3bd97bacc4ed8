#include "ffdist/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ffdist {

namespace {

enum class Direction { kForward, kInverse };

// W[k * q + n] = chi(-/+ k n)
std::vector<Complex> twiddles(const PrimeField& fld, Direction dir) {
  const Scalar q = fld.q();
  std::vector<Complex> w(std::size_t{q} * q);
  for (Scalar k = 0; k < q; ++k) {
    for (Scalar n = 0; n < q; ++n) {
      const Scalar phase = fld.mul(k, n);
      w[std::size_t{k} * q + n] = fld.chi(dir == Direction::kForward ? fld.neg(phase) : phase);
    }
  }
  return w;
}

void separable_transform(const PrimeField& fld, int d, std::vector<Complex>& data, Direction dir) {
  const Scalar q = fld.q();
  const PointCodec codec(fld, d);
  if (data.size() != codec.size()) throw std::invalid_argument("table size is not q^d");
  const auto w = twiddles(fld, dir);
  std::vector<Complex> in(q), out(q);
  for (int axis = 0; axis < d; ++axis) {
    const std::uint64_t stride = codec.stride(axis);
    const std::uint64_t block = stride * q;
    for (std::uint64_t base = 0; base < data.size(); base += block) {
      for (std::uint64_t inner = 0; inner < stride; ++inner) {
        const std::uint64_t start = base + inner;
        for (Scalar n = 0; n < q; ++n) in[n] = data[start + n * stride];
        for (Scalar k = 0; k < q; ++k) {
          const Complex* row = &w[std::size_t{k} * q];
          Complex acc{};
          for (Scalar n = 0; n < q; ++n) acc += row[n] * in[n];
          out[k] = acc;
        }
        for (Scalar k = 0; k < q; ++k) data[start + k * stride] = out[k];
      }
    }
  }
}

}  // namespace

Scalar dot(const PrimeField& fld, std::span<const Scalar> x, std::span<const Scalar> m) {
  if (x.size() != m.size()) throw std::invalid_argument("dot: dimension mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::uint64_t{x[i]} * m[i] % fld.q();
  return static_cast<Scalar>(acc % fld.q());
}

DensityTable zero_density(const PrimeField& fld, int d) {
  return {fld, d, std::vector<Complex>(space_size(fld, d))};
}

DensityTable indicator(const PointSet& set) {
  DensityTable f = zero_density(set.field(), set.dims());
  for (PointIndex idx : set.members()) f.values[idx] = 1.0;
  return f;
}

SpectralTable forward_transform(const DensityTable& f) {
  SpectralTable out{f.field, f.d, f.values};
  separable_transform(f.field, f.d, out.coeffs, Direction::kForward);
  const double scale = 1.0 / static_cast<double>(out.coeffs.size());
  for (auto& c : out.coeffs) c *= scale;
  return out;
}

SpectralTable forward_transform_direct(const DensityTable& f) {
  const PointCodec codec(f.field, f.d);
  const std::uint64_t n = codec.size();
  SpectralTable out{f.field, f.d, std::vector<Complex>(n)};
  Vector x(f.d), m(f.d);
  for (PointIndex mi = 0; mi < n; ++mi) {
    codec.decode_into(mi, m);
    Complex acc{};
    for (PointIndex xi = 0; xi < n; ++xi) {
      if (f.values[xi] == Complex{}) continue;
      codec.decode_into(xi, x);
      acc += f.field.chi(f.field.neg(dot(f.field, x, m))) * f.values[xi];
    }
    out.coeffs[mi] = acc / static_cast<double>(n);
  }
  return out;
}

DensityTable inverse_transform(const SpectralTable& spectrum) {
  DensityTable out{spectrum.field, spectrum.d, spectrum.coeffs};
  separable_transform(spectrum.field, spectrum.d, out.values, Direction::kInverse);
  return out;
}

double plancherel_gap(const DensityTable& f) {
  const auto spectrum = forward_transform(f);
  double lhs = 0.0;
  for (const auto& c : spectrum.coeffs) lhs += std::norm(c);
  const double n = static_cast<double>(f.values.size());
  bool is_indicator = true;
  std::uint64_t support = 0;
  double mass = 0.0;
  for (const auto& v : f.values) {
    mass += std::norm(v);
    if (v == Complex{1.0, 0.0}) {
      ++support;
    } else if (v != Complex{}) {
      is_indicator = false;
    }
  }
  const double rhs = is_indicator ? static_cast<double>(support) / n : mass / n;
  return std::abs(lhs - rhs);
}

OrthogonalityReport orthogonality_check(const PrimeField& fld, int d) {
  const Scalar q = fld.q();
  const PointCodec codec(fld, d);
  // one-dimensional sums s(c) = sum_x chi(x c); the d-dimensional sum factorises
  std::vector<Complex> line(q);
  for (Scalar c = 0; c < q; ++c) {
    Complex acc{};
    for (Scalar x = 0; x < q; ++x) acc += fld.chi(fld.mul(x, c));
    line[c] = acc;
  }
  OrthogonalityReport report;
  const double full = static_cast<double>(codec.size());
  Vector m(d);
  for (PointIndex mi = 0; mi < codec.size(); ++mi) {
    codec.decode_into(mi, m);
    Complex prod{1.0, 0.0};
    for (Scalar c : m) prod *= line[c];
    ++report.frequencies_checked;
    if (mi == 0) {
      report.zero_frequency_sum = prod;
      if (std::abs(prod - full) > 1e-8 * full) report.pass = false;
    } else {
      report.max_nonzero_modulus = std::max(report.max_nonzero_modulus, std::abs(prod));
      if (std::abs(prod) >= 1e-8 * full) report.pass = false;
    }
  }
  return report;
}

SpectralTable sphere_transform(const PrimeField& fld, int d, Scalar t) {
  const auto norms = norm_table(fld, d);
  DensityTable f = zero_density(fld, d);
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (norms[i] == t) f.values[i] = 1.0;
  }
  return forward_transform(f);
}

KloostermanReport verify_kloosterman(const PrimeField& fld, int d) {
  const Scalar q = fld.q();
  const auto norms = norm_table(fld, d);
  KloostermanReport report;
  report.bound = 2.0 * std::pow(static_cast<double>(q), -(d + 1) / 2.0);
  PointIndex argmax = 0;
  for (Scalar t = 1; t < q; ++t) {
    DensityTable f = zero_density(fld, d);
    for (std::size_t i = 0; i < norms.size(); ++i) {
      if (norms[i] == t) f.values[i] = 1.0;
    }
    const auto spectrum = forward_transform(f);
    for (std::size_t m = 1; m < spectrum.coeffs.size(); ++m) {
      const double ratio = std::abs(spectrum.coeffs[m]) / report.bound;
      if (ratio > report.max_ratio) {
        report.max_ratio = ratio;
        report.argmax_t = t;
        argmax = m;
      }
    }
  }
  report.argmax_m = PointCodec(fld, d).decode(argmax);
  report.pass = report.max_ratio <= 1.0 + 1e-9;
  return report;
}

std::uint64_t ExactPhaseHistogram::total() const {
  std::uint64_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

Complex ExactPhaseHistogram::evaluate(const PrimeField& fld, int d) const {
  Complex acc{};
  for (Scalar j = 0; j < counts.size(); ++j) acc += static_cast<double>(counts[j]) * fld.chi(j);
  return acc / std::pow(static_cast<double>(fld.q()), d);
}

ExactPhaseHistogram exact_phase_histogram(const PointSet& set, std::span<const Scalar> m) {
  const PrimeField& fld = set.field();
  if (static_cast<int>(m.size()) != set.dims()) {
    throw std::invalid_argument("frequency dimension does not match the point set");
  }
  ExactPhaseHistogram h{Vector(m.begin(), m.end()), std::vector<std::uint64_t>(fld.q(), 0)};
  for (Scalar c : m) {
    if (c >= fld.q()) throw std::invalid_argument("frequency coordinate not reduced");
  }
  const PointCodec codec = set.codec();
  Vector x(set.dims());
  for (PointIndex idx : set.members()) {
    codec.decode_into(idx, x);
    ++h.counts[fld.neg(dot(fld, x, m))];
  }
  return h;
}

}  // namespace ffdist
