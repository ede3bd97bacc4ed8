#include "ffdist/rotation_energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ffdist/parallel.hpp"

namespace ffdist {

namespace {

void require_plane_split(const SplitPointSet& e) {
  if (e.k() != 2 || e.l() != 2) throw std::invalid_argument("rotation energy requires k = l = 2");
}

void require_three_mod_four(const PrimeField& fld) {
  if (fld.q_mod_4() != 3) {
    throw std::invalid_argument("requires q = 3 mod 4, got q = " + std::to_string(fld.q()));
  }
}

// Index arithmetic on F_q^2 encoded as h = x * q + y.
class PlaneTables {
 public:
  explicit PlaneTables(const PrimeField& fld) : fld_(fld), q_(fld.q()), n_(std::size_t{q_} * q_) {
    sub_.resize(n_ * n_);
    for (std::size_t h1 = 0; h1 < n_; ++h1) {
      for (std::size_t h2 = 0; h2 < n_; ++h2) {
        const Scalar x = fld.sub(h1 / q_, h2 / q_), y = fld.sub(h1 % q_, h2 % q_);
        sub_[h1 * n_ + h2] = static_cast<std::uint32_t>(std::size_t{x} * q_ + y);
      }
    }
  }

  std::size_t plane() const noexcept { return n_; }
  std::uint32_t sub(std::size_t h1, std::size_t h2) const noexcept { return sub_[h1 * n_ + h2]; }
  const std::uint32_t* sub_row(std::size_t h1) const noexcept { return &sub_[h1 * n_]; }

  std::vector<std::uint32_t> rotation_map(Rotation r) const {
    std::vector<std::uint32_t> out(n_);
    for (std::size_t h = 0; h < n_; ++h) {
      const Vec2 v = rotation_apply(fld_, r, {static_cast<Scalar>(h / q_), static_cast<Scalar>(h % q_)});
      out[h] = static_cast<std::uint32_t>(std::size_t{v.x} * q_ + v.y);
    }
    return out;
  }

  Scalar plane_norm(std::size_t h) const noexcept {
    return fld_.add(fld_.square(h / q_), fld_.square(h % q_));
  }

 private:
  PrimeField fld_;
  Scalar q_;
  std::size_t n_;
  std::vector<std::uint32_t> sub_;
};

struct SplitMembers {
  std::vector<std::uint32_t> head;
  std::vector<std::uint32_t> tail;
};

SplitMembers split_members(const SplitPointSet& e) {
  SplitMembers out;
  out.head.reserve(e.size());
  out.tail.reserve(e.size());
  for (PointIndex idx : e.members()) {
    out.head.push_back(static_cast<std::uint32_t>(e.head(idx)));
    out.tail.push_back(static_cast<std::uint32_t>(e.tail(idx)));
  }
  return out;
}

void correlate_into(const PlaneTables& plane, const SplitMembers& m,
                    const std::vector<std::uint32_t>& rot_head,
                    const std::vector<std::uint32_t>& rot_tail, std::vector<std::uint64_t>& r) {
  std::fill(r.begin(), r.end(), 0);
  const std::size_t n = plane.plane();
  const std::size_t size = m.head.size();
  for (std::size_t z = 0; z < size; ++z) {
    const std::uint32_t wh = rot_head[m.head[z]], wt = rot_tail[m.tail[z]];
    for (std::size_t x = 0; x < size; ++x) {
      ++r[std::size_t{plane.sub(m.head[x], wh)} * n + plane.sub(m.tail[x], wt)];
    }
  }
}

void require_correlation_size(const SplitPointSet& e) {
  if (e.size() != 0 && e.size() > kMaxNaivePairs / e.size()) {
    throw std::length_error("|E|^2 exceeds the correlation-table limit");
  }
}

}  // namespace

std::uint64_t CorrelationTable::total() const {
  std::uint64_t t = 0;
  for (auto v : r) t += v;
  return t;
}

CorrelationTable rotation_correlation(const SplitPointSet& e, Rotation theta, Rotation phi) {
  require_plane_split(e);
  require_correlation_size(e);
  const PlaneTables plane(e.field());
  CorrelationTable out{theta, phi, std::vector<std::uint64_t>(plane.plane() * plane.plane())};
  correlate_into(plane, split_members(e), plane.rotation_map(theta), plane.rotation_map(phi), out.r);
  return out;
}

FourierIdentityReport correlation_fourier_check(const SplitPointSet& e, Rotation theta, Rotation phi) {
  return correlation_fourier_check(e, forward_transform(indicator(e.points())), theta, phi);
}

FourierIdentityReport correlation_fourier_check(const SplitPointSet& e, const SpectralTable& e_hat,
                                                Rotation theta, Rotation phi) {
  require_plane_split(e);
  const PrimeField& fld = e.field();
  const auto table = rotation_correlation(e, theta, phi);
  DensityTable r{fld, 4, std::vector<Complex>(table.r.begin(), table.r.end())};
  const auto r_hat = forward_transform(r);

  const PlaneTables plane(fld);
  const auto th = plane.rotation_map(rotation_transpose(fld, theta));
  const auto ph = plane.rotation_map(rotation_transpose(fld, phi));
  const std::size_t n = plane.plane();
  const double q4 = std::pow(static_cast<double>(fld.q()), 4);
  FourierIdentityReport out;
  for (std::size_t mh = 0; mh < n; ++mh) {
    for (std::size_t mt = 0; mt < n; ++mt) {
      const std::size_t m = mh * n + mt;
      const Complex expected = q4 * e_hat.coeffs[m] * std::conj(e_hat.coeffs[th[mh] * n + ph[mt]]);
      out.max_deviation = std::max(out.max_deviation, std::abs(r_hat.coeffs[m] - expected));
    }
  }
  out.pass = out.max_deviation < 1e-8;
  return out;
}

FourierEnergySplit fourier_energy_split(const SplitPointSet& e, const SplitPointSet& f,
                                        const SpectralTable& e_hat, const SpectralTable& f_hat) {
  require_plane_split(e);
  require_plane_split(f);
  const PrimeField& fld = e.field();
  const PlaneTables plane(fld);
  const std::size_t n = plane.plane();
  const auto rotations = enumerate_so2(fld);
  std::vector<std::vector<std::uint32_t>> maps;
  for (const auto& r : rotations) maps.push_back(plane.rotation_map(r));

  Complex zero{}, nonzero{}, mixed{};
  for (const auto& th : maps) {
    for (const auto& ph : maps) {
      for (std::size_t mh = 0; mh < n; ++mh) {
        for (std::size_t mt = 0; mt < n; ++mt) {
          const std::size_t m = mh * n + mt, rm = th[mh] * n + ph[mt];
          const Complex term = e_hat.coeffs[m] * std::conj(e_hat.coeffs[rm]) *
                               std::conj(f_hat.coeffs[m]) * f_hat.coeffs[rm];
          if (mh == 0 && mt == 0) {
            zero += term;
          } else if (mh != 0 && mt != 0) {
            nonzero += term;
          } else {
            mixed += term;
          }
        }
      }
    }
  }
  const double q12 = std::pow(static_cast<double>(fld.q()), 12);
  FourierEnergySplit out;
  out.zero_term = q12 * zero.real();
  out.nonzero_term = q12 * nonzero.real();
  out.mixed_term = q12 * mixed.real();
  out.imaginary_residue =
      q12 * std::max({std::abs(zero.imag()), std::abs(nonzero.imag()), std::abs(mixed.imag())});
  return out;
}

EnergyReport energy_chain_check(const SplitPointSet& e, const SplitPointSet& f) {
  require_plane_split(e);
  require_plane_split(f);
  const PrimeField& fld = e.field();
  if (f.field().q() != fld.q()) throw std::invalid_argument("point sets differ in q");
  require_three_mod_four(fld);
  require_correlation_size(e);
  require_correlation_size(f);
  const Scalar q = fld.q();

  EnergyReport report;
  const auto spectrum = pair_spectrum_fast(e, f);
  report.lhs = sum_s_squared(spectrum);

  const PlaneTables plane(fld);
  const std::size_t cells = plane.plane() * plane.plane();
  const auto rotations = enumerate_so2(fld);
  std::vector<std::vector<std::uint32_t>> maps;
  for (const auto& r : rotations) maps.push_back(plane.rotation_map(r));
  const auto me = split_members(e), mf = split_members(f);

  const std::size_t pairs = rotations.size() * rotations.size();
  report.rotation_pairs = pairs;
  const unsigned workers = worker_count(pairs);
  std::vector<BigInt> partial(workers);
  std::vector<std::vector<std::uint64_t>> scratch_e(workers), scratch_f(workers);
  parallel_for(pairs, [&](std::size_t item, unsigned w) {
    auto& re = scratch_e[w];
    auto& rf = scratch_f[w];
    re.resize(cells);
    rf.resize(cells);
    const auto& th = maps[item / rotations.size()];
    const auto& ph = maps[item % rotations.size()];
    correlate_into(plane, me, th, ph, re);
    correlate_into(plane, mf, th, ph, rf);
    std::uint64_t dot = 0;
    for (std::size_t u = 0; u < cells; ++u) dot += re[u] * rf[u];
    partial[w] += dot;
  });
  report.rhs = 0;
  for (const auto& p : partial) report.rhs += p;
  report.chain_holds = report.lhs <= report.rhs;

  BigInt overcount = BigInt(spectrum.at(0, 0)) * spectrum.at(0, 0) * (BigInt(q + 1) * (q + 1) - 1);
  for (Scalar b = 1; b < q; ++b) {
    overcount += BigInt(q) * (BigInt(spectrum.at(0, b)) * spectrum.at(0, b) +
                              BigInt(spectrum.at(b, 0)) * spectrum.at(b, 0));
  }
  report.zero_difference_overcount = overcount;
  report.overcount_matches = report.rhs - report.lhs == overcount;

  // E^(0) = |E| q^-4 exactly
  const BigInt q4 = ipow(q, 4);
  const Rational e0(BigInt(e.size()), q4), f0(BigInt(f.size()), q4);
  const Rational zero_summand = Rational(ipow(q, 12)) * e0 * e0 * f0 * f0;
  report.zero_term = 0;
  for (std::size_t i = 0; i < pairs; ++i) report.zero_term += zero_summand;
  const BigInt so2 = rotations.size();
  const BigInt ef = BigInt(e.size()) * f.size();
  report.zero_term_expected = Rational(ef * ef * so2 * so2, q4);
  report.zero_term_matches = report.zero_term == report.zero_term_expected;

  const auto e_hat = forward_transform(indicator(e.points()));
  const auto f_hat = forward_transform(indicator(f.points()));
  report.fourier = fourier_energy_split(e, f, e_hat, f_hat);
  report.nonzero_bound = std::pow(static_cast<double>(q), 4) * to_double(ef);
  report.nonzero_within_bound = report.fourier.nonzero_term <= report.nonzero_bound * (1.0 + 1e-9);
  const double rhs = to_double(report.rhs);
  report.fourier_relative_error =
      rhs == 0.0 ? std::abs(report.fourier.total()) : std::abs(report.fourier.total() - rhs) / rhs;
  report.fourier_agrees = report.fourier_relative_error <= 1e-6;

  report.pass = report.chain_holds && report.overcount_matches && report.zero_term_matches &&
                report.nonzero_within_bound && report.fourier_agrees;
  return report;
}

CircleEnergyReport circle_energy(const PrimeField& fld, Scalar a) {
  require_three_mod_four(fld);
  if (a == 0 || a >= fld.q()) throw std::invalid_argument("circle energy needs a nonzero radius");
  const auto circle = enumerate_sphere(fld, 2, a);
  const auto& pts = circle.points;
  CircleEnergyReport out;
  out.q = fld.q();
  out.a = a;
  out.sphere_size = pts.size();
  for (const auto& u : pts) {
    for (const auto& v : pts) {
      const Scalar sx = fld.add(u[0], v[0]), sy = fld.add(u[1], v[1]);
      for (const auto& u2 : pts) {
        for (const auto& v2 : pts) {
          if (fld.add(u2[0], v2[0]) == sx && fld.add(u2[1], v2[1]) == sy) ++out.energy;
        }
      }
    }
  }
  out.bound = 3 * out.sphere_size * out.sphere_size;
  out.pass = out.energy <= out.bound;
  return out;
}

SphereMassReport sphere_restricted_mass(const SplitPointSet& e, Scalar a) {
  require_plane_split(e);
  const PrimeField& fld = e.field();
  require_three_mod_four(fld);
  if (a == 0 || a >= fld.q()) throw std::invalid_argument("sphere mass needs a nonzero radius");
  const double q = fld.q();
  // E^(m, 0) = q^-2 * (transform over F_q^2 of the fibre counts n(x'))
  DensityTable fibres = zero_density(fld, 2);
  for (PointIndex idx : e.members()) fibres.values[e.head(idx)] += 1.0;
  const auto spectrum = forward_transform(fibres);
  const auto norms = norm_table(fld, 2);
  SphereMassReport out;
  out.a = a;
  for (std::size_t m = 0; m < norms.size(); ++m) {
    if (norms[m] == a) out.mass += std::norm(spectrum.coeffs[m] / (q * q));
  }
  out.bound = std::sqrt(3.0) * std::pow(q, -6) * std::pow(static_cast<double>(e.size()), 1.5);
  out.pass = out.mass <= out.bound * (1.0 + 1e-9);
  return out;
}

Theorem2Report theorem2_bound(const SplitPointSet& e, const SplitPointSet& f, double constant) {
  require_plane_split(e);
  require_plane_split(f);
  require_three_mod_four(e.field());
  if (!(constant > 0)) throw std::invalid_argument("constant C must be positive");
  const PrimeField& fld = e.field();
  const double q = fld.q();
  const double ef = static_cast<double>(e.size()) * static_cast<double>(f.size());
  const double so2 = static_cast<double>(enumerate_so2(fld).size());

  Theorem2Report out;
  out.constant = constant;
  out.branches = {ef / (3 * std::pow(q, 4)), std::pow(ef, 0.75) / (3 * constant * std::pow(q, 3)),
                  std::pow(q, 4) / (3 * so2 * so2)};
  out.min_bound = *std::min_element(out.branches.begin(), out.branches.end());
  out.observed_b = b_set(pair_spectrum_fast(e, f)).size();

  const auto split = fourier_energy_split(e, f, forward_transform(indicator(e.points())),
                                          forward_transform(indicator(f.points())));
  out.mixed_term = split.mixed_term;
  const double scale = std::pow(q, 3) * std::pow(ef, 1.25);
  out.empirical_c = scale > 0 ? std::max(0.0, split.mixed_term) / scale : 0.0;
  out.holds = out.min_bound <= static_cast<double>(out.observed_b);
  out.constant_covers = constant >= out.empirical_c;
  return out;
}

SplitPointSet strip_set(const PrimeField& fld, Scalar strip_len) {
  const Scalar p = fld.q();
  if (strip_len < 1 || strip_len > p) throw std::invalid_argument("strip_len must lie in [1, p]");
  std::vector<PointIndex> members;
  members.reserve(std::size_t{p} * p * strip_len);
  const std::uint64_t plane = std::uint64_t{p} * p;
  for (std::uint64_t head = 0; head < plane; ++head) {
    for (Scalar a = 0; a < strip_len; ++a) members.push_back(head * plane + std::uint64_t{a} * p);
  }
  return SplitPointSet(PointSet(fld, 4, std::move(members)), 2, 2);
}

RemarkSharpnessReport remark_sharpness_scan(std::uint64_t p, std::uint64_t strip_len) {
  const PrimeField fld(p);
  require_three_mod_four(fld);
  if (strip_len < 1 || strip_len > p) throw std::invalid_argument("strip_len must lie in [1, p]");
  const auto e = strip_set(fld, static_cast<Scalar>(strip_len));

  std::vector<Vector> strip;
  for (Scalar a = 0; a < strip_len; ++a) strip.push_back({a, 0});
  RemarkSharpnessReport out;
  out.p = fld.q();
  out.strip_len = static_cast<Scalar>(strip_len);
  out.set_size = e.size();
  out.strip_distances = distance_set(PointSet(fld, 2, strip));

  const auto b = b_set(pair_spectrum_fast(e, e));
  out.b_size = b.size();
  PairSet expected;
  for (Scalar a = 0; a < fld.q(); ++a) {
    for (Scalar d : out.strip_distances) expected.emplace_back(a, d);
  }
  out.matches = b == expected;
  return out;
}

}  // namespace ffdist
