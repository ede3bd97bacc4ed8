#include "ffdist/pair_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>

#include "ffdist/spectral.hpp"

namespace ffdist {

namespace {

void require_compatible(const SplitPointSet& e, const SplitPointSet& f) {
  if (e.field().q() != f.field().q() || e.k() != f.k() || e.l() != f.l()) {
    throw std::invalid_argument("point sets differ in q or split");
  }
}

void require_compatible(const PointSet& e, const PointSet& f) {
  if (e.field().q() != f.field().q() || e.dims() != f.dims()) {
    throw std::invalid_argument("point sets differ in q or dimension");
  }
}

// Per-point split norms for the double-loop paths: head and tail coordinates
// decoded once.
struct DecodedSplit {
  std::vector<Scalar> head;  // size * k
  std::vector<Scalar> tail;  // size * l
};

DecodedSplit decode_split(const SplitPointSet& set) {
  const PointCodec codec = set.points().codec();
  const int k = set.k(), l = set.l();
  DecodedSplit out;
  out.head.reserve(set.size() * k);
  out.tail.reserve(set.size() * l);
  Vector v(k + l);
  for (PointIndex idx : set.members()) {
    codec.decode_into(idx, v);
    out.head.insert(out.head.end(), v.begin(), v.begin() + k);
    out.tail.insert(out.tail.end(), v.begin() + k, v.end());
  }
  return out;
}

Scalar diff_norm(const PrimeField& fld, const Scalar* x, const Scalar* y, int n) {
  Scalar acc = 0;
  for (int i = 0; i < n; ++i) acc = fld.add(acc, fld.square(fld.sub(x[i], y[i])));
  return acc;
}

}  // namespace

SplitPointSet::SplitPointSet(PointSet points, int k, int l)
    : points_(std::move(points)), k_(k), l_(l), tail_size_(0) {
  if (k < 1 || l < 1) throw std::invalid_argument("split dimensions must be >= 1");
  if (k + l != points_.dims()) {
    throw std::invalid_argument("split " + std::to_string(k) + "," + std::to_string(l) +
                                " does not match dimension " + std::to_string(points_.dims()));
  }
  tail_size_ = space_size(points_.field(), l);
}

SplitPointSet read_split_point_set(std::istream& in) {
  auto parsed = parse_point_set(in);
  if (!parsed.header.split) throw std::runtime_error("point-set header lacks split=<k>,<l>");
  const PrimeField fld(parsed.header.q);
  return SplitPointSet(PointSet(fld, parsed.header.dims, parsed.points), parsed.header.split->first,
                       parsed.header.split->second);
}

void write_split_point_set(std::ostream& out, const SplitPointSet& set) {
  write_point_set(out, set.points(), std::pair{set.k(), set.l()});
}

std::uint64_t PairSpectrum::total() const {
  std::uint64_t t = 0;
  for (auto v : s) t += v;
  return t;
}

void write_spectrum_csv(std::ostream& out, const PairSpectrum& spectrum) {
  for (Scalar a = 0; a < spectrum.q; ++a) {
    for (Scalar b = 0; b < spectrum.q; ++b) out << (b ? "," : "") << spectrum.at(a, b);
    out << '\n';
  }
}

std::vector<std::uint64_t> difference_histogram(const PointSet& e, const PointSet& f) {
  require_compatible(e, f);
  const PrimeField& fld = e.field();
  const auto e_hat = forward_transform(indicator(e));
  SpectralTable product = e_hat;
  if (e.members() == f.members()) {
    for (auto& c : product.coeffs) c = std::norm(c);
  } else {
    const auto f_hat = forward_transform(indicator(f));
    for (std::size_t i = 0; i < product.coeffs.size(); ++i) {
      product.coeffs[i] *= std::conj(f_hat.coeffs[i]);
    }
  }
  const auto conv = inverse_transform(product);
  const double scale = static_cast<double>(conv.values.size());
  std::vector<std::uint64_t> counts(conv.values.size());
  for (std::size_t u = 0; u < counts.size(); ++u) {
    const Complex v = conv.values[u] * scale;
    const double rounded = std::round(v.real());
    const double residue = std::max(std::abs(v.real() - rounded), std::abs(v.imag()));
    if (residue > 1e-3 || rounded < 0) {
      std::ostringstream os;
      os << "convolution value " << v << " at index " << u << " is not a nonnegative integer (q="
         << fld.q() << ", d=" << e.dims() << ")";
      throw PrecisionError(os.str());
    }
    counts[u] = static_cast<std::uint64_t>(rounded);
  }
  return counts;
}

std::set<Scalar> distance_set(const PointSet& set) {
  if (set.empty()) throw std::invalid_argument("distance set of an empty point set");
  const PrimeField& fld = set.field();
  std::set<Scalar> out;
  const std::uint64_t n = set.size();
  if (n * n <= 10'000'000) {
    const PointCodec codec = set.codec();
    const int d = set.dims();
    std::vector<Scalar> coords(n * d);
    for (std::size_t i = 0; i < n; ++i) {
      codec.decode_into(set.members()[i], std::span(coords).subspan(i * d, d));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) out.insert(diff_norm(fld, &coords[i * d], &coords[j * d], d));
    }
    return out;
  }
  const auto counts = difference_histogram(set, set);
  const auto norms = norm_table(fld, set.dims());
  for (std::size_t u = 0; u < counts.size(); ++u) {
    if (counts[u] > 0) out.insert(norms[u]);
  }
  return out;
}

PairSpectrum pair_spectrum_naive(const SplitPointSet& e, const SplitPointSet& f) {
  require_compatible(e, f);
  if (e.size() != 0 && f.size() > kMaxNaivePairs / e.size()) {
    throw std::length_error("|E||F| exceeds the double-loop limit; use pair_spectrum_fast");
  }
  const PrimeField& fld = e.field();
  const int k = e.k(), l = e.l();
  const auto de = decode_split(e), df = decode_split(f);
  PairSpectrum out{fld.q(), std::vector<std::uint64_t>(std::size_t{fld.q()} * fld.q(), 0)};
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      const Scalar a = diff_norm(fld, &de.head[i * k], &df.head[j * k], k);
      const Scalar b = diff_norm(fld, &de.tail[i * l], &df.tail[j * l], l);
      ++out.s[std::size_t{a} * fld.q() + b];
    }
  }
  return out;
}

PairSpectrum spectrum_from_differences(const PrimeField& fld, int k, int l,
                                       const std::vector<std::uint64_t>& differences) {
  const auto head_norms = norm_table(fld, k);
  const auto tail_norms = norm_table(fld, l);
  const std::size_t tail_size = tail_norms.size();
  if (differences.size() != head_norms.size() * tail_size) {
    throw std::invalid_argument("difference histogram does not cover F_q^(k+l)");
  }
  PairSpectrum out{fld.q(), std::vector<std::uint64_t>(std::size_t{fld.q()} * fld.q(), 0)};
  for (std::size_t h = 0; h < head_norms.size(); ++h) {
    std::uint64_t* row = &out.s[std::size_t{head_norms[h]} * fld.q()];
    const std::uint64_t* c = &differences[h * tail_size];
    for (std::size_t t = 0; t < tail_size; ++t) row[tail_norms[t]] += c[t];
  }
  return out;
}

PairSpectrum pair_spectrum_fast(const SplitPointSet& e, const SplitPointSet& f) {
  require_compatible(e, f);
  return spectrum_from_differences(e.field(), e.k(), e.l(),
                                   difference_histogram(e.points(), f.points()));
}

PairSet b_set(const PairSpectrum& spectrum) {
  PairSet out;
  for (Scalar a = 0; a < spectrum.q; ++a) {
    for (Scalar b = 0; b < spectrum.q; ++b) {
      if (spectrum.at(a, b) > 0) out.emplace_back(a, b);
    }
  }
  return out;
}

DiscrepancyReport discrepancy_report(const SplitPointSet& e, const SplitPointSet& f) {
  return discrepancy_report(e, f, pair_spectrum_fast(e, f));
}

DiscrepancyReport discrepancy_report(const SplitPointSet& e, const SplitPointSet& f,
                                     const PairSpectrum& spectrum) {
  require_compatible(e, f);
  const PrimeField& fld = e.field();
  const Scalar q = fld.q();
  const int k = e.k(), l = e.l();
  const auto head_sizes = norm_fiber_sizes(fld, k);
  const auto tail_sizes = norm_fiber_sizes(fld, l);
  const BigInt ef = BigInt(e.size()) * f.size();
  const BigInt denom = ipow(q, static_cast<unsigned>(k + l));
  const double qd = static_cast<double>(q);
  const double root = std::sqrt(static_cast<double>(e.size()) * static_cast<double>(f.size()));
  const double c_head = 2.0 * std::pow(qd, (k - 1) / 2.0) * root;
  const double c_tail = 2.0 * std::pow(qd, (l - 1) / 2.0) * root;
  const double c_both = 4.0 * std::pow(qd, (k + l) / 2.0 - 1.0) * root;

  DiscrepancyReport report;
  report.entries.reserve(std::size_t{q} * q);
  for (Scalar a = 0; a < q; ++a) {
    for (Scalar b = 0; b < q; ++b) {
      DiscrepancyEntry entry;
      entry.a = a;
      entry.b = b;
      entry.s = spectrum.at(a, b);
      entry.main_term = Rational(ef * head_sizes[a] * tail_sizes[b], denom);
      entry.discrepancy = Rational(entry.s) - entry.main_term;
      entry.bound = c_head * static_cast<double>(tail_sizes[b]) +
                    c_tail * static_cast<double>(head_sizes[a]) + c_both;
      const double abs_d = std::abs(to_double(entry.discrepancy));
      entry.pass = abs_d <= entry.bound * (1.0 + 1e-6);
      if (entry.bound > 0) {
        report.max_ratio = std::max(report.max_ratio, abs_d / entry.bound);
      } else if (abs_d > 0) {
        report.max_ratio = std::numeric_limits<double>::infinity();
      }
      report.all_pass = report.all_pass && entry.pass;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

Theorem1Check theorem1_check(const SplitPointSet& e, const SplitPointSet& f,
                             std::uint64_t constant) {
  require_compatible(e, f);
  if (!(e.l() >= e.k() && e.k() >= 2)) {
    throw std::invalid_argument("surjectivity check requires l >= k >= 2");
  }
  return theorem1_check(e, f, pair_spectrum_fast(e, f), constant);
}

Theorem1Check theorem1_check(const SplitPointSet& e, const SplitPointSet& f,
                             const PairSpectrum& spectrum, std::uint64_t constant) {
  require_compatible(e, f);
  if (!(e.l() >= e.k() && e.k() >= 2)) {
    throw std::invalid_argument("surjectivity check requires l >= k >= 2");
  }
  const Scalar q = e.field().q();
  Theorem1Check out;
  const BigInt threshold = BigInt(constant) * ipow(q, static_cast<unsigned>(e.k() + 2 * e.l() + 1));
  out.threshold_met = BigInt(e.size()) * f.size() > threshold;
  out.pairs_covered = b_set(spectrum).size();
  out.surjective = out.pairs_covered == std::size_t{q} * q;
  out.holds = !out.threshold_met || out.surjective;
  return out;
}

BigInt sum_s_squared(const PairSpectrum& spectrum) {
  BigInt acc = 0;
  for (auto v : spectrum.s) acc += BigInt(v) * v;
  return acc;
}

BigInt sum_s_squared_bruteforce(const SplitPointSet& e, const SplitPointSet& f) {
  require_compatible(e, f);
  if (e.size() > 60 || f.size() > 60) {
    throw std::length_error("quadruple brute force is limited to 60 points per set");
  }
  const PrimeField& fld = e.field();
  const int k = e.k(), l = e.l();
  const auto de = decode_split(e), df = decode_split(f);
  std::uint64_t count = 0;
  for (std::size_t x = 0; x < e.size(); ++x) {
    for (std::size_t y = 0; y < f.size(); ++y) {
      const Scalar a1 = diff_norm(fld, &de.head[x * k], &df.head[y * k], k);
      const Scalar b1 = diff_norm(fld, &de.tail[x * l], &df.tail[y * l], l);
      for (std::size_t z = 0; z < e.size(); ++z) {
        for (std::size_t w = 0; w < f.size(); ++w) {
          if (diff_norm(fld, &de.head[z * k], &df.head[w * k], k) == a1 &&
              diff_norm(fld, &de.tail[z * l], &df.tail[w * l], l) == b1) {
            ++count;
          }
        }
      }
    }
  }
  return count;
}

Rational cs_lower_bound(std::size_t e_size, std::size_t f_size, const PairSpectrum& spectrum) {
  if (e_size == 0 || f_size == 0) throw std::invalid_argument("cs_lower_bound needs nonempty sets");
  const BigInt ef = BigInt(e_size) * f_size;
  return Rational(ef * ef, sum_s_squared(spectrum));
}

Rational cs_lower_bound(const SplitPointSet& e, const SplitPointSet& f) {
  return cs_lower_bound(e.size(), f.size(), pair_spectrum_fast(e, f));
}

MixedMassReport mixed_zero_mass(const SplitPointSet& e) {
  const PrimeField& fld = e.field();
  const Scalar q = fld.q();
  const int k = e.k(), l = e.l();
  std::vector<std::uint64_t> fiber(space_size(fld, k), 0);
  for (PointIndex idx : e.members()) ++fiber[e.head(idx)];
  BigInt sum_sq = 0;
  for (auto n : fiber) sum_sq += BigInt(n) * n;

  MixedMassReport out;
  out.exact = Rational(sum_sq, ipow(q, static_cast<unsigned>(k + 2 * l)));
  out.bound = Rational(BigInt(e.size()), ipow(q, static_cast<unsigned>(k + l)));
  out.within_bound = out.exact <= out.bound;
  out.saturated = out.exact == out.bound;

  const auto spectrum = forward_transform(indicator(e.points()));
  const std::uint64_t tail_size = space_size(fld, l);
  double acc = 0.0;
  for (std::uint64_t head = 0; head < fiber.size(); ++head) {
    acc += std::norm(spectrum.coeffs[head * tail_size]);
  }
  out.spectral = acc;
  const double scale = std::max(to_double(out.bound), std::numeric_limits<double>::min());
  out.agrees = std::abs(acc - to_double(out.exact)) <= 1e-9 * scale;
  return out;
}

}  // namespace ffdist
