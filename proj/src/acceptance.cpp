#include "ffdist/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ffdist/experiments.hpp"
#include "ffdist/rotation_energy.hpp"
#include "ffdist/spectral.hpp"

namespace ffdist::acceptance {

namespace {

constexpr std::uint64_t kBaseSeed = 20'230'517;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

SplitPointSet random_split_set(const PrimeField& fld, int k, int l, std::uint64_t size,
                               std::uint64_t seed, std::uint64_t stream) {
  return SplitPointSet(sample_points(fld, k + l, size, seed, stream), k, l);
}

std::uint64_t uniform_int(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                          std::uint64_t lo, std::uint64_t hi) {
  return lo + counter_bits(seed, stream, counter) % (hi - lo + 1);
}

// 1. sphere Fourier decay
void kloosterman(Outcome& out) {
  double worst = 0.0;
  int cases = 0;
  for (std::uint64_t q : {3, 7, 11, 19}) {
    const PrimeField fld(q);
    for (int d = 2; d <= 4; ++d) {
      const auto r = verify_kloosterman(fld, d);
      ++cases;
      worst = std::max(worst, r.max_ratio);
      if (!r.pass) {
        out.pass = false;
        out.detail << "violation at q=" << q << " d=" << d << " t=" << r.argmax_t << "; ";
      }
    }
  }
  out.detail << cases << " (q,d) cases, max |S_t^(m)| / 2q^(-(d+1)/2) = " << worst;
}

// 2. sphere sizes
void sphere_counts(Outcome& out) {
  std::int64_t worst_excess = std::numeric_limits<std::int64_t>::min();
  for (std::uint64_t q : {3, 7, 11, 19}) {
    const PrimeField fld(q);
    for (int d = 2; d <= 4; ++d) {
      const auto sizes = norm_fiber_sizes(fld, d);
      const std::int64_t main = static_cast<std::int64_t>(std::llround(std::pow(q, d - 1)));
      const std::int64_t slack = 2 * static_cast<std::int64_t>(std::llround(std::pow(q, d - 2)));
      for (Scalar t = 1; t < q; ++t) {
        const std::int64_t dev = std::llabs(static_cast<std::int64_t>(sizes[t]) - main);
        worst_excess = std::max(worst_excess, dev - slack);
        if (dev > slack) {
          out.pass = false;
          out.detail << "q=" << q << " d=" << d << " t=" << t << " |S_t|=" << sizes[t] << "; ";
        }
      }
    }
  }
  out.detail << "max (| |S_t| - q^(d-1) | - 2q^(d-2)) = " << worst_excess << " (must be <= 0)";
}

// 3. main term plus bounded remainder
void discrepancy(Outcome& out) {
  struct Config {
    std::uint64_t q;
    int k, l;
  };
  double worst = 0.0;
  int instances = 0, failures = 0;
  for (const auto& c : {Config{7, 2, 2}, Config{11, 2, 2}, Config{7, 2, 3}}) {
    const PrimeField fld(c.q);
    for (std::uint64_t i = 0; i < 100; ++i) {
      const std::uint64_t seed = kBaseSeed + 1000 * c.q + 100 * c.l + i;
      ExperimentConfig cfg;
      cfg.q = c.q;
      cfg.k = c.k;
      cfg.l = c.l;
      cfg.seed = seed;
      cfg.density = 0.1 + 0.8 * counter_uniform(seed, 31, 0);
      const auto e = generate_set(cfg, Which::kE);
      cfg.density = 0.1 + 0.8 * counter_uniform(seed, 31, 1);
      const auto f = generate_set(cfg, Which::kF);
      const auto r = discrepancy_report(e, f);
      ++instances;
      worst = std::max(worst, r.max_ratio);
      if (!r.all_pass) {
        ++failures;
        out.pass = false;
      }
    }
  }
  out.detail << instances << " instances, " << failures << " with a violated cell, max |D|/bound = " << worst;
}

// 4. surjectivity at constant 16, q = 17, k = l = 2
void surjectivity(Outcome& out) {
  const PrimeField fld(17);
  const std::uint64_t n = space_size(fld, 4);
  const BigInt threshold = BigInt(kSurjectivityConstant) * ipow(17, 2 + 4 + 1);
  // largest deletion count keeping |E|^2 above the threshold
  std::uint64_t keep_min = static_cast<std::uint64_t>(std::sqrt(to_double(threshold)));
  while (BigInt(keep_min) * keep_min <= threshold) ++keep_min;
  while (keep_min > 0 && BigInt(keep_min - 1) * (keep_min - 1) > threshold) --keep_min;
  const std::uint64_t max_deletions = n - keep_min;

  int instances = 0, surjective = 0, below_threshold = 0;
  std::uint64_t smallest = n;
  for (std::uint64_t i = 0; i <= 200; ++i) {
    const std::uint64_t deletions = i == 0 ? 0 : uniform_int(kBaseSeed, 41, i, 1, max_deletions);
    const auto e = random_split_set(fld, 2, 2, n - deletions, kBaseSeed + i, 42);
    const auto r = theorem1_check(e, e);
    ++instances;
    smallest = std::min<std::uint64_t>(smallest, e.size());
    if (!r.threshold_met) ++below_threshold;
    if (r.surjective) ++surjective;
    if (!r.threshold_met || !r.surjective) out.pass = false;
  }
  out.detail << instances << " sets (full space + 200 deletions, |E| >= " << smallest
             << ", threshold |E| >= " << keep_min << "): " << surjective << " surjective onto all 289 pairs";
  if (below_threshold) out.detail << "; " << below_threshold << " below threshold";
}

// 5. perpendicular circles
void circles(Outcome& out) {
  for (std::uint64_t q : {3, 7, 11}) {
    ExperimentConfig cfg;
    cfg.q = q;
    cfg.generator = Generator::kCircles;
    const auto e = generate_set(cfg, Which::kE), f = generate_set(cfg, Which::kF);
    const auto b = b_set(pair_spectrum_naive(e, f));
    const bool ok = b == PairSet{{1, 1}};
    out.pass = out.pass && ok;
    out.detail << "q=" << q << ": |B|=" << b.size() << (ok ? " = {(1,1)}" : " MISMATCH") << "; ";
  }
}

// 6. energy chain at q = 7, 11
void energy_chain(Outcome& out) {
  std::size_t identity_checks = 0;
  int instances = 0, chain_ok = 0, literal_ok = 0, so2_ok = 0, fourier_split_ok = 0;
  double worst_identity = 0.0;
  for (std::uint64_t q : {7, 11}) {
    const PrimeField fld(q);
    const auto rotations = enumerate_so2(fld);
    const std::uint64_t cap = std::min<std::uint64_t>(2000, space_size(fld, 4));
    for (std::uint64_t i = 0; i < 50; ++i) {
      const std::uint64_t seed = kBaseSeed + 7000 + 100 * q + i;
      const auto e = random_split_set(fld, 2, 2, uniform_int(seed, 61, 0, 1, cap), seed, 62);
      const auto f = random_split_set(fld, 2, 2, uniform_int(seed, 61, 1, 1, cap), seed, 63);
      const auto r = energy_chain_check(e, f);
      ++instances;
      if (r.chain_holds && r.overcount_matches) ++chain_ok;
      if (r.fourier_agrees) ++fourier_split_ok;
      // zero-frequency term against q^-4 |E|^2 |F|^2 (q+1)^4 as stated
      const BigInt ef = BigInt(e.size()) * f.size();
      const Rational stated(ef * ef * ipow(q + 1, 4), ipow(q, 4));
      if (r.zero_term == stated) ++literal_ok;
      if (r.zero_term_matches) ++so2_ok;

      const auto e_hat = forward_transform(indicator(e.points()));
      for (const auto& theta : rotations) {
        for (const auto& phi : rotations) {
          worst_identity = std::max(worst_identity, correlation_fourier_check(e, e_hat, theta, phi).max_deviation);
          ++identity_checks;
        }
      }
    }
  }
  const bool chain = chain_ok == instances && fourier_split_ok == instances;
  const bool literal = literal_ok == instances;
  const bool identity = worst_identity < 1e-8;
  out.pass = chain && literal && identity;
  out.detail << instances << " instances; sum s^2 <= sum r^E r^F exactly: " << chain_ok << "/" << instances
             << " (Fourier route within 1e-6: " << fourier_split_ok << "/" << instances << ")"
             << "; zero-frequency term == q^-4|E|^2|F|^2(q+1)^4: " << literal_ok << "/" << instances
             << " [exact value equals q^-4|E|^2|F|^2|SO_2|^2 = q^-4|E|^2|F|^2(q+1)^2 in " << so2_ok << "/"
             << instances << "]"
             << "; max Fourier identity deviation " << worst_identity << " over " << identity_checks
             << " rotation pairs";
}

// 7. additive energy of circles
void circle_energy_bound(Outcome& out) {
  int circles = 0;
  for (std::uint64_t q : {3, 7, 11, 19, 23}) {
    const PrimeField fld(q);
    for (Scalar a = 1; a < q; ++a) {
      const auto r = circle_energy(fld, a);
      ++circles;
      if (!r.pass) {
        out.pass = false;
        out.detail << "violation q=" << q << " a=" << a << "; ";
      }
    }
  }
  // independent recount at q = 3, a = 1 through the pair-sum histogram
  const PrimeField f3(3);
  const auto circle = enumerate_sphere(f3, 2, 1);
  std::map<std::pair<Scalar, Scalar>, std::uint64_t> sums;
  for (const auto& u : circle.points) {
    for (const auto& v : circle.points) ++sums[{f3.add(u[0], v[0]), f3.add(u[1], v[1])}];
  }
  std::uint64_t recount = 0;
  for (const auto& [key, c] : sums) recount += c * c;
  const auto brute = circle_energy(f3, 1).energy;
  const bool q3_ok = brute == 36 && recount == 36;
  out.pass = out.pass && q3_ok;
  out.detail << circles << " circles within 3|S_a|^2; q=3 a=1: brute force " << brute << ", recount " << recount
             << ", expected 36";
}

// 8. both mixed-mass lemmas
void mixed_mass(Outcome& out) {
  int exact_ok = 0, exact_total = 0, saturated = 0, sphere_ok = 0, sphere_total = 0;
  double worst_sphere = 0.0;
  for (std::uint64_t q : {7, 11}) {
    const PrimeField fld(q);
    const std::uint64_t n = space_size(fld, 4);
    for (std::uint64_t i = 0; i < 100; ++i) {
      const std::uint64_t seed = kBaseSeed + 8000 + 100 * q + i;
      const auto e = random_split_set(fld, 2, 2, uniform_int(seed, 81, 0, 1, n), seed, 82);
      const auto m = mixed_zero_mass(e);
      ++exact_total;
      if (m.within_bound && m.agrees) ++exact_ok;
      bool all_a = true;
      for (Scalar a = 1; a < q; ++a) {
        const auto s = sphere_restricted_mass(e, a);
        worst_sphere = std::max(worst_sphere, s.mass / s.bound);
        all_a = all_a && s.pass;
      }
      ++sphere_total;
      if (all_a) ++sphere_ok;
    }
    // a single full fibre {x'} x F_q^2
    std::vector<PointIndex> fibre;
    const std::uint64_t head = uniform_int(kBaseSeed, 83, q, 0, q * q - 1);
    for (PointIndex t = 0; t < q * q; ++t) fibre.push_back(head * q * q + t);
    const auto m = mixed_zero_mass(SplitPointSet(PointSet(fld, 4, fibre), 2, 2));
    if (m.saturated && m.agrees) ++saturated;
  }
  out.pass = exact_ok == exact_total && saturated == 2 && sphere_ok == sphere_total;
  out.detail << "exact mixed mass <= q^(-k-l)|E|: " << exact_ok << "/" << exact_total
             << "; single full fibre saturates: " << saturated << "/2"
             << "; sphere-restricted bound: " << sphere_ok << "/" << sphere_total
             << " (max mass/bound " << worst_sphere << ")";
}

// 9. product law and strip remark
void sharpness(Outcome& out) {
  int product_ok = 0, product_total = 0;
  for (int k : {2, 3}) {
    const PrimeField fld(7);
    for (std::uint64_t i = 0; i < 20; ++i) {
      const std::uint64_t seed = kBaseSeed + 9000 + 100 * k + i;
      const std::uint64_t head_space = space_size(fld, k);
      const auto e1 = sample_points(fld, k, uniform_int(seed, 91, 0, 1, head_space), seed, 92);
      const std::uint64_t tail = space_size(fld, k);
      std::vector<PointIndex> members;
      for (PointIndex h : e1.members()) {
        for (PointIndex t = 0; t < tail; ++t) members.push_back(h * tail + t);
      }
      const SplitPointSet e(PointSet(fld, 2 * k, std::move(members)), k, k);
      PairSet expected;
      for (Scalar a : distance_set(e1)) {
        for (Scalar b = 0; b < 7; ++b) expected.emplace_back(a, b);
      }
      ++product_total;
      if (b_set(pair_spectrum_fast(e, e)) == expected) ++product_ok;
    }
  }
  int strip_ok = 0, strip_total = 0;
  for (std::uint64_t p : {7, 11}) {
    for (std::uint64_t len = 1; len <= p; ++len) {
      const auto r = remark_sharpness_scan(p, len);
      ++strip_total;
      if (r.matches && r.b_size == p * r.strip_distances.size()) ++strip_ok;
    }
  }
  out.pass = product_ok == product_total && strip_ok == strip_total;
  out.detail << "product law exact: " << product_ok << "/" << product_total << "; strip |B| = p|Delta(L)|: "
             << strip_ok << "/" << strip_total;
}

// 10. oracle agreement
void oracle_equivalence(Outcome& out) {
  struct Config {
    std::uint64_t q;
    int k, l;
  };
  const Config configs[] = {{3, 2, 2}, {5, 2, 2}, {7, 2, 2}, {5, 2, 3}, {3, 1, 3}};
  int equal = 0, instances = 0, brute_ok = 0, brute_total = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto& c = configs[i % std::size(configs)];
    const PrimeField fld(c.q);
    const std::uint64_t seed = kBaseSeed + 10'000 + i;
    const std::uint64_t cap = std::min<std::uint64_t>(i % 2 == 0 ? 40 : 200, space_size(fld, c.k + c.l));
    const auto e = random_split_set(fld, c.k, c.l, uniform_int(seed, 101, 0, 1, cap), seed, 102);
    const auto f = random_split_set(fld, c.k, c.l, uniform_int(seed, 101, 1, 1, cap), seed, 103);
    const auto fast = pair_spectrum_fast(e, f);
    ++instances;
    if (fast == pair_spectrum_naive(e, f)) ++equal;
    if (e.size() <= 40 && f.size() <= 40) {
      ++brute_total;
      if (sum_s_squared(fast) == sum_s_squared_bruteforce(e, f)) ++brute_ok;
    }
  }
  out.pass = equal == instances && brute_ok == brute_total && brute_total > 0;
  out.detail << "fast == naive: " << equal << "/" << instances << "; sum s^2 == quadruple count: " << brute_ok
             << "/" << brute_total;
}

struct Entry {
  const char* title;
  double budget_seconds;
  void (*run)(Outcome&);
};

const std::map<int, Entry>& registry() {
  static const std::map<int, Entry> entries{
      {1, {"sphere Fourier decay certificate", 120, kloosterman}},
      {2, {"sphere-count law", 60, sphere_counts}},
      {3, {"discrepancy decomposition", 600, discrepancy}},
      {4, {"surjectivity at constant 16 (q=17, k=l=2)", 300, surjectivity}},
      {5, {"circles example", 60, circles}},
      {6, {"energy chain (k=l=2, q=7,11)", 900, energy_chain}},
      {7, {"circle additive energy", 60, circle_energy_bound}},
      {8, {"mixed-mass lemmas", 300, mixed_mass}},
      {9, {"sharpness mechanics", 300, sharpness}},
      {10, {"oracle equivalence", 300, oracle_equivalence}},
  };
  return entries;
}

}  // namespace

std::vector<int> criterion_ids() {
  std::vector<int> ids;
  for (const auto& [id, entry] : registry()) ids.push_back(id);
  return ids;
}

CriterionResult run_criterion(int id) {
  const Entry& entry = registry().at(id);
  CriterionResult result;
  result.id = id;
  result.title = entry.title;
  result.budget_seconds = entry.budget_seconds;
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    entry.run(outcome);
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.detail << "exception: " << e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.pass = outcome.pass;
  result.detail = outcome.detail.str();
  if (result.seconds > result.budget_seconds) {
    result.pass = false;
    result.detail += "; exceeded time budget";
  }
  return result;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << ' ' << r.title << ": " << r.detail << " ("
     << std::fixed << std::setprecision(1) << r.seconds << "s of " << r.budget_seconds << "s)";
  return os.str();
}

std::vector<CriterionResult> run_all(const std::vector<int>& ids, std::ostream& log) {
  std::vector<CriterionResult> results;
  for (int id : ids) {
    results.push_back(run_criterion(id));
    log << format_line(results.back()) << std::endl;
  }
  return results;
}

}  // namespace ffdist::acceptance
