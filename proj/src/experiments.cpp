#include "ffdist/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ffdist/spectral.hpp"

namespace ffdist {

using nlohmann::ordered_json;

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t kStreamE = 1;
constexpr std::uint64_t kStreamF = 2;
constexpr std::uint64_t kStreamHead = 3;

ordered_json scalars(const std::set<Scalar>& s) { return ordered_json(std::vector<Scalar>(s.begin(), s.end())); }

ordered_json pairs(const PairSet& b) {
  ordered_json out = ordered_json::array();
  for (const auto& [a, c] : b) out.push_back({a, c});
  return out;
}

}  // namespace

std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ counter);
}

double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  return static_cast<double>(counter_bits(seed, stream, counter) >> 11) * 0x1.0p-53;
}

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::kFull: return "full";
    case Generator::kBernoulli: return "bernoulli";
    case Generator::kProduct: return "product";
    case Generator::kCircles: return "circles";
    case Generator::kStrip: return "strip";
    case Generator::kSharpProduct: return "sharp-product";
  }
  return "unknown";
}

Generator parse_generator(std::string_view name) {
  for (auto g : {Generator::kFull, Generator::kBernoulli, Generator::kProduct, Generator::kCircles,
                 Generator::kStrip, Generator::kSharpProduct}) {
    if (to_string(g) == name) return g;
  }
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const {
  const PrimeField fld(q);
  if (k < 1 || l < 1) throw std::invalid_argument("k and l must be >= 1");
  space_size(fld, k + l);
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
  if (!(constant_c > 0.0)) throw std::invalid_argument("constant C must be positive");
  switch (generator) {
    case Generator::kStrip:
      if (k != 2 || l != 2) throw std::invalid_argument("strip generator needs k = l = 2");
      if (strip_len > q) throw std::invalid_argument("strip_len must not exceed q");
      break;
    case Generator::kSharpProduct:
      if (k % 2 == 0) throw std::invalid_argument("sharp-product generator needs odd k");
      space_size(fld, k, 100'000);
      break;
    default:
      break;
  }
}

Scalar ExperimentConfig::effective_strip_len() const {
  return static_cast<Scalar>(strip_len == 0 ? (q + 1) / 2 : strip_len);
}

ordered_json ExperimentConfig::to_json() const {
  return {{"q", q},
          {"k", k},
          {"l", l},
          {"generator", std::string(ffdist::to_string(generator))},
          {"density", density},
          {"seed", seed},
          {"constant_c", constant_c},
          {"strip_len", effective_strip_len()},
          {"search_budget", search_budget}};
}

PointSet sample_points(const PrimeField& fld, int d, std::uint64_t count, std::uint64_t seed,
                       std::uint64_t stream) {
  const std::uint64_t n = space_size(fld, d);
  if (count > n) throw std::invalid_argument("cannot sample more points than F_q^d holds");
  // the `count` smallest per-index keys: independent of evaluation order
  std::vector<std::pair<std::uint64_t, PointIndex>> keys(n);
  for (PointIndex i = 0; i < n; ++i) keys[i] = {counter_bits(seed, stream, i), i};
  std::nth_element(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(count), keys.end());
  std::vector<PointIndex> members(count);
  for (std::uint64_t i = 0; i < count; ++i) members[i] = keys[i].second;
  return PointSet(fld, d, std::move(members));
}

SharpSubsetResult search_sharp_subset(const PrimeField& fld, int k, std::uint64_t budget,
                                      std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("dimension must be >= 1");
  const PointCodec codec(fld, k);
  if (codec.size() > 100'000) throw std::length_error("sharp-subset search limited to q^k <= 1e5");
  const Scalar q = fld.q();
  std::mt19937_64 rng(seed);
  std::vector<PointIndex> order(codec.size());
  std::iota(order.begin(), order.end(), PointIndex{0});
  std::vector<Vector> decoded(codec.size());
  for (PointIndex i = 0; i < codec.size(); ++i) decoded[i] = codec.decode(i);
  auto dist = [&](PointIndex a, PointIndex b) {
    Scalar acc = 0;
    for (int i = 0; i < k; ++i) acc = fld.add(acc, fld.square(fld.sub(decoded[a][i], decoded[b][i])));
    return acc;
  };

  std::vector<PointIndex> best{order[rng() % order.size()]};
  std::uint64_t tried = 0;
  if (q > 1) {
    std::uniform_int_distribution<Scalar> target_dist(1, q - 1);
    while (tried < budget) {
      const Scalar target = target_dist(rng);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<PointIndex> current{order.front()};
      for (std::size_t i = 1; i < order.size() && tried < budget; ++i) {
        ++tried;
        const PointIndex cand = order[i];
        bool ok = true;
        for (PointIndex x : current) {
          if (dist(cand, x) == target) {
            ok = false;
            break;
          }
        }
        if (ok) current.push_back(cand);
      }
      if (current.size() > best.size()) best = std::move(current);
    }
  }

  SharpSubsetResult out{PointSet(fld, k, best), {}, 0, tried};
  out.distances = distance_set(out.set);
  if (out.distances.size() == q) throw std::logic_error("sharp-subset search produced a full distance set");
  for (Scalar t = 0; t < q; ++t) {
    if (!out.distances.contains(t)) {
      out.missing_distance = t;
      break;
    }
  }
  return out;
}

SplitPointSet generate_set(const ExperimentConfig& cfg, Which which) {
  cfg.validate();
  const PrimeField fld(cfg.q);
  const int d = cfg.k + cfg.l;
  const std::uint64_t stream = which == Which::kE ? kStreamE : kStreamF;
  const std::uint64_t tail_size = space_size(fld, cfg.l);

  auto product_with_full_tail = [&](const PointSet& head) {
    std::vector<PointIndex> members;
    members.reserve(head.size() * tail_size);
    for (PointIndex h : head.members()) {
      for (PointIndex t = 0; t < tail_size; ++t) members.push_back(h * tail_size + t);
    }
    return SplitPointSet(PointSet(fld, d, std::move(members)), cfg.k, cfg.l);
  };

  switch (cfg.generator) {
    case Generator::kFull:
      return SplitPointSet(PointSet::full(fld, d), cfg.k, cfg.l);
    case Generator::kBernoulli: {
      std::vector<PointIndex> members;
      const std::uint64_t n = space_size(fld, d);
      for (PointIndex i = 0; i < n; ++i) {
        if (counter_uniform(cfg.seed, stream, i) < cfg.density) members.push_back(i);
      }
      return SplitPointSet(PointSet(fld, d, std::move(members)), cfg.k, cfg.l);
    }
    case Generator::kProduct: {
      std::vector<PointIndex> head;
      const std::uint64_t n = space_size(fld, cfg.k);
      for (PointIndex i = 0; i < n; ++i) {
        if (counter_uniform(cfg.seed, kStreamHead, i) < cfg.density) head.push_back(i);
      }
      return product_with_full_tail(PointSet(fld, cfg.k, std::move(head)));
    }
    case Generator::kCircles: {
      // E = {(x, 0) : |x| = 1}, F = {(0, y) : |y| = 1}
      const int own = which == Which::kE ? cfg.k : cfg.l;
      const auto circle = enumerate_sphere(fld, own, 1 % fld.q());
      std::vector<Vector> pts;
      for (const auto& c : circle.points) {
        Vector v(d, 0);
        std::copy(c.begin(), c.end(), v.begin() + (which == Which::kE ? 0 : cfg.k));
        pts.push_back(std::move(v));
      }
      return SplitPointSet(PointSet(fld, d, pts), cfg.k, cfg.l);
    }
    case Generator::kStrip:
      return strip_set(fld, cfg.effective_strip_len());
    case Generator::kSharpProduct:
      return product_with_full_tail(search_sharp_subset(fld, cfg.k, cfg.search_budget, cfg.seed).set);
  }
  throw std::logic_error("unhandled generator");
}

bool RunReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

ordered_json RunReport::to_json() const {
  ordered_json list = ordered_json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"paper_ref", c.statement}, {"pass", c.pass}, {"payload", c.payload}});
  }
  return {{"schema", kSchema}, {"config", config}, {"checks", list}, {"pass", pass()},
          {"duration_ms", duration_ms}};
}

std::string RunReport::to_csv() const {
  std::ostringstream os;
  os << "name,pass\n";
  for (const auto& c : checks) os << c.name << ',' << (c.pass ? "true" : "false") << '\n';
  return os.str();
}

ordered_json spectrum_to_json(const PairSpectrum& spectrum) {
  ordered_json rows = ordered_json::array();
  for (Scalar a = 0; a < spectrum.q; ++a) {
    rows.push_back(std::vector<std::uint64_t>(spectrum.s.begin() + std::size_t{a} * spectrum.q,
                                              spectrum.s.begin() + std::size_t{a + 1} * spectrum.q));
  }
  return rows;
}

ordered_json to_json(const DiscrepancyReport& report) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"a", e.a},
                       {"b", e.b},
                       {"s", e.s},
                       {"main_term", to_string(e.main_term)},
                       {"D", to_string(e.discrepancy)},
                       {"D_approx", to_double(e.discrepancy)},
                       {"bound", e.bound},
                       {"pass", e.pass}});
  }
  return {{"schema", RunReport::kSchema}, {"all_pass", report.all_pass}, {"max_ratio", report.max_ratio},
          {"entries", entries}};
}

ordered_json to_json(const EnergyReport& r) {
  return {{"lhs", to_string(r.lhs)},
          {"rhs", to_string(r.rhs)},
          {"chain_holds", r.chain_holds},
          {"zero_difference_overcount", to_string(r.zero_difference_overcount)},
          {"overcount_matches", r.overcount_matches},
          {"zero_term", to_string(r.zero_term)},
          {"zero_term_expected", to_string(r.zero_term_expected)},
          {"zero_term_matches", r.zero_term_matches},
          {"fourier_zero_term", r.fourier.zero_term},
          {"nonzero_term", r.fourier.nonzero_term},
          {"nonzero_bound", r.nonzero_bound},
          {"mixed_term", r.fourier.mixed_term},
          {"fourier_relative_error", r.fourier_relative_error},
          {"rotation_pairs", r.rotation_pairs},
          {"pass", r.pass}};
}

ordered_json to_json(const Theorem2Report& r) {
  return {{"constant_c", r.constant},
          {"branches", r.branches},
          {"min_bound", r.min_bound},
          {"observed_B", r.observed_b},
          {"mixed_term", r.mixed_term},
          {"empirical_C", r.empirical_c},
          {"holds", r.holds},
          {"constant_covers", r.constant_covers}};
}

namespace {

class SuiteRunner {
 public:
  explicit SuiteRunner(RunReport& report) : report_(report) {}

  void check(std::string name, std::string statement, const std::function<bool(ordered_json&)>& body) {
    CheckResult result{std::move(name), std::move(statement), false, ordered_json::object()};
    try {
      result.pass = body(result.payload);
    } catch (const std::exception& e) {
      result.pass = false;
      result.payload["error"] = e.what();
    }
    report_.checks.push_back(std::move(result));
  }

  void skip(std::string name, std::string statement, std::string reason) {
    report_.checks.push_back({std::move(name), std::move(statement), true,
                              ordered_json{{"skipped", true}, {"reason", std::move(reason)}}});
  }

 private:
  RunReport& report_;
};

void lemmas_suite(SuiteRunner& run, const ExperimentConfig& cfg) {
  const PrimeField fld(cfg.q);
  const bool plane_case = fld.q_mod_4() == 3;
  for (int d = 2; d <= 4; ++d) {
    if (std::pow(static_cast<double>(cfg.q), d) > 2e5) break;
    const std::string dim = "d=" + std::to_string(d);
    run.check("orthogonality " + dim, "sum_x chi(x.m) = q^d [m = 0]", [&](ordered_json& p) {
      const auto r = orthogonality_check(fld, d);
      p["max_nonzero_modulus"] = r.max_nonzero_modulus;
      p["frequencies"] = r.frequencies_checked;
      return r.pass;
    });
    run.check("plancherel " + dim, "sum_m |f^(m)|^2 = q^-d sum_x |f(x)|^2", [&](ordered_json& p) {
      const auto set = sample_points(fld, d, space_size(fld, d) / 3, cfg.seed, 11 + d);
      const double gap = plancherel_gap(indicator(set));
      p["support"] = set.size();
      p["gap"] = gap;
      return gap < 1e-9 * std::max(1.0, static_cast<double>(set.size()) / std::pow(cfg.q, d));
    });
    run.check("sphere decay " + dim, "|S_t^(m)| <= 2 q^(-(d+1)/2) for t != 0, m != 0",
              [&](ordered_json& p) {
                const auto r = verify_kloosterman(fld, d);
                p["max_ratio"] = r.max_ratio;
                p["argmax_t"] = r.argmax_t;
                p["argmax_m"] = r.argmax_m;
                return r.pass;
              });
    run.check("sphere count " + dim, "| |S_t| - q^(d-1) | <= 2 q^(d-2) for t != 0", [&](ordered_json& p) {
      const auto sizes = norm_fiber_sizes(fld, d);
      const std::int64_t main = static_cast<std::int64_t>(std::pow(cfg.q, d - 1));
      const std::int64_t slack = 2 * static_cast<std::int64_t>(std::pow(cfg.q, d - 2));
      bool ok = std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0}) == space_size(fld, d);
      for (Scalar t = 1; t < fld.q(); ++t) {
        ok = ok && std::llabs(static_cast<std::int64_t>(sizes[t]) - main) <= slack;
      }
      p["sizes"] = sizes;
      return ok;
    });
  }
  if (plane_case) {
    run.check("so2 orbits", "|x| = |y| iff x = theta y for a unique rotation", [&](ordered_json& p) {
      const auto r = so2_orbit_check(fld);
      p["pairs_checked"] = r.pairs_checked;
      if (r.counterexample) p["counterexample"] = *r.counterexample;
      return r.pass;
    });
    run.check("circle energy", "E+(S_a) <= 3 |S_a|^2", [&](ordered_json& p) {
      bool ok = true;
      ordered_json rows = ordered_json::array();
      for (Scalar a = 1; a < fld.q(); ++a) {
        const auto r = circle_energy(fld, a);
        rows.push_back({{"a", a}, {"size", r.sphere_size}, {"energy", r.energy}, {"bound", r.bound}});
        ok = ok && r.pass;
      }
      p["circles"] = rows;
      return ok;
    });
  } else {
    run.skip("so2 orbits", "|x| = |y| iff x = theta y for a unique rotation", "requires q = 3 mod 4");
    run.skip("circle energy", "E+(S_a) <= 3 |S_a|^2", "requires q = 3 mod 4");
  }

  const auto e = generate_set(cfg, Which::kE);
  run.check("mixed zero mass", "sum_m' |E^(m',0)|^2 <= q^(-k-l) |E|", [&](ordered_json& p) {
    const auto r = mixed_zero_mass(e);
    p["exact"] = to_string(r.exact);
    p["bound"] = to_string(r.bound);
    p["spectral"] = r.spectral;
    return r.within_bound && r.agrees;
  });
  run.check("mixed zero mass saturation", "equality for a single full fibre {x'} x F_q^l",
            [&](ordered_json& p) {
              const std::uint64_t tail = space_size(fld, cfg.l);
              std::vector<PointIndex> members(tail);
              std::iota(members.begin(), members.end(), PointIndex{0});
              const auto r = mixed_zero_mass(SplitPointSet(PointSet(fld, cfg.k + cfg.l, members), cfg.k, cfg.l));
              p["exact"] = to_string(r.exact);
              p["bound"] = to_string(r.bound);
              return r.saturated && r.agrees;
            });
  if (plane_case && cfg.k == 2 && cfg.l == 2) {
    run.check("sphere restricted mass", "sum_{|m|=a} |E^(m,0)|^2 <= sqrt(3) q^-6 |E|^(3/2)",
              [&](ordered_json& p) {
                bool ok = true;
                double worst = 0.0;
                for (Scalar a = 1; a < fld.q(); ++a) {
                  const auto r = sphere_restricted_mass(e, a);
                  ok = ok && r.pass;
                  if (r.bound > 0) worst = std::max(worst, r.mass / r.bound);
                }
                p["max_ratio"] = worst;
                return ok;
              });
  } else {
    run.skip("sphere restricted mass", "sum_{|m|=a} |E^(m,0)|^2 <= sqrt(3) q^-6 |E|^(3/2)",
             "requires k = l = 2 and q = 3 mod 4");
  }
}

void theorem1_suite(SuiteRunner& run, const ExperimentConfig& cfg) {
  const auto e = generate_set(cfg, Which::kE);
  const auto f = generate_set(cfg, Which::kF);
  const auto spectrum = pair_spectrum_fast(e, f);
  run.check("mass conservation", "sum_{a,b} s(a,b) = |E||F|", [&](ordered_json& p) {
    p["E"] = e.size();
    p["F"] = f.size();
    return spectrum.total() == e.size() * f.size();
  });
  if (e.size() * f.size() <= 10'000'000) {
    run.check("fast equals naive", "convolution spectrum equals the double loop", [&](ordered_json&) {
      return pair_spectrum_naive(e, f) == spectrum;
    });
  }
  run.check("discrepancy", "|s(a,b) - |E||F||S_a||S_b| q^-(k+l)| <= three-term bound",
            [&](ordered_json& p) {
              const auto r = discrepancy_report(e, f, spectrum);
              p["max_ratio"] = r.max_ratio;
              p["spectrum"] = spectrum_to_json(spectrum);
              return r.all_pass;
            });
  if (cfg.l >= cfg.k && cfg.k >= 2) {
    run.check("surjectivity", "|E||F| > 16 q^(k+2l+1) implies B = F_q x F_q", [&](ordered_json& p) {
      const auto r = theorem1_check(e, f, spectrum);
      p["threshold_met"] = r.threshold_met;
      p["surjective"] = r.surjective;
      p["pairs_covered"] = r.pairs_covered;
      return r.holds;
    });
  } else {
    run.skip("surjectivity", "|E||F| > 16 q^(k+2l+1) implies B = F_q x F_q", "requires l >= k >= 2");
  }
  if (!e.members().empty() && !f.members().empty()) {
    run.check("cauchy-schwarz bound", "|E|^2|F|^2 / sum s^2 <= |B|", [&](ordered_json& p) {
      const auto bound = cs_lower_bound(e.size(), f.size(), spectrum);
      const auto b = b_set(spectrum).size();
      p["bound"] = to_string(bound);
      p["B"] = b;
      return bound <= Rational(BigInt(b));
    });
  }
}

void theorem2_suite(SuiteRunner& run, const ExperimentConfig& cfg) {
  if (cfg.k != 2 || cfg.l != 2 || cfg.q % 4 != 3) {
    throw std::invalid_argument("theorem2 suite requires k = l = 2 and q = 3 mod 4");
  }
  const auto e = generate_set(cfg, Which::kE);
  const auto f = generate_set(cfg, Which::kF);
  run.check("energy chain", "sum s^2 <= sum_{theta,phi,U} r^E r^F", [&](ordered_json& p) {
    const auto r = energy_chain_check(e, f);
    p = to_json(r);
    return r.pass;
  });
  run.check("fourier identity", "r^(M) = q^4 E^(M) conj(E^(theta^T m', phi^T m''))",
            [&](ordered_json& p) {
              const PrimeField fld(cfg.q);
              const auto rotations = enumerate_so2(fld);
              const auto e_hat = forward_transform(indicator(e.points()));
              double worst = 0.0;
              for (std::size_t i = 0; i < 4; ++i) {
                const auto th = rotations[counter_bits(cfg.seed, 21, 2 * i) % rotations.size()];
                const auto ph = rotations[counter_bits(cfg.seed, 21, 2 * i + 1) % rotations.size()];
                worst = std::max(worst, correlation_fourier_check(e, e_hat, th, ph).max_deviation);
              }
              p["max_deviation"] = worst;
              return worst < 1e-8;
            });
  run.check("min bound", "min{|E||F|/(3q^4), (|E||F|)^(3/4)/(3Cq^3), q^4/(3|SO_2|^2)} <= |B|",
            [&](ordered_json& p) {
              const auto r = theorem2_bound(e, f, cfg.constant_c);
              p = to_json(r);
              return r.holds || !r.constant_covers;
            });
}

void sharpness_suite(SuiteRunner& run, const ExperimentConfig& cfg) {
  const PrimeField fld(cfg.q);
  run.check("circles example", "B(E, F) = {(1, 1)} for perpendicular unit circles", [&](ordered_json& p) {
    ExperimentConfig c = cfg;
    c.generator = Generator::kCircles;
    const auto e = generate_set(c, Which::kE), f = generate_set(c, Which::kF);
    const auto b = b_set(pair_spectrum_fast(e, f));
    p["B"] = pairs(b);
    return b == PairSet{{1 % fld.q(), 1 % fld.q()}};
  });
  run.check("product law", "B(E1 x F_q^l, E1 x F_q^l) = Delta(E1) x F_q", [&](ordered_json& p) {
    ExperimentConfig c = cfg;
    c.generator = Generator::kProduct;
    const auto e = generate_set(c, Which::kE);
    if (e.members().empty()) {
      p["E1"] = 0;
      return true;
    }
    std::set<PointIndex> heads;
    for (auto idx : e.members()) heads.insert(e.head(idx));
    const PointSet e1(fld, cfg.k, std::vector<PointIndex>(heads.begin(), heads.end()));
    const auto delta = distance_set(e1);
    PairSet expected;
    for (Scalar a : delta) {
      for (Scalar b = 0; b < fld.q(); ++b) expected.emplace_back(a, b);
    }
    p["E1"] = e1.size();
    p["delta_E1"] = scalars(delta);
    return b_set(pair_spectrum_fast(e, e)) == expected;
  });
  if (fld.q_mod_4() == 3) {
    run.check("strip remark", "E = F_p^2 x L gives B(E, E) = F_p x Delta(L)", [&](ordered_json& p) {
      const auto r = remark_sharpness_scan(cfg.q, cfg.effective_strip_len());
      p["strip_len"] = r.strip_len;
      p["E"] = r.set_size;
      p["B"] = r.b_size;
      p["delta_L"] = scalars(r.strip_distances);
      return r.matches;
    });
  } else {
    run.skip("strip remark", "E = F_p^2 x L gives B(E, E) = F_p x Delta(L)", "requires q = 3 mod 4");
  }
  const int k = cfg.k % 2 == 1 ? cfg.k : 3;
  if (std::pow(static_cast<double>(cfg.q), k) <= 1e5) {
    run.check("sharp subset search", "|E1| large with Delta(E1) != F_q (observational)",
              [&](ordered_json& p) {
                const auto r = search_sharp_subset(fld, k, cfg.search_budget, cfg.seed);
                const auto recheck = distance_set(r.set);
                p["k"] = k;
                p["size"] = r.set.size();
                p["missing_distance"] = r.missing_distance;
                p["reference_size"] = std::pow(static_cast<double>(cfg.q), (k + 1) / 2.0);
                return recheck.size() < fld.q() && !recheck.contains(r.missing_distance);
              });
  } else {
    run.skip("sharp subset search", "|E1| large with Delta(E1) != F_q (observational)",
             "q^k exceeds 1e5");
  }
}

}  // namespace

RunReport run_suite(std::string_view name, const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  cfg.validate();
  RunReport report;
  report.config = cfg.to_json();
  report.config["suite"] = std::string(name);
  SuiteRunner runner(report);
  if (name == "lemmas") {
    lemmas_suite(runner, cfg);
  } else if (name == "theorem1") {
    theorem1_suite(runner, cfg);
  } else if (name == "theorem2") {
    theorem2_suite(runner, cfg);
  } else if (name == "sharpness") {
    sharpness_suite(runner, cfg);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  report.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ffdist
