#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ffdist/pair_spectrum.hpp"
#include "ffdist/rotation_energy.hpp"

namespace ffdist {

enum class Generator { kFull, kBernoulli, kProduct, kCircles, kStrip, kSharpProduct };
enum class OutputFormat { kJson, kCsv };
enum class Which { kE, kF };

std::string_view to_string(Generator g);
Generator parse_generator(std::string_view name);

struct ExperimentConfig {
  std::uint64_t q = 7;
  int k = 2;
  int l = 2;
  Generator generator = Generator::kBernoulli;
  /// Inclusion probability for bernoulli; fibre density for product.
  double density = 0.5;
  std::uint64_t seed = 1;
  double constant_c = 10.0;
  /// Strip length for the strip generator; 0 picks ceil(q / 2).
  std::uint64_t strip_len = 0;
  std::uint64_t search_budget = 10'000;
  std::string output;
  OutputFormat format = OutputFormat::kJson;

  /// Throws std::invalid_argument when the generator does not fit (q, k, l).
  void validate() const;
  Scalar effective_strip_len() const;
  nlohmann::ordered_json to_json() const;
};

/// Uniform double in [0, 1) determined by (seed, stream, counter) alone.
double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);
std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// Deterministic for a given config. bernoulli draws E and F from independent
/// streams; circles returns the two perpendicular circles; the product-type
/// generators return the same set for E and F.
SplitPointSet generate_set(const ExperimentConfig& cfg, Which which);

/// `count` distinct uniformly chosen points of F_q^d.
PointSet sample_points(const PrimeField& fld, int d, std::uint64_t count, std::uint64_t seed,
                       std::uint64_t stream);

struct SharpSubsetResult {
  PointSet set;
  std::set<Scalar> distances;
  /// A value not in `distances`.
  Scalar missing_distance = 0;
  std::uint64_t candidates_tried = 0;
};

/// Randomised greedy growth of E1 in F_q^k with Delta(E1) != F_q: each restart
/// fixes a nonzero target distance and adds points that avoid it. The best set
/// found is re-verified with distance_set before it is returned.
SharpSubsetResult search_sharp_subset(const PrimeField& fld, int k, std::uint64_t budget,
                                      std::uint64_t seed);

struct CheckResult {
  std::string name;
  std::string statement;
  bool pass = true;
  nlohmann::ordered_json payload;
};

struct RunReport {
  static constexpr int kSchema = 1;

  nlohmann::ordered_json config;
  std::vector<CheckResult> checks;
  double duration_ms = 0.0;

  bool pass() const;
  nlohmann::ordered_json to_json() const;
  /// name,pass rows after a header line.
  std::string to_csv() const;
};

inline constexpr std::string_view kSuites[] = {"lemmas", "theorem1", "theorem2", "sharpness"};

/// Throws std::invalid_argument for unknown suites. A check that throws is
/// recorded as failed with the exception message as its payload.
RunReport run_suite(std::string_view name, const ExperimentConfig& cfg);

nlohmann::ordered_json to_json(const DiscrepancyReport& report);
nlohmann::ordered_json spectrum_to_json(const PairSpectrum& spectrum);
nlohmann::ordered_json to_json(const EnergyReport& report);
nlohmann::ordered_json to_json(const Theorem2Report& report);

}  // namespace ffdist
