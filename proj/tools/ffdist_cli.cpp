// ffdist: experiment runner for two-parameter distance sets over F_q^(k+l).

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "ffdist/acceptance.hpp"
#include "ffdist/experiments.hpp"
#include "ffdist/pair_spectrum.hpp"
#include "ffdist/rotation_energy.hpp"

namespace {

using namespace ffdist;

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

SplitPointSet load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_split_point_set(in);
}

void add_experiment_flags(CLI::App& app, ExperimentConfig& cfg, std::string& generator) {
  app.add_option("--q", cfg.q, "prime field size")->capture_default_str();
  app.add_option("--k", cfg.k, "dimension of the first block")->capture_default_str();
  app.add_option("--l", cfg.l, "dimension of the second block")->capture_default_str();
  app.add_option("--generator", generator, "full|bernoulli|product|circles|strip|sharp-product")
      ->capture_default_str();
  app.add_option("--density", cfg.density, "bernoulli / product density")->capture_default_str();
  app.add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  app.add_option("--constant-c", cfg.constant_c, "constant C for the k=l=2 minimum bound")
      ->capture_default_str();
  app.add_option("--strip-len", cfg.strip_len, "strip length (0 = ceil(q/2))")->capture_default_str();
  app.add_option("--budget", cfg.search_budget, "sharp-subset search budget")->capture_default_str();
}

int run_acceptance(const std::vector<int>& only) {
  const auto ids = only.empty() ? acceptance::criterion_ids() : only;
  const auto results = acceptance::run_all(ids, std::cout);
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ffdist: distance-set experiments over prime fields"};
  app.require_subcommand(0, 1);
  // lets subcommands take the experiment flags after their name
  app.fallthrough();

  ExperimentConfig cfg;
  std::string generator = "bernoulli";
  std::string suite;
  std::string format = "json";
  add_experiment_flags(app, cfg, generator);
  app.add_option("--suite", suite, "lemmas|theorem1|theorem2|sharpness|all|acceptance");
  app.add_option("--out", cfg.output, "output path (default stdout)");
  app.add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto* gen = app.add_subcommand("generate", "write a generated point set");
  std::string which = "E";
  gen->add_option("--which", which, "E|F")->check(CLI::IsMember({"E", "F"}))->capture_default_str();

  auto* spec = app.add_subcommand("spectrum", "pair spectrum s(a,b) of two point-set files as CSV");
  std::string e_path, f_path, method = "fast";
  spec->add_option("--e", e_path, "point-set file for E")->required();
  spec->add_option("--f", f_path, "point-set file for F")->required();
  spec->add_option("--method", method, "fast|naive")->check(CLI::IsMember({"fast", "naive"}))
      ->capture_default_str();

  auto* disc = app.add_subcommand("discrepancy", "main term / remainder report as JSON");
  disc->add_option("--e", e_path, "point-set file for E")->required();
  disc->add_option("--f", f_path, "point-set file for F")->required();

  auto* circ = app.add_subcommand("circle-energy", "additive energy of every circle S_a as CSV");

  auto* acc = app.add_subcommand("acceptance", "run the acceptance criteria");
  std::vector<int> only;
  acc->add_option("--criterion", only, "criterion ids to run (default: all)");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.generator = parse_generator(generator);
    cfg.format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;

    if (*acc) return run_acceptance(only);

    if (*gen) {
      const auto set = generate_set(cfg, which == "E" ? Which::kE : Which::kF);
      Sink sink(cfg.output);
      write_split_point_set(sink.stream(), set);
      return 0;
    }
    if (*spec) {
      const auto e = load(e_path), f = load(f_path);
      const auto s = method == "fast" ? pair_spectrum_fast(e, f) : pair_spectrum_naive(e, f);
      Sink sink(cfg.output);
      write_spectrum_csv(sink.stream(), s);
      return s.total() == e.size() * f.size() ? 0 : 1;
    }
    if (*disc) {
      const auto e = load(e_path), f = load(f_path);
      const auto report = discrepancy_report(e, f);
      Sink sink(cfg.output);
      sink.stream() << to_json(report).dump(2) << '\n';
      return report.all_pass ? 0 : 1;
    }
    if (*circ) {
      const PrimeField fld(cfg.q);
      Sink sink(cfg.output);
      sink.stream() << "q,a,size,energy,bound\n";
      bool ok = true;
      for (Scalar a = 1; a < fld.q(); ++a) {
        const auto r = circle_energy(fld, a);
        sink.stream() << r.q << ',' << r.a << ',' << r.sphere_size << ',' << r.energy << ',' << r.bound << '\n';
        ok = ok && r.pass;
      }
      return ok ? 0 : 1;
    }

    if (suite.empty()) {
      std::cerr << app.help();
      return 2;
    }
    if (suite == "acceptance") return run_acceptance({});

    std::vector<std::string> suites;
    if (suite == "all") {
      for (auto s : kSuites) suites.emplace_back(s);
    } else {
      suites.push_back(suite);
    }
    Sink sink(cfg.output);
    bool ok = true;
    nlohmann::ordered_json combined = nlohmann::ordered_json::array();
    for (const auto& name : suites) {
      const auto report = run_suite(name, cfg);
      ok = ok && report.pass();
      if (cfg.format == OutputFormat::kCsv) {
        sink.stream() << report.to_csv();
      } else if (suites.size() == 1) {
        sink.stream() << report.to_json().dump(2) << '\n';
      } else {
        combined.push_back(report.to_json());
      }
    }
    if (cfg.format == OutputFormat::kJson && suites.size() > 1) sink.stream() << combined.dump(2) << '\n';
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "ffdist: " << e.what() << '\n';
    return 2;
  }
}
