// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Usage: ffdist_acceptance [id ...]

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "ffdist/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
  if (ids.empty()) ids = ffdist::acceptance::criterion_ids();
  const auto results = ffdist::acceptance::run_all(ids, std::cout);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  return passed == results.size() ? EXIT_SUCCESS : EXIT_FAILURE;
}
