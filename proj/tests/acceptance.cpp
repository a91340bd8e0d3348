// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <iostream>

#include "surfemb/reproduce.hpp"

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  int failed = 0;
  for (const auto& r : surfemb::run_acceptance(5)) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << "\n";
    if (!r.passed || verbose) std::cout << r.detail.dump() << "\n";
    failed += r.passed ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
