// Runs every acceptance criterion and prints one line per criterion.
#include <cstdio>

#include "abelcyc/repro.hpp"

int main() {
  abelcyc::ReproOptions options;
  options.suite = abelcyc::Suite::all;
  bool all_passed = true;
  abelcyc::run_repro(options, [&](const abelcyc::CriterionOutcome& r) {
    std::printf("criterion %2d: %s  (%.2fs)  %s -- %s\n", r.id, r.passed ? "PASS" : "FAIL", r.seconds,
                r.claim.c_str(), r.detail.c_str());
    std::fflush(stdout);
    all_passed = all_passed && r.passed;
  });
  std::printf("%s\n", all_passed ? "all acceptance criteria passed" : "some acceptance criteria FAILED");
  return all_passed ? 0 : 1;
}
