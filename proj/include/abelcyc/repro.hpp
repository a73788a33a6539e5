#pragma once

#include <functional>
#include <string>
#include <vector>

namespace abelcyc {

enum class Suite { fast, all };

struct ReproOptions {
  Suite suite = Suite::fast;
  // Extends the Justin experiment from n <= 120 to n <= 400.
  bool justin_full = false;
  unsigned jobs = 1;
};

struct CriterionOutcome {
  int id = 0;
  std::string claim;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int id = 0;
  std::string claim;
  // Part of the fast suite; everything runs under Suite::all.
  bool fast = true;
  std::function<CriterionOutcome(const ReproOptions&)> run;
};

/// Every acceptance criterion with its expected values embedded.
std::vector<Criterion> acceptance_criteria();

/// Runs the criteria selected by the suite, invoking `on_result` after each.
std::vector<CriterionOutcome> run_repro(const ReproOptions& options,
                                        const std::function<void(const CriterionOutcome&)>& on_result = {});

/// The first values of the count of binary words avoiding abelian 4-powers
/// cyclically, lengths 1..14.
const std::vector<unsigned long long>& a334831_prefix();

}  // namespace abelcyc
