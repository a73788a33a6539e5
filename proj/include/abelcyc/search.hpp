#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "abelcyc/avoidance.hpp"
#include "abelcyc/word.hpp"

namespace abelcyc {

enum class SearchWant { count, first_witness, all_witnesses };

struct SearchTask {
  unsigned alphabet_size = 2;
  std::size_t length = 1;
  Kind kind = Kind::abelian;
  ExponentSpec exponent{Rational(4), false};
  Mode mode = Mode::cyclic;
  SearchWant want = SearchWant::count;
  // Enumerate only words whose letters first appear in the order 0, 1, 2, ...
  // and weight counts by the number of letter renamings. The first witness
  // is unaffected; all_witnesses then lists canonical representatives.
  bool symmetry_reduction = false;
  // Abandon prefixes that already contain a forbidden factor. Switching it
  // off gives the brute-force reference enumeration.
  bool prune = true;
  // Depth of the prefix tree at which work is split across workers.
  std::size_t shard_depth = 6;
};

struct SearchResult {
  std::uint64_t count = 0;
  std::optional<Word> first;
  std::vector<Word> all;
};

/// Depth-first enumeration of words of the task's length over its alphabet
/// that satisfy the task's avoidance predicate. Results do not depend on
/// `jobs`.
SearchResult run_search(const SearchTask& task, unsigned jobs = 1);

/// Number of length-n words over k letters avoiding abelian N-powers
/// cyclically.
std::uint64_t count_cyclic_avoiders(unsigned alphabet_size, std::size_t length,
                                    unsigned exponent, unsigned jobs = 1);

/// Lexicographically first word satisfying the task, or nullopt after an
/// exhaustive search found none.
std::optional<Word> find_witness(SearchTask task, unsigned jobs = 1);

struct FactorWitness {
  Word word;
  std::size_t position = 0;
};

/// A length-n factor of the Thue-Morse word avoiding 5/2+-powers cyclically.
/// Start positions are scanned in increasing order; the search gives up with
/// a search_exhausted error past `position_ceiling`.
FactorWitness thue_morse_factor_witness(std::size_t n,
                                        std::size_t position_ceiling = std::size_t{1} << 24);

/// A length-n factor of the fixed point of 0 -> 00001, 1 -> 01111 avoiding
/// abelian 5-powers cyclically, scanning start positions below the budget.
std::optional<FactorWitness> justin_factor_witness(std::size_t n, std::size_t position_budget);

struct LemmaCheckReport {
  std::string id;
  std::string claim;
  std::size_t min_length = 0;
  std::size_t max_length = 0;
  std::size_t factors_checked = 0;
  // Smallest delta seen over the checked factors.
  long long min_delta = 0;
  std::vector<Word> violations;

  bool passed() const { return violations.empty(); }
};

/// Balance checks over the sigma3 language up to length 174:
///   light:  29 <= |u| <= 58  implies delta(u) > 0
///   floor:  |u| < 29         implies delta(u) >= -3
///   six:    64 <= |u| < 174  implies delta(u) >= 6
std::vector<LemmaCheckReport> verify_delta_lemmas();

/// Line-oriented cache of counting results: k<TAB>n<TAB>N<TAB>count.
class ResultsFile {
 public:
  using Key = std::tuple<unsigned, std::size_t, unsigned>;

  explicit ResultsFile(std::string path);

  std::optional<std::uint64_t> lookup(unsigned k, std::size_t n, unsigned exponent) const;
  /// Appends a line and records it in memory.
  void record(unsigned k, std::size_t n, unsigned exponent, std::uint64_t count);
  const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }

 private:
  std::string path_;
  std::map<Key, std::uint64_t> entries_;
};

}  // namespace abelcyc
