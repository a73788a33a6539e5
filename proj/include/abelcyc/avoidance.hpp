#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "abelcyc/rational.hpp"
#include "abelcyc/word.hpp"

namespace abelcyc {

enum class Mode { cyclic, circular, linear };
enum class Kind { abelian, ordinary };

const char* to_string(Mode mode);
const char* to_string(Kind kind);
Mode parse_mode(std::string_view text);
Kind parse_kind(std::string_view text);

/// Inclusive index range; empty when lo > hi.
struct IndexRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// A located repetition in w^omega (or in a pre-expanded text).
///
/// For abelian occurrences the exponent is the integral number of
/// consecutive abelian-equivalent blocks. For ordinary occurrences it is
/// (run + period) / period where `run` is the number of positions i with
/// text[start + i] == text[start + i + period]; exponents that reach the scan
/// ceiling are reported as the ceiling.
struct PowerOccurrence {
  Kind kind = Kind::abelian;
  std::size_t start = 0;
  std::size_t period = 0;
  Rational exponent;

  friend bool operator==(const PowerOccurrence&, const PowerOccurrence&) = default;
};

struct AvoidanceReport {
  Word word;
  Mode mode = Mode::cyclic;
  Kind kind = Kind::abelian;
  Rational threshold;
  bool strict_plus = false;
  bool verdict = true;
  std::optional<PowerOccurrence> witness;
};

/// Which periods the cyclic detectors scan. `halved` relies on the fact
/// that a power of period m with |w|/2 <= m < |w| in w^omega forces one of
/// period |w| - m; `full` scans 1..|w|-1 over an explicit window and serves
/// as the reference implementation.
enum class PeriodScan { halved, full };

/// Least (start, period) pair, start-major, such that N consecutive blocks of
/// length `period` starting at `start` in `text` are abelian equivalent.
/// Periods are clipped to 1..floor(|text| / N); blocks must fit in `text`.
std::optional<PowerOccurrence> find_abelian_power(const Word& text, unsigned exponent,
                                                  IndexRange periods, IndexRange starts);

/// True iff w has no abelian N-power as a factor.
bool is_abelian_free(const Word& w, unsigned exponent);

AvoidanceReport cyclic_abelian_avoids(const Word& w, unsigned exponent,
                                      PeriodScan scan = PeriodScan::halved);
AvoidanceReport circular_abelian_avoids(const Word& w, unsigned exponent);
AvoidanceReport linear_abelian_avoids(const Word& w, unsigned exponent);

/// Least N >= 2 such that w avoids abelian N-powers cyclically, or nullopt
/// when no such N exists.
std::optional<unsigned> min_avoided_abelian_exponent(const Word& w);

AvoidanceReport cyclic_ordinary_avoids(const Word& w, Rational exponent, bool strict_plus,
                                       PeriodScan scan = PeriodScan::halved);
AvoidanceReport circular_ordinary_avoids(const Word& w, Rational exponent, bool strict_plus);
AvoidanceReport linear_ordinary_avoids(const Word& w, Rational exponent, bool strict_plus);

/// Dispatches on mode and kind. Abelian checks accept integral exponents
/// without '+' only.
AvoidanceReport check_avoidance(const Word& w, Mode mode, Kind kind, const ExponentSpec& exponent);

/// Re-derives a witness from scratch against w^omega: block Parikh vectors
/// for abelian occurrences, letter comparisons for ordinary ones.
bool witness_holds(const Word& w, const PowerOccurrence& occ);

/// Whether an occurrence of the given exponent breaks the threshold.
inline bool exceeds(const Rational& found, const Rational& threshold, bool strict_plus) {
  return strict_plus ? found > threshold : found >= threshold;
}

}  // namespace abelcyc
