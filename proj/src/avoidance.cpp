#include "abelcyc/avoidance.hpp"

#include <algorithm>
#include <vector>

#include "abelcyc/error.hpp"

namespace abelcyc {

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::cyclic: return "cyclic";
    case Mode::circular: return "circular";
    case Mode::linear: return "linear";
  }
  return "?";
}

const char* to_string(Kind kind) {
  return kind == Kind::abelian ? "abelian" : "ordinary";
}

Mode parse_mode(std::string_view text) {
  if (text == "cyclic") return Mode::cyclic;
  if (text == "circular") return Mode::circular;
  if (text == "linear") return Mode::linear;
  throw Error(ErrorCode::parse, "unknown mode '" + std::string(text) + "'");
}

Kind parse_kind(std::string_view text) {
  if (text == "abelian") return Kind::abelian;
  if (text == "ordinary") return Kind::ordinary;
  throw Error(ErrorCode::parse, "unknown kind '" + std::string(text) + "'");
}

namespace {

void require_abelian_exponent(unsigned exponent) {
  if (exponent < 2) throw Error(ErrorCode::invalid_exponent, "abelian exponent must be at least 2");
}

void require_nonempty(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::empty_input, "word must be nonempty");
}

void require_ordinary_exponent(const Rational& e) {
  if (e <= Rational(1)) throw Error(ErrorCode::invalid_exponent, "exponent must exceed 1");
}

AvoidanceReport make_report(const Word& w, Mode mode, Kind kind, Rational threshold,
                            bool strict_plus) {
  AvoidanceReport r;
  r.word = w;
  r.mode = mode;
  r.kind = kind;
  r.threshold = threshold;
  r.strict_plus = strict_plus;
  return r;
}

void set_witness(AvoidanceReport& r, PowerOccurrence occ) {
  r.verdict = false;
  r.witness = occ;
}

// Scans starts 0..n-1 for N consecutive abelian-equivalent blocks of length
// `period` over w^omega, using a count table on w·w and reducing block
// positions mod n. Returns the least start, if any.
std::optional<std::size_t> cyclic_abelian_start(const Word& w, const PrefixCountTable& doubled,
                                                std::size_t period, unsigned exponent,
                                                std::vector<char>& eq) {
  const std::size_t n = w.size();
  eq.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    eq[i] = doubled.equivalent(i, (i + period) % n, period);
  }
  const std::size_t step = period % n;
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t pos = s;
    unsigned j = 0;
    for (; j + 1 < exponent; ++j) {
      if (!eq[pos]) break;
      pos += step;
      if (pos >= n) pos -= n;
    }
    if (j + 1 == exponent) return s;
  }
  return std::nullopt;
}

// Run lengths r[s] of consecutive positions i >= s (cyclically) with
// w[i] == w[i + period mod n], each capped at `cap`.
std::vector<std::size_t> cyclic_runs(const Word& w, std::size_t period, std::size_t cap) {
  const std::size_t n = w.size();
  std::vector<char> match(n);
  std::size_t first_mismatch = n;
  for (std::size_t i = 0; i < n; ++i) {
    match[i] = w[i] == w[(i + period) % n];
    if (!match[i] && first_mismatch == n) first_mismatch = i;
  }
  std::vector<std::size_t> runs(n, cap);
  if (first_mismatch == n) return runs;
  std::size_t run = 0;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t i = (first_mismatch + n - t) % n;
    run = match[i] ? std::min(run + 1, cap) : 0;
    runs[i] = run;
  }
  return runs;
}

Rational run_exponent(std::size_t run, std::size_t period) {
  return Rational(static_cast<std::int64_t>(run + period), static_cast<std::int64_t>(period));
}

std::size_t scan_ceiling(const Rational& e) { return static_cast<std::size_t>(e.ceil()) + 1; }

}  // namespace

std::optional<PowerOccurrence> find_abelian_power(const Word& text, unsigned exponent,
                                                  IndexRange periods, IndexRange starts) {
  require_abelian_exponent(exponent);
  const std::size_t len = text.size();
  const std::size_t plo = std::max<std::size_t>(1, periods.lo);
  const std::size_t phi = std::min(periods.hi, len / exponent);
  if (plo > phi || starts.lo > starts.hi) return std::nullopt;
  PrefixCountTable table(text);
  for (std::size_t s = starts.lo; s <= starts.hi && s < len; ++s) {
    for (std::size_t m = plo; m <= phi; ++m) {
      if (s + exponent * m > len) break;
      unsigned j = 1;
      while (j < exponent && table.equivalent(s, s + j * m, m)) ++j;
      if (j == exponent) return PowerOccurrence{Kind::abelian, s, m, Rational(exponent)};
    }
  }
  return std::nullopt;
}

AvoidanceReport linear_abelian_avoids(const Word& w, unsigned exponent) {
  require_abelian_exponent(exponent);
  AvoidanceReport r = make_report(w, Mode::linear, Kind::abelian, Rational(exponent), false);
  const std::size_t n = w.size();
  PrefixCountTable table(w);
  for (std::size_t m = 1; m <= n / exponent; ++m) {
    for (std::size_t s = 0; s + exponent * m <= n; ++s) {
      unsigned j = 1;
      while (j < exponent && table.equivalent(s, s + j * m, m)) ++j;
      if (j == exponent) {
        set_witness(r, {Kind::abelian, s, m, Rational(exponent)});
        return r;
      }
    }
  }
  return r;
}

bool is_abelian_free(const Word& w, unsigned exponent) {
  return linear_abelian_avoids(w, exponent).verdict;
}

AvoidanceReport cyclic_abelian_avoids(const Word& w, unsigned exponent, PeriodScan scan) {
  require_nonempty(w);
  require_abelian_exponent(exponent);
  AvoidanceReport r = make_report(w, Mode::cyclic, Kind::abelian, Rational(exponent), false);
  const std::size_t n = w.size();
  if (scan == PeriodScan::full) {
    const Word window = w.power(exponent + 1);
    for (std::size_t m = 1; m < n; ++m) {
      if (auto occ = find_abelian_power(window, exponent, {m, m}, {0, n - 1})) {
        set_witness(r, *occ);
        return r;
      }
    }
    return r;
  }
  const PrefixCountTable doubled(w.power(2));
  std::vector<char> eq;
  for (std::size_t m = 1; m <= n / 2; ++m) {
    if (auto s = cyclic_abelian_start(w, doubled, m, exponent, eq)) {
      set_witness(r, {Kind::abelian, *s, m, Rational(exponent)});
      return r;
    }
  }
  return r;
}

AvoidanceReport circular_abelian_avoids(const Word& w, unsigned exponent) {
  require_nonempty(w);
  require_abelian_exponent(exponent);
  AvoidanceReport r = make_report(w, Mode::circular, Kind::abelian, Rational(exponent), false);
  const std::size_t n = w.size();
  const PrefixCountTable doubled(w.power(2));
  for (std::size_t m = 1; m <= n / exponent; ++m) {
    for (std::size_t s = 0; s < n; ++s) {
      unsigned j = 1;
      while (j < exponent && doubled.equivalent(s, s + j * m, m)) ++j;
      if (j == exponent) {
        set_witness(r, {Kind::abelian, s, m, Rational(exponent)});
        return r;
      }
    }
  }
  return r;
}

std::optional<unsigned> min_avoided_abelian_exponent(const Word& w) {
  require_nonempty(w);
  const unsigned top = std::max<unsigned>(2, static_cast<unsigned>(w.size()));
  for (unsigned e = 2; e <= top; ++e) {
    if (cyclic_abelian_avoids(w, e).verdict) return e;
  }
  return std::nullopt;
}

AvoidanceReport cyclic_ordinary_avoids(const Word& w, Rational exponent, bool strict_plus,
                                       PeriodScan scan) {
  require_ordinary_exponent(exponent);
  require_nonempty(w);
  AvoidanceReport r = make_report(w, Mode::cyclic, Kind::ordinary, exponent, strict_plus);
  const std::size_t n = w.size();
  const std::size_t ceiling = scan_ceiling(exponent);

  if (scan == PeriodScan::full) {
    const Word window = w.periodic_extension(n * (ceiling + 1));
    for (std::size_t p = 1; p < n; ++p) {
      const std::size_t cap = (ceiling - 1) * p;
      for (std::size_t s = 0; s < n; ++s) {
        std::size_t run = 0;
        while (run < cap && window[s + run] == window[s + run + p]) ++run;
        Rational e = run_exponent(run, p);
        if (exceeds(e, exponent, strict_plus)) {
          set_witness(r, {Kind::ordinary, s, p, e});
          return r;
        }
      }
    }
    return r;
  }

  for (std::size_t p = 1; p <= n / 2; ++p) {
    const auto runs = cyclic_runs(w, p, (ceiling - 1) * p);
    for (std::size_t s = 0; s < n; ++s) {
      Rational e = run_exponent(runs[s], p);
      if (exceeds(e, exponent, strict_plus)) {
        set_witness(r, {Kind::ordinary, s, p, e});
        return r;
      }
    }
  }
  return r;
}

AvoidanceReport circular_ordinary_avoids(const Word& w, Rational exponent, bool strict_plus) {
  require_ordinary_exponent(exponent);
  require_nonempty(w);
  AvoidanceReport r = make_report(w, Mode::circular, Kind::ordinary, exponent, strict_plus);
  const std::size_t n = w.size();
  const std::size_t ceiling = scan_ceiling(exponent);
  for (std::size_t p = 1; p < n; ++p) {
    // A factor of some conjugate has length at most n.
    const auto runs = cyclic_runs(w, p, std::min((ceiling - 1) * p, n - p));
    for (std::size_t s = 0; s < n; ++s) {
      Rational e = run_exponent(runs[s], p);
      if (exceeds(e, exponent, strict_plus)) {
        set_witness(r, {Kind::ordinary, s, p, e});
        return r;
      }
    }
  }
  return r;
}

AvoidanceReport linear_ordinary_avoids(const Word& w, Rational exponent, bool strict_plus) {
  require_ordinary_exponent(exponent);
  AvoidanceReport r = make_report(w, Mode::linear, Kind::ordinary, exponent, strict_plus);
  const std::size_t n = w.size();
  const std::size_t ceiling = scan_ceiling(exponent);
  for (std::size_t p = 1; p < n; ++p) {
    const std::size_t cap = (ceiling - 1) * p;
    // run[s] counts matches w[i] == w[i+p] for i = s, s+1, ... inside w.
    std::vector<std::size_t> run(n - p + 1, 0);
    for (std::size_t i = n - p; i-- > 0;) {
      run[i] = w[i] == w[i + p] ? std::min(run[i + 1] + 1, cap) : 0;
    }
    for (std::size_t s = 0; s + p < n; ++s) {
      Rational e = run_exponent(run[s], p);
      if (exceeds(e, exponent, strict_plus)) {
        set_witness(r, {Kind::ordinary, s, p, e});
        return r;
      }
    }
  }
  return r;
}

AvoidanceReport check_avoidance(const Word& w, Mode mode, Kind kind, const ExponentSpec& exponent) {
  if (kind == Kind::abelian) {
    if (!exponent.value.is_integer() || exponent.strict_plus) {
      throw Error(ErrorCode::unsupported_feature, "abelian exponents must be integers");
    }
    if (exponent.value < Rational(2)) {
      throw Error(ErrorCode::invalid_exponent, "abelian exponent must be at least 2");
    }
    const auto e = static_cast<unsigned>(exponent.value.numerator());
    switch (mode) {
      case Mode::cyclic: return cyclic_abelian_avoids(w, e);
      case Mode::circular: return circular_abelian_avoids(w, e);
      case Mode::linear: return linear_abelian_avoids(w, e);
    }
  }
  switch (mode) {
    case Mode::cyclic: return cyclic_ordinary_avoids(w, exponent.value, exponent.strict_plus);
    case Mode::circular: return circular_ordinary_avoids(w, exponent.value, exponent.strict_plus);
    case Mode::linear: return linear_ordinary_avoids(w, exponent.value, exponent.strict_plus);
  }
  return {};
}

bool witness_holds(const Word& w, const PowerOccurrence& occ) {
  if (w.empty() || occ.period == 0) return false;
  const std::size_t p = occ.period;
  if (occ.kind == Kind::abelian) {
    if (!occ.exponent.is_integer() || occ.exponent < Rational(2)) return false;
    const auto blocks = static_cast<std::size_t>(occ.exponent.numerator());
    const Word text = w.periodic_extension(occ.start + blocks * p);
    const ParikhVector first = parikh(text.substr(occ.start, p));
    for (std::size_t j = 1; j < blocks; ++j) {
      if (parikh(text.substr(occ.start + j * p, p)) != first) return false;
    }
    return true;
  }
  // (exponent - 1) * period positions must repeat at distance `period`.
  const Rational excess(occ.exponent.numerator() - occ.exponent.denominator(),
                        occ.exponent.denominator());
  if (excess < Rational(0)) return false;
  const auto run = static_cast<std::size_t>(
      Rational(excess.numerator() * static_cast<std::int64_t>(p), excess.denominator()).ceil());
  const Word text = w.periodic_extension(occ.start + run + p);
  for (std::size_t i = 0; i < run; ++i) {
    if (text[occ.start + i] != text[occ.start + i + p]) return false;
  }
  return true;
}

}  // namespace abelcyc
