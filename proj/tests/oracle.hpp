#pragma once

// Naive reference implementations, written straight from the definitions
// and sharing no code with the library detectors.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "abelcyc/rational.hpp"
#include "abelcyc/word.hpp"

namespace oracle {

using abelcyc::Rational;
using abelcyc::Symbol;
using abelcyc::Word;

inline std::vector<std::size_t> counts(const std::vector<Symbol>& s, std::size_t from,
                                       std::size_t len, unsigned k) {
  std::vector<std::size_t> c(k, 0);
  for (std::size_t i = from; i < from + len; ++i) ++c[s[i]];
  return c;
}

inline std::vector<Symbol> letters(const Word& w) {
  return {w.symbols().begin(), w.symbols().end()};
}

inline std::vector<Symbol> repeat(const Word& w, std::size_t len) {
  std::vector<Symbol> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = w[i % w.size()];
  return out;
}

/// Does s[start..] begin with N consecutive abelian-equivalent blocks of length m?
inline bool abelian_power_at(const std::vector<Symbol>& s, unsigned k, std::size_t start,
                             std::size_t m, unsigned n_blocks) {
  if (start + m * n_blocks > s.size()) return false;
  const auto first = counts(s, start, m, k);
  for (unsigned b = 1; b < n_blocks; ++b) {
    if (counts(s, start + b * m, m, k) != first) return false;
  }
  return true;
}

/// Smallest period of an abelian N-power in w^omega with period < |w|, or 0.
inline std::size_t cyclic_abelian_min_period(const Word& w, unsigned n_blocks) {
  const std::size_t n = w.size();
  const auto s = repeat(w, n * (n_blocks + 1));
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t start = 0; start < n; ++start) {
      if (abelian_power_at(s, w.alphabet_size(), start, m, n_blocks)) return m;
    }
  }
  return 0;
}

inline bool linear_abelian_free(const std::vector<Symbol>& s, unsigned k, unsigned n_blocks) {
  for (std::size_t m = 1; m * n_blocks <= s.size(); ++m) {
    for (std::size_t start = 0; start + m * n_blocks <= s.size(); ++start) {
      if (abelian_power_at(s, k, start, m, n_blocks)) return false;
    }
  }
  return true;
}

inline std::vector<Symbol> rotation(const Word& w, std::size_t i) {
  std::vector<Symbol> out;
  for (std::size_t j = 0; j < w.size(); ++j) out.push_back(w[(i + j) % w.size()]);
  return out;
}

inline bool circular_abelian_avoids(const Word& w, unsigned n_blocks) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!linear_abelian_free(rotation(w, i), w.alphabet_size(), n_blocks)) return false;
  }
  return true;
}

inline bool breaks(const Rational& found, const Rational& e, bool plus) {
  return plus ? found > e : found >= e;
}

/// Ordinary check on w^omega: for each period p < |w| and start s < |w|,
/// extend the run while w^omega[s+i] == w^omega[s+i+p]. A run of |w| matches
/// repeats forever.
inline bool cyclic_ordinary_avoids(const Word& w, const Rational& e, bool plus) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    for (std::size_t s = 0; s < n; ++s) {
      std::size_t run = 0;
      while (run < n && w[(s + run) % n] == w[(s + run + p) % n]) ++run;
      if (run == n) return false;
      const Rational found(static_cast<std::int64_t>(run + p), static_cast<std::int64_t>(p));
      if (breaks(found, e, plus)) return false;
    }
  }
  return true;
}

/// Every factor u of s, every period p of u: |u|/p must stay under the threshold.
inline bool linear_ordinary_free(const std::vector<Symbol>& s, const Rational& e, bool plus) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t len = 2; i + len <= s.size(); ++len) {
      for (std::size_t p = 1; p < len; ++p) {
        bool periodic = true;
        for (std::size_t j = i; j + p < i + len; ++j) {
          if (s[j] != s[j + p]) {
            periodic = false;
            break;
          }
        }
        if (periodic &&
            breaks(Rational(static_cast<std::int64_t>(len), static_cast<std::int64_t>(p)), e, plus)) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool circular_ordinary_avoids(const Word& w, const Rational& e, bool plus) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!linear_ordinary_free(rotation(w, i), e, plus)) return false;
  }
  return true;
}

/// Calls f on every word of length n over k letters, in lexicographic order.
inline void for_each_word(unsigned k, std::size_t n, const std::function<void(const Word&)>& f) {
  std::vector<Symbol> s(n, 0);
  while (true) {
    f(Word(s, k));
    auto it = s.end();
    while (it != s.begin() && *(it - 1) + 1u == k) *--it = 0;
    if (it == s.begin()) return;
    ++*(it - 1);
  }
}

inline std::size_t count_words(unsigned k, std::size_t n, const std::function<bool(const Word&)>& p) {
  std::size_t c = 0;
  for_each_word(k, n, [&](const Word& w) { c += p(w) ? 1 : 0; });
  return c;
}

/// Thue-Morse letter i: parity of the binary digit sum.
inline Symbol thue_morse(std::size_t i) {
  return static_cast<Symbol>(__builtin_popcountll(i) & 1);
}

}  // namespace oracle
