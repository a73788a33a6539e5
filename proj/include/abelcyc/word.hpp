#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abelcyc {

using Symbol = std::uint8_t;

// Largest alphabet expressible in the text format: '0'-'9' then 'a'-'z',
// plus one extra slot for the '#' marker.
inline constexpr unsigned max_alphabet_size = 37;

/// A finite word over the alphabet {0, ..., k-1}.
///
/// Letters are dense indices. When `has_marker()` is set, the top letter
/// k-1 is a fresh marker and is printed as '#'. The marker flag is
/// presentation only and does not take part in comparisons.
class Word {
 public:
  Word() = default;
  explicit Word(unsigned alphabet_size);
  Word(std::vector<Symbol> symbols, unsigned alphabet_size, bool marker = false);

  /// Parses the text format. Without an explicit alphabet size the size is
  /// inferred as max(2, largest letter + 1); '#' then maps to one past that.
  /// With an explicit size, '#' maps to alphabet_size - 1.
  static Word parse(std::string_view text,
                    std::optional<unsigned> alphabet_size = std::nullopt);

  std::string str() const;

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  unsigned alphabet_size() const noexcept { return alphabet_size_; }
  bool has_marker() const noexcept { return marker_; }

  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  Word substr(std::size_t pos, std::size_t len) const;
  Word& append(Symbol s);
  Word& append(const Word& other);

  /// w repeated `times` times.
  Word power(std::size_t times) const;
  /// Prefix of w^omega of the given length.
  Word periodic_extension(std::size_t length) const;

  /// The same letters, reinterpreted over a larger alphabet.
  Word widened(unsigned alphabet_size) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_size_ == b.alphabet_size_ && a.symbols_ == b.symbols_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.symbols_ <=> b.symbols_; c != 0) return c;
    return a.alphabet_size_ <=> b.alphabet_size_;
  }

 private:
  std::vector<Symbol> symbols_;
  unsigned alphabet_size_ = 2;
  bool marker_ = false;
};

Word operator+(const Word& a, const Word& b);

char symbol_to_char(Symbol s);
/// Returns the letter index of a text character, or nullopt for '#' and
/// characters outside the alphabet.
std::optional<Symbol> char_to_symbol(char c);

/// Reads the line-oriented word format: one word per line, '%' starts a
/// comment line, blank lines are skipped.
std::vector<Word> read_words(std::string_view text,
                             std::optional<unsigned> alphabet_size = std::nullopt);
std::vector<Word> read_words_file(const std::string& path,
                                  std::optional<unsigned> alphabet_size = std::nullopt);

/// Per-letter occurrence counts.
class ParikhVector {
 public:
  ParikhVector() = default;
  explicit ParikhVector(unsigned alphabet_size) : counts_(alphabet_size, 0) {}
  explicit ParikhVector(std::vector<std::uint64_t> counts)
      : counts_(std::move(counts)) {}

  unsigned alphabet_size() const noexcept {
    return static_cast<unsigned>(counts_.size());
  }
  std::uint64_t operator[](std::size_t a) const { return counts_[a]; }
  std::uint64_t& operator[](std::size_t a) { return counts_[a]; }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::uint64_t total() const;

  ParikhVector& operator+=(const ParikhVector& other);
  friend ParikhVector operator+(ParikhVector a, const ParikhVector& b) {
    return a += b;
  }
  /// Componentwise difference; requires b <= a componentwise.
  friend ParikhVector operator-(const ParikhVector& a, const ParikhVector& b);

  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

/// Cumulative letter counts P[0..L] of a text, so that block [a, b) has
/// Parikh vector P[b] - P[a] and two blocks compare in O(k).
class PrefixCountTable {
 public:
  PrefixCountTable(std::span<const Symbol> text, unsigned alphabet_size);
  explicit PrefixCountTable(const Word& text)
      : PrefixCountTable(text.symbols(), text.alphabet_size()) {}

  std::size_t text_length() const noexcept { return length_; }
  unsigned alphabet_size() const noexcept { return k_; }

  std::uint32_t count(std::size_t prefix_len, Symbol a) const {
    return table_[prefix_len * k_ + a];
  }
  ParikhVector prefix(std::size_t prefix_len) const;
  ParikhVector block(std::size_t begin, std::size_t end) const;

  /// Whether the blocks [a, a+len) and [b, b+len) are abelian equivalent.
  bool equivalent(std::size_t a, std::size_t b, std::size_t len) const {
    const std::uint32_t* pa = &table_[a * k_];
    const std::uint32_t* pae = &table_[(a + len) * k_];
    const std::uint32_t* pb = &table_[b * k_];
    const std::uint32_t* pbe = &table_[(b + len) * k_];
    // The last letter's count is implied by the common block length.
    for (unsigned c = 0; c + 1 < k_; ++c) {
      if (pae[c] - pa[c] != pbe[c] - pb[c]) return false;
    }
    return true;
  }

 private:
  std::size_t length_;
  unsigned k_;
  std::vector<std::uint32_t> table_;
};

ParikhVector parikh(const Word& w);

/// |w|_0 - |w|_1 for binary words.
long long delta(const Word& w);

/// w[i..] w[..i], for 0 <= i <= |w|.
Word conjugate(const Word& w, std::size_t i);

/// Complement every letter of a binary word and read the result backwards.
Word complement_reverse(const Word& w);

/// True iff the positive letter counts of w have gcd 1; a sufficient
/// condition for w to avoid abelian |w|-powers cyclically.
bool gcd_criterion(const Word& w);

}  // namespace abelcyc
