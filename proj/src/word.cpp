#include "abelcyc/word.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "abelcyc/error.hpp"

namespace abelcyc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::alphabet_mismatch: return "alphabet-mismatch";
    case ErrorCode::index_out_of_range: return "index";
    case ErrorCode::empty_input: return "empty-input";
    case ErrorCode::invalid_exponent: return "invalid-exponent";
    case ErrorCode::unsupported_feature: return "unsupported-feature";
    case ErrorCode::prolongability: return "prolongability";
    case ErrorCode::catalog: return "catalog";
    case ErrorCode::invalid_length: return "invalid-length";
    case ErrorCode::unsupported_alphabet: return "unsupported-alphabet";
    case ErrorCode::invalid_task: return "invalid-task";
    case ErrorCode::search_exhausted: return "search-exhausted";
    case ErrorCode::parse: return "parse";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

char symbol_to_char(Symbol s) {
  if (s < 10) return static_cast<char>('0' + s);
  if (s < 36) return static_cast<char>('a' + (s - 10));
  return '?';
}

std::optional<Symbol> char_to_symbol(char c) {
  if (c >= '0' && c <= '9') return static_cast<Symbol>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<Symbol>(10 + (c - 'a'));
  return std::nullopt;
}

Word::Word(unsigned alphabet_size) : alphabet_size_(alphabet_size) {
  if (alphabet_size == 0 || alphabet_size > max_alphabet_size) {
    throw Error(ErrorCode::alphabet_mismatch, "alphabet size out of range");
  }
}

Word::Word(std::vector<Symbol> symbols, unsigned alphabet_size, bool marker)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size), marker_(marker) {
  if (alphabet_size == 0 || alphabet_size > max_alphabet_size) {
    throw Error(ErrorCode::alphabet_mismatch, "alphabet size out of range");
  }
  for (Symbol s : symbols_) {
    if (s >= alphabet_size_) {
      throw Error(ErrorCode::alphabet_mismatch,
                  "letter " + std::to_string(s) + " outside alphabet of size " +
                      std::to_string(alphabet_size_));
    }
  }
}

Word Word::parse(std::string_view text, std::optional<unsigned> alphabet_size) {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  std::vector<std::size_t> marker_positions;
  unsigned largest = 0;
  for (char c : text) {
    if (c == '#') {
      marker_positions.push_back(symbols.size());
      symbols.push_back(0);
      continue;
    }
    auto s = char_to_symbol(c);
    if (!s) {
      throw Error(ErrorCode::parse, std::string("invalid letter '") + c + "'");
    }
    largest = std::max<unsigned>(largest, *s + 1u);
    symbols.push_back(*s);
  }
  bool marker = !marker_positions.empty();
  unsigned k;
  if (alphabet_size) {
    k = *alphabet_size;
    if (marker && largest >= k) {
      throw Error(ErrorCode::alphabet_mismatch, "marker collides with a letter");
    }
  } else {
    k = std::max(2u, largest) + (marker ? 1u : 0u);
  }
  for (std::size_t p : marker_positions) symbols[p] = static_cast<Symbol>(k - 1);
  return Word(std::move(symbols), k, marker);
}

std::string Word::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) {
    out.push_back(marker_ && s + 1u == alphabet_size_ ? '#' : symbol_to_char(s));
  }
  return out;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > size()) throw Error(ErrorCode::index_out_of_range, "substr start past end");
  len = std::min(len, size() - pos);
  Word out = *this;
  out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                      symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

Word& Word::append(Symbol s) {
  if (s >= alphabet_size_) {
    throw Error(ErrorCode::alphabet_mismatch, "appended letter outside alphabet");
  }
  symbols_.push_back(s);
  return *this;
}

Word& Word::append(const Word& other) {
  alphabet_size_ = std::max(alphabet_size_, other.alphabet_size_);
  marker_ = marker_ || other.marker_;
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  return *this;
}

Word Word::power(std::size_t times) const {
  return periodic_extension(size() * times);
}

Word Word::periodic_extension(std::size_t length) const {
  if (empty() && length > 0) {
    throw Error(ErrorCode::empty_input, "cannot extend the empty word periodically");
  }
  Word out = *this;
  out.symbols_.resize(length);
  for (std::size_t i = size(); i < length; ++i) out.symbols_[i] = symbols_[i % size()];
  return out;
}

Word Word::widened(unsigned alphabet_size) const {
  if (alphabet_size < alphabet_size_) {
    throw Error(ErrorCode::alphabet_mismatch, "cannot narrow an alphabet");
  }
  return Word(symbols_, alphabet_size);
}

Word operator+(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

std::vector<Word> read_words(std::string_view text, std::optional<unsigned> alphabet_size) {
  std::vector<Word> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty() && line.front() != '%') out.push_back(Word::parse(line, alphabet_size));
    pos = end + 1;
  }
  return out;
}

std::vector<Word> read_words_file(const std::string& path, std::optional<unsigned> alphabet_size) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return read_words(buf.str(), alphabet_size);
}

std::uint64_t ParikhVector::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

ParikhVector& ParikhVector::operator+=(const ParikhVector& other) {
  if (counts_.size() < other.counts_.size()) counts_.resize(other.counts_.size(), 0);
  for (std::size_t a = 0; a < other.counts_.size(); ++a) counts_[a] += other.counts_[a];
  return *this;
}

ParikhVector operator-(const ParikhVector& a, const ParikhVector& b) {
  ParikhVector out = a;
  for (std::size_t c = 0; c < b.counts_.size(); ++c) out.counts_[c] -= b.counts_[c];
  return out;
}

PrefixCountTable::PrefixCountTable(std::span<const Symbol> text, unsigned alphabet_size)
    : length_(text.size()), k_(alphabet_size), table_((text.size() + 1) * alphabet_size, 0) {
  for (std::size_t i = 0; i < length_; ++i) {
    std::copy_n(&table_[i * k_], k_, &table_[(i + 1) * k_]);
    ++table_[(i + 1) * k_ + text[i]];
  }
}

ParikhVector PrefixCountTable::prefix(std::size_t prefix_len) const {
  ParikhVector out(k_);
  for (unsigned c = 0; c < k_; ++c) out[c] = count(prefix_len, static_cast<Symbol>(c));
  return out;
}

ParikhVector PrefixCountTable::block(std::size_t begin, std::size_t end) const {
  return prefix(end) - prefix(begin);
}

ParikhVector parikh(const Word& w) {
  ParikhVector out(w.alphabet_size());
  for (Symbol s : w.symbols()) ++out[s];
  return out;
}

namespace {
void require_binary(const Word& w, const char* op) {
  if (w.alphabet_size() != 2) {
    throw Error(ErrorCode::alphabet_mismatch, std::string(op) + " needs a binary word");
  }
}
}  // namespace

long long delta(const Word& w) {
  require_binary(w, "delta");
  long long d = 0;
  for (Symbol s : w.symbols()) d += s == 0 ? 1 : -1;
  return d;
}

Word conjugate(const Word& w, std::size_t i) {
  if (i > w.size()) throw Error(ErrorCode::index_out_of_range, "conjugate index past end");
  return w.substr(i, w.size() - i) + w.substr(0, i);
}

Word complement_reverse(const Word& w) {
  require_binary(w, "complement_reverse");
  std::vector<Symbol> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[w.size() - 1 - i] = static_cast<Symbol>(1 - w[i]);
  return Word(std::move(out), 2);
}

bool gcd_criterion(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::empty_input, "gcd criterion needs a nonempty word");
  std::uint64_t g = 0;
  const ParikhVector p = parikh(w);
  for (std::uint64_t c : p.counts()) {
    if (c != 0) g = std::gcd(g, c);
  }
  return g == 1;
}

}  // namespace abelcyc
