#include "abelcyc/morphism.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "abelcyc/error.hpp"

namespace abelcyc {

Morphism::Morphism(std::vector<Word> images, std::string name)
    : images_(std::move(images)), name_(std::move(name)) {
  if (images_.empty()) throw Error(ErrorCode::alphabet_mismatch, "morphism has no letters");
  codomain_size_ = 1;
  for (const Word& img : images_) {
    if (img.empty()) throw Error(ErrorCode::invalid_length, "morphism images must be nonempty");
    codomain_size_ = std::max(codomain_size_, img.alphabet_size());
  }
  for (Word& img : images_) img = img.widened(codomain_size_);
}

Morphism Morphism::parse(std::string_view text, std::string name) {
  std::map<Symbol, std::string> rules;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '%') continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw Error(ErrorCode::parse, "missing '->' in: " + line);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string lhs = trim(line.substr(0, arrow));
    std::string rhs = trim(line.substr(arrow + 2));
    if (lhs.size() != 1 || !char_to_symbol(lhs[0])) {
      throw Error(ErrorCode::parse, "rule must start with a single letter: " + line);
    }
    if (!rules.emplace(*char_to_symbol(lhs[0]), rhs).second) {
      throw Error(ErrorCode::parse, "duplicate rule for letter " + lhs);
    }
  }
  if (rules.empty()) throw Error(ErrorCode::parse, "no rules");
  const auto k = static_cast<unsigned>(rules.size());
  if (rules.rbegin()->first + 1u != k) {
    throw Error(ErrorCode::parse, "rules must cover letters 0..k-1");
  }
  unsigned codomain = k;
  for (auto& [a, img] : rules) {
    for (char c : img) {
      auto s = char_to_symbol(c);
      if (!s) throw Error(ErrorCode::parse, std::string("invalid letter '") + c + "'");
      codomain = std::max<unsigned>(codomain, *s + 1u);
    }
  }
  std::vector<Word> images;
  for (auto& [a, img] : rules) images.push_back(Word::parse(img, codomain));
  return Morphism(std::move(images), std::move(name));
}

Morphism Morphism::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

bool Morphism::prolongable_on(Symbol a) const {
  if (a >= domain_size() || codomain_size_ > domain_size()) return false;
  const Word& img = images_[a];
  // Non-erasing, so growth is guaranteed once the image is longer than a.
  return img[0] == a && img.size() >= 2;
}

Word Morphism::apply(const Word& w) const {
  if (w.alphabet_size() > domain_size()) {
    // Tolerate a wider declared alphabet as long as the letters fit.
    for (Symbol s : w.symbols()) {
      if (s >= domain_size()) {
        throw Error(ErrorCode::alphabet_mismatch, "letter outside the morphism's domain");
      }
    }
  }
  std::vector<Symbol> out;
  std::size_t total = 0;
  for (Symbol s : w.symbols()) total += images_[s].size();
  out.reserve(total);
  for (Symbol s : w.symbols()) {
    auto img = images_[s].symbols();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out), codomain_size_);
}

Word apply_morphism(const Morphism& m, const Word& w) { return m.apply(w); }

Word iterate(const Morphism& m, const Word& seed, unsigned times) {
  Word x = seed;
  for (unsigned j = 0; j < times; ++j) x = m.apply(x);
  return x;
}

Word fixed_point_prefix(const Morphism& m, const Word& seed, std::size_t min_length) {
  if (seed.empty() || !m.prolongable_on(seed[0])) {
    throw Error(ErrorCode::prolongability, "morphism is not prolongable on the seed");
  }
  const Word image = m.apply(seed);
  if (image.size() < seed.size() ||
      !std::equal(seed.symbols().begin(), seed.symbols().end(), image.symbols().begin())) {
    throw Error(ErrorCode::prolongability, "seed is not a prefix of its image");
  }
  Word x = seed.widened(std::max(seed.alphabet_size(), m.codomain_size()));
  while (x.size() < std::max<std::size_t>(min_length, 1)) x = m.apply(x);
  return x;
}

namespace {

// Keranen's abelian square-free morphism: phi(i) = pi^i(phi(0)) with the
// cyclic letter shift pi.
constexpr std::string_view keranen_phi0 =
    "0120232123203231301020103101213121021232021"
    "013010203212320231210212320232132303132120";
static_assert(keranen_phi0.size() == 85);

Morphism make(std::initializer_list<std::string_view> images, unsigned k, std::string name) {
  std::vector<Word> out;
  for (auto img : images) out.push_back(Word::parse(img, k));
  return Morphism(std::move(out), std::move(name));
}

Morphism make_keranen() {
  std::vector<Word> images;
  Word base = Word::parse(keranen_phi0, 4);
  if (base.size() != 85) throw Error(ErrorCode::catalog, "phi(0) transcription has wrong length");
  for (unsigned shift = 0; shift < 4; ++shift) {
    std::vector<Symbol> img(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      img[i] = static_cast<Symbol>((base[i] + shift) % 4);
    }
    images.emplace_back(std::move(img), 4);
  }
  return Morphism(std::move(images), "keranen");
}

}  // namespace

std::vector<std::string> builtin_morphism_names() {
  return {"sigma3", "sigma4", "keranen", "thue_morse", "justin", "complement"};
}

Morphism builtin_morphism(std::string_view name) {
  if (name == "sigma3") return make({"0001", "101"}, 2, "sigma3");
  if (name == "sigma4") return make({"0012", "112", "022"}, 3, "sigma4");
  if (name == "keranen") return make_keranen();
  if (name == "thue_morse") return make({"01", "10"}, 2, "thue_morse");
  if (name == "justin") return make({"00001", "01111"}, 2, "justin");
  if (name == "complement") return make({"1", "0"}, 2, "complement");
  throw Error(ErrorCode::catalog, "unknown morphism '" + std::string(name) + "'");
}

std::set<Word> factors_of_length(const Word& text, std::size_t length) {
  std::set<Word> out;
  if (length == 0 || length > text.size()) return out;
  for (std::size_t i = 0; i + length <= text.size(); ++i) out.insert(text.substr(i, length));
  return out;
}

std::set<Word> language_factors(const Morphism& m, std::size_t max_length) {
  if (m.codomain_size() > m.domain_size()) {
    throw Error(ErrorCode::alphabet_mismatch, "language needs an endomorphism");
  }
  std::set<Word> result;
  if (max_length == 0) return result;
  const unsigned k = m.domain_size();
  // Windows of length max_length + 2 are tracked; shorter factors are
  // recovered from them afterwards.
  const std::size_t window = max_length + 2;

  auto key_of = [](const Word& w, std::size_t pos, std::size_t len) {
    std::string key(len, '\0');
    for (std::size_t i = 0; i < len; ++i) key[i] = static_cast<char>(w[pos + i]);
    return key;
  };

  // A window of sigma(x) meets the images of at most `reach` consecutive
  // letters of x, so images of length-`reach` factors generate every window.
  std::size_t min_image = window;
  for (const Word& img : m.images()) min_image = std::min(min_image, img.size());
  const std::size_t reach = std::min(window, (window - 2) / min_image + 2);

  std::unordered_set<std::string> long_factors;
  std::unordered_set<std::string> preimages;
  std::vector<std::string> worklist;
  std::vector<Word> short_iterates;
  auto add_preimages = [&](const Word& text) {
    const std::size_t len = std::min(reach, text.size());
    for (std::size_t i = 0; i + len <= text.size(); ++i) {
      auto key = key_of(text, i, len);
      if (preimages.insert(key).second) worklist.push_back(std::move(key));
    }
  };
  auto add_windows = [&](const Word& text) {
    for (std::size_t i = 0; i + window <= text.size(); ++i) {
      auto key = key_of(text, i, window);
      if (long_factors.insert(key).second) add_preimages(text.substr(i, window));
    }
  };

  // Iterates shorter than a window are kept whole and seed the preimages.
  for (unsigned a = 0; a < k; ++a) {
    std::set<Word> seen;
    Word x(std::vector<Symbol>{static_cast<Symbol>(a)}, k);
    while (x.size() < window) {
      if (!seen.insert(x).second) break;
      short_iterates.push_back(x);
      add_preimages(x);
      x = m.apply(x);
    }
  }

  while (!worklist.empty()) {
    std::string key = std::move(worklist.back());
    worklist.pop_back();
    std::vector<Symbol> sym(key.begin(), key.end());
    add_windows(m.apply(Word(std::move(sym), k)));
  }

  std::unordered_set<std::string> level = long_factors;
  for (std::size_t len = window; len-- > 1;) {
    std::unordered_set<std::string> next;
    for (const auto& f : level) {
      next.insert(f.substr(0, len));
      next.insert(f.substr(f.size() - len));
    }
    for (const Word& w : short_iterates) {
      for (std::size_t i = 0; i + len <= w.size(); ++i) next.insert(key_of(w, i, len));
    }
    level = std::move(next);
    if (len <= max_length) {
      for (const auto& f : level) {
        result.emplace(std::vector<Symbol>(f.begin(), f.end()), k);
      }
    }
  }
  return result;
}

}  // namespace abelcyc
