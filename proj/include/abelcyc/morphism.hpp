#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "abelcyc/word.hpp"

namespace abelcyc {

/// A non-erasing morphism given by one image word per domain letter.
class Morphism {
 public:
  Morphism(std::vector<Word> images, std::string name = {});

  /// Parses rules of the form `letter -> image`, one per line; '%' starts a
  /// comment line. The rules must cover letters 0..k-1.
  static Morphism parse(std::string_view text, std::string name = {});
  static Morphism from_file(const std::string& path);

  unsigned domain_size() const noexcept { return static_cast<unsigned>(images_.size()); }
  unsigned codomain_size() const noexcept { return codomain_size_; }
  const Word& image(Symbol a) const { return images_.at(a); }
  const std::vector<Word>& images() const noexcept { return images_; }
  const std::string& name() const noexcept { return name_; }

  /// sigma(a) starts with a and the iterates of a grow without bound.
  bool prolongable_on(Symbol a) const;

  Word apply(const Word& w) const;

 private:
  std::vector<Word> images_;
  unsigned codomain_size_ = 1;
  std::string name_;
};

Word apply_morphism(const Morphism& m, const Word& w);

/// sigma^j(seed) for the least j with length >= min_length. The seed must be
/// a prefix of sigma(seed) starting with a letter sigma is prolongable on, so
/// every result is a prefix of the fixed point.
Word fixed_point_prefix(const Morphism& m, const Word& seed, std::size_t min_length);

/// sigma^j(seed), with no prolongability requirement.
Word iterate(const Morphism& m, const Word& seed, unsigned times);

/// Catalog names: sigma3, sigma4, keranen, thue_morse, justin, complement.
Morphism builtin_morphism(std::string_view name);
std::vector<std::string> builtin_morphism_names();

/// All factors of length <= max_length of the morphism's language (factors
/// of sigma^n(a) over all n >= 0 and letters a). The empty word is omitted.
std::set<Word> language_factors(const Morphism& m, std::size_t max_length);

/// Distinct factors of the given length occurring in `text`.
std::set<Word> factors_of_length(const Word& text, std::size_t length);

}  // namespace abelcyc
