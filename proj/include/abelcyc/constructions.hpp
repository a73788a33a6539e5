#pragma once

#include <cstddef>

#include "abelcyc/word.hpp"

namespace abelcyc {

enum class ConstructionMethod { f_odd, g1_even, g2_even, marker, morphic_witness };

const char* to_string(ConstructionMethod method);

/// Which explicit construction produces a word of length n over k letters,
/// and the abelian exponent it avoids cyclically.
struct ConstructionRecipe {
  unsigned alphabet_size = 2;
  unsigned target_exponent = 8;
  std::size_t length = 0;
  ConstructionMethod method = ConstructionMethod::f_odd;
};

/// k = 2 dispatches on n mod 4 (f, g1, g2); k = 3, 4, 5 use the marker
/// construction with exponents 4, 3, 2.
ConstructionRecipe construction_recipe(unsigned alphabet_size, std::size_t length);

/// Binary word of length n avoiding abelian 8-powers cyclically.
///
/// With w the length-floor(n/2) prefix of the sigma3 fixed point and wbar its
/// complement-reversal:
///   n odd        -> wbar . diamond . w
///   n = 2 mod 4  -> wbar . w
///   n = 0 mod 4  -> wbar' . w, where wbar' has its last letter set to 0
Word build_binary_avoider(std::size_t n, Symbol diamond = 0);

/// Length-n word over k in {3, 4, 5} letters avoiding abelian N(k)-powers
/// cyclically (N(3) = 4, N(4) = 3, N(5) = 2): a prefix of the sigma3, sigma4
/// or Keranen fixed point followed by a fresh marker letter.
Word build_marked_avoider(unsigned alphabet_size, std::size_t n);

/// Exponent the marked construction avoids for a given alphabet size.
unsigned marked_exponent(unsigned alphabet_size);

/// Arbitrarily long cyclic avoiders: sigma3^j(0) (k = 2, exponent 4),
/// sigma4^j(0) (k = 3, exponent 3), phi^j(01) (k = 4, exponent 2), with j
/// minimal for the requested length.
Word a_infinity_witness(unsigned alphabet_size, std::size_t min_length);

/// Exponent avoided by a_infinity_witness for a given alphabet size.
unsigned a_infinity_exponent(unsigned alphabet_size);

}  // namespace abelcyc
