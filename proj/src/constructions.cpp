#include "abelcyc/constructions.hpp"

#include "abelcyc/error.hpp"
#include "abelcyc/morphism.hpp"

namespace abelcyc {

const char* to_string(ConstructionMethod method) {
  switch (method) {
    case ConstructionMethod::f_odd: return "f_odd";
    case ConstructionMethod::g1_even: return "g1_even";
    case ConstructionMethod::g2_even: return "g2_even";
    case ConstructionMethod::marker: return "marker";
    case ConstructionMethod::morphic_witness: return "morphic_witness";
  }
  return "?";
}

ConstructionRecipe construction_recipe(unsigned alphabet_size, std::size_t length) {
  if (length < 1) throw Error(ErrorCode::invalid_length, "length must be positive");
  ConstructionRecipe r;
  r.alphabet_size = alphabet_size;
  r.length = length;
  if (alphabet_size == 2) {
    r.target_exponent = 8;
    if (length % 2 == 1) {
      r.method = ConstructionMethod::f_odd;
    } else {
      r.method = length % 4 == 2 ? ConstructionMethod::g1_even : ConstructionMethod::g2_even;
    }
    return r;
  }
  r.target_exponent = marked_exponent(alphabet_size);
  r.method = ConstructionMethod::marker;
  return r;
}

Word build_binary_avoider(std::size_t n, Symbol diamond) {
  if (n < 1) throw Error(ErrorCode::invalid_length, "length must be positive");
  if (diamond > 1) throw Error(ErrorCode::alphabet_mismatch, "diamond must be 0 or 1");
  const std::size_t half = n / 2;
  Word w(2);
  if (half > 0) {
    w = fixed_point_prefix(builtin_morphism("sigma3"), Word::parse("0"), half).substr(0, half);
  }
  Word wbar = complement_reverse(w);
  switch (construction_recipe(2, n).method) {
    case ConstructionMethod::f_odd:
      return wbar.append(diamond).append(w);
    case ConstructionMethod::g1_even:
      return wbar.append(w);
    default: {
      std::vector<Symbol> bullet(wbar.symbols().begin(), wbar.symbols().end());
      bullet.back() = 0;
      return Word(std::move(bullet), 2).append(w);
    }
  }
}

unsigned marked_exponent(unsigned alphabet_size) {
  switch (alphabet_size) {
    case 3: return 4;
    case 4: return 3;
    case 5: return 2;
    default:
      throw Error(ErrorCode::unsupported_alphabet,
                  "marker construction supports 3, 4 or 5 letters");
  }
}

Word build_marked_avoider(unsigned alphabet_size, std::size_t n) {
  marked_exponent(alphabet_size);
  if (n < 1) throw Error(ErrorCode::invalid_length, "length must be positive");
  if (n == 1) return Word(std::vector<Symbol>{0}, alphabet_size);
  const char* base = alphabet_size == 3 ? "sigma3" : alphabet_size == 4 ? "sigma4" : "keranen";
  const Word prefix =
      fixed_point_prefix(builtin_morphism(base), Word::parse("0"), n - 1).substr(0, n - 1);
  std::vector<Symbol> out(prefix.symbols().begin(), prefix.symbols().end());
  out.push_back(static_cast<Symbol>(alphabet_size - 1));
  return Word(std::move(out), alphabet_size, true);
}

unsigned a_infinity_exponent(unsigned alphabet_size) {
  switch (alphabet_size) {
    case 2: return 4;
    case 3: return 3;
    case 4: return 2;
    default:
      throw Error(ErrorCode::unsupported_alphabet,
                  "arbitrarily long witnesses exist for 2, 3 or 4 letters");
  }
}

Word a_infinity_witness(unsigned alphabet_size, std::size_t min_length) {
  a_infinity_exponent(alphabet_size);
  if (min_length < 1) throw Error(ErrorCode::invalid_length, "length must be positive");
  switch (alphabet_size) {
    case 2: return fixed_point_prefix(builtin_morphism("sigma3"), Word::parse("0"), min_length);
    case 3: return fixed_point_prefix(builtin_morphism("sigma4"), Word::parse("0", 3), min_length);
    default:
      return fixed_point_prefix(builtin_morphism("keranen"), Word::parse("01", 4), min_length);
  }
}

}  // namespace abelcyc
