#include <doctest.h>

#include "abelcyc/avoidance.hpp"
#include "abelcyc/constructions.hpp"
#include "abelcyc/error.hpp"
#include "abelcyc/morphism.hpp"
#include "oracle.hpp"

using namespace abelcyc;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::io;
}

}  // namespace

TEST_CASE("binary constructions, small cases") {
  CHECK(build_binary_avoider(1, 0).str() == "0");
  CHECK(build_binary_avoider(1, 1).str() == "1");
  CHECK(build_binary_avoider(3, 0).str() == "100");
  CHECK(build_binary_avoider(4).str() == "1000");
  CHECK(build_binary_avoider(2).str() == "10");
  CHECK(code_of([] { build_binary_avoider(0); }) == ErrorCode::invalid_length);
}

TEST_CASE("binary constructions follow the f/g1/g2 shape") {
  const Word fixed = fixed_point_prefix(builtin_morphism("sigma3"), Word::parse("0"), 200);
  for (std::size_t n = 1; n <= 200; ++n) {
    for (Symbol d : {Symbol{0}, Symbol{1}}) {
      const Word out = build_binary_avoider(n, d);
      REQUIRE(out.size() == n);
      const std::size_t h = n / 2;
      const Word w = fixed.substr(0, h);
      // Right half is the fixed-point prefix; left half is its complement
      // reversal (with the last letter forced to 0 when n = 0 mod 4).
      CHECK(out.substr(n - h, h) == w);
      Word left = complement_reverse(w);
      if (n % 4 == 0) {
        left = left.substr(0, h - 1);
        left.append(Symbol{0});
      }
      CHECK(out.substr(0, h) == left);
      if (n % 2 == 1) CHECK(out[h] == d);
      const ConstructionRecipe r = construction_recipe(2, n);
      CHECK(r.target_exponent == 8);
      CHECK(r.method == (n % 2 ? ConstructionMethod::f_odd
                               : n % 4 == 2 ? ConstructionMethod::g1_even
                                            : ConstructionMethod::g2_even));
    }
  }
}

TEST_CASE("binary constructions avoid abelian 8-powers, checked by the oracle for n <= 60") {
  for (std::size_t n = 1; n <= 60; ++n) {
    for (Symbol d : {Symbol{0}, Symbol{1}}) {
      CHECK(oracle::cyclic_abelian_min_period(build_binary_avoider(n, d), 8) == 0);
    }
  }
}

TEST_CASE("marked constructions") {
  CHECK(build_marked_avoider(3, 1).str() == "0");
  CHECK(build_marked_avoider(3, 5) == Word::parse("0001#", 3));
  CHECK(build_marked_avoider(3, 5).str() == "0001#");
  CHECK(build_marked_avoider(4, 4) == Word::parse("001#", 4));
  CHECK(build_marked_avoider(5, 3).str() == "01#");
  CHECK(marked_exponent(3) == 4);
  CHECK(marked_exponent(4) == 3);
  CHECK(marked_exponent(5) == 2);
  CHECK(code_of([] { build_marked_avoider(6, 3); }) == ErrorCode::unsupported_alphabet);
  CHECK(code_of([] { build_marked_avoider(2, 3); }) == ErrorCode::unsupported_alphabet);
  for (unsigned k : {3u, 4u, 5u}) {
    for (std::size_t n = 1; n <= 40; ++n) {
      const Word w = build_marked_avoider(k, n);
      REQUIRE(w.size() == n);
      CHECK(oracle::cyclic_abelian_min_period(w, marked_exponent(k)) == 0);
    }
  }
}

TEST_CASE("arbitrarily long witnesses") {
  CHECK(a_infinity_witness(2, 4).str() == "0001");
  CHECK(a_infinity_witness(3, 4).str() == "0012");
  CHECK(a_infinity_witness(4, 2).str() == "01");
  CHECK(a_infinity_exponent(2) == 4);
  CHECK(a_infinity_exponent(3) == 3);
  CHECK(a_infinity_exponent(4) == 2);
  CHECK(code_of([] { a_infinity_witness(5, 3); }) == ErrorCode::unsupported_alphabet);
  for (unsigned k : {2u, 3u, 4u}) {
    for (std::size_t len : {1u, 10u, 100u}) {
      const Word w = a_infinity_witness(k, len);
      CHECK(w.size() >= len);
      CHECK(cyclic_abelian_avoids(w, a_infinity_exponent(k)).verdict);
    }
  }
}

TEST_CASE("sigma4 and phi images preserve cyclic avoidance on small avoiders") {
  const Morphism s4 = builtin_morphism("sigma4");
  for (std::size_t n = 1; n <= 7; ++n) {
    oracle::for_each_word(3, n, [&](const Word& w) {
      if (cyclic_abelian_avoids(w, 3).verdict && !cyclic_abelian_avoids(s4.apply(w), 3).verdict) {
        FAIL_CHECK(w.str());
      }
    });
  }
  // For squares the image of a single letter may fail: phi(0) starts and
  // ends with 0.
  const Morphism phi = builtin_morphism("keranen");
  CHECK(cyclic_abelian_avoids(Word::parse("0", 4), 2).verdict);
  CHECK_FALSE(cyclic_abelian_avoids(phi.image(0), 2).verdict);
  for (std::size_t n = 2; n <= 5; ++n) {
    oracle::for_each_word(4, n, [&](const Word& w) {
      if (cyclic_abelian_avoids(w, 2).verdict && !cyclic_abelian_avoids(phi.apply(w), 2).verdict) {
        FAIL_CHECK(w.str());
      }
    });
  }
}
