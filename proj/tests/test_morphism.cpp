#include <doctest.h>

#include "abelcyc/avoidance.hpp"
#include "abelcyc/error.hpp"
#include "abelcyc/morphism.hpp"
#include "oracle.hpp"

using namespace abelcyc;

namespace {

Word W(const char* s) { return Word::parse(s); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::io;
}

// Factors of length <= max_len of a long fixed-point prefix (or of a long
// iterate for every letter when there is no fixed point on 0).
std::set<Word> prefix_factors(const Morphism& m, std::size_t max_len) {
  std::set<Word> out;
  const std::size_t want = std::max<std::size_t>(50 * max_len, 2000);
  for (Symbol a = 0; a < m.domain_size(); ++a) {
    Word it = Word({a}, m.domain_size());
    while (it.size() < want) it = m.apply(it);
    for (std::size_t len = 1; len <= max_len; ++len) {
      const auto f = factors_of_length(it, len);
      out.insert(f.begin(), f.end());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("catalog images") {
  const Morphism s3 = builtin_morphism("sigma3");
  CHECK(s3.image(0).str() == "0001");
  CHECK(s3.image(1).str() == "101");
  const Morphism s4 = builtin_morphism("sigma4");
  CHECK(s4.apply(Word::parse("012")).str() == "0012112022");
  const Morphism phi = builtin_morphism("keranen");
  for (Symbol a = 0; a < 4; ++a) CHECK(phi.image(a).size() == 85);
  CHECK(phi.image(0).str().substr(0, 16) == "0120232123203231");
  // phi(i) is phi(0) with every letter shifted by i mod 4.
  for (std::size_t i = 0; i < 85; ++i) CHECK(phi.image(1)[i] == (phi.image(0)[i] + 1) % 4);
  const Morphism j = builtin_morphism("justin");
  CHECK(j.image(0).str() == "00001");
  CHECK(j.image(1).str() == "01111");
  CHECK(code_of([] { builtin_morphism("nope"); }) == ErrorCode::catalog);
  CHECK(builtin_morphism_names().size() == 6);
}

TEST_CASE("apply and iterate") {
  const Morphism s3 = builtin_morphism("sigma3");
  CHECK(s3.apply(W("0")).str() == "0001");
  CHECK(s3.apply(W("0001")).str() == "000100010001101");
  CHECK(iterate(s3, W("0"), 2).str() == "000100010001101");
  CHECK(code_of([&] { s3.apply(Word::parse("2")); }) == ErrorCode::alphabet_mismatch);
}

TEST_CASE("fixed point prefixes") {
  CHECK(fixed_point_prefix(builtin_morphism("sigma3"), W("0"), 10).str() == "000100010001101");
  CHECK(fixed_point_prefix(builtin_morphism("thue_morse"), W("0"), 8).str() == "01101001");
  CHECK(fixed_point_prefix(builtin_morphism("keranen"), Word::parse("0", 4), 2) ==
        builtin_morphism("keranen").image(0));
  CHECK(fixed_point_prefix(builtin_morphism("sigma3"), W("1"), 5).str() == "1010001101");
  CHECK(code_of([] { fixed_point_prefix(builtin_morphism("sigma3"), W("01"), 5); }) ==
        ErrorCode::prolongability);
  CHECK(code_of([] { fixed_point_prefix(builtin_morphism("complement"), W("0"), 5); }) ==
        ErrorCode::prolongability);

  const Morphism tm = builtin_morphism("thue_morse");
  const Word long_prefix = fixed_point_prefix(tm, W("0"), 4096);
  for (std::size_t i = 0; i < long_prefix.size(); ++i) {
    REQUIRE(long_prefix[i] == oracle::thue_morse(i));
  }
  for (std::size_t len : {1u, 7u, 100u, 1000u}) {
    const Word p = fixed_point_prefix(tm, W("0"), len);
    CHECK(p.size() >= len);
    CHECK(p == long_prefix.substr(0, p.size()));
  }
}

TEST_CASE("morphism text format") {
  const Morphism m = Morphism::parse("% sigma3 again\n0 -> 0001\n1 -> 101\n");
  CHECK(m.images() == builtin_morphism("sigma3").images());
  CHECK(code_of([] { Morphism::parse("0 -> 01\n2 -> 1\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { Morphism::parse("0 0001\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { Morphism({W("01"), Word(2)}); }) == ErrorCode::invalid_length);
}

TEST_CASE("length and parikh of images are additive") {
  for (const auto& name : builtin_morphism_names()) {
    const Morphism m = builtin_morphism(name);
    const unsigned k = m.domain_size();
    for (std::size_t n = 0; n <= 6; ++n) {
      oracle::for_each_word(k, n, [&](const Word& w) {
        const Word img = m.apply(w);
        std::size_t len = 0;
        ParikhVector p(m.codomain_size());
        for (std::size_t i = 0; i < w.size(); ++i) {
          len += m.image(w[i]).size();
          p += parikh(m.image(w[i]));
        }
        if (img.size() != len || !(parikh(img) == p)) FAIL_CHECK(name << " " << w.str());
      });
    }
  }
}

TEST_CASE("language factor examples") {
  const Morphism s3 = builtin_morphism("sigma3");
  CHECK(language_factors(s3, 1) == std::set<Word>{W("0"), W("1")});
  CHECK(language_factors(s3, 2) ==
        std::set<Word>{W("0"), W("1"), W("00"), W("01"), W("10"), W("11")});
  CHECK_FALSE(language_factors(builtin_morphism("thue_morse"), 3).count(W("000")));
}

TEST_CASE("language closure matches long-prefix factors") {
  for (const char* name : {"sigma3", "sigma4", "thue_morse", "justin", "keranen"}) {
    const Morphism m = builtin_morphism(name);
    for (std::size_t max_len : {1u, 2u, 5u, 13u, 30u, 60u}) {
      const auto closure = language_factors(m, max_len);
      const auto scanned = prefix_factors(m, max_len);
      CHECK_MESSAGE(closure == scanned, name << " max_len=" << max_len);
    }
  }
}

TEST_CASE("empirical freeness of the catalog languages") {
  // Freeness passes to factors, and every shorter factor of these languages
  // extends to one of full length, so the longest factors suffice.
  const auto free_up_to = [](const char* name, std::size_t max_len, unsigned N) {
    const auto factors = language_factors(builtin_morphism(name), max_len);
    std::size_t longest = 0;
    for (const Word& u : factors) {
      if (u.size() < max_len) {
        bool extends = false;
        for (Symbol a = 0; a < u.alphabet_size() && !extends; ++a) {
          extends = factors.count(Word(u).append(a)) > 0;
        }
        if (!extends) return false;
        continue;
      }
      ++longest;
      if (!is_abelian_free(u, N)) return false;
    }
    return longest > 0;
  };
  CHECK(free_up_to("sigma3", 120, 4));
  CHECK(free_up_to("sigma4", 120, 3));
  CHECK(free_up_to("keranen", 200, 2));
}
