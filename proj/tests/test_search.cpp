#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "abelcyc/avoidance.hpp"
#include "abelcyc/error.hpp"
#include "abelcyc/morphism.hpp"
#include "abelcyc/search.hpp"
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

SearchTask task(unsigned k, std::size_t n, Kind kind, const char* e, Mode mode) {
  SearchTask t;
  t.alphabet_size = k;
  t.length = n;
  t.kind = kind;
  t.exponent = ExponentSpec::parse(e);
  t.mode = mode;
  return t;
}

}  // namespace

TEST_CASE("counting examples") {
  CHECK(count_cyclic_avoiders(2, 1, 4) == 2);
  CHECK(count_cyclic_avoiders(2, 3, 4) == 6);
  CHECK(count_cyclic_avoiders(2, 8, 4) == 0);
  CHECK(count_cyclic_avoiders(2, 14, 4) == 112);
  CHECK(code_of([] { count_cyclic_avoiders(1, 4, 4); }) == ErrorCode::invalid_task);
  CHECK(code_of([] { count_cyclic_avoiders(2, 0, 4); }) == ErrorCode::invalid_task);
  CHECK(code_of([] { count_cyclic_avoiders(2, 4, 1); }) == ErrorCode::invalid_task);
}

TEST_CASE("counts match brute force over all words") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (unsigned N : {2u, 3u, 4u, 5u}) {
      const auto expected = oracle::count_words(
          2, n, [&](const Word& w) { return oracle::cyclic_abelian_min_period(w, N) == 0; });
      CHECK_MESSAGE(count_cyclic_avoiders(2, n, N) == expected, "n=" << n << " N=" << N);
    }
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto expected = oracle::count_words(
        3, n, [&](const Word& w) { return oracle::cyclic_ordinary_avoids(w, Rational(2), false); });
    CHECK(run_search(task(3, n, Kind::ordinary, "2", Mode::cyclic)).count == expected);
  }
}

TEST_CASE("pruning, symmetry reduction and worker count do not change results") {
  for (unsigned k : {2u, 3u}) {
    const std::size_t max_len = k == 2 ? 10 : 6;
    for (std::size_t n = 1; n <= max_len; ++n) {
      for (Mode mode : {Mode::cyclic, Mode::circular, Mode::linear}) {
        for (Kind kind : {Kind::abelian, Kind::ordinary}) {
          SearchTask t = task(k, n, kind, kind == Kind::abelian ? "3" : "2", mode);
          t.want = SearchWant::all_witnesses;
          const SearchResult base = run_search(t, 1);
          SearchTask unpruned = t;
          unpruned.prune = false;
          const SearchResult raw = run_search(unpruned, 1);
          CHECK(raw.count == base.count);
          CHECK(raw.all == base.all);
          CHECK(run_search(t, 3).all == base.all);
          SearchTask sym = t;
          sym.symmetry_reduction = true;
          CHECK(run_search(sym, 2).count == base.count);
          CHECK(base.all.size() == base.count);
          if (!base.all.empty()) CHECK(*base.first == base.all.front());
        }
      }
    }
  }
}

TEST_CASE("witness search") {
  CHECK_FALSE(find_witness(task(3, 8, Kind::abelian, "2", Mode::linear)));
  CHECK_FALSE(find_witness(task(3, 5, Kind::ordinary, "2", Mode::cyclic)));
  const auto six = find_witness(task(3, 6, Kind::ordinary, "2", Mode::cyclic));
  REQUIRE(six);
  CHECK(cyclic_ordinary_avoids(*six, Rational(2), false).verdict);
  const auto eight = find_witness(task(2, 8, Kind::abelian, "5", Mode::cyclic));
  REQUIRE(eight);
  CHECK(cyclic_abelian_avoids(*eight, 5).verdict);
  CHECK_FALSE(find_witness(task(2, 10, Kind::abelian, "3", Mode::linear)));
  CHECK(code_of([] { run_search(task(2, 4, Kind::abelian, "5/2", Mode::cyclic)); }) ==
        ErrorCode::invalid_task);
}

TEST_CASE("Thue-Morse factor witnesses") {
  CHECK(thue_morse_factor_witness(1).word.str() == "0");
  for (std::size_t n : {2u, 5u, 17u, 100u}) {
    const FactorWitness hit = thue_morse_factor_witness(n);
    CHECK(hit.word.size() == n);
    for (std::size_t i = 0; i < n; ++i) CHECK(hit.word[i] == oracle::thue_morse(hit.position + i));
    CHECK(oracle::cyclic_ordinary_avoids(hit.word, Rational(5, 2), true));
  }
  CHECK(code_of([] { thue_morse_factor_witness(0); }) == ErrorCode::invalid_length);
}

TEST_CASE("Justin factor witnesses") {
  const auto one = justin_factor_witness(1, 10);
  REQUIRE(one);
  CHECK(one->word.str() == "0");
  const Word fixed = fixed_point_prefix(builtin_morphism("justin"), Word::parse("0"), 200000);
  for (std::size_t n : {10u, 50u}) {
    const auto hit = justin_factor_witness(n, 100000);
    REQUIRE(hit);
    CHECK(hit->position < 100000);
    CHECK(hit->word == fixed.substr(hit->position, n));
    CHECK(oracle::cyclic_abelian_min_period(hit->word, 5) == 0);
  }
  const auto tight = justin_factor_witness(50, 1);
  if (tight) CHECK(tight->position == 0);
}

TEST_CASE("balance checks over the sigma3 language") {
  const auto reports = verify_delta_lemmas();
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) CHECK_MESSAGE(r.passed(), r.id);
  CHECK(reports[0].min_delta > 0);
  CHECK(reports[1].min_delta == -3);
  CHECK(reports[2].min_delta >= 6);
  // Recompute the floor bound directly from a long prefix.
  const Word prefix = fixed_point_prefix(builtin_morphism("sigma3"), Word::parse("0"), 20000);
  long long lowest = 0;
  for (std::size_t len = 1; len < 29; ++len) {
    for (const Word& u : factors_of_length(prefix, len)) lowest = std::min(lowest, delta(u));
  }
  CHECK(lowest == -3);
}

TEST_CASE("results file round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "abelcyc_results_test.tsv").string();
  std::remove(path.c_str());
  {
    ResultsFile f(path);
    CHECK_FALSE(f.lookup(2, 9, 4));
    f.record(2, 9, 4, 36);
    f.record(2, 10, 4, 120);
    CHECK(f.lookup(2, 9, 4) == 36u);
  }
  ResultsFile again(path);
  CHECK(again.lookup(2, 10, 4) == 120u);
  CHECK(again.entries().size() == 2);
  std::remove(path.c_str());
}
