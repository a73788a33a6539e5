#include "abelcyc/repro.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "abelcyc/avoidance.hpp"
#include "abelcyc/constructions.hpp"
#include "abelcyc/morphism.hpp"
#include "abelcyc/search.hpp"

namespace abelcyc {

const std::vector<unsigned long long>& a334831_prefix() {
  static const std::vector<unsigned long long> values{2,  2,   6,   8,   10,  6,   28,
                                                      0,  36,  120, 132, 168, 364, 112};
  return values;
}

namespace {

using Clock = std::chrono::steady_clock;

// Calls fn on every word of length n over k letters in lexicographic order.
template <typename Fn>
void for_each_word(unsigned k, std::size_t n, Fn&& fn) {
  std::vector<Symbol> digits(n, 0);
  while (true) {
    fn(Word(digits, k));
    auto it = digits.end();
    while (it != digits.begin() && *(it - 1) + 1u == k) *--it = 0;
    if (it == digits.begin()) return;
    ++*(it - 1);
  }
}

struct Tally {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (ok) detail << what;
    ok = false;
  }
};

CriterionOutcome finish(Tally& t, const std::string& pass_detail) {
  CriterionOutcome out;
  out.passed = t.ok;
  out.detail = t.ok ? pass_detail : t.detail.str();
  return out;
}

SearchTask ternary_square_task(std::size_t n, unsigned k = 3) {
  SearchTask task;
  task.alphabet_size = k;
  task.length = n;
  task.kind = Kind::ordinary;
  task.exponent = ExponentSpec{Rational(2), false};
  task.mode = Mode::cyclic;
  return task;
}

CriterionOutcome a334831(const ReproOptions& opt) {
  Tally t;
  const auto& expected = a334831_prefix();
  std::ostringstream got;
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    auto c = count_cyclic_avoiders(2, n, 4, opt.jobs);
    got << (n > 1 ? "," : "") << c;
    if (c != expected[n - 1]) {
      t.fail("n=" + std::to_string(n) + ": got " + std::to_string(c) + ", expected " +
             std::to_string(expected[n - 1]));
    }
  }
  return finish(t, got.str());
}

CriterionOutcome length_eight(const ReproOptions& opt) {
  Tally t;
  if (auto c = count_cyclic_avoiders(2, 8, 4, opt.jobs); c != 0) {
    t.fail("count is " + std::to_string(c));
  }
  SearchTask task;
  task.alphabet_size = 2;
  task.length = 8;
  task.exponent = ExponentSpec{Rational(4), false};
  if (auto w = find_witness(task, opt.jobs)) t.fail("found " + w->str());
  return finish(t, "count 0, no witness");
}

CriterionOutcome construction_sweep(const ReproOptions&) {
  Tally t;
  for (std::size_t n = 1; n <= 300 && t.ok; ++n) {
    for (Symbol d : {Symbol{0}, Symbol{1}}) {
      Word w = build_binary_avoider(n, d);
      if (w.size() != n) t.fail("n=" + std::to_string(n) + ": wrong length");
      else if (!cyclic_abelian_avoids(w, 8).verdict) {
        t.fail("n=" + std::to_string(n) + " diamond=" + std::to_string(d) + " fails");
      }
    }
  }
  return finish(t, "600 words verified");
}

CriterionOutcome marked(const ReproOptions&) {
  Tally t;
  for (unsigned k : {3u, 4u, 5u}) {
    const unsigned e = marked_exponent(k);
    for (std::size_t n = 1; n <= 150 && t.ok; ++n) {
      Word w = build_marked_avoider(k, n);
      std::set<Symbol> letters(w.symbols().begin(), w.symbols().end());
      if (w.size() != n || letters.size() > k || w.alphabet_size() != k) {
        t.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + ": malformed");
      } else if (!cyclic_abelian_avoids(w, e).verdict) {
        t.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + " fails exponent " +
               std::to_string(e));
      }
    }
  }
  return finish(t, "k=3,4,5 with n<=150 verified");
}

CriterionOutcome a_infinity(const ReproOptions&) {
  Tally t;
  std::ostringstream lens;
  auto check_iterates = [&](const char* name, const Word& seed, unsigned e, std::size_t limit,
                            unsigned max_iter) {
    const Morphism m = builtin_morphism(name);
    Word x = seed;
    for (unsigned j = 1; j <= max_iter; ++j) {
      x = m.apply(x);
      if (x.size() > limit) break;
      if (!cyclic_abelian_avoids(x, e).verdict) {
        t.fail(std::string(name) + " iterate " + std::to_string(j) + " fails");
      }
      lens << name << "^" << j << ":" << x.size() << " ";
    }
  };
  check_iterates("sigma3", Word::parse("0"), 4, 5000, 100);
  check_iterates("sigma4", Word::parse("0", 3), 3, 5000, 100);
  check_iterates("keranen", Word::parse("01", 4), 2, 15000, 2);
  return finish(t, lens.str());
}

CriterionOutcome delta_lemmas(const ReproOptions&) {
  Tally t;
  std::ostringstream summary;
  for (const auto& r : verify_delta_lemmas()) {
    summary << r.id << ":" << r.factors_checked << " factors, min delta " << r.min_delta << "; ";
    if (!r.passed()) {
      t.fail(r.id + ": " + std::to_string(r.violations.size()) + " violations, e.g. " +
             r.violations.front().str());
    }
    if (r.factors_checked == 0) t.fail(r.id + ": nothing checked");
  }
  return finish(t, summary.str());
}

CriterionOutcome ternary_squares(const ReproOptions& opt) {
  Tally t;
  const std::set<std::size_t> exceptional{5, 7, 9, 10, 14, 17};
  for (std::size_t n = 1; n <= 24; ++n) {
    auto w = find_witness(ternary_square_task(n), opt.jobs);
    const bool expect = !exceptional.count(n);
    if (w.has_value() != expect) {
      t.fail("n=" + std::to_string(n) + (w ? ": unexpected witness " + w->str() : ": no witness"));
    } else if (w && !cyclic_ordinary_avoids(*w, Rational(2), false).verdict) {
      t.fail("n=" + std::to_string(n) + ": witness does not re-verify");
    }
  }
  return finish(t, "absent exactly for n in {5,7,9,10,14,17}");
}

CriterionOutcome word_list(const ReproOptions&) {
  Tally t;
  for (const char* s : {"01023", "0102013", "010201203", "0102010313", "01020103010213",
                        "01020103010212313"}) {
    if (!cyclic_ordinary_avoids(Word::parse(s), Rational(2), false).verdict) {
      t.fail(std::string(s) + " fails 2 cyclic");
    }
  }
  for (const char* s : {"00102", "0010012", "001001102", "0010011202", "00100112001002",
                        "00100112001001202"}) {
    if (!cyclic_ordinary_avoids(Word::parse(s), Rational(2), true).verdict) {
      t.fail(std::string(s) + " fails 2+ cyclic");
    }
  }
  if (!cyclic_abelian_avoids(Word::parse("00001011"), 5).verdict) t.fail("00001011 fails abelian 5");
  if (!circular_abelian_avoids(Word::parse("00010011"), 4).verdict) {
    t.fail("00010011 fails abelian 4 circular");
  }
  if (cyclic_abelian_avoids(Word::parse("00010011"), 4).verdict) {
    t.fail("00010011 passes abelian 4 cyclic");
  }
  if (min_avoided_abelian_exponent(Word::parse("1000100")) != 7u) {
    t.fail("threshold of 1000100 is not 7");
  }
  if (!cyclic_abelian_avoids(Word::parse("001122"), 3).verdict) t.fail("001122 fails abelian 3");
  return finish(t, "all listed words behave as stated");
}

CriterionOutcome thue_morse_sweep(const ReproOptions&) {
  Tally t;
  std::size_t furthest = 0;
  for (std::size_t n = 1; n <= 150 && t.ok; ++n) {
    auto hit = thue_morse_factor_witness(n);
    if (hit.word.size() != n || !cyclic_ordinary_avoids(hit.word, Rational(5, 2), true).verdict) {
      t.fail("n=" + std::to_string(n) + ": witness does not verify");
    }
    furthest = std::max(furthest, hit.position);
  }
  return finish(t, "n<=150, largest start position " + std::to_string(furthest));
}

CriterionOutcome oracle_equivalences(const ReproOptions&) {
  Tally t;
  std::size_t words = 0;
  for (std::size_t n = 1; n <= 12 && t.ok; ++n) {
    for_each_word(2, n, [&](const Word& w) {
      ++words;
      for (unsigned e = 2; e <= 8; ++e) {
        auto fast = cyclic_abelian_avoids(w, e, PeriodScan::halved);
        auto full = cyclic_abelian_avoids(w, e, PeriodScan::full);
        if (fast.verdict != full.verdict || fast.witness != full.witness) {
          t.fail("abelian " + w.str() + " N=" + std::to_string(e));
        }
      }
      for (Rational e : {Rational(2), Rational(5, 2), Rational(3)}) {
        for (bool plus : {false, true}) {
          auto fast = cyclic_ordinary_avoids(w, e, plus, PeriodScan::halved);
          auto full = cyclic_ordinary_avoids(w, e, plus, PeriodScan::full);
          if (fast.verdict != full.verdict || fast.witness != full.witness) {
            t.fail("ordinary " + w.str() + " E=" + e.str() + (plus ? "+" : ""));
          }
        }
      }
    });
  }
  for (unsigned k : {2u, 3u}) {
    for (std::size_t n = 1; n <= 11 && t.ok; ++n) {
      for_each_word(k, n, [&](const Word& w) {
        ++words;
        if (circular_ordinary_avoids(w, Rational(2), false).verdict !=
            cyclic_ordinary_avoids(w, Rational(2), false).verdict) {
          t.fail("circular/cyclic squares differ on " + w.str());
        }
      });
    }
  }
  return finish(t, std::to_string(words) + " words compared");
}

CriterionOutcome morphism_preservation(const ReproOptions&) {
  Tally t;
  const Morphism s3 = builtin_morphism("sigma3");
  std::size_t avoiders = 0;
  for (std::size_t n = 2; n <= 12; ++n) {
    for_each_word(2, n, [&](const Word& w) {
      if (!cyclic_abelian_avoids(w, 4).verdict) return;
      ++avoiders;
      if (!cyclic_abelian_avoids(s3.apply(w), 4).verdict) t.fail("image of " + w.str() + " fails");
    });
  }
  if (avoiders == 0) t.fail("no avoiders enumerated");
  return finish(t, std::to_string(avoiders) + " avoiders mapped");
}

CriterionOutcome justin(const ReproOptions& opt) {
  Tally t;
  const std::size_t top = opt.justin_full ? 400 : 120;
  std::size_t furthest = 0;
  for (std::size_t n = 1; n <= top && t.ok; ++n) {
    auto hit = justin_factor_witness(n, 1'000'000);
    if (!hit) {
      t.fail("n=" + std::to_string(n) + ": budget exhausted");
    } else {
      if (!cyclic_abelian_avoids(hit->word, 5).verdict) t.fail("n=" + std::to_string(n) + ": bad witness");
      furthest = std::max(furthest, hit->position);
    }
  }
  return finish(t, "n<=" + std::to_string(top) + ", largest start position " + std::to_string(furthest));
}

CriterionOutcome classical(const ReproOptions& opt) {
  Tally t;
  SearchTask square;
  square.alphabet_size = 3;
  square.length = 8;
  square.kind = Kind::abelian;
  square.exponent = ExponentSpec{Rational(2), false};
  square.mode = Mode::linear;
  if (auto w = find_witness(square, opt.jobs)) t.fail("ternary length 8: " + w->str());
  SearchTask cube = square;
  cube.alphabet_size = 2;
  cube.length = 10;
  cube.exponent = ExponentSpec{Rational(3), false};
  if (auto w = find_witness(cube, opt.jobs)) t.fail("binary length 10: " + w->str());
  return finish(t, "both searches exhausted without a witness");
}

}  // namespace

std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "cyclic abelian-4 avoider counts, binary, n=1..14", true, a334831},
      {2, "no binary length-8 word avoids abelian 4-powers cyclically", true, length_eight},
      {3, "f/g1/g2 constructions avoid abelian 8-powers cyclically, n<=300", false, construction_sweep},
      {4, "marker constructions: k=3,4,5 avoid exponents 4,3,2, n<=150", true, marked},
      {5, "iterated sigma3/sigma4/phi words avoid exponents 4/3/2 cyclically", false, a_infinity},
      {6, "sigma3 balance checks up to length 174", true, delta_lemmas},
      {7, "ternary cyclic square-free words exist iff n not in {5,7,9,10,14,17}", true, ternary_squares},
      {8, "listed example words", true, word_list},
      {9, "Thue-Morse factors avoid 5/2+-powers cyclically, n<=150", false, thue_morse_sweep},
      {10, "reduced-period detectors agree with full scans", true, oracle_equivalences},
      {11, "sigma3 maps cyclic abelian-4 avoiders to cyclic abelian-4 avoiders", true,
       morphism_preservation},
      {12, "Justin fixed point has cyclic abelian-5 avoiding factors, n<=120 (n<=400 with --justin-full)", false, justin},
      {13, "ternary length 8 has abelian squares, binary length 10 has abelian cubes", true, classical},
  };
}

std::vector<CriterionOutcome> run_repro(const ReproOptions& options,
                                        const std::function<void(const CriterionOutcome&)>& on_result) {
  std::vector<CriterionOutcome> out;
  for (const auto& c : acceptance_criteria()) {
    if (options.suite == Suite::fast && !c.fast) continue;
    const auto start = Clock::now();
    CriterionOutcome r;
    try {
      r = c.run(options);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.id = c.id;
    r.claim = c.claim;
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace abelcyc
