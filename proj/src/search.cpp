#include "abelcyc/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "abelcyc/error.hpp"
#include "abelcyc/morphism.hpp"

namespace abelcyc {

namespace {

void validate(const SearchTask& task) {
  if (task.alphabet_size < 2 || task.alphabet_size > 36) {
    throw Error(ErrorCode::invalid_task, "alphabet size must be in 2..36");
  }
  if (task.length < 1) throw Error(ErrorCode::invalid_task, "length must be positive");
  if (task.length > 64) throw Error(ErrorCode::invalid_task, "length too large for exhaustive search");
  if (task.kind == Kind::abelian) {
    if (!task.exponent.value.is_integer() || task.exponent.strict_plus) {
      throw Error(ErrorCode::invalid_task, "abelian exponent must be an integer");
    }
    if (task.exponent.value < Rational(2)) {
      throw Error(ErrorCode::invalid_task, "abelian exponent must be at least 2");
    }
  } else if (task.exponent.value <= Rational(1)) {
    throw Error(ErrorCode::invalid_task, "exponent must exceed 1");
  }
}

// One depth-first walk over the prefix tree, holding the current prefix and
// its cumulative letter counts.
class Enumerator {
 public:
  explicit Enumerator(const SearchTask& task)
      : task_(task),
        k_(task.alphabet_size),
        n_(task.length),
        buf_(task.length, 0),
        counts_((task.length + 1) * task.alphabet_size, 0) {
    if (task.kind == Kind::abelian) abelian_exponent_ = static_cast<std::size_t>(task.exponent.value.numerator());
  }

  // Loads a shard prefix; false if pruning would have rejected it.
  bool load_prefix(const std::vector<Symbol>& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      push(i, prefix[i]);
      if (task_.prune && !admissible(i + 1)) return false;
    }
    return true;
  }

  // Lexicographically ordered admissible prefixes of length `depth`.
  void collect_prefixes(std::size_t depth, std::vector<std::vector<Symbol>>& out) {
    collect(0, depth, out);
  }

  void run(std::size_t from, SearchResult& result, bool stop_at_first) {
    result_ = &result;
    stop_at_first_ = stop_at_first;
    done_ = false;
    dfs(from);
  }

 private:
  void push(std::size_t pos, Symbol a) {
    buf_[pos] = a;
    std::copy_n(&counts_[pos * k_], k_, &counts_[(pos + 1) * k_]);
    ++counts_[(pos + 1) * k_ + a];
  }

  int max_used_before(std::size_t len) const {
    int top = -1;
    for (std::size_t i = 0; i < len; ++i) top = std::max<int>(top, buf_[i]);
    return top;
  }

  unsigned child_limit(std::size_t len) const {
    if (!task_.symmetry_reduction) return k_;
    return std::min<unsigned>(k_, static_cast<unsigned>(max_used_before(len) + 2));
  }

  bool blocks_equal(std::size_t a, std::size_t b, std::size_t m) const {
    for (unsigned c = 0; c < k_; ++c) {
      if (counts_[(a + m) * k_ + c] - counts_[a * k_ + c] !=
          counts_[(b + m) * k_ + c] - counts_[b * k_ + c]) {
        return false;
      }
    }
    return true;
  }

  // No forbidden factor ends at position len.
  bool admissible(std::size_t len) const {
    if (task_.kind == Kind::abelian) {
      const std::size_t e = abelian_exponent_;
      for (std::size_t m = 1; m * e <= len; ++m) {
        const std::size_t last = len - m;
        std::size_t j = 1;
        while (j < e && blocks_equal(len - (j + 1) * m, last, m)) ++j;
        if (j == e) return false;
      }
      return true;
    }
    const Rational& e = task_.exponent.value;
    for (std::size_t p = 1; p < len; ++p) {
      std::size_t run = 0;
      while (run + p < len && buf_[len - 1 - run] == buf_[len - 1 - run - p]) ++run;
      Rational found(static_cast<std::int64_t>(run + p), static_cast<std::int64_t>(p));
      if (exceeds(found, e, task_.exponent.strict_plus)) return false;
    }
    return true;
  }

  void collect(std::size_t len, std::size_t depth, std::vector<std::vector<Symbol>>& out) {
    if (len == depth) {
      out.emplace_back(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(len));
      return;
    }
    const unsigned limit = child_limit(len);
    for (unsigned a = 0; a < limit; ++a) {
      push(len, static_cast<Symbol>(a));
      if (task_.prune && !admissible(len + 1)) continue;
      collect(len + 1, depth, out);
    }
  }

  std::uint64_t weight() const {
    if (!task_.symmetry_reduction) return 1;
    const int distinct = max_used_before(n_) + 1;
    std::uint64_t w = 1;
    for (int i = 0; i < distinct; ++i) w *= k_ - static_cast<unsigned>(i);
    return w;
  }

  void leaf() {
    Word w(buf_, k_);
    if (!check_avoidance(w, task_.mode, task_.kind, task_.exponent).verdict) return;
    result_->count += weight();
    if (!result_->first) result_->first = w;
    if (task_.want == SearchWant::all_witnesses) result_->all.push_back(w);
    if (stop_at_first_) done_ = true;
  }

  void dfs(std::size_t len) {
    if (len == n_) {
      leaf();
      return;
    }
    const unsigned limit = child_limit(len);
    for (unsigned a = 0; a < limit && !done_; ++a) {
      push(len, static_cast<Symbol>(a));
      if (task_.prune && !admissible(len + 1)) continue;
      dfs(len + 1);
    }
  }

  const SearchTask& task_;
  unsigned k_;
  std::size_t n_;
  std::size_t abelian_exponent_ = 0;
  std::vector<Symbol> buf_;
  std::vector<std::uint32_t> counts_;
  SearchResult* result_ = nullptr;
  bool stop_at_first_ = false;
  bool done_ = false;
};

}  // namespace

SearchResult run_search(const SearchTask& task, unsigned jobs) {
  validate(task);
  const std::size_t depth = std::min(task.shard_depth, task.length);
  std::vector<std::vector<Symbol>> shards;
  Enumerator(task).collect_prefixes(depth, shards);

  const bool stop_at_first = task.want == SearchWant::first_witness;
  std::vector<SearchResult> partial(shards.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    Enumerator e(task);
    for (std::size_t i = next++; i < shards.size(); i = next++) {
      if (stop_at_first && i > best.load()) continue;
      e.load_prefix(shards[i]);
      e.run(shards[i].size(), partial[i], stop_at_first);
      if (stop_at_first && partial[i].first) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SearchResult out;
  for (auto& part : partial) {
    if (stop_at_first) {
      if (part.first) {
        out.first = std::move(part.first);
        out.count = 1;
        break;
      }
      continue;
    }
    out.count += part.count;
    if (!out.first && part.first) out.first = part.first;
    for (auto& w : part.all) out.all.push_back(std::move(w));
  }
  return out;
}

std::uint64_t count_cyclic_avoiders(unsigned alphabet_size, std::size_t length, unsigned exponent,
                                    unsigned jobs) {
  SearchTask task;
  task.alphabet_size = alphabet_size;
  task.length = length;
  task.kind = Kind::abelian;
  task.exponent = ExponentSpec{Rational(exponent), false};
  task.mode = Mode::cyclic;
  task.want = SearchWant::count;
  if (exponent < 2) throw Error(ErrorCode::invalid_task, "abelian exponent must be at least 2");
  return run_search(task, jobs).count;
}

std::optional<Word> find_witness(SearchTask task, unsigned jobs) {
  task.want = SearchWant::first_witness;
  return run_search(task, jobs).first;
}

FactorWitness thue_morse_factor_witness(std::size_t n, std::size_t position_ceiling) {
  if (n < 1) throw Error(ErrorCode::invalid_length, "length must be positive");
  const Morphism tm = builtin_morphism("thue_morse");
  const Word seed = Word::parse("0");
  std::size_t window = 4 * n;
  Word text = fixed_point_prefix(tm, seed, window);
  const Rational threshold(5, 2);
  for (std::size_t pos = 0; pos <= position_ceiling; ++pos) {
    if (pos + n > text.size()) {
      window *= 2;
      text = fixed_point_prefix(tm, seed, window);
    }
    Word factor = text.substr(pos, n);
    if (cyclic_ordinary_avoids(factor, threshold, true).verdict) return {std::move(factor), pos};
  }
  throw Error(ErrorCode::search_exhausted, "no Thue-Morse witness below the position ceiling");
}

std::optional<FactorWitness> justin_factor_witness(std::size_t n, std::size_t position_budget) {
  if (n < 1) throw Error(ErrorCode::invalid_length, "length must be positive");
  if (position_budget == 0) return std::nullopt;
  const Word text =
      fixed_point_prefix(builtin_morphism("justin"), Word::parse("0"), position_budget - 1 + n);
  for (std::size_t pos = 0; pos < position_budget; ++pos) {
    Word factor = text.substr(pos, n);
    if (cyclic_abelian_avoids(factor, 5).verdict) return FactorWitness{std::move(factor), pos};
  }
  return std::nullopt;
}

std::vector<LemmaCheckReport> verify_delta_lemmas() {
  constexpr std::size_t light_min = 29;
  const auto factors = language_factors(builtin_morphism("sigma3"), 174);

  LemmaCheckReport light{"light", "29 <= |u| <= 58 implies delta(u) > 0", light_min, 2 * light_min};
  LemmaCheckReport floor{"floor", "|u| < 29 implies delta(u) >= -3", 1, light_min - 1};
  LemmaCheckReport six{"six", "64 <= |u| < 174 implies delta(u) >= 6", 64, 173};
  for (auto* r : {&light, &floor, &six}) r->min_delta = std::numeric_limits<long long>::max();

  for (const Word& u : factors) {
    const long long d = delta(u);
    auto visit = [&](LemmaCheckReport& r, bool ok) {
      if (u.size() < r.min_length || u.size() > r.max_length) return;
      ++r.factors_checked;
      r.min_delta = std::min(r.min_delta, d);
      if (!ok) r.violations.push_back(u);
    };
    visit(light, d > 0);
    visit(floor, d >= -3);
    visit(six, d >= 6);
  }
  return {light, floor, six};
}

ResultsFile::ResultsFile(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream fields(line);
    unsigned k = 0, e = 0;
    std::size_t n = 0;
    std::uint64_t count = 0;
    if (!(fields >> k >> n >> e >> count)) {
      throw Error(ErrorCode::parse, "malformed results line: " + line);
    }
    entries_[{k, n, e}] = count;
  }
}

std::optional<std::uint64_t> ResultsFile::lookup(unsigned k, std::size_t n, unsigned exponent) const {
  auto it = entries_.find({k, n, exponent});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultsFile::record(unsigned k, std::size_t n, unsigned exponent, std::uint64_t count) {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(ErrorCode::io, "cannot append to " + path_);
  out << k << '\t' << n << '\t' << exponent << '\t' << count << '\n';
  entries_[{k, n, exponent}] = count;
}

}  // namespace abelcyc
