#include "abelcyc/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <json.hpp>

#include "abelcyc/avoidance.hpp"
#include "abelcyc/constructions.hpp"
#include "abelcyc/error.hpp"
#include "abelcyc/morphism.hpp"
#include "abelcyc/report_json.hpp"
#include "abelcyc/repro.hpp"
#include "abelcyc/search.hpp"

namespace abelcyc {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  bool quiet = false;
};

void emit(std::ostream& out, const Globals& g, const std::string& text) {
  if (!g.quiet) out << text << '\n';
}

void emit(std::ostream& out, const Globals& g, const json& j) {
  if (!g.quiet) out << j.dump() << '\n';
}

std::optional<unsigned> alphabet_opt(int k) {
  if (k <= 0) return std::nullopt;
  return static_cast<unsigned>(k);
}

const char* adverb(Mode m) {
  switch (m) {
    case Mode::cyclic: return "cyclically";
    case Mode::circular: return "circularly";
    case Mode::linear: return "linearly";
  }
  return "";
}

std::string describe(const AvoidanceReport& r) {
  std::ostringstream s;
  s << r.word.str() << ": ";
  const std::string power = std::string(to_string(r.kind)) + " " + r.threshold.str() +
                            (r.strict_plus ? "+" : "") + "-powers " + adverb(r.mode);
  if (r.verdict) {
    s << "avoids " << power;
  } else {
    const auto& w = *r.witness;
    s << "does not avoid " << power << " (period " << w.period << ", start " << w.start
      << ", exponent " << w.exponent.str() << ")";
  }
  return s.str();
}

struct CheckArgs {
  std::string kind = "abelian";
  std::string mode = "cyclic";
  std::string exponent;
  std::string file;
  int alphabet = 0;
  std::vector<std::string> words;
};

int do_check(const CheckArgs& a, const Globals& g, std::ostream& out) {
  const Kind kind = parse_kind(a.kind);
  const Mode mode = parse_mode(a.mode);
  const ExponentSpec e = ExponentSpec::parse(a.exponent);
  std::vector<Word> words;
  if (!a.file.empty()) words = read_words_file(a.file, alphabet_opt(a.alphabet));
  for (const auto& s : a.words) words.push_back(Word::parse(s, alphabet_opt(a.alphabet)));
  if (words.empty()) throw Error(ErrorCode::empty_input, "no word given");
  bool all = true;
  json reports = json::array();
  for (const Word& w : words) {
    AvoidanceReport r = check_avoidance(w, mode, kind, e);
    all = all && r.verdict;
    if (g.json) {
      json j = to_json(r);
      j["schema_version"] = report_schema_version;
      reports.push_back(std::move(j));
    } else {
      emit(out, g, describe(r));
    }
  }
  if (g.json) emit(out, g, reports.size() == 1 ? reports[0] : reports);
  return all ? exit_ok : exit_verdict_false;
}

int do_threshold(const std::string& text, int alphabet, const Globals& g, std::ostream& out) {
  if (text.empty()) throw Error(ErrorCode::empty_input, "empty word");
  const Word w = Word::parse(text, alphabet_opt(alphabet));
  const auto t = min_avoided_abelian_exponent(w);
  const std::string shown = t ? std::to_string(*t) : "infinity";
  if (g.json) {
    json j{{"schema_version", report_schema_version}, {"word", w.str()}};
    j["threshold"] = t ? json(*t) : json("infinity");
    emit(out, g, j);
  } else {
    emit(out, g, shown);
  }
  return exit_ok;
}

struct GenerateArgs {
  unsigned alphabet = 2;
  std::size_t length = 0;
  unsigned exponent = 0;
  unsigned diamond = 0;
  std::string kind = "abelian";
  bool verify = false;
  std::string morphism;
  std::string morphism_file;
  std::string seed = "0";
};

// Prefix of a morphism's fixed point instead of a construction.
int do_generate_morphic(const GenerateArgs& a, const Globals& g, std::ostream& out,
                        std::ostream& err) {
  const Morphism m =
      a.morphism_file.empty() ? builtin_morphism(a.morphism) : Morphism::from_file(a.morphism_file);
  if (a.length == 0) throw Error(ErrorCode::invalid_length, "length must be at least 1");
  const Word seed = Word::parse(a.seed, m.domain_size());
  const Word w = fixed_point_prefix(m, seed, a.length).substr(0, a.length);
  std::optional<bool> verified;
  if (a.verify) {
    if (a.exponent == 0) throw Error(ErrorCode::invalid_exponent, "--verify needs --exponent");
    verified = cyclic_abelian_avoids(w, a.exponent).verdict;
  }
  if (g.json) {
    json j{{"schema_version", report_schema_version},
           {"word", w.str()},
           {"alphabet", w.alphabet_size()},
           {"length", w.size()},
           {"method", "fixed_point_prefix"},
           {"morphism", m.name()}};
    j["exponent"] = a.exponent == 0 ? json(nullptr) : json(std::to_string(a.exponent));
    j["verified"] = verified ? json(*verified) : json(nullptr);
    emit(out, g, j);
  } else {
    emit(out, g, w.str());
  }
  if (verified && !*verified) {
    err << "verification failed: word does not avoid abelian " << a.exponent
        << "-powers cyclically\n";
    return exit_verdict_false;
  }
  return exit_ok;
}

int do_generate(const GenerateArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  if (parse_kind(a.kind) != Kind::abelian) {
    throw Error(ErrorCode::unsupported_feature, "only abelian constructions are available");
  }
  if (!a.morphism.empty() || !a.morphism_file.empty()) return do_generate_morphic(a, g, out, err);
  if (a.diamond > 1) throw Error(ErrorCode::parse, "--diamond must be 0 or 1");
  const ConstructionRecipe recipe = construction_recipe(a.alphabet, a.length);
  const unsigned exponent = a.exponent == 0 ? recipe.target_exponent : a.exponent;
  if (exponent < recipe.target_exponent) {
    throw Error(ErrorCode::unsupported_feature,
                "no construction guarantees abelian exponent " + std::to_string(exponent) +
                    " over " + std::to_string(a.alphabet) + " letters (smallest is " +
                    std::to_string(recipe.target_exponent) + ")");
  }
  const Word w = a.alphabet == 2 ? build_binary_avoider(a.length, static_cast<Symbol>(a.diamond))
                                 : build_marked_avoider(a.alphabet, a.length);
  std::optional<bool> verified;
  if (a.verify) verified = cyclic_abelian_avoids(w, exponent).verdict;
  if (g.json) {
    json j{{"schema_version", report_schema_version},
           {"word", w.str()},
           {"alphabet", a.alphabet},
           {"length", w.size()},
           {"method", to_string(recipe.method)},
           {"exponent", std::to_string(exponent)}};
    j["verified"] = verified ? json(*verified) : json(nullptr);
    emit(out, g, j);
  } else {
    emit(out, g, w.str());
  }
  if (verified && !*verified) {
    err << "verification failed: word does not avoid abelian " << exponent << "-powers cyclically\n";
    return exit_verdict_false;
  }
  return exit_ok;
}

struct CountArgs {
  unsigned alphabet = 2;
  std::size_t length = 0;
  unsigned exponent = 0;
  unsigned jobs = 1;
  std::string results;
  bool symmetry = false;
};

int do_count(const CountArgs& a, const Globals& g, std::ostream& out) {
  std::optional<ResultsFile> cache;
  std::optional<std::uint64_t> count;
  bool cached = false;
  if (!a.results.empty()) {
    cache.emplace(a.results);
    count = cache->lookup(a.alphabet, a.length, a.exponent);
    cached = count.has_value();
  }
  if (!count) {
    SearchTask task;
    task.alphabet_size = a.alphabet;
    task.length = a.length;
    task.kind = Kind::abelian;
    task.exponent = ExponentSpec{Rational(a.exponent), false};
    task.mode = Mode::cyclic;
    task.symmetry_reduction = a.symmetry;
    count = run_search(task, a.jobs).count;
    if (cache) cache->record(a.alphabet, a.length, a.exponent, *count);
  }
  if (g.json) {
    emit(out, g, json{{"schema_version", report_schema_version},
                      {"alphabet", a.alphabet},
                      {"length", a.length},
                      {"exponent", a.exponent},
                      {"count", *count},
                      {"cached", cached}});
  } else {
    emit(out, g, std::to_string(*count));
  }
  return exit_ok;
}

struct SearchArgs {
  unsigned alphabet = 2;
  std::size_t length = 0;
  std::string exponent;
  std::string kind = "abelian";
  std::string mode = "cyclic";
  bool all = false;
  bool symmetry = false;
  unsigned jobs = 1;
};

int do_search(const SearchArgs& a, const Globals& g, std::ostream& out) {
  SearchTask task;
  task.alphabet_size = a.alphabet;
  task.length = a.length;
  task.kind = parse_kind(a.kind);
  task.mode = parse_mode(a.mode);
  task.exponent = ExponentSpec::parse(a.exponent);
  task.want = a.all ? SearchWant::all_witnesses : SearchWant::first_witness;
  task.symmetry_reduction = a.symmetry;
  const SearchResult r = run_search(task, a.jobs);
  if (g.json) {
    json j{{"schema_version", report_schema_version},
           {"alphabet", a.alphabet},
           {"length", a.length},
           {"kind", a.kind},
           {"mode", a.mode},
           {"exponent", task.exponent.str()}};
    j["witness"] = r.first ? json(r.first->str()) : json(nullptr);
    if (a.all) {
      json all = json::array();
      for (const auto& w : r.all) all.push_back(w.str());
      j["witnesses"] = std::move(all);
      j["count"] = r.count;
    }
    emit(out, g, j);
  } else if (a.all) {
    for (const auto& w : r.all) emit(out, g, w.str());
    emit(out, g, "% " + std::to_string(r.all.size()) + " words");
  } else {
    emit(out, g, r.first ? r.first->str() : std::string("none"));
  }
  return r.first ? exit_ok : exit_verdict_false;
}

int do_verify_lemmas(const Globals& g, std::ostream& out) {
  const auto reports = verify_delta_lemmas();
  bool ok = true;
  json arr = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (g.json) {
      json v = json::array();
      for (const auto& w : r.violations) v.push_back(w.str());
      arr.push_back({{"id", r.id},
                     {"claim", r.claim},
                     {"min_length", r.min_length},
                     {"max_length", r.max_length},
                     {"factors_checked", r.factors_checked},
                     {"min_delta", r.min_delta},
                     {"violations", v},
                     {"passed", r.passed()}});
    } else {
      std::ostringstream line;
      line << std::left << std::setw(6) << r.id << (r.passed() ? "PASS  " : "FAIL  ") << r.claim
           << "  [" << r.factors_checked << " factors, min delta " << r.min_delta << ", "
           << r.violations.size() << " violations]";
      emit(out, g, line.str());
    }
  }
  if (g.json) emit(out, g, json{{"schema_version", report_schema_version}, {"lemmas", arr}});
  return ok ? exit_ok : exit_verdict_false;
}

int do_tm_witness(std::size_t n, std::size_t ceiling, const Globals& g, std::ostream& out) {
  const FactorWitness hit = thue_morse_factor_witness(n, ceiling);
  if (g.json) {
    emit(out, g, json{{"schema_version", report_schema_version},
                      {"word", hit.word.str()},
                      {"position", hit.position}});
  } else {
    emit(out, g, hit.word.str() + "  (position " + std::to_string(hit.position) + ")");
  }
  return exit_ok;
}

int do_justin_witness(std::size_t n, std::size_t budget, const Globals& g, std::ostream& out) {
  const auto hit = justin_factor_witness(n, budget);
  if (g.json) {
    json j{{"schema_version", report_schema_version}, {"length", n}, {"budget", budget}};
    j["word"] = hit ? json(hit->word.str()) : json(nullptr);
    j["position"] = hit ? json(hit->position) : json(nullptr);
    emit(out, g, j);
  } else if (hit) {
    emit(out, g, hit->word.str() + "  (position " + std::to_string(hit->position) + ")");
  } else {
    emit(out, g, std::string("none within budget"));
  }
  return hit ? exit_ok : exit_verdict_false;
}

int do_repro(const std::string& suite, bool justin_full, unsigned jobs, const Globals& g,
             std::ostream& out) {
  ReproOptions opt;
  if (suite == "fast") opt.suite = Suite::fast;
  else if (suite == "all") opt.suite = Suite::all;
  else throw Error(ErrorCode::parse, "suite must be fast or all");
  opt.justin_full = justin_full;
  opt.jobs = jobs;
  auto print_row = [&](const CriterionOutcome& r) {
    if (g.json) return;
    std::ostringstream line;
    line << std::right << std::setw(3) << r.id << "  " << (r.passed ? "PASS" : "FAIL") << "  "
         << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << "s  " << r.claim
         << "  -- " << r.detail;
    emit(out, g, line.str());
  };
  const auto results = run_repro(opt, print_row);
  bool ok = true;
  json rows = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    rows.push_back({{"id", r.id},
                    {"claim", r.claim},
                    {"passed", r.passed},
                    {"detail", r.detail},
                    {"seconds", r.seconds}});
  }
  if (g.json) {
    emit(out, g, json{{"schema_version", report_schema_version}, {"suite", suite}, {"criteria", rows}});
  }
  return ok ? exit_ok : exit_verdict_false;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic, circular and linear avoidance of abelian and ordinary powers"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--quiet", g.quiet, "Suppress normal output; rely on the exit status");
  app.fallthrough();

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide whether words avoid a power");
  check_cmd->add_option("--kind", check.kind, "abelian or ordinary");
  check_cmd->add_option("--mode", check.mode, "cyclic, circular or linear");
  check_cmd->add_option("--exponent", check.exponent, "N, p/q, optionally followed by +")->required();
  check_cmd->add_option("--alphabet", check.alphabet, "Alphabet size (inferred by default)");
  check_cmd->add_option("--file", check.file, "Read words from a file, one per line");
  check_cmd->add_option("words", check.words, "Words to check");

  std::string threshold_word;
  int threshold_alphabet = 0;
  auto* threshold_cmd =
      app.add_subcommand("threshold", "Least abelian exponent a word avoids cyclically");
  threshold_cmd->add_option("word", threshold_word)->required();
  threshold_cmd->add_option("--alphabet", threshold_alphabet);

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Build a word avoiding abelian powers cyclically");
  gen_cmd->add_option("--alphabet", gen.alphabet);
  gen_cmd->add_option("--length", gen.length)->required();
  gen_cmd->add_option("--exponent", gen.exponent);
  gen_cmd->add_option("--diamond", gen.diamond, "Middle letter of odd binary words (0 or 1)");
  gen_cmd->add_option("--kind", gen.kind);
  gen_cmd->add_flag("--verify", gen.verify, "Re-run the detector on the output");
  auto* morph_opt =
      gen_cmd->add_option("--morphism", gen.morphism, "Fixed-point prefix of a catalog morphism");
  gen_cmd->add_option("--morphism-file", gen.morphism_file, "Fixed-point prefix of a morphism file")
      ->excludes(morph_opt);
  gen_cmd->add_option("--seed", gen.seed, "Seed word for --morphism (default 0)");

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Count words avoiding abelian N-powers cyclically");
  count_cmd->add_option("--alphabet", count.alphabet)->required();
  count_cmd->add_option("--length", count.length)->required();
  count_cmd->add_option("--exponent", count.exponent)->required();
  count_cmd->add_option("--jobs", count.jobs);
  count_cmd->add_option("--results", count.results, "TSV cache of counting results");
  count_cmd->add_flag("--symmetry", count.symmetry, "Enumerate up to letter renaming");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for avoiding words");
  search_cmd->add_option("--alphabet", search.alphabet)->required();
  search_cmd->add_option("--length", search.length)->required();
  search_cmd->add_option("--exponent", search.exponent)->required();
  search_cmd->add_option("--kind", search.kind);
  search_cmd->add_option("--mode", search.mode);
  search_cmd->add_flag("--all", search.all, "List every witness");
  search_cmd->add_flag("--symmetry", search.symmetry, "Enumerate up to letter renaming");
  search_cmd->add_option("--jobs", search.jobs);

  app.add_subcommand("verify-lemmas", "Balance checks over the sigma3 language");

  std::size_t tm_length = 0;
  std::size_t tm_ceiling = std::size_t{1} << 24;
  auto* tm_cmd = app.add_subcommand("tm-witness", "Thue-Morse factor avoiding 5/2+-powers cyclically");
  tm_cmd->add_option("--length", tm_length)->required();
  tm_cmd->add_option("--ceiling", tm_ceiling, "Give up past this start position");

  std::size_t justin_length = 0;
  std::size_t justin_budget = 1'000'000;
  auto* justin_cmd =
      app.add_subcommand("justin-witness", "Justin fixed-point factor avoiding abelian 5-powers cyclically");
  justin_cmd->add_option("--length", justin_length)->required();
  justin_cmd->add_option("--budget", justin_budget);

  std::string suite = "fast";
  bool justin_full = false;
  unsigned repro_jobs = 1;
  auto* repro_cmd = app.add_subcommand("repro", "Run the acceptance criteria");
  repro_cmd->add_option("--suite", suite, "fast or all");
  repro_cmd->add_flag("--justin-full", justin_full, "Run the Justin experiment up to n = 400");
  repro_cmd->add_option("--jobs", repro_jobs);

  std::vector<std::string> storage{"abelcyc"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    if (check_cmd->parsed()) return do_check(check, g, out);
    if (threshold_cmd->parsed()) return do_threshold(threshold_word, threshold_alphabet, g, out);
    if (gen_cmd->parsed()) return do_generate(gen, g, out, err);
    if (count_cmd->parsed()) return do_count(count, g, out);
    if (search_cmd->parsed()) return do_search(search, g, out);
    if (app.got_subcommand("verify-lemmas")) return do_verify_lemmas(g, out);
    if (tm_cmd->parsed()) return do_tm_witness(tm_length, tm_ceiling, g, out);
    if (justin_cmd->parsed()) return do_justin_witness(justin_length, justin_budget, g, out);
    if (repro_cmd->parsed()) return do_repro(suite, justin_full, repro_jobs, g, out);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::search_exhausted) {
      err << "error: " << e.what() << '\n';
      return exit_verdict_false;
    }
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace abelcyc
