#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abelcyc/avoidance.hpp"
#include "abelcyc/constructions.hpp"
#include "abelcyc/error.hpp"
#include "abelcyc/morphism.hpp"
#include "abelcyc/report_json.hpp"
#include "abelcyc/search.hpp"

namespace py = pybind11;
using namespace abelcyc;

namespace {

Word to_word(const std::string& text, std::optional<unsigned> k) { return Word::parse(text, k); }

py::dict report_dict(const AvoidanceReport& r) {
  py::dict d;
  d["word"] = r.word.str();
  d["mode"] = to_string(r.mode);
  d["kind"] = to_string(r.kind);
  d["exponent"] = r.threshold.str() + (r.strict_plus ? "+" : "");
  d["verdict"] = r.verdict;
  if (r.witness) {
    py::dict w;
    w["start"] = r.witness->start;
    w["period"] = r.witness->period;
    w["exponent"] = r.witness->exponent.fraction_str();
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

std::vector<std::uint64_t> counts(const ParikhVector& p) { return {p.counts().begin(), p.counts().end()}; }

}  // namespace

PYBIND11_MODULE(_abelcyc, m) {
  m.doc() = "Cyclic, circular and linear avoidance of abelian and ordinary powers";

  static py::exception<Error> error(m, "AbelcycError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("parikh", [](const std::string& w, std::optional<unsigned> k) { return counts(parikh(to_word(w, k))); },
        py::arg("word"), py::arg("alphabet") = py::none());
  m.def("delta", [](const std::string& w) { return delta(to_word(w, 2)); }, py::arg("word"));
  m.def("conjugate", [](const std::string& w, std::size_t i) { return conjugate(to_word(w, std::nullopt), i).str(); },
        py::arg("word"), py::arg("i"));
  m.def("complement_reverse", [](const std::string& w) { return complement_reverse(to_word(w, 2)).str(); },
        py::arg("word"));
  m.def("gcd_criterion", [](const std::string& w, std::optional<unsigned> k) { return gcd_criterion(to_word(w, k)); },
        py::arg("word"), py::arg("alphabet") = py::none());

  m.def(
      "check",
      [](const std::string& w, const std::string& exponent, const std::string& mode, const std::string& kind,
         std::optional<unsigned> k) {
        return report_dict(check_avoidance(to_word(w, k), parse_mode(mode), parse_kind(kind),
                                           ExponentSpec::parse(exponent)));
      },
      py::arg("word"), py::arg("exponent"), py::arg("mode") = "cyclic", py::arg("kind") = "abelian",
      py::arg("alphabet") = py::none(),
      "Avoidance report as a dict with the same fields as the CLI's JSON output.");
  m.def(
      "min_avoided_abelian_exponent",
      [](const std::string& w, std::optional<unsigned> k) { return min_avoided_abelian_exponent(to_word(w, k)); },
      py::arg("word"), py::arg("alphabet") = py::none(), "Least N avoided cyclically, or None for infinity.");

  m.def("builtin_morphism_names", &builtin_morphism_names);
  m.def("morphism_images", [](const std::string& name) {
    std::vector<std::string> out;
    const Morphism mor = builtin_morphism(name);
    for (const Word& w : mor.images()) out.push_back(w.str());
    return out;
  });
  m.def(
      "apply_morphism",
      [](const std::string& name, const std::string& w) {
        const Morphism mor = builtin_morphism(name);
        return mor.apply(Word::parse(w, mor.domain_size())).str();
      },
      py::arg("morphism"), py::arg("word"));
  m.def(
      "fixed_point_prefix",
      [](const std::string& name, std::size_t min_length, const std::string& seed) {
        const Morphism mor = builtin_morphism(name);
        return fixed_point_prefix(mor, Word::parse(seed, mor.domain_size()), min_length).str();
      },
      py::arg("morphism"), py::arg("min_length"), py::arg("seed") = "0");
  m.def(
      "language_factors",
      [](const std::string& name, std::size_t max_length) {
        std::vector<std::string> out;
        for (const Word& w : language_factors(builtin_morphism(name), max_length)) out.push_back(w.str());
        return out;
      },
      py::arg("morphism"), py::arg("max_length"));

  m.def("build_binary_avoider", [](std::size_t n, Symbol d) { return build_binary_avoider(n, d).str(); },
        py::arg("n"), py::arg("diamond") = 0);
  m.def("build_marked_avoider", [](unsigned k, std::size_t n) { return build_marked_avoider(k, n).str(); },
        py::arg("alphabet"), py::arg("n"));
  m.def("a_infinity_witness", [](unsigned k, std::size_t n) { return a_infinity_witness(k, n).str(); },
        py::arg("alphabet"), py::arg("min_length"));

  m.def("count_cyclic_avoiders", &count_cyclic_avoiders, py::arg("alphabet"), py::arg("length"),
        py::arg("exponent"), py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "find_witness",
      [](unsigned k, std::size_t n, const std::string& exponent, const std::string& kind, const std::string& mode,
         unsigned jobs) -> std::optional<std::string> {
        SearchTask t;
        t.alphabet_size = k;
        t.length = n;
        t.exponent = ExponentSpec::parse(exponent);
        t.kind = parse_kind(kind);
        t.mode = parse_mode(mode);
        std::optional<Word> w;
        {
          py::gil_scoped_release release;
          w = find_witness(t, jobs);
        }
        if (!w) return std::nullopt;
        return w->str();
      },
      py::arg("alphabet"), py::arg("length"), py::arg("exponent"), py::arg("kind") = "abelian",
      py::arg("mode") = "cyclic", py::arg("jobs") = 1);
  m.def(
      "thue_morse_factor_witness",
      [](std::size_t n) {
        const FactorWitness f = thue_morse_factor_witness(n);
        return py::make_tuple(f.word.str(), f.position);
      },
      py::arg("n"));
  m.def(
      "justin_factor_witness",
      [](std::size_t n, std::size_t budget) -> py::object {
        const auto f = justin_factor_witness(n, budget);
        if (!f) return py::none();
        return py::make_tuple(f->word.str(), f->position);
      },
      py::arg("n"), py::arg("budget"));
  m.def("verify_delta_lemmas", [] {
    py::list out;
    for (const auto& r : verify_delta_lemmas()) {
      py::dict d;
      d["id"] = r.id;
      d["claim"] = r.claim;
      d["factors_checked"] = r.factors_checked;
      d["min_delta"] = r.min_delta;
      d["violations"] = r.violations.size();
      d["passed"] = r.passed();
      out.append(d);
    }
    return out;
  });
}
