#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kbraid/braid.hpp"
#include "kbraid/dynamics.hpp"
#include "kbraid/error.hpp"
#include "kbraid/group.hpp"
#include "kbraid/picture.hpp"
#include "kbraid/reduce.hpp"
#include "kbraid/word_io.hpp"

namespace py = pybind11;
using namespace kbraid;

namespace {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::parse_error: return "parse_error";
    case Errc::move_not_applicable: return "move_not_applicable";
    case Errc::unsupported_signature: return "unsupported_signature";
    case Errc::signature_mismatch: return "signature_mismatch";
    case Errc::budget_exhausted: return "budget_exhausted";
    case Errc::degenerate_input: return "degenerate_input";
    case Errc::not_pleasant: return "not_pleasant";
  }
  return "unknown";
}

ReduceOptions budget_options(std::size_t budget) {
  ReduceOptions o;
  o.budget = budget;
  return o;
}

InvariantOptions invariant_options(const std::string& shape, std::uint64_t seed) {
  InvariantOptions o;
  o.seed = seed;
  if (shape == "radial") {
    o.realize.shape = DetourShape::radial;
  } else if (shape == "apex") {
    o.realize.shape = DetourShape::apex;
  } else {
    throw Error(Errc::invalid_argument, "shape must be 'radial' or 'apex'");
  }
  return o;
}

std::vector<std::vector<int>> letter_lists(const std::vector<Multiindex>& letters) {
  std::vector<std::vector<int>> out;
  for (Multiindex m : letters) out.push_back(m.indices());
  return out;
}

std::optional<Signature> optional_signature(std::optional<int> n, std::optional<int> k) {
  if (!n && !k) return std::nullopt;
  if (!n || !k) throw Error(Errc::invalid_argument, "give both n and k or neither");
  return make_signature(*n, *k);
}

const PropertyDetector& detector_for(int arity) {
  static const PropertyDetector three = collinearity_detector();
  static const PropertyDetector four = concyclicity_detector();
  if (arity == 3) return three;
  if (arity == 4) return four;
  throw Error(Errc::invalid_argument, "k must be 3 or 4");
}

}  // namespace

PYBIND11_MODULE(_kbraid, m) {
  m.doc() = "Free k-braid groups G_n^k and invariants of point motions";

  static py::exception<Error> error(m, "KbraidError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(errc_name(e.code()), e.what()).ptr());
    }
  });

  m.attr("DEFAULT_BUDGET") = kDefaultBudget;

  py::class_<Word>(m, "Word")
      .def(py::init([](const std::string& text, std::optional<int> n, std::optional<int> k) {
             return parse_word(text, optional_signature(n, k));
           }),
           py::arg("text"), py::arg("n") = py::none(), py::arg("k") = py::none())
      .def_property_readonly("n", [](const Word& w) { return w.signature.n; })
      .def_property_readonly("k", [](const Word& w) { return w.signature.k; })
      .def_property_readonly("letters", [](const Word& w) { return letter_lists(w.letters); })
      .def("__len__", &Word::size)
      .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
      .def("__hash__", [](const Word& w) { return py::hash(py::str(format_word(w, true))); })
      .def("__str__", [](const Word& w) { return format_word(w); })
      .def("__repr__", [](const Word& w) { return "Word('" + format_word(w, true) + "')"; })
      .def("inverse", [](const Word& w) { return inverse(w); })
      .def("__mul__", [](const Word& a, const Word& b) { return concat(a, b); })
      .def("neighbors", &neighbors)
      .def("parity", [](const Word& w) { return parity_vector(w).bits; });

  py::class_<CyclicWord>(m, "CyclicWord")
      .def(py::init([](const std::string& text, std::optional<int> n, std::optional<int> k) {
             return parse_cyclic_word(text, optional_signature(n, k));
           }),
           py::arg("text"), py::arg("n") = py::none(), py::arg("k") = py::none())
      .def(py::init(&to_cyclic), py::arg("word"))
      .def_property_readonly("n", [](const CyclicWord& w) { return w.signature.n; })
      .def_property_readonly("k", [](const CyclicWord& w) { return w.signature.k; })
      .def_property_readonly("letters", [](const CyclicWord& w) { return letter_lists(w.letters); })
      .def("__len__", &CyclicWord::size)
      .def("__eq__", [](const CyclicWord& a, const CyclicWord& b) { return a == b; })
      .def("__str__", [](const CyclicWord& w) { return format_cyclic_word(w); })
      .def("__repr__", [](const CyclicWord& w) { return "CyclicWord('" + format_cyclic_word(w, true) + "')"; });

  m.def("generators", [](int n, int k) { return letter_lists(enumerate_generators(make_signature(n, k))); },
        py::arg("n"), py::arg("k"));
  m.def("relations", [](int n, int k) { return format_relations(enumerate_tetrahedron_relations(make_signature(n, k))); },
        py::arg("n"), py::arg("k"));

  m.def(
      "reduce",
      [](const Word& w, std::size_t budget) {
        const Reduction r = reduce(w, budget_options(budget));
        return py::make_tuple(r.minimal, r.exhausted);
      },
      py::arg("word"), py::arg("budget") = kDefaultBudget);
  m.def("canonical_form", [](const Word& w, std::size_t budget) { return canonical_form(w, budget_options(budget)); },
        py::arg("word"), py::arg("budget") = kDefaultBudget);
  m.def(
      "complexity",
      [](const Word& w, std::size_t budget) {
        const Complexity c = complexity(w, budget_options(budget));
        return py::make_tuple(c.length, c.exact);
      },
      py::arg("word"), py::arg("budget") = kDefaultBudget);
  m.def("are_equal", [](const Word& a, const Word& b, std::size_t budget) {
        return std::string(to_string(are_equal(a, b, budget_options(budget))));
      },
        py::arg("a"), py::arg("b"), py::arg("budget") = kDefaultBudget);
  m.def("are_conjugate", [](const CyclicWord& a, const CyclicWord& b, std::size_t budget) {
        return std::string(to_string(are_conjugate(a, b, budget_options(budget))));
      },
        py::arg("a"), py::arg("b"), py::arg("budget") = kDefaultBudget);

  m.def(
      "invariant",
      [](const std::string& braid, int n, int k, const std::string& shape, std::uint64_t seed) {
        const BraidWord b = parse_artin(braid, n);
        const InvariantOptions o = invariant_options(shape, seed);
        if (k == 3) return invariant_c(b, o);
        if (k == 4) return invariant_c4(b, o);
        throw Error(Errc::invalid_argument, "k must be 3 or 4");
      },
      py::arg("braid"), py::arg("n"), py::arg("k") = 3, py::arg("shape") = "radial", py::arg("seed") = 0);
  m.def(
      "closed_invariant",
      [](const std::string& braid, int n, const std::string& shape, std::uint64_t seed) {
        return closed_invariant(parse_artin(braid, n), invariant_options(shape, seed));
      },
      py::arg("braid"), py::arg("n"), py::arg("shape") = "radial", py::arg("seed") = 0);
  m.def("permutation", [](const std::string& braid, int n) { return permutation_of(parse_artin(braid, n)); },
        py::arg("braid"), py::arg("n"));
  m.def(
      "relabel",
      [](const CyclicWord& w, const std::vector<int>& image) { return relabel(w, image); }, py::arg("word"),
      py::arg("image"));
  m.def(
      "lower_bound",
      [](const std::string& braid, int n, std::size_t budget) {
        const TrisecantCertificate c = trisecant_certificate(parse_artin(braid, n), {}, budget_options(budget));
        return to_json(c);
      },
      py::arg("braid"), py::arg("n"), py::arg("budget") = kDefaultBudget);
  m.def(
      "artin_neighbors",
      [](const std::string& braid, int n) {
        std::vector<std::string> out;
        for (const BraidWord& b : artin_neighbors(parse_artin(braid, n))) out.push_back(format_artin(b));
        return out;
      },
      py::arg("braid"), py::arg("n"));

  m.def(
      "scan",
      [](const std::string& system_text, int k) {
        const DynamicalSystem s = parse_system(system_text);
        const PropertyDetector& d = detector_for(k);
        const EventScan scan = isolate_event_times(s, d);
        const PleasantnessReport report = pleasantness_check(s, d);
        py::dict out;
        out["events"] = format_events(scan);
        out["pleasant"] = report.pleasant();
        std::vector<std::string> kinds;
        for (const Violation& v : report.violations) kinds.push_back(to_string(v.kind));
        out["violations"] = kinds;
        out["type"] = report.pleasant() ? py::cast(event_word(scan)) : py::none();
        return out;
      },
      py::arg("system"), py::arg("k") = 3);

  m.def("render_svg", [](const Word& w) { return render_svg(layout(w)); }, py::arg("word"));
  m.def("render_dot", [](const Word& w, std::size_t budget) { return render_minimal_graph(w, budget_options(budget)); },
        py::arg("word"), py::arg("budget") = kDefaultBudget);
}
