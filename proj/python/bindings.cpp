#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hsgon/error.hpp"
#include "hsgon/gen.hpp"
#include "hsgon/ratfun.hpp"
#include "hsgon/report.hpp"
#include "hsgon/schreier.hpp"

namespace py = pybind11;
using namespace hsgon;

namespace {

Alphabet alphabet_of(const std::string& letters) { return Alphabet(std::vector<char>(letters.begin(), letters.end())); }

std::vector<std::string> strings(const PolyQ& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

CosetPartition load(const std::string& text) { return verify_partition(parse_partition(parse_json_text(text))); }

}  // namespace

PYBIND11_MODULE(_hsgon, m) {
  m.doc() = "Schreier graphs and coset partitions of free groups";

  static py::exception<Error> error(m, "HsgonError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<SchreierGraph>(m, "SchreierGraph")
      .def_property_readonly("index", &SchreierGraph::index)
      .def_property_readonly("rank", &SchreierGraph::rank)
      .def_property_readonly("period", [](const SchreierGraph& g) { return period(g); })
      .def_property_readonly("action", &SchreierGraph::action)
      .def("transition_matrix",
           [](const SchreierGraph& g) {
             const IntMatrix a = transition_matrix(g);
             std::vector<std::vector<std::int64_t>> rows(a.rows(), std::vector<std::int64_t>(a.cols()));
             for (std::size_t i = 0; i < a.rows(); ++i)
               for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
             return rows;
           })
      .def("denominator", [](const SchreierGraph& g) { return strings(denominator_poly(transition_matrix(g))); },
           "Coefficients of det(I - zA) as rational strings, constant term first.")
      .def("generating_function",
           [](const SchreierGraph& g, Vertex i, Vertex j) {
             if (i >= g.index() || j >= g.index()) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
             const RationalFunction f = generating_function(g, i, j);
             return py::make_tuple(strings(f.numerator), strings(f.denominator));
           },
           py::arg("i"), py::arg("j"), "(numerator, denominator) coefficient strings of p_ij(z).")
      .def("walk",
           [](const SchreierGraph& g, const std::string& word) {
             return walk(g, g.base(), parse_word(word, g.alphabet()));
           })
      .def("__eq__", [](const SchreierGraph& a, const SchreierGraph& b) { return a == b; });

  m.def("fold",
        [](const std::vector<std::string>& generators, const std::string& alphabet) {
          const Alphabet al = alphabet_of(alphabet);
          std::vector<FreeWord> words;
          for (const auto& g : generators) words.push_back(parse_word(g, al));
          return fold(words, al);
        },
        py::arg("generators"), py::arg("alphabet") = "ab", "Stallings folding of the given generators.");
  m.def("from_action",
        [](const std::vector<Permutation>& perms, Vertex base, const std::string& alphabet) {
          return from_action(alphabet_of(alphabet), perms, base);
        },
        py::arg("permutations"), py::arg("base") = 0, py::arg("alphabet") = "ab");
  m.def("subgroup_from_json", [](const std::string& text) { return parse_subgroup(parse_json_text(text)); });
  m.def("graph_report", [](const std::string& text) { return graph_report(parse_subgroup(parse_json_text(text))).dump(); },
        "Graph report for a subgroup JSON document, as JSON text.");

  m.def("verify_partition", [](const std::string& text) { return partition_json(load(text)).dump(); },
        "Validate a partition JSON document; returns it with parts sorted by index.");
  m.def("census", [](const std::string& text, unsigned k_max) { return census_report(load(text), k_max).dump(); },
        py::arg("partition"), py::arg("k_max") = 6);
  m.def("analyze",
        [](const std::string& text, unsigned k_max) {
          AnalyzeOptions options;
          options.k_max = k_max;
          return analyze(load(text), options).report.dump();
        },
        py::arg("partition"), py::arg("k_max") = 8, "Full analysis report as JSON text.");
  m.def("random_partition",
        [](std::uint64_t seed, unsigned depth, std::size_t rank, unsigned target_period, std::size_t guard,
           unsigned coherent_percent) {
          GenConfig c;
          c.seed = seed;
          c.depth = depth;
          c.rank = rank;
          c.guard = guard;
          c.coherent_percent = coherent_percent;
          return partition_json(target_period == 0 ? generate(c) : generate_with_period(c, target_period)).dump();
        },
        py::arg("seed"), py::arg("depth") = 2, py::arg("rank") = 2, py::arg("target_period") = 0,
        py::arg("guard") = 256, py::arg("coherent_percent") = 0);
}
