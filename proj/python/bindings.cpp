#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "valiant/bench.hpp"
#include "valiant/grammar.hpp"
#include "valiant/matrix_file.hpp"
#include "valiant/oracles.hpp"

namespace py = pybind11;

namespace {

using LawRows = std::vector<std::tuple<std::string, bool, std::string>>;

LawRows rows_of(const valiant::LawReport& report) {
  LawRows out;
  for (const auto& r : report.results) out.emplace_back(r.law, r.passed, r.counterexample);
  return out;
}

valiant::TokenMode mode_of(const std::string& name) {
  if (name == "chars") return valiant::TokenMode::chars;
  if (name == "whitespace") return valiant::TokenMode::whitespace;
  throw std::invalid_argument("tokens must be 'chars' or 'whitespace'");
}

}  // namespace

PYBIND11_MODULE(valiant, m) {
  m.doc() = "Valiant-style transitive closure and CNF parsing";

  py::register_exception<valiant::GrammarError>(m, "GrammarError", PyExc_ValueError);
  py::register_exception<valiant::MatrixFileError>(m, "MatrixFileError", PyExc_ValueError);
  py::register_exception<valiant::ConvergenceError>(m, "ConvergenceError",
                                                    PyExc_RuntimeError);

  py::class_<valiant::Grammar>(m, "Grammar")
      .def(py::init([](const std::string& text) { return valiant::load_grammar(text); }),
           py::arg("text"))
      .def_static("load", [](const std::string& path) { return valiant::load_grammar_file(path); },
                  py::arg("path"))
      .def_property_readonly("nonterminals", &valiant::Grammar::nonterminals)
      .def_property_readonly("terminals", &valiant::Grammar::terminals)
      .def_property_readonly("start",
                             [](const valiant::Grammar& g) { return g.name(g.start()); })
      .def_property_readonly("binary_rule_count",
                             [](const valiant::Grammar& g) { return g.binary_rules().size(); })
      .def_property_readonly("unary_rule_count",
                             [](const valiant::Grammar& g) { return g.unary_rules().size(); })
      .def("sing",
           [](const valiant::Grammar& g, const std::string& token) {
             std::vector<std::string> names;
             g.sing(token).for_each([&](valiant::NonTerminal n) { names.push_back(g.name(n)); });
             return names;
           })
      .def("to_text", [](const valiant::Grammar& g) { return valiant::to_text(g); });

  m.def("tokenize",
        [](const std::string& text, const std::string& mode) {
          return valiant::tokenize(text, mode_of(mode));
        },
        py::arg("text"), py::arg("mode") = "chars");

  m.def("recognize",
        [](const valiant::Grammar& g, const std::vector<std::string>& tokens, bool skewed) {
          return valiant::recognize(g, tokens,
                                    skewed ? valiant::ChartShape::skewed
                                           : valiant::ChartShape::balanced);
        },
        py::arg("grammar"), py::arg("tokens"), py::arg("skewed") = false);

  m.def("parse",
        [](const valiant::Grammar& g,
           const std::vector<std::string>& tokens) -> std::optional<std::string> {
          auto tree = valiant::parse(g, tokens);
          if (!tree) return std::nullopt;
          return valiant::to_sexpr(g, *tree);
        },
        py::arg("grammar"), py::arg("tokens"),
        "One derivation as an S-expression, or None when the input is rejected.");

  m.def("validate_tree",
        [](const valiant::Grammar& g, const std::vector<std::string>& tokens,
           const std::string& sexpr) {
          return valiant::validate_tree(g, tokens, valiant::tree_from_sexpr(g, sexpr));
        },
        py::arg("grammar"), py::arg("tokens"), py::arg("sexpr"));

  m.def("chart",
        [](const valiant::Grammar& g, const std::vector<std::string>& tokens) {
          const valiant::GrammarSnr snr(g);
          const auto dense = valiant::to_dense(snr, valiant::complete_chart(g, tokens));
          py::dict cells;
          for (std::size_t i = 0; i < dense.size(); ++i)
            for (std::size_t j = i + 1; j < dense.size(); ++j) {
              if (dense[i][j].empty()) continue;
              std::vector<std::string> names;
              dense[i][j].for_each([&](valiant::NonTerminal n) { names.push_back(g.name(n)); });
              cells[py::make_tuple(i, j)] = names;
            }
          return cells;
        },
        py::arg("grammar"), py::arg("tokens"),
        "Closed chart as {(i, j): [nonterminals]} over non-empty cells.");

  m.def("enumerate_language",
        [](const valiant::Grammar& g, std::size_t max_len) {
          const auto lang = valiant::enumerate_language(g, max_len);
          return std::vector<std::vector<std::string>>(lang.begin(), lang.end());
        },
        py::arg("grammar"), py::arg("max_len"));

  m.def("close_matrix",
        [](const std::string& json_text, const std::string& oracle) {
          return valiant::write_matrix_file(valiant::close_matrix_file(
              valiant::parse_matrix_file(json_text), valiant::closure_method_from_name(oracle)));
        },
        py::arg("matrix_json"), py::arg("oracle") = "valiant");

  m.def("check_laws",
        [](const std::string& semiring, std::size_t samples, std::uint64_t seed) {
          if (valiant::semiring_from_name(semiring) == valiant::SemiringKind::boolean)
            return rows_of(valiant::check_laws(valiant::BoolSnr{}, samples, seed));
          return rows_of(valiant::check_laws(valiant::MinPlusSnr{}, samples, seed));
        },
        py::arg("semiring"), py::arg("samples") = 500, py::arg("seed") = 1);

  m.def("check_grammar_laws",
        [](const valiant::Grammar& g, std::size_t samples, std::uint64_t seed) {
          return rows_of(valiant::check_laws(valiant::GrammarSnr(g), samples, seed));
        },
        py::arg("grammar"), py::arg("samples") = 500, py::arg("seed") = 1);

  m.def("shape_for", [](std::size_t n) { return valiant::to_string(valiant::shape_for(n)); },
        py::arg("n"));

  m.def("hierarchical_parens", &valiant::hierarchical_parens, py::arg("n"),
        py::arg("seed") = 2024);
}
