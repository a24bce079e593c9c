// Thin bindings: grids are (rows, cols) pairs, monomials and ideals travel as
// text in the x[i,j] notation, structured results as JSON text that the
// package layer decodes.

#include "diagwin/conjecture.hpp"
#include "diagwin/error.hpp"
#include "diagwin/groebner.hpp"
#include "diagwin/linear_quotients.hpp"
#include "diagwin/replay.hpp"
#include "diagwin/resolution.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace diagwin;
using json = nlohmann::ordered_json;

namespace {

WindowChain chain_of(const GridShape& shape, const std::string& text, bool check_order) {
  return WindowChain::parse(shape, text,
                            check_order ? WindowChain::OrderCheck::enforce
                                        : WindowChain::OrderCheck::skip);
}

std::vector<std::string> diagonals(int rows, int cols, int k, int l) {
  const GridShape shape(rows, cols);
  std::vector<std::string> out;
  for (const auto& g : enumerate_diagonals(shape, Window(shape, k, l)))
    out.push_back(g.to_string());
  return out;
}

std::string ideal_product(int rows, int cols, const std::vector<std::string>& ideals) {
  const GridShape shape(rows, cols);
  if (ideals.empty())
    throw DomainError("ideal_product needs at least one ideal");
  std::vector<MonomialIdeal> factors;
  for (const auto& text : ideals)
    factors.push_back(MonomialIdeal::parse(shape, text));
  return product(factors).to_string();
}

std::string colon_ideal(int rows, int cols, const std::string& ideal, const std::string& by) {
  const GridShape shape(rows, cols);
  return colon(MonomialIdeal::parse(shape, ideal), GridMonomial::parse(shape, by)).to_string();
}

std::string linear_quotients(int rows, int cols, const std::string& ideal) {
  const auto chain = quotient_chain(MonomialIdeal::parse(GridShape(rows, cols), ideal));
  json order = json::array(), colons = json::array();
  for (const auto& g : chain.order)
    order.push_back(g.to_string());
  for (const auto& c : chain.colons)
    colons.push_back(c.to_string());
  return json{{"order", order},
              {"colons", colons},
              {"linear", chain.certifies_linear_quotients()}}
      .dump();
}

std::string lemma(int rows, int cols, const std::string& chain, bool force_brute,
                  std::optional<std::size_t> sample, std::uint64_t seed) {
  LemmaOptions options;
  options.force_brute = force_brute;
  if (sample) {
    options.exhaustive = false;
    options.sampled_steps = *sample;
    options.seed = seed;
  }
  const auto report =
      verify_colon_lemma(chain_of(GridShape(rows, cols), chain, !force_brute), options);
  json steps = json::array();
  for (const auto& s : report.steps)
    steps.push_back(to_json(s));
  return json{{"passed", report.passed()}, {"steps", steps}}.dump();
}

std::string betti(int rows, int cols, const std::string& ideal, std::uint64_t field_char,
                  const std::string& method) {
  const auto i = MonomialIdeal::parse(GridShape(rows, cols), ideal);
  if (method == "homology")
    return to_json(betti_table(i, field_char)).dump();
  if (method == "mapping-cone")
    return to_json(mapping_cone_betti(i)).dump();
  throw DomainError("unknown method " + method + " (homology or mapping-cone)");
}

template <class Field>
std::string run_groebner(const Field& field, const WindowChain& chain) {
  const auto gb = buchberger(field, natural_generators(field, chain), TermOrder(chain.shape()));
  const MonomialIdeal initial = initial_ideal(gb);
  json basis = json::array();
  for (const auto& g : gb.basis)
    basis.push_back(g.to_string(field));
  return json{{"char", field.characteristic()},
              {"basis", basis},
              {"initial", initial.to_string()},
              {"ini_equals_J", equals(initial, chain_product_ideal(chain))},
              {"spairs", gb.stats.spairs_reduced}}
      .dump();
}

std::string groebner(int rows, int cols, const std::string& chain, std::uint64_t field_char) {
  const auto c = chain_of(GridShape(rows, cols), chain, true);
  if (field_char == 0)
    return run_groebner(RationalField{}, c);
  return run_groebner(PrimeField(field_char), c);
}

std::string replay() {
  json checks = json::array();
  for (const auto& c : paper_replay().checks)
    checks.push_back(to_json(c));
  return checks.dump();
}

} // namespace

PYBIND11_MODULE(_diagwin, m) {
  m.doc() = "Diagonal-window ideals of a generic matrix";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<WindowConstraintError>(m, "WindowConstraintError", base.ptr());
  py::register_exception<SelectionError>(m, "SelectionError", base.ptr());
  py::register_exception<ShapeMismatchError>(m, "ShapeMismatchError", base.ptr());
  py::register_exception<WindowOrderError>(m, "WindowOrderError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.attr("DEFAULT_CHARACTERISTIC") = kDefaultCharacteristic;

  m.def("diagonals", &diagonals, py::arg("rows"), py::arg("cols"), py::arg("k"), py::arg("l"),
        "Diagonal monomials of the window, in descending order.");
  m.def(
      "diagonal_ideal",
      [](int rows, int cols, int k, int l) {
        const GridShape shape(rows, cols);
        return diagonal_ideal(shape, Window(shape, k, l)).to_string();
      },
      py::arg("rows"), py::arg("cols"), py::arg("k"), py::arg("l"));
  m.def(
      "chain_product",
      [](int rows, int cols, const std::string& chain) {
        return chain_product_ideal(chain_of(GridShape(rows, cols), chain, false)).to_string();
      },
      py::arg("rows"), py::arg("cols"), py::arg("chain"));
  m.def("ideal_product", &ideal_product, py::arg("rows"), py::arg("cols"), py::arg("ideals"));
  m.def("colon", &colon_ideal, py::arg("rows"), py::arg("cols"), py::arg("ideal"), py::arg("by"));
  m.def(
      "ideal_equals",
      [](int rows, int cols, const std::string& a, const std::string& b) {
        const GridShape shape(rows, cols);
        return equals(MonomialIdeal::parse(shape, a), MonomialIdeal::parse(shape, b));
      },
      py::arg("rows"), py::arg("cols"), py::arg("a"), py::arg("b"));
  m.def("_linear_quotients", &linear_quotients, py::arg("rows"), py::arg("cols"),
        py::arg("ideal"));
  m.def("_verify_colon_lemma", &lemma, py::arg("rows"), py::arg("cols"), py::arg("chain"),
        py::arg("force_brute") = false, py::arg("sample") = py::none(), py::arg("seed") = 1);
  m.def("_betti", &betti, py::arg("rows"), py::arg("cols"), py::arg("ideal"),
        py::arg("field_char") = 0, py::arg("method") = "homology");
  m.def(
      "regularity",
      [](int rows, int cols, const std::string& ideal) {
        return regularity(MonomialIdeal::parse(GridShape(rows, cols), ideal));
      },
      py::arg("rows"), py::arg("cols"), py::arg("ideal"));
  m.def("_groebner", &groebner, py::arg("rows"), py::arg("cols"), py::arg("chain"),
        py::arg("field_char") = kDefaultCharacteristic);
  m.def(
      "_conjecture_check",
      [](int rows, int cols, const std::string& chain, std::uint64_t field_char) {
        return to_json(conjecture_check(chain_of(GridShape(rows, cols), chain, true), field_char))
            .dump();
      },
      py::arg("rows"), py::arg("cols"), py::arg("chain"),
      py::arg("field_char") = kDefaultCharacteristic);
  m.def("_paper_replay", &replay);
}
