#include "diagwin/replay.hpp"

#include "diagwin/error.hpp"
#include "diagwin/linear_quotients.hpp"
#include "diagwin/matrix_model.hpp"

#include <algorithm>
#include <sstream>

namespace diagwin {

// Defined in the generated golden_data.cpp.
std::string_view embedded_golden(std::string_view name);

std::string_view golden_file(std::string_view name) {
  const std::string_view text = embedded_golden(name);
  if (text.data() == nullptr)
    throw DomainError("no golden data file named " + std::string(name));
  return text;
}

std::vector<std::string> golden_lines(std::string_view name) {
  std::istringstream in{std::string(golden_file(name))};
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line.front() == '#')
      continue;
    out.push_back(line);
  }
  return out;
}

bool ReplayReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const ReplayCheck& c) { return c.match; });
}

namespace {

GridMonomial mono(const GridShape& shape, std::string_view text) {
  return GridMonomial::parse(shape, text);
}

void add(ReplayReport& report, std::string name, std::string expected, std::string actual) {
  const bool match = expected == actual;
  report.checks.push_back({std::move(name), std::move(expected), std::move(actual), match});
}

void replay_j26(ReplayReport& report) {
  const GridShape shape(3, 8);
  const Window w(shape, 2, 6);
  const MonomialIdeal j26 = diagonal_ideal(shape, w);
  add(report, "J_{2,6} generators", golden_lines("j26_generators.txt").at(0), j26.to_string());

  const auto colons = golden_lines("j26_colons.txt");
  const QuotientChain chain = quotient_chain(j26);
  for (std::size_t u = 1; u <= colons.size(); ++u) {
    const std::string actual =
        u - 1 < chain.colons.size() ? chain.colons[u - 1].to_string() : std::string("<missing>");
    add(report, "J_{2,6} colon u=" + std::to_string(u), colons[u - 1], actual);
    const std::string closed = closed_form_colon_single(shape, w, chain.order[u]).to_string();
    add(report, "J_{2,6} closed form u=" + std::to_string(u), colons[u - 1], closed);
  }
  add(report, "J_{2,6} colon chain length", std::to_string(colons.size()),
      std::to_string(chain.colons.size()));
}

void replay_redistribution(ReplayReport& report) {
  const GridShape shape(6, 16);
  const WindowChain chain(shape, {Window(shape, 1, 12), Window(shape, 3, 13),
                                  Window(shape, 7, 15), Window(shape, 9, 16),
                                  Window(shape, 10, 16)});
  const std::vector<GridMonomial> factors{
      mono(shape, "x[1,4]*x[2,5]*x[3,6]*x[4,8]*x[5,10]*x[6,12]"),
      mono(shape, "x[1,3]*x[2,6]*x[3,7]*x[4,9]*x[5,10]*x[6,11]"),
      mono(shape, "x[1,7]*x[2,8]*x[3,9]*x[4,11]*x[5,13]*x[6,15]"),
      mono(shape, "x[1,9]*x[2,11]*x[3,13]*x[4,14]*x[5,15]*x[6,16]"),
      mono(shape, "x[1,10]*x[2,11]*x[3,12]*x[4,13]*x[5,14]*x[6,16]")};
  const GridMonomial f = mono(shape, "x[1,1]*x[2,3]*x[3,6]*x[4,7]*x[5,8]*x[6,11]");

  const auto expected = golden_lines("redistribution_6x16.txt");
  const auto h = redistribute(chain, factors);
  for (std::size_t j = 0; j < expected.size(); ++j)
    add(report, "6x16 h_" + std::to_string(j + 1), expected[j],
        j < h.size() ? h[j].to_string() : std::string("<missing>"));

  GridMonomial product_g(shape), product_h(shape);
  for (std::size_t j = 0; j < factors.size(); ++j) {
    product_g = product_g * factors[j];
    product_h = product_h * h[j];
  }
  add(report, "6x16 product preserved", product_g.to_string(), product_h.to_string());
  const GridMonomial g = f.gcd(product_g);
  add(report, "6x16 gcd(f, g_1...g_5)", "x[3,6]*x[6,11]", g.to_string());
  add(report, "6x16 gcd divides h_1", "true", g.divides(h[0]) ? "true" : "false");
}

void replay_row_vector(ReplayReport& report) {
  const GridShape shape(1, 3);
  const MonomialIdeal i12 = diagonal_ideal(shape, Window(shape, 1, 2));
  const MonomialIdeal i23 = diagonal_ideal(shape, Window(shape, 2, 3));
  add(report, "1x3 J_{1,2}", "<x[1,1], x[1,2]>", i12.to_string());
  add(report, "1x3 J_{1,2}*J_{2,3}", golden_lines("row_vector_product.txt").at(0),
      product(i12, i23).to_string());
}

void replay_counterexamples(ReplayReport& report) {
  {
    const GridShape shape(3, 9);
    const MonomialIdeal j37 = diagonal_ideal(shape, Window(shape, 3, 7));
    const MonomialIdeal j15 = diagonal_ideal(shape, Window(shape, 1, 5));
    const GridMonomial f = mono(shape, "x[1,3]*x[2,4]*x[3,5]");
    const bool differs = !equals(colon(product(j37, j15), f), j15);
    add(report, "(J_{3,7}J_{1,5} : x13x24x35) != J_{1,5}", "true", differs ? "true" : "false");
  }
  {
    const GridShape shape(3, 8);
    const Window w28(shape, 2, 8);
    const MonomialIdeal j28 = diagonal_ideal(shape, w28);
    const MonomialIdeal j37 = diagonal_ideal(shape, Window(shape, 3, 7));
    const GridMonomial f = mono(shape, "x[1,4]*x[2,6]*x[3,7]");
    std::vector<GridMonomial> gens = product(j28, j37).generators();
    for (const auto& d : enumerate_diagonals(shape, w28)) {
      if (d == f)
        break;
      gens.push_back(d);
    }
    const MonomialIdeal lhs = colon(minimalize(shape, gens), f);
    const MonomialIdeal rhs =
        sum(j37, MonomialIdeal::parse(shape, "<x[1,2], x[1,3], x[2,5]>"));
    add(report, "(J_{2,8}J_{3,7}, f_1..f_u : x14x26x37) != J_{3,7} + (x12, x13, x25)", "true",
        !equals(lhs, rhs) ? "true" : "false");
  }
}

} // namespace

ReplayReport paper_replay() {
  ReplayReport report;
  replay_j26(report);
  replay_redistribution(report);
  replay_row_vector(report);
  replay_counterexamples(report);
  return report;
}

nlohmann::ordered_json to_json(const ReplayCheck& check) {
  return {{"check", check.name},
          {"expected", check.expected},
          {"actual", check.actual},
          {"match", check.match}};
}

} // namespace diagwin
