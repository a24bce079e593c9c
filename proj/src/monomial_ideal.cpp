#include "diagwin/monomial_ideal.hpp"

#include "diagwin/error.hpp"

#include <algorithm>
#include <cctype>

namespace diagwin {

namespace {

void require_shape(const GridShape& expected, const GridShape& actual) {
  if (!(expected == actual))
    throw ShapeMismatchError("ideal operands live on different grids");
}

} // namespace

MonomialIdeal MonomialIdeal::unit(GridShape shape) {
  return minimalize(shape, {GridMonomial(shape)});
}

bool MonomialIdeal::is_generated_in_degree(unsigned d) const {
  return !gens_.empty() &&
         std::all_of(gens_.begin(), gens_.end(), [d](const auto& g) { return g.degree() == d; });
}

bool MonomialIdeal::is_generated_by_variables() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const auto& g) { return g.degree() == 1; });
}

std::string MonomialIdeal::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i != 0)
      out += ", ";
    out += gens_[i].to_string();
  }
  return out + ">";
}

MonomialIdeal MonomialIdeal::parse(GridShape shape, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '<' || text.back() != '>')
    throw ParseError("ideal '" + std::string(text) + "' must be enclosed in <...>");
  std::string_view body = trim(text.substr(1, text.size() - 2));
  std::vector<GridMonomial> gens;
  while (!body.empty()) {
    // Commas also occur inside x[i,j]; split only at commas outside brackets.
    std::size_t depth = 0, cut = std::string_view::npos;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '[')
        ++depth;
      else if (body[i] == ']')
        --depth;
      else if (body[i] == ',' && depth == 0) {
        cut = i;
        break;
      }
    }
    gens.push_back(GridMonomial::parse(shape, trim(body.substr(0, cut))));
    body = cut == std::string_view::npos ? std::string_view{} : trim(body.substr(cut + 1));
  }
  return minimalize(shape, std::move(gens));
}

bool divides(const GridMonomial& a, const GridMonomial& b) { return a.divides(b); }

bool membership(const MonomialIdeal& ideal, const GridMonomial& g) {
  require_shape(ideal.shape(), g.shape());
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const GridMonomial& gen) { return gen.divides(g); });
}

MonomialIdeal minimalize(GridShape shape, std::vector<GridMonomial> gens) {
  for (const auto& g : gens)
    require_shape(shape, g.shape());

  // A monomial can only be divided by a distinct monomial of strictly smaller
  // degree, so after deduplication only lower-degree survivors are checked.
  std::sort(gens.begin(), gens.end(), [](const GridMonomial& a, const GridMonomial& b) {
    if (a.degree() != b.degree())
      return a.degree() < b.degree();
    return compare_unchecked(a, b) == std::strong_ordering::greater;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<GridMonomial> kept;
  kept.reserve(gens.size());
  std::size_t lower_end = 0; // kept[0, lower_end) have degree < current degree
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0 && gens[i].degree() != gens[i - 1].degree())
      lower_end = kept.size();
    const auto& g = gens[i];
    bool redundant = false;
    for (std::size_t j = 0; j < lower_end && !redundant; ++j)
      redundant = kept[j].divides(g);
    if (!redundant)
      kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), TauDescending{});

  MonomialIdeal out(shape);
  out.gens_ = std::move(kept);
  return out;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_shape(a.shape(), b.shape());
  std::vector<GridMonomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators())
      gens.push_back(g * h);
  return minimalize(a.shape(), std::move(gens));
}

MonomialIdeal product(std::span<const MonomialIdeal> factors) {
  if (factors.empty())
    throw DomainError("product of an empty list of ideals");
  MonomialIdeal out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i)
    out = product(out, factors[i]);
  return out;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_shape(a.shape(), b.shape());
  std::vector<GridMonomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.shape(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const GridMonomial& f) {
  require_shape(ideal.shape(), f.shape());
  std::vector<GridMonomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators())
    gens.push_back(g / g.gcd(f));
  return minimalize(ideal.shape(), std::move(gens));
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_shape(a.shape(), b.shape());
  return a.generators() == b.generators();
}

bool contains(const MonomialIdeal& b, const MonomialIdeal& a) {
  require_shape(a.shape(), b.shape());
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const GridMonomial& g) { return membership(b, g); });
}

nlohmann::ordered_json to_json(const MonomialIdeal& ideal) {
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& g : ideal.generators()) {
    nlohmann::ordered_json factors = nlohmann::ordered_json::array();
    for (const auto& [v, e] : g.factors())
      factors.push_back({v.row, v.col, e});
    gens.push_back(std::move(factors));
  }
  return {{"shape", {ideal.shape().rows(), ideal.shape().cols()}}, {"gens", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const nlohmann::ordered_json& j) {
  try {
    const GridShape shape(j.at("shape").at(0).get<int>(), j.at("shape").at(1).get<int>());
    std::vector<GridMonomial> gens;
    for (const auto& g : j.at("gens")) {
      std::vector<std::pair<VarIndex, Exponent>> factors;
      for (const auto& f : g)
        factors.push_back({VarIndex{f.at(0).get<int>(), f.at(1).get<int>()},
                           f.at(2).get<Exponent>()});
      gens.push_back(GridMonomial::from_factors(shape, factors));
    }
    return minimalize(shape, std::move(gens));
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ParseError(std::string("ideal JSON: ") + e.what());
  }
}

} // namespace diagwin
