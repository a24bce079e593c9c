#include "diagwin/linear_quotients.hpp"

#include "diagwin/error.hpp"

#include <algorithm>
#include <numeric>
#include <iterator>
#include <random>

namespace diagwin {

bool QuotientChain::certifies_linear_quotients() const {
  return std::all_of(colons.begin(), colons.end(),
                     [](const MonomialIdeal& c) { return c.is_generated_by_variables(); });
}

std::vector<std::size_t> QuotientChain::colon_sizes() const {
  std::vector<std::size_t> sizes{0};
  for (const auto& c : colons)
    sizes.push_back(c.size());
  return sizes;
}

QuotientChain quotient_chain(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    throw DomainError("quotient chain of the zero ideal");
  QuotientChain chain;
  chain.order = ideal.generators();
  MonomialIdeal prefix(ideal.shape());
  for (std::size_t u = 1; u < chain.order.size(); ++u) {
    prefix = sum(prefix, minimalize(ideal.shape(), {chain.order[u - 1]}));
    chain.colons.push_back(colon(prefix, chain.order[u]));
  }
  return chain;
}

namespace {

ColumnSelection require_diagonal_of(const GridShape& shape, const Window& w,
                                    const GridMonomial& f) {
  if (!(f.shape() == shape))
    throw ShapeMismatchError("monomial and window live on different grids");
  auto selection = ColumnSelection::from_diagonal(f);
  if (!selection || !selection->within(w))
    throw DomainError(f.to_string() + " is not a diagonal monomial of window (" +
                      std::to_string(w.k()) + "," + std::to_string(w.l()) + ")");
  return *selection;
}

} // namespace

std::vector<GridMonomial> gap_variables(const GridShape& shape, const Window& w,
                                        const GridMonomial& f) {
  const ColumnSelection selection = require_diagonal_of(shape, w, f);
  std::vector<GridMonomial> vars;
  int previous = w.k() - 1;
  for (int i = 1; i <= shape.rows(); ++i) {
    const int c = selection.col(i);
    for (int b = previous + 1; b < c; ++b)
      vars.push_back(GridMonomial::variable(shape, {i, b}));
    previous = c;
  }
  return vars;
}

MonomialIdeal closed_form_colon_single(const GridShape& shape, const Window& w,
                                       const GridMonomial& f) {
  return minimalize(shape, gap_variables(shape, w, f));
}

namespace {

MonomialIdeal tail_product(const WindowChain& chain) {
  std::vector<MonomialIdeal> factors;
  for (std::size_t j = 1; j < chain.size(); ++j)
    factors.push_back(diagonal_ideal(chain.shape(), chain[j]));
  return product(factors);
}

void require_product_form(const WindowChain& chain, WindowChain::OrderCheck order) {
  if (chain.size() < 2)
    throw DomainError("the product colon form needs at least two windows");
  if (order == WindowChain::OrderCheck::enforce)
    chain.require_sorted();
}

MonomialIdeal closed_with_tail(const WindowChain& chain, const MonomialIdeal& tail,
                               const GridMonomial& f) {
  auto gens = gap_variables(chain.shape(), chain[0], f);
  gens.insert(gens.end(), tail.generators().begin(), tail.generators().end());
  return minimalize(chain.shape(), std::move(gens));
}

} // namespace

MonomialIdeal closed_form_colon_product(const WindowChain& chain, const GridMonomial& f,
                                        WindowChain::OrderCheck order) {
  require_product_form(chain, order);
  return closed_with_tail(chain, tail_product(chain), f);
}

MonomialIdeal closed_form_colon_product(const WindowChain& chain, std::size_t u,
                                        WindowChain::OrderCheck order) {
  require_product_form(chain, order);
  const auto diagonals = enumerate_diagonals(chain.shape(), chain[0]);
  if (u >= diagonals.size())
    throw DomainError("prefix index " + std::to_string(u) + " out of range; window has " +
                      std::to_string(diagonals.size()) + " diagonals");
  return closed_with_tail(chain, tail_product(chain), diagonals[u]);
}

CircleTable circle_table(const GridShape& shape, std::span<const GridMonomial> factors) {
  CircleTable table;
  table.rows.resize(static_cast<std::size_t>(shape.rows()));
  for (const auto& g : factors) {
    const auto selection = ColumnSelection::from_diagonal(g);
    if (!selection)
      throw DomainError(g.to_string() + " is not a diagonal monomial");
    for (int i = 1; i <= shape.rows(); ++i)
      table.rows[static_cast<std::size_t>(i - 1)].push_back(selection->col(i));
  }
  for (auto& row : table.rows)
    std::sort(row.begin(), row.end());
  return table;
}

std::vector<GridMonomial> redistribute(const WindowChain& chain,
                                       std::span<const GridMonomial> factors) {
  if (factors.size() != chain.size())
    throw DomainError("redistribution needs one factor per window: got " +
                      std::to_string(factors.size()) + " for " + std::to_string(chain.size()));
  const GridShape& shape = chain.shape();
  for (std::size_t j = 0; j < factors.size(); ++j)
    require_diagonal_of(shape, chain[j], factors[j]);

  const CircleTable table = circle_table(shape, factors);
  std::vector<GridMonomial> out;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    std::vector<std::pair<VarIndex, Exponent>> vars;
    for (int i = 1; i <= shape.rows(); ++i)
      vars.push_back({VarIndex{i, table.rows[static_cast<std::size_t>(i - 1)][j]}, 1});
    out.push_back(GridMonomial::from_factors(shape, vars));
  }
  return out;
}

bool LemmaReport::passed() const {
  return std::all_of(steps.begin(), steps.end(), [](const LemmaStep& s) { return s.equal; });
}

namespace {

std::vector<std::size_t> step_indices(std::size_t first, std::size_t last,
                                      const LemmaOptions& options) {
  std::vector<std::size_t> out;
  if (first > last)
    return out;
  const std::size_t count = last - first + 1;
  if (options.exhaustive || count <= options.sampled_steps) {
    for (std::size_t u = first; u <= last; ++u)
      out.push_back(u);
    return out;
  }
  if (options.seed) {
    std::vector<std::size_t> all(count);
    std::iota(all.begin(), all.end(), first);
    std::mt19937_64 rng(*options.seed);
    std::sample(all.begin(), all.end(), std::back_inserter(out), options.sampled_steps, rng);
    return out;
  }
  const std::size_t samples = std::max<std::size_t>(options.sampled_steps, 2);
  for (std::size_t t = 0; t < samples; ++t)
    out.push_back(first + t * (count - 1) / (samples - 1));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace

LemmaReport verify_colon_lemma(const WindowChain& chain, const LemmaOptions& options) {
  const GridShape& shape = chain.shape();
  const auto order =
      options.force_brute ? WindowChain::OrderCheck::skip : WindowChain::OrderCheck::enforce;
  if (order == WindowChain::OrderCheck::enforce)
    chain.require_sorted();

  const auto diagonals = enumerate_diagonals(shape, chain[0]);
  LemmaReport report;

  if (chain.size() == 1) {
    for (std::size_t u : step_indices(1, diagonals.size() - 1, options)) {
      const MonomialIdeal prefix =
          minimalize(shape, {diagonals.begin(), diagonals.begin() + static_cast<long>(u)});
      MonomialIdeal brute = colon(prefix, diagonals[u]);
      MonomialIdeal closed = closed_form_colon_single(shape, chain[0], diagonals[u]);
      const bool equal = equals(brute, closed);
      report.steps.push_back({u, std::move(brute), std::move(closed), equal});
    }
    return report;
  }

  const MonomialIdeal whole = chain_product_ideal(chain);
  if (options.exhaustive && whole.size() > options.max_product_gens)
    throw ResourceError("chain product " + chain.to_string() + " has " +
                        std::to_string(whole.size()) + " generators, above the cap of " +
                        std::to_string(options.max_product_gens));
  const MonomialIdeal tail = tail_product(chain);

  for (std::size_t u : step_indices(0, diagonals.size() - 1, options)) {
    const GridMonomial& f = diagonals[u];
    const MonomialIdeal prefix =
        minimalize(shape, {diagonals.begin(), diagonals.begin() + static_cast<long>(u)});
    MonomialIdeal brute = sum(colon(whole, f), colon(prefix, f));
    MonomialIdeal closed = closed_with_tail(chain, tail, f);
    const bool equal = equals(brute, closed);
    report.steps.push_back({u, std::move(brute), std::move(closed), equal});
  }
  return report;
}

nlohmann::ordered_json to_json(const LemmaStep& step) {
  return {{"u", step.u},
          {"brute", step.brute.to_string()},
          {"closed", step.closed.to_string()},
          {"equal", step.equal}};
}

} // namespace diagwin
