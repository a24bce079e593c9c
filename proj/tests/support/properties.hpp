#pragma once
// Seeded property checks shared by the doctest suite and the acceptance
// binary. Each returns the number of cases run and the first failure.

#include "diagwin/linear_quotients.hpp"
#include "diagwin/matrix_model.hpp"
#include "diagwin/monomial_ideal.hpp"
#include "oracles.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace diagwin::property {

struct Result {
  std::size_t cases = 0;
  std::optional<std::string> failure;
  bool ok() const { return !failure; }
};

inline std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(seed * 1000003 + stream);
}

inline MonomialIdeal random_ideal(const GridShape& s, std::mt19937_64& rng) {
  return minimalize(s, oracle::random_monomials(s, rng, 5, 4));
}

#define DIAGWIN_PROPERTY(cond, what)                                                               \
  do {                                                                                             \
    if (!(cond)) {                                                                                 \
      r.failure = std::string(what);                                                               \
      return r;                                                                                    \
    }                                                                                              \
  } while (false)

/// h in (I : f) iff h f in I, for every h of degree <= 2 on a 2x3 grid.
inline Result colon_defining(std::uint64_t seed, std::size_t cases) {
  Result r;
  auto rng = rng_for(seed, 1);
  const GridShape s(2, 3);
  const auto probes = oracle::monomials_up_to(s, 2);
  for (; r.cases < cases; ++r.cases) {
    const auto ideal = random_ideal(s, rng);
    const auto f = oracle::random_monomial(s, rng, 3);
    const auto q = colon(ideal, f);
    for (const auto& h : probes)
      DIAGWIN_PROPERTY(membership(q, h) == membership(ideal, h * f),
                       "(" + ideal.to_string() + " : " + f.to_string() + ") at " + h.to_string());
  }
  return r;
}

/// ((A + B) : g) = (A : g) + (B : g).
inline Result colon_distributes(std::uint64_t seed, std::size_t cases) {
  Result r;
  auto rng = rng_for(seed, 2);
  const GridShape s(2, 4);
  for (; r.cases < cases; ++r.cases) {
    const auto a = random_ideal(s, rng);
    const auto b = random_ideal(s, rng);
    const auto g = oracle::random_monomial(s, rng, 3);
    DIAGWIN_PROPERTY(equals(colon(sum(a, b), g), sum(colon(a, g), colon(b, g))),
                     a.to_string() + " + " + b.to_string() + " : " + g.to_string());
  }
  return r;
}

/// minimalize is idempotent, order-insensitive and yields a strictly
/// descending antichain generating every input monomial.
inline Result minimalize_canonical(std::uint64_t seed, std::size_t cases) {
  Result r;
  auto rng = rng_for(seed, 3);
  const GridShape s(2, 3);
  for (; r.cases < cases; ++r.cases) {
    auto gens = oracle::random_monomials(s, rng, 8, 4);
    const auto once = minimalize(s, gens);
    DIAGWIN_PROPERTY(minimalize(s, once.generators()) == once, "not idempotent: " + once.to_string());
    std::shuffle(gens.begin(), gens.end(), rng);
    DIAGWIN_PROPERTY(minimalize(s, gens) == once, "order sensitive: " + once.to_string());
    const auto& g = once.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
      DIAGWIN_PROPERTY(i == 0 || oracle::lex_greater(g[i - 1], g[i]), "not descending: " + once.to_string());
      for (std::size_t j = 0; j < g.size(); ++j)
        DIAGWIN_PROPERTY(i == j || !g[i].divides(g[j]), "not minimal: " + once.to_string());
    }
    for (const auto& x : gens)
      DIAGWIN_PROPERTY(membership(once, x), "lost " + x.to_string());
  }
  return r;
}

/// Products of ideals commute and associate.
inline Result product_laws(std::uint64_t seed, std::size_t cases) {
  Result r;
  auto rng = rng_for(seed, 4);
  const GridShape s(1, 4);
  for (; r.cases < cases; ++r.cases) {
    const auto a = random_ideal(s, rng);
    const auto b = random_ideal(s, rng);
    const auto d = random_ideal(s, rng);
    DIAGWIN_PROPERTY(equals(product(a, b), product(b, a)), "not commutative");
    DIAGWIN_PROPERTY(equals(product(product(a, b), d), product(a, product(b, d))),
                     "not associative");
  }
  return r;
}

/// The diagonal order is a total, multiplicative order with 1 minimal, and
/// agrees with the hand-written lexicographic comparison.
inline Result order_laws(std::uint64_t seed, std::size_t cases) {
  Result r;
  auto rng = rng_for(seed, 5);
  const GridShape s(3, 3);
  const TermOrder tau(s);
  const auto gt = std::strong_ordering::greater;
  for (; r.cases < cases; ++r.cases) {
    const auto a = oracle::random_monomial(s, rng, 4);
    const auto b = oracle::random_monomial(s, rng, 4);
    const auto d = oracle::random_monomial(s, rng, 4);
    const auto ab = tau.compare(a, b);
    const std::string pair = a.to_string() + " vs " + b.to_string();
    DIAGWIN_PROPERTY((ab == gt) == oracle::lex_greater(a, b), "lex disagreement " + pair);
    DIAGWIN_PROPERTY(tau.compare(b, a) == (0 <=> ab), "antisymmetry " + pair);
    DIAGWIN_PROPERTY((ab == std::strong_ordering::equal) == (a == b), "totality " + pair);
    DIAGWIN_PROPERTY(!(ab == gt && tau.compare(b, d) == gt) || tau.compare(a, d) == gt,
                     "transitivity " + pair);
    DIAGWIN_PROPERTY(tau.compare(a * d, b * d) == ab, "multiplicativity " + pair);
    DIAGWIN_PROPERTY(tau.compare(a, GridMonomial(s)) != std::strong_ordering::less,
                     "1 not minimal");
  }
  return r;
}

/// Redistribution preserves the product, yields strictly column-increasing
/// h_j, and puts h_j in window j.
inline Result redistribute_invariants(std::uint64_t seed, std::size_t cases) {
  Result r;
  auto rng = rng_for(seed, 6);
  while (r.cases < cases) {
    std::uniform_int_distribution<int> rows(1, 4);
    const int m = rows(rng);
    std::uniform_int_distribution<int> cols(std::max(m, 2), 10);
    const GridShape s(m, cols(rng));
    std::uniform_int_distribution<std::size_t> factors(1, 4);
    const auto chains = sorted_chains(s, factors(rng));
    if (chains.empty())
      continue;
    std::uniform_int_distribution<std::size_t> pick(0, chains.size() - 1);
    const auto& chain = chains[pick(rng)];
    std::vector<GridMonomial> g;
    GridMonomial product_g(s);
    for (const auto& w : chain.windows()) {
      const auto d = enumerate_diagonals(s, w);
      std::uniform_int_distribution<std::size_t> which(0, d.size() - 1);
      g.push_back(d[which(rng)]);
      product_g = product_g * g.back();
    }
    const auto h = redistribute(chain, g);
    DIAGWIN_PROPERTY(h.size() == chain.size(), "wrong factor count");
    GridMonomial product_h(s);
    for (std::size_t j = 0; j < h.size(); ++j) {
      product_h = product_h * h[j];
      const auto sel = ColumnSelection::from_diagonal(h[j]);
      DIAGWIN_PROPERTY(sel.has_value(), "h not column-increasing: " + h[j].to_string());
      DIAGWIN_PROPERTY(sel->within(chain[j]), "h outside its window: " + h[j].to_string());
    }
    DIAGWIN_PROPERTY(product_h == product_g, "product changed for " + chain.to_string());
    ++r.cases;
  }
  return r;
}

#undef DIAGWIN_PROPERTY

} // namespace diagwin::property
