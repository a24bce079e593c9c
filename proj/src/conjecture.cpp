#include "diagwin/conjecture.hpp"

#include "diagwin/error.hpp"

#include <algorithm>
#include <chrono>

namespace diagwin {

namespace {

template <class Field>
void run_check(const Field& field, const WindowChain& chain, const ConjectureCaps& caps,
               ConjectureVerdict& verdict) {
  const TermOrder order(chain.shape());
  const auto natural = natural_generators(field, chain);
  const MonomialIdeal expected = chain_product_ideal(chain);
  try {
    const auto gb = buchberger(field, natural, order, caps.groebner);
    verdict.spairs = gb.stats.spairs_reduced;
    verdict.basis_size = gb.basis.size();
    verdict.ini_equals_j = equals(initial_ideal(gb), expected);
    verdict.natural_gens_are_gb = true;
    for (const auto& g : gb.basis) {
      const bool matched = std::any_of(natural.begin(), natural.end(), [&](const auto& f) {
        return f.leading_monomial() == g.leading_monomial();
      });
      verdict.natural_gens_are_gb = verdict.natural_gens_are_gb && matched;
      if (!verdict.witness && !membership(expected, g.leading_monomial()))
        verdict.witness = g.to_string(field);
    }
  } catch (const ResourceError& e) {
    verdict.error = e.what();
  }
}

} // namespace

ConjectureVerdict conjecture_check(const WindowChain& chain, std::uint64_t field_char,
                                   const ConjectureCaps& caps) {
  chain.require_sorted();
  const GridShape& shape = chain.shape();
  if (shape.rows() > caps.max_rows || shape.cols() > caps.max_cols ||
      chain.size() > caps.max_factors)
    throw ResourceError("conjecture check on " + std::to_string(shape.rows()) + "x" +
                        std::to_string(shape.cols()) + " with " + std::to_string(chain.size()) +
                        " factors exceeds the caps (" + std::to_string(caps.max_rows) + "x" +
                        std::to_string(caps.max_cols) + ", " +
                        std::to_string(caps.max_factors) + " factors)");

  ConjectureVerdict verdict{shape,        chain.windows(), field_char,   false, false, 0, 0, 0,
                            std::nullopt, std::nullopt};
  const auto start = std::chrono::steady_clock::now();
  if (field_char == 0)
    run_check(RationalField{}, chain, caps, verdict);
  else
    run_check(PrimeField(field_char), chain, caps, verdict);
  verdict.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return verdict;
}

nlohmann::ordered_json to_json(const ConjectureVerdict& verdict) {
  nlohmann::ordered_json chain = nlohmann::ordered_json::array();
  for (const auto& w : verdict.chain)
    chain.push_back({w.k(), w.l()});
  nlohmann::ordered_json out;
  out["shape"] = {verdict.shape.rows(), verdict.shape.cols()};
  out["chain"] = std::move(chain);
  out["char"] = verdict.field_char;
  out["ini_equals_J"] = verdict.ini_equals_j;
  out["natural_gens_are_GB"] = verdict.natural_gens_are_gb;
  out["spairs"] = verdict.spairs;
  out["millis"] = verdict.millis;
  if (verdict.witness)
    out["witness"] = *verdict.witness;
  if (verdict.error)
    out["error"] = *verdict.error;
  return out;
}

std::vector<WindowChain> scan_instances(const ScanBounds& bounds) {
  std::vector<WindowChain> out;
  for (int m = 1; m <= bounds.max_rows; ++m)
    for (int n = std::max(m, 2); n <= bounds.max_cols; ++n) {
      const GridShape shape(m, n);
      for (std::size_t s = 1; s <= bounds.max_factors; ++s)
        for (auto& chain : sorted_chains(shape, s))
          out.push_back(std::move(chain));
    }
  return out;
}

} // namespace diagwin
