#pragma once

#include "diagwin/matrix_model.hpp"
#include "diagwin/monomial_ideal.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace diagwin {

/// The colon ideals (<f_1,...,f_u> : f_{u+1}), u = 1..r-1, of the
/// generators f_1 > ... > f_r of an ideal taken in descending diagonal
/// order.
struct QuotientChain {
  std::vector<GridMonomial> order;
  /// colons[u - 1] = (<f_1,...,f_u> : f_{u+1}).
  std::vector<MonomialIdeal> colons;

  /// Linear quotients certificate: every colon is generated by variables.
  bool certifies_linear_quotients() const;
  /// Generator count of the colon attached to each f_u; the first entry is 0.
  std::vector<std::size_t> colon_sizes() const;
};

/// Brute-force chain via monomial colon ideals. Throws DomainError for the
/// zero ideal.
QuotientChain quotient_chain(const MonomialIdeal& ideal);

/// Variables X_{i b} with c_{i-1} < b < c_i for the diagonal monomial
/// f = X_{1 c_1} ... X_{m c_m}, taking c_0 = k - 1.
std::vector<GridMonomial> gap_variables(const GridShape& shape, const Window& w,
                                        const GridMonomial& f);

/// Closed form of (<f_1,...,f_u> : f_{u+1}) for J_kl when f = f_{u+1}: the
/// ideal of gap variables of f. Throws DomainError unless f is a diagonal
/// monomial of w.
MonomialIdeal closed_form_colon_single(const GridShape& shape, const Window& w,
                                       const GridMonomial& f);

/// Closed form of (<J, f_1,...,f_u> : f_{u+1}) with J the product over the
/// chain and f_1 > ... > f_r the diagonals of the first window:
/// J_{k_2 l_2} ... J_{k_s l_s} plus the gap variables of f_{u+1}.
///
/// Throws WindowOrderError for an unsorted chain (unless `order` is skip),
/// DomainError when s < 2 or f is not a diagonal of the first window.
MonomialIdeal closed_form_colon_product(
    const WindowChain& chain, const GridMonomial& f,
    WindowChain::OrderCheck order = WindowChain::OrderCheck::enforce);
/// Same, with f = f_{u+1} picked by its prefix index u (0-based count of
/// preceding diagonals).
MonomialIdeal closed_form_colon_product(
    const WindowChain& chain, std::size_t u,
    WindowChain::OrderCheck order = WindowChain::OrderCheck::enforce);

/// Row-wise circle positions of factors g_1..g_s: rows[i - 1] lists the s
/// columns circled in row i in nondecreasing order (repeats allowed).
struct CircleTable {
  std::vector<std::vector<int>> rows;
};

CircleTable circle_table(const GridShape& shape, std::span<const GridMonomial> factors);

/// Redistributes diagonal factors g_1..g_s (g_j a diagonal of window j) into
/// h_1..h_s, where h_j takes the j-th circle of every row. The product is
/// unchanged, each h_j is again a diagonal monomial and, for a sorted chain,
/// h_j lies in window j. Throws DomainError when a factor is not a diagonal
/// of its window or the counts differ.
std::vector<GridMonomial> redistribute(const WindowChain& chain,
                                       std::span<const GridMonomial> factors);

struct LemmaStep {
  std::size_t u;
  MonomialIdeal brute;
  MonomialIdeal closed;
  bool equal;
};

struct LemmaOptions {
  /// Check every u; otherwise a spread of at most `sampled_steps` values.
  bool exhaustive = true;
  std::size_t sampled_steps = 16;
  /// When set, sampled steps are drawn uniformly with this seed instead of
  /// being spread evenly.
  std::optional<std::uint64_t> seed;
  /// Upper bound on the generator count of the chain product.
  std::size_t max_product_gens = 5000;
  /// Allow unsorted chains; their closed forms are expected to fail.
  bool force_brute = false;
};

struct LemmaReport {
  std::vector<LemmaStep> steps;
  bool passed() const;
};

/// Compares brute-force colon ideals with the closed forms at every step.
/// For s = 1 this is the single-window chain (u = 1..r-1); for s >= 2 it is
/// the product form (u = 0..r-1).
LemmaReport verify_colon_lemma(const WindowChain& chain, const LemmaOptions& options = {});

/// {"u":..., "brute":"<...>", "closed":"<...>", "equal":bool}
nlohmann::ordered_json to_json(const LemmaStep& step);

} // namespace diagwin
