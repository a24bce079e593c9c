#pragma once

#include "diagwin/error.hpp"
#include "diagwin/field.hpp"
#include "diagwin/matrix_model.hpp"
#include "diagwin/monomial_ideal.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace diagwin {

template <class Field>
struct Term {
  GridMonomial monomial;
  typename Field::Element coeff;
};

/// Polynomial over a field with terms kept strictly descending under the
/// diagonal order and no zero coefficients, so the leading term is the
/// first one.
template <class Field>
class FieldPolynomial {
public:
  using Element = typename Field::Element;

  explicit FieldPolynomial(GridShape shape) : shape_(shape) {}

  /// Sorts, merges equal monomials and drops zero coefficients.
  static FieldPolynomial from_terms(const Field& field, GridShape shape,
                                    std::vector<Term<Field>> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term<Field>& a, const Term<Field>& b) {
      return TauDescending{}(a.monomial, b.monomial);
    });
    FieldPolynomial out(shape);
    for (auto& t : terms) {
      if (!(t.monomial.shape() == shape))
        throw ShapeMismatchError("polynomial term lives on a different grid");
      if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial)
        out.terms_.back().coeff = field.add(out.terms_.back().coeff, t.coeff);
      else
        out.terms_.push_back(std::move(t));
      if (field.is_zero(out.terms_.back().coeff))
        out.terms_.pop_back();
    }
    return out;
  }

  static FieldPolynomial from_monomial(const Field& field, const GridMonomial& m) {
    FieldPolynomial out(m.shape());
    out.terms_.push_back({m, field.one()});
    return out;
  }

  static FieldPolynomial from_minor(const Field& field, const GridShape& shape,
                                    const MinorPolynomial& minor) {
    std::vector<Term<Field>> terms;
    for (const auto& t : minor.terms)
      terms.push_back({t.monomial, field.from_int(t.sign)});
    return from_terms(field, shape, std::move(terms));
  }

  const GridShape& shape() const { return shape_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term<Field>>& terms() const { return terms_; }
  const Term<Field>& leading() const { return terms_.front(); }
  const GridMonomial& leading_monomial() const { return terms_.front().monomial; }

  /// Terms joined with " + " / " - ", e.g. x[1,1]*x[2,2] - x[1,2]*x[2,1].
  std::string to_string(const Field& field) const {
    if (terms_.empty())
      return "0";
    std::string out;
    for (const auto& t : terms_) {
      const bool negative = field.is_negative(t.coeff);
      const auto magnitude = negative ? field.neg(t.coeff) : t.coeff;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      const bool unit_coeff = field.is_one(magnitude);
      if (t.monomial.is_unit())
        out += field.to_string(magnitude);
      else if (unit_coeff)
        out += t.monomial.to_string();
      else
        out += field.to_string(magnitude) + "*" + t.monomial.to_string();
    }
    return out;
  }

  bool same_as(const FieldPolynomial& other) const {
    if (!(shape_ == other.shape_) || terms_.size() != other.terms_.size())
      return false;
    for (std::size_t t = 0; t < terms_.size(); ++t)
      if (!(terms_[t].monomial == other.terms_[t].monomial) ||
          !(terms_[t].coeff == other.terms_[t].coeff))
        return false;
    return true;
  }

private:
  template <class F>
  friend FieldPolynomial<F> sub_scaled(const F&, const FieldPolynomial<F>&, std::size_t,
                                       const typename F::Element&, const GridMonomial&,
                                       const FieldPolynomial<F>&);
  template <class F>
  friend FieldPolynomial<F> scaled(const F&, const FieldPolynomial<F>&,
                                   const typename F::Element&);

  GridShape shape_;
  std::vector<Term<Field>> terms_;
};

/// f[from:] - c * t * g, merging two descending term lists. Multiplying by a
/// monomial preserves the order of g's terms.
template <class Field>
FieldPolynomial<Field> sub_scaled(const Field& field, const FieldPolynomial<Field>& f,
                                  std::size_t from, const typename Field::Element& c,
                                  const GridMonomial& t, const FieldPolynomial<Field>& g) {
  FieldPolynomial<Field> out(f.shape());
  const auto& a = f.terms_;
  const auto& b = g.terms_;
  out.terms_.reserve(a.size() - from + b.size());
  std::size_t i = from, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.terms_.push_back(a[i++]);
      continue;
    }
    GridMonomial shifted = b[j].monomial * t;
    const auto order = i < a.size() ? compare_unchecked(a[i].monomial, shifted)
                                    : std::strong_ordering::less;
    if (order == std::strong_ordering::greater) {
      out.terms_.push_back(a[i++]);
    } else if (order == std::strong_ordering::less) {
      out.terms_.push_back({std::move(shifted), field.neg(field.mul(c, b[j].coeff))});
      ++j;
    } else {
      auto coeff = field.sub(a[i].coeff, field.mul(c, b[j].coeff));
      if (!field.is_zero(coeff))
        out.terms_.push_back({std::move(shifted), std::move(coeff)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Field>
FieldPolynomial<Field> scaled(const Field& field, const FieldPolynomial<Field>& f,
                              const typename Field::Element& c) {
  FieldPolynomial<Field> out(f.shape());
  if (field.is_zero(c))
    return out;
  out.terms_ = f.terms_;
  for (auto& t : out.terms_)
    t.coeff = field.mul(t.coeff, c);
  return out;
}

template <class Field>
FieldPolynomial<Field> make_monic(const Field& field, const FieldPolynomial<Field>& f) {
  if (f.is_zero() || field.is_one(f.leading().coeff))
    return f;
  return scaled(field, f, field.inv(f.leading().coeff));
}

template <class Field>
FieldPolynomial<Field> multiply(const Field& field, const FieldPolynomial<Field>& f,
                                const FieldPolynomial<Field>& g) {
  std::vector<Term<Field>> terms;
  terms.reserve(f.terms().size() * g.terms().size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms())
      terms.push_back({a.monomial * b.monomial, field.mul(a.coeff, b.coeff)});
  return FieldPolynomial<Field>::from_terms(field, f.shape(), std::move(terms));
}

/// Multivariate division remainder: no term of the result is divisible by a
/// leading monomial of `divisors`. The largest reducible term is always
/// reduced first, by the first eligible divisor in list order.
template <class Field>
FieldPolynomial<Field> reduce(const Field& field, const FieldPolynomial<Field>& f,
                              const std::vector<FieldPolynomial<Field>>& divisors) {
  std::vector<Term<Field>> remainder;
  FieldPolynomial<Field> p = f;
  std::size_t head = 0;
  while (head < p.terms().size()) {
    const Term<Field>& lead = p.terms()[head];
    const FieldPolynomial<Field>* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lead.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(lead);
      ++head;
      continue;
    }
    const auto c = field.mul(lead.coeff, field.inv(divisor->leading().coeff));
    const GridMonomial t = lead.monomial / divisor->leading_monomial();
    p = sub_scaled(field, p, head, c, t, *divisor);
    head = 0;
  }
  return FieldPolynomial<Field>::from_terms(field, f.shape(), std::move(remainder));
}

template <class Field>
FieldPolynomial<Field> s_polynomial(const Field& field, const FieldPolynomial<Field>& f,
                                    const FieldPolynomial<Field>& g) {
  const GridMonomial lcm = f.leading_monomial().lcm(g.leading_monomial());
  const auto fm = make_monic(field, f);
  const auto gm = make_monic(field, g);
  // (lcm / lt f) * f - (lcm / lt g) * g
  FieldPolynomial<Field> scaled_f = sub_scaled(field, FieldPolynomial<Field>(f.shape()), 0,
                                               field.neg(field.one()),
                                               lcm / fm.leading_monomial(), fm);
  return sub_scaled(field, scaled_f, 0, field.one(), lcm / gm.leading_monomial(), gm);
}

struct GroebnerCaps {
  /// S-pairs whose S-polynomial is actually reduced.
  std::size_t max_spairs = 200000;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
  std::size_t spairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

template <class Field>
struct GroebnerBasis {
  /// Reduced basis: monic, tail-reduced, leading monomials pairwise
  /// non-dividing, sorted descending by leading monomial.
  std::vector<FieldPolynomial<Field>> basis;
  TermOrder order;
  GroebnerStats stats;
};

/// Reduced Groebner basis under the diagonal order via Buchberger's
/// algorithm with the normal selection strategy (smallest lcm of leading
/// monomials first, ties by pair index) and the product and chain criteria.
/// Throws DomainError for an empty or all-zero input, ResourceError with a
/// progress snapshot when caps.max_spairs is exceeded.
template <class Field>
GroebnerBasis<Field> buchberger(const Field& field, std::vector<FieldPolynomial<Field>> gens,
                                const TermOrder& order, const GroebnerCaps& caps = {}) {
  std::vector<FieldPolynomial<Field>> basis;
  for (auto& g : gens) {
    if (!(g.shape() == order.shape()))
      throw ShapeMismatchError("generator lives on a different grid than the term order");
    if (!g.is_zero())
      basis.push_back(make_monic(field, g));
  }
  if (basis.empty())
    throw DomainError("Groebner basis of an empty generator list");

  struct Pair {
    GridMonomial lcm;
    std::size_t i;
    std::size_t j;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    const auto c = compare_unchecked(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal)
      return c == std::strong_ordering::less;
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  GroebnerStats stats;

  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.insert({basis[i].leading_monomial().lcm(basis[j].leading_monomial()), i, j});
      pending.insert({i, j});
      ++stats.pairs_created;
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j)
    add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!queue.empty()) {
    const Pair pair = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pair.i, pair.j});

    const auto& lead_i = basis[pair.i].leading_monomial();
    const auto& lead_j = basis[pair.j].leading_monomial();
    if (lead_i.coprime(lead_j)) {
      ++stats.product_criterion;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j)
        continue;
      chain = basis[k].leading_monomial().divides(pair.lcm) && !is_pending(pair.i, k) &&
              !is_pending(pair.j, k);
    }
    if (chain) {
      ++stats.chain_criterion;
      continue;
    }

    if (stats.spairs_reduced >= caps.max_spairs)
      throw ResourceError("Buchberger stopped after " + std::to_string(stats.spairs_reduced) +
                          " S-pair reductions (cap); basis size " +
                          std::to_string(basis.size()) + ", pairs queued " +
                          std::to_string(queue.size() + 1));
    ++stats.spairs_reduced;
    auto remainder = reduce(field, s_polynomial(field, basis[pair.i], basis[pair.j]), basis);
    if (remainder.is_zero()) {
      ++stats.zero_reductions;
      continue;
    }
    basis.push_back(make_monic(field, remainder));
    add_pairs_for(basis.size() - 1);
  }

  // Minimal basis: drop elements whose leading monomial is divisible by
  // another's; among equal leading monomials keep the first.
  std::vector<FieldPolynomial<Field>> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b)
        continue;
      const auto& la = basis[a].leading_monomial();
      const auto& lb = basis[b].leading_monomial();
      redundant = lb.divides(la) && (!(lb == la) || b < a);
    }
    if (!redundant)
      minimal.push_back(basis[a]);
  }
  // Tail reduction against the other minimal elements.
  std::vector<FieldPolynomial<Field>> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<FieldPolynomial<Field>> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a)
        others.push_back(b < reduced.size() ? reduced[b] : minimal[b]);
    reduced.push_back(make_monic(field, reduce(field, minimal[a], others)));
  }
  std::sort(reduced.begin(), reduced.end(), [](const auto& a, const auto& b) {
    return TauDescending{}(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis<Field>{std::move(reduced), order, stats};
}

/// Leading monomials of a basis, minimalized.
template <class Field>
MonomialIdeal initial_ideal(const GroebnerBasis<Field>& gb) {
  std::vector<GridMonomial> leads;
  for (const auto& g : gb.basis)
    leads.push_back(g.leading_monomial());
  return minimalize(gb.order.shape(), std::move(leads));
}

/// Buchberger's criterion checked directly: every S-polynomial of the list
/// reduces to zero modulo the list.
template <class Field>
bool is_groebner_basis(const Field& field, const std::vector<FieldPolynomial<Field>>& polys) {
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j)
      if (!reduce(field, s_polynomial(field, polys[i], polys[j]), polys).is_zero())
        return false;
  return true;
}

/// The maximal minors of every column selection inside the window.
template <class Field>
std::vector<FieldPolynomial<Field>> window_minors(const Field& field, const GridShape& shape,
                                                  const Window& w) {
  std::vector<FieldPolynomial<Field>> out;
  for (const auto& d : enumerate_diagonals(shape, w)) {
    const auto selection = ColumnSelection::from_diagonal(d);
    out.push_back(FieldPolynomial<Field>::from_minor(field, shape, minor(shape, *selection)));
  }
  return out;
}

/// Natural generators of I_{k_1 l_1} ... I_{k_s l_s}: all products of one
/// maximal minor per window (duplicates removed).
template <class Field>
std::vector<FieldPolynomial<Field>> natural_generators(const Field& field,
                                                       const WindowChain& chain) {
  std::vector<FieldPolynomial<Field>> current =
      window_minors(field, chain.shape(), chain[0]);
  for (std::size_t j = 1; j < chain.size(); ++j) {
    const auto next = window_minors(field, chain.shape(), chain[j]);
    std::vector<FieldPolynomial<Field>> products;
    for (const auto& a : current)
      for (const auto& b : next) {
        auto p = multiply(field, a, b);
        const bool seen = std::any_of(products.begin(), products.end(),
                                      [&](const auto& q) { return q.same_as(p); });
        if (!seen)
          products.push_back(std::move(p));
      }
    current = std::move(products);
  }
  return current;
}

} // namespace diagwin
