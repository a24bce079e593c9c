#pragma once

#include "diagwin/monomial.hpp"

#include <nlohmann/json.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diagwin {

/// A monomial ideal held in canonical form: minimal generators sorted
/// strictly descending under the diagonal order. The zero ideal has no
/// generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
  /// The zero ideal.
  explicit MonomialIdeal(GridShape shape) : shape_(shape) {}

  static MonomialIdeal unit(GridShape shape);

  const GridShape& shape() const { return shape_; }
  const std::vector<GridMonomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }

  /// True iff every generator has degree d (false for the zero ideal).
  bool is_generated_in_degree(unsigned d) const;
  /// True iff every generator is a single variable (vacuously for zero).
  bool is_generated_by_variables() const;

  /// Angle-bracket text form, e.g. <x[1,1], x[1,2]>; the zero ideal is <>.
  std::string to_string() const;
  static MonomialIdeal parse(GridShape shape, std::string_view text);

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.shape_ == b.shape_ && a.gens_ == b.gens_;
  }

private:
  friend MonomialIdeal minimalize(GridShape shape, std::vector<GridMonomial> gens);

  GridShape shape_;
  std::vector<GridMonomial> gens_;
};

bool divides(const GridMonomial& a, const GridMonomial& b);

/// g lies in I iff some generator divides g.
bool membership(const MonomialIdeal& ideal, const GridMonomial& g);

/// Drops duplicates and non-minimal monomials, then sorts descending under
/// the diagonal order. Throws ShapeMismatchError for monomials of another
/// grid.
MonomialIdeal minimalize(GridShape shape, std::vector<GridMonomial> gens);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// Product of a nonempty sequence of ideals, left to right.
MonomialIdeal product(std::span<const MonomialIdeal> factors);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// (I : f), generated by g / gcd(g, f) over the generators g of I.
MonomialIdeal colon(const MonomialIdeal& ideal, const GridMonomial& f);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);
/// Containment a ⊆ b (every generator of a lies in b).
bool contains(const MonomialIdeal& b, const MonomialIdeal& a);

/// {"shape":[m,n],"gens":[[[i,j,e],...],...]}
nlohmann::ordered_json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::ordered_json& j);

} // namespace diagwin
