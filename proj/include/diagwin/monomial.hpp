#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace diagwin {

/// Dimensions of the generic matrix X. Rows and columns are 1-based
/// everywhere in the public interface.
class GridShape {
public:
  GridShape(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int variable_count() const { return rows_ * cols_; }

  friend bool operator==(const GridShape&, const GridShape&) = default;

private:
  int rows_;
  int cols_;
};

/// Position (row, col) of the variable X_{row,col}.
struct VarIndex {
  int row;
  int col;

  friend bool operator==(const VarIndex&, const VarIndex&) = default;
  friend auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

using Exponent = std::uint32_t;

/// A monomial in the variables X_{ij} of a grid.
///
/// Exponents are held densely in row-major variable rank (X_11 first), which
/// makes the diagonal order a plain lexicographic comparison of the exponent
/// vectors. The dense layout is private; callers see sparse (VarIndex, e)
/// factors only.
class GridMonomial {
public:
  /// The unit monomial 1.
  explicit GridMonomial(GridShape shape);

  static GridMonomial variable(GridShape shape, VarIndex v);
  static GridMonomial from_factors(GridShape shape,
                                   const std::vector<std::pair<VarIndex, Exponent>>& factors);

  const GridShape& shape() const { return shape_; }
  Exponent exponent(VarIndex v) const;
  unsigned degree() const { return degree_; }
  bool is_unit() const { return degree_ == 0; }
  bool is_squarefree() const;

  /// Nonzero exponents in row-major order.
  std::vector<std::pair<VarIndex, Exponent>> factors() const;
  /// Variables with nonzero exponent, row-major.
  std::vector<VarIndex> support() const;

  /// True iff *this divides other. Throws ShapeMismatchError.
  bool divides(const GridMonomial& other) const;

  GridMonomial operator*(const GridMonomial& other) const;
  /// Exact quotient; throws DomainError unless divisor divides *this.
  GridMonomial operator/(const GridMonomial& divisor) const;
  GridMonomial lcm(const GridMonomial& other) const;
  GridMonomial gcd(const GridMonomial& other) const;
  bool coprime(const GridMonomial& other) const;

  /// Equality of exponent vectors on the same shape.
  friend bool operator==(const GridMonomial& a, const GridMonomial& b) {
    return a.shape_ == b.shape_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

  /// Monomial text format, e.g. x[1,2]*x[2,3]^2; the unit prints as 1.
  std::string to_string() const;
  static GridMonomial parse(GridShape shape, std::string_view text);

private:
  friend std::strong_ordering compare_unchecked(const GridMonomial&, const GridMonomial&);

  void require_same_shape(const GridMonomial& other) const;
  std::size_t rank(VarIndex v) const;
  void refresh();

  GridShape shape_;
  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
  // Bit (rank mod 64) is set for every variable in the support; a subset
  // test on masks is a necessary condition for divisibility.
  std::uint64_t support_mask_ = 0;
};

/// The diagonal term order: lexicographic with
/// X_11 > X_12 > ... > X_1n > X_21 > ... > X_mn.
class TermOrder {
public:
  explicit TermOrder(GridShape shape) : shape_(shape) {}

  const GridShape& shape() const { return shape_; }

  /// Throws ShapeMismatchError when a or b lives on another grid.
  std::strong_ordering compare(const GridMonomial& a, const GridMonomial& b) const;

private:
  GridShape shape_;
};

/// Lexicographic comparison without the shape check; both operands must share
/// a shape.
std::strong_ordering compare_unchecked(const GridMonomial& a, const GridMonomial& b);

/// Comparator sorting monomials descending under the diagonal order.
struct TauDescending {
  bool operator()(const GridMonomial& a, const GridMonomial& b) const {
    return compare_unchecked(a, b) == std::strong_ordering::greater;
  }
};

struct GridMonomialHash {
  std::size_t operator()(const GridMonomial& m) const { return m.hash(); }
};

} // namespace diagwin
