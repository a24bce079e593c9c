#pragma once

#include "diagwin/monomial.hpp"
#include "diagwin/monomial_ideal.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace diagwin {

/// Largest m for which maximal minors are expanded (6! = 720 terms).
inline constexpr int kMaxMinorRows = 6;

/// Consecutive columns k..l of the grid (the submatrix Y_kl).
class Window {
public:
  /// Throws WindowConstraintError unless 1 <= k < l <= n and l - k + 1 >= m.
  Window(const GridShape& shape, int k, int l);

  int k() const { return k_; }
  int l() const { return l_; }
  int width() const { return l_ - k_ + 1; }
  bool contains_column(int c) const { return k_ <= c && c <= l_; }

  friend bool operator==(const Window&, const Window&) = default;

private:
  int k_;
  int l_;
};

/// Windows (k_1,l_1),...,(k_s,l_s) of one grid.
///
/// A chain is "sorted" when k_1 <= ... <= k_s and l_1 <= ... <= l_s. Sorted
/// chains are the only ones the closed-form colon machinery accepts;
/// unsorted chains can still be built with OrderCheck::skip so the brute
/// force side can reproduce the counterexamples.
class WindowChain {
public:
  enum class OrderCheck { enforce, skip };

  /// Throws DomainError for an empty list, WindowOrderError for an unsorted
  /// list under OrderCheck::enforce.
  WindowChain(GridShape shape, std::vector<Window> windows,
              OrderCheck check = OrderCheck::enforce);

  /// Parses "k1,l1:k2,l2:...".
  static WindowChain parse(GridShape shape, std::string_view text,
                           OrderCheck check = OrderCheck::enforce);

  const GridShape& shape() const { return shape_; }
  const std::vector<Window>& windows() const { return windows_; }
  std::size_t size() const { return windows_.size(); }
  const Window& operator[](std::size_t j) const { return windows_[j]; }
  bool is_sorted() const;
  /// Throws WindowOrderError naming the first offending pair.
  void require_sorted() const;

  std::string to_string() const;

private:
  GridShape shape_;
  std::vector<Window> windows_;
};

/// Every sorted chain of exactly s windows on the grid, in lexicographic
/// order of the (k,l) sequence.
std::vector<WindowChain> sorted_chains(const GridShape& shape, std::size_t s);
/// Every valid window of the grid, ordered by (k, l).
std::vector<Window> all_windows(const GridShape& shape);

/// Columns c_1 < ... < c_m of a maximal minor.
class ColumnSelection {
public:
  /// Throws SelectionError unless the list has m strictly increasing columns
  /// inside the grid.
  ColumnSelection(const GridShape& shape, std::vector<int> cols);

  const std::vector<int>& cols() const { return cols_; }
  int col(int row) const { return cols_[static_cast<std::size_t>(row - 1)]; }
  bool within(const Window& w) const;

  /// X_{1 c_1} ... X_{m c_m}.
  GridMonomial diagonal(const GridShape& shape) const;

  /// The selection whose diagonal is `m`, if `m` is a diagonal monomial of
  /// the grid (squarefree, one variable per row, columns increasing).
  static std::optional<ColumnSelection> from_diagonal(const GridMonomial& m);

  friend bool operator==(const ColumnSelection&, const ColumnSelection&) = default;

private:
  std::vector<int> cols_;
};

/// All diagonal monomials of the window, strictly descending under the
/// diagonal order. There are C(l-k+1, m) of them.
std::vector<GridMonomial> enumerate_diagonals(const GridShape& shape, const Window& w);

/// J_kl, the ideal generated by the diagonal monomials of the window.
MonomialIdeal diagonal_ideal(const GridShape& shape, const Window& w);

/// J_{k_1 l_1} ... J_{k_s l_s}.
MonomialIdeal chain_product_ideal(const WindowChain& chain);

struct MinorTerm {
  int sign; // +1 or -1
  GridMonomial monomial;
};

/// det(X_{i c_j}) expanded over all m! permutations.
struct MinorPolynomial {
  ColumnSelection selection;
  /// Terms sorted descending under the diagonal order; terms.front() is the
  /// diagonal monomial with sign +1.
  std::vector<MinorTerm> terms;

  std::string to_string() const;
};

/// Throws DomainError when m exceeds kMaxMinorRows.
MinorPolynomial minor(const GridShape& shape, const ColumnSelection& selection);

} // namespace diagwin
