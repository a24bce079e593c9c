#include "diagwin/matrix_model.hpp"

#include "diagwin/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace diagwin {

Window::Window(const GridShape& shape, int k, int l) : k_(k), l_(l) {
  if (k < 1 || k >= l || l > shape.cols() || l - k + 1 < shape.rows()) {
    std::ostringstream msg;
    msg << "window (" << k << "," << l << ") on a " << shape.rows() << "x" << shape.cols()
        << " grid needs 1 <= k < l <= n and l - k + 1 >= m";
    throw WindowConstraintError(msg.str());
  }
}

WindowChain::WindowChain(GridShape shape, std::vector<Window> windows, OrderCheck check)
    : shape_(shape), windows_(std::move(windows)) {
  if (windows_.empty())
    throw DomainError("a window chain needs at least one window");
  for (const auto& w : windows_)
    static_cast<void>(Window(shape_, w.k(), w.l())); // revalidate against this shape
  if (check == OrderCheck::enforce)
    require_sorted();
}

WindowChain WindowChain::parse(GridShape shape, std::string_view text, OrderCheck check) {
  std::vector<Window> windows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find(':', start), text.size());
    const std::string_view item = text.substr(start, stop - start);
    const std::size_t comma = item.find(',');
    int k = 0, l = 0;
    if (comma == std::string_view::npos ||
        std::from_chars(item.data(), item.data() + comma, k).ec != std::errc{} ||
        std::from_chars(item.data() + comma + 1, item.data() + item.size(), l).ec !=
            std::errc{})
      throw ParseError("window chain '" + std::string(text) + "': expected k,l at '" +
                       std::string(item) + "'");
    windows.emplace_back(shape, k, l);
    start = stop + 1;
  }
  return WindowChain(shape, std::move(windows), check);
}

bool WindowChain::is_sorted() const {
  for (std::size_t j = 1; j < windows_.size(); ++j)
    if (windows_[j - 1].k() > windows_[j].k() || windows_[j - 1].l() > windows_[j].l())
      return false;
  return true;
}

void WindowChain::require_sorted() const {
  for (std::size_t j = 1; j < windows_.size(); ++j) {
    if (windows_[j - 1].k() > windows_[j].k() || windows_[j - 1].l() > windows_[j].l()) {
      std::ostringstream msg;
      msg << "window chain " << to_string() << " is not sorted: window " << j << " ("
          << windows_[j - 1].k() << "," << windows_[j - 1].l() << ") precedes (" << windows_[j].k()
          << "," << windows_[j].l() << ")";
      throw WindowOrderError(msg.str());
    }
  }
}

std::string WindowChain::to_string() const {
  std::string out;
  for (const auto& w : windows_) {
    if (!out.empty())
      out += ':';
    out += std::to_string(w.k()) + "," + std::to_string(w.l());
  }
  return out;
}

std::vector<Window> all_windows(const GridShape& shape) {
  std::vector<Window> out;
  for (int k = 1; k <= shape.cols(); ++k)
    for (int l = k + 1; l <= shape.cols(); ++l)
      if (l - k + 1 >= shape.rows())
        out.emplace_back(shape, k, l);
  return out;
}

std::vector<WindowChain> sorted_chains(const GridShape& shape, std::size_t s) {
  std::vector<WindowChain> out;
  if (s == 0)
    return out;
  const auto windows = all_windows(shape);
  std::vector<Window> current;
  auto extend = [&](auto&& self) -> void {
    if (current.size() == s) {
      out.emplace_back(shape, current);
      return;
    }
    for (const auto& w : windows) {
      if (!current.empty() && (w.k() < current.back().k() || w.l() < current.back().l()))
        continue;
      current.push_back(w);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

ColumnSelection::ColumnSelection(const GridShape& shape, std::vector<int> cols)
    : cols_(std::move(cols)) {
  if (cols_.size() != static_cast<std::size_t>(shape.rows()))
    throw SelectionError("column selection needs exactly m = " + std::to_string(shape.rows()) +
                         " columns");
  for (std::size_t i = 0; i < cols_.size(); ++i) {
    if (cols_[i] < 1 || cols_[i] > shape.cols())
      throw SelectionError("column " + std::to_string(cols_[i]) + " outside the grid");
    if (i > 0 && cols_[i - 1] >= cols_[i])
      throw SelectionError("column selection must be strictly increasing");
  }
}

bool ColumnSelection::within(const Window& w) const {
  return w.contains_column(cols_.front()) && w.contains_column(cols_.back());
}

GridMonomial ColumnSelection::diagonal(const GridShape& shape) const {
  std::vector<std::pair<VarIndex, Exponent>> factors;
  for (std::size_t i = 0; i < cols_.size(); ++i)
    factors.push_back({VarIndex{static_cast<int>(i) + 1, cols_[i]}, 1});
  return GridMonomial::from_factors(shape, factors);
}

std::optional<ColumnSelection> ColumnSelection::from_diagonal(const GridMonomial& m) {
  const GridShape& shape = m.shape();
  const auto factors = m.factors();
  if (factors.size() != static_cast<std::size_t>(shape.rows()))
    return std::nullopt;
  std::vector<int> cols;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [v, e] = factors[i];
    if (e != 1 || v.row != static_cast<int>(i) + 1)
      return std::nullopt;
    if (!cols.empty() && cols.back() >= v.col)
      return std::nullopt;
    cols.push_back(v.col);
  }
  return ColumnSelection(shape, std::move(cols));
}

std::vector<GridMonomial> enumerate_diagonals(const GridShape& shape, const Window& w) {
  static_cast<void>(Window(shape, w.k(), w.l()));
  const int m = shape.rows();
  // Column tuples in increasing lexicographic order give diagonals in
  // decreasing diagonal order: the first differing row picks the smaller
  // column, i.e. the larger variable.
  std::vector<int> cols(static_cast<std::size_t>(m));
  std::iota(cols.begin(), cols.end(), w.k());
  std::vector<GridMonomial> out;
  while (true) {
    out.push_back(ColumnSelection(shape, cols).diagonal(shape));
    int i = m - 1;
    while (i >= 0 && cols[static_cast<std::size_t>(i)] == w.l() - (m - 1 - i))
      --i;
    if (i < 0)
      break;
    ++cols[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j)
      cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

MonomialIdeal diagonal_ideal(const GridShape& shape, const Window& w) {
  auto diagonals = enumerate_diagonals(shape, w);
  MonomialIdeal ideal = minimalize(shape, diagonals);
  if (ideal.generators() != diagonals)
    throw std::logic_error("diagonal monomials of a window must be pairwise non-dividing");
  return ideal;
}

MonomialIdeal chain_product_ideal(const WindowChain& chain) {
  std::vector<MonomialIdeal> factors;
  for (const auto& w : chain.windows())
    factors.push_back(diagonal_ideal(chain.shape(), w));
  return product(factors);
}

MinorPolynomial minor(const GridShape& shape, const ColumnSelection& selection) {
  const int m = shape.rows();
  if (m > kMaxMinorRows)
    throw DomainError("minor expansion is capped at m = " + std::to_string(kMaxMinorRows));
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  MinorPolynomial out{selection, {}};
  do {
    int inversions = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
          ++inversions;
    std::vector<std::pair<VarIndex, Exponent>> factors;
    for (int i = 0; i < m; ++i)
      factors.push_back({VarIndex{i + 1, selection.cols()[static_cast<std::size_t>(
                                             perm[static_cast<std::size_t>(i)])]},
                         1});
    out.terms.push_back({inversions % 2 == 0 ? 1 : -1, GridMonomial::from_factors(shape, factors)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.terms.begin(), out.terms.end(), [](const MinorTerm& a, const MinorTerm& b) {
    return TauDescending{}(a.monomial, b.monomial);
  });
  return out;
}

std::string MinorPolynomial::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    if (out.empty())
      out += t.sign < 0 ? "-" : "";
    else
      out += t.sign < 0 ? " - " : " + ";
    out += t.monomial.to_string();
  }
  return out;
}

} // namespace diagwin
