#include "diagwin/monomial.hpp"

#include "diagwin/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace diagwin {

GridShape::GridShape(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1 || rows > cols) {
    std::ostringstream msg;
    msg << "grid shape " << rows << "x" << cols << " violates 1 <= m <= n";
    throw DomainError(msg.str());
  }
}

GridMonomial::GridMonomial(GridShape shape)
    : shape_(shape), exps_(static_cast<std::size_t>(shape.variable_count()), 0) {}

GridMonomial GridMonomial::variable(GridShape shape, VarIndex v) {
  GridMonomial m(shape);
  m.exps_[m.rank(v)] = 1;
  m.refresh();
  return m;
}

GridMonomial GridMonomial::from_factors(
    GridShape shape, const std::vector<std::pair<VarIndex, Exponent>>& factors) {
  GridMonomial m(shape);
  for (const auto& [v, e] : factors)
    m.exps_[m.rank(v)] += e;
  m.refresh();
  return m;
}

std::size_t GridMonomial::rank(VarIndex v) const {
  if (v.row < 1 || v.row > shape_.rows() || v.col < 1 || v.col > shape_.cols()) {
    std::ostringstream msg;
    msg << "variable x[" << v.row << "," << v.col << "] outside the " << shape_.rows() << "x"
        << shape_.cols() << " grid";
    throw DomainError(msg.str());
  }
  return static_cast<std::size_t>((v.row - 1) * shape_.cols() + (v.col - 1));
}

void GridMonomial::refresh() {
  degree_ = 0;
  support_mask_ = 0;
  for (std::size_t r = 0; r < exps_.size(); ++r) {
    if (exps_[r] != 0) {
      degree_ += exps_[r];
      support_mask_ |= std::uint64_t{1} << (r % 64);
    }
  }
}

void GridMonomial::require_same_shape(const GridMonomial& other) const {
  if (!(shape_ == other.shape_))
    throw ShapeMismatchError("monomials live on different grids");
}

Exponent GridMonomial::exponent(VarIndex v) const { return exps_[rank(v)]; }

bool GridMonomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::pair<VarIndex, Exponent>> GridMonomial::factors() const {
  std::vector<std::pair<VarIndex, Exponent>> out;
  const int n = shape_.cols();
  for (std::size_t r = 0; r < exps_.size(); ++r) {
    if (exps_[r] != 0) {
      const int ri = static_cast<int>(r);
      out.push_back({VarIndex{ri / n + 1, ri % n + 1}, exps_[r]});
    }
  }
  return out;
}

std::vector<VarIndex> GridMonomial::support() const {
  std::vector<VarIndex> out;
  for (const auto& f : factors())
    out.push_back(f.first);
  return out;
}

bool GridMonomial::divides(const GridMonomial& other) const {
  require_same_shape(other);
  if (degree_ > other.degree_ || (support_mask_ & ~other.support_mask_) != 0)
    return false;
  for (std::size_t r = 0; r < exps_.size(); ++r)
    if (exps_[r] > other.exps_[r])
      return false;
  return true;
}

GridMonomial GridMonomial::operator*(const GridMonomial& other) const {
  require_same_shape(other);
  GridMonomial out(*this);
  for (std::size_t r = 0; r < exps_.size(); ++r)
    out.exps_[r] += other.exps_[r];
  out.degree_ = degree_ + other.degree_;
  out.support_mask_ = support_mask_ | other.support_mask_;
  return out;
}

GridMonomial GridMonomial::operator/(const GridMonomial& divisor) const {
  if (!divisor.divides(*this))
    throw DomainError("monomial quotient is not exact: " + divisor.to_string() +
                      " does not divide " + to_string());
  GridMonomial out(*this);
  for (std::size_t r = 0; r < exps_.size(); ++r)
    out.exps_[r] -= divisor.exps_[r];
  out.refresh();
  return out;
}

GridMonomial GridMonomial::lcm(const GridMonomial& other) const {
  require_same_shape(other);
  GridMonomial out(*this);
  for (std::size_t r = 0; r < exps_.size(); ++r)
    out.exps_[r] = std::max(exps_[r], other.exps_[r]);
  out.refresh();
  return out;
}

GridMonomial GridMonomial::gcd(const GridMonomial& other) const {
  require_same_shape(other);
  GridMonomial out(*this);
  for (std::size_t r = 0; r < exps_.size(); ++r)
    out.exps_[r] = std::min(exps_[r], other.exps_[r]);
  out.refresh();
  return out;
}

bool GridMonomial::coprime(const GridMonomial& other) const {
  require_same_shape(other);
  if ((support_mask_ & other.support_mask_) == 0)
    return true;
  for (std::size_t r = 0; r < exps_.size(); ++r)
    if (exps_[r] != 0 && other.exps_[r] != 0)
      return false;
  return true;
}

std::size_t GridMonomial::hash() const {
  std::size_t h = std::hash<int>{}(shape_.cols()) ^ (std::hash<int>{}(shape_.rows()) << 1);
  for (Exponent e : exps_)
    h = h * 1099511628211ULL + e;
  return h;
}

std::string GridMonomial::to_string() const {
  if (is_unit())
    return "1";
  std::string out;
  for (const auto& [v, e] : factors()) {
    if (!out.empty())
      out += '*';
    out += "x[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
    if (e >= 2)
      out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }
  long number() {
    skip_space();
    long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{})
      fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("monomial '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

GridMonomial GridMonomial::parse(GridShape shape, std::string_view text) {
  Cursor in(text);
  GridMonomial m(shape);
  if (in.accept('1')) {
    if (!in.done())
      in.fail("trailing characters after unit");
    return m;
  }
  do {
    in.expect('x');
    in.expect('[');
    const long row = in.number();
    in.expect(',');
    const long col = in.number();
    in.expect(']');
    long e = 1;
    if (in.accept('^')) {
      e = in.number();
      if (e < 1)
        in.fail("exponent must be positive");
    }
    if (row < 1 || row > shape.rows() || col < 1 || col > shape.cols())
      in.fail("variable outside the grid");
    m.exps_[m.rank({static_cast<int>(row), static_cast<int>(col)})] += static_cast<Exponent>(e);
  } while (in.accept('*'));
  if (!in.done())
    in.fail("trailing characters");
  m.refresh();
  return m;
}

std::strong_ordering compare_unchecked(const GridMonomial& a, const GridMonomial& b) {
  return a.exps_ <=> b.exps_;
}

std::strong_ordering TermOrder::compare(const GridMonomial& a, const GridMonomial& b) const {
  if (!(a.shape() == shape_) || !(b.shape() == shape_))
    throw ShapeMismatchError("monomial compared under the order of a different grid");
  return compare_unchecked(a, b);
}

} // namespace diagwin
