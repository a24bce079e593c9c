#include "diagwin/error.hpp"
#include "diagwin/matrix_model.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <map>

using namespace diagwin;

namespace {

std::vector<std::string> texts(const std::vector<GridMonomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms)
    out.push_back(m.to_string());
  return out;
}

long binomial(int n, int k) {
  long r = 1;
  for (int t = 1; t <= k; ++t)
    r = r * (n - k + t) / t;
  return r;
}

} // namespace

TEST_CASE("window validation") {
  const GridShape s(3, 8);
  CHECK_NOTHROW(Window(s, 2, 6));
  CHECK_THROWS_AS(Window(s, 3, 3), WindowConstraintError);
  CHECK_THROWS_AS(Window(s, 4, 5), WindowConstraintError); // too narrow for 3 rows
  CHECK_THROWS_AS(Window(s, 0, 4), WindowConstraintError);
  CHECK_THROWS_AS(Window(s, 6, 9), WindowConstraintError);
  CHECK_THROWS_AS(enumerate_diagonals(s, Window(s, 5, 6)), WindowConstraintError);
}

TEST_CASE("window chains") {
  const GridShape s(3, 9);
  const auto chain = WindowChain::parse(s, "1,5:3,7");
  CHECK(chain.size() == 2);
  CHECK(chain.is_sorted());
  CHECK(chain.to_string() == "1,5:3,7");
  CHECK_THROWS_AS(WindowChain::parse(s, "3,7:1,5"), WindowOrderError);
  CHECK_THROWS_AS(WindowChain::parse(GridShape(3, 8), "2,8:3,7"), WindowOrderError);
  const auto loose = WindowChain::parse(s, "3,7:1,5", WindowChain::OrderCheck::skip);
  CHECK_FALSE(loose.is_sorted());
  CHECK_THROWS_AS(loose.require_sorted(), WindowOrderError);
  CHECK_THROWS_AS(WindowChain::parse(s, ""), ParseError);
  CHECK_THROWS_AS(WindowChain::parse(s, "1-5"), ParseError);
  CHECK_THROWS_AS(WindowChain::parse(s, "1,5:"), ParseError);
  CHECK_THROWS_AS(WindowChain::parse(s, "1,2"), WindowConstraintError);
  CHECK_THROWS_AS(WindowChain(s, {}), DomainError);
}

TEST_CASE("sorted chain enumeration") {
  const GridShape s(2, 4);
  const auto windows = all_windows(s);
  CHECK(windows.size() == 6); // (k,l) with 1 <= k < l <= 4
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& c : sorted_chains(s, n)) {
      CHECK(c.size() == n);
      CHECK(c.is_sorted());
    }
  // Sorted pairs of windows: pairs (a,b) with a <= b componentwise.
  std::size_t expected = 0;
  for (const auto& a : windows)
    for (const auto& b : windows)
      expected += a.k() <= b.k() && a.l() <= b.l();
  CHECK(sorted_chains(s, 2).size() == expected);
}

TEST_CASE("enumerate diagonals") {
  const GridShape s(3, 8);
  CHECK(texts(enumerate_diagonals(s, Window(s, 2, 6))) ==
        std::vector<std::string>{
            "x[1,2]*x[2,3]*x[3,4]", "x[1,2]*x[2,3]*x[3,5]", "x[1,2]*x[2,3]*x[3,6]",
            "x[1,2]*x[2,4]*x[3,5]", "x[1,2]*x[2,4]*x[3,6]", "x[1,2]*x[2,5]*x[3,6]",
            "x[1,3]*x[2,4]*x[3,5]", "x[1,3]*x[2,4]*x[3,6]", "x[1,3]*x[2,5]*x[3,6]",
            "x[1,4]*x[2,5]*x[3,6]"});
  const GridShape s22(2, 2);
  CHECK(texts(enumerate_diagonals(s22, Window(s22, 1, 2))) ==
        std::vector<std::string>{"x[1,1]*x[2,2]"});
  const GridShape r(1, 3);
  CHECK(texts(enumerate_diagonals(r, Window(r, 1, 3))) ==
        std::vector<std::string>{"x[1,1]", "x[1,2]", "x[1,3]"});
}

TEST_CASE("diagonal enumeration agrees with the bitmask oracle") {
  for (int m = 1; m <= 4; ++m)
    for (int n = std::max(m, 2); n <= 10; ++n) {
      const GridShape s(m, n);
      for (const auto& w : all_windows(s)) {
        const auto got = enumerate_diagonals(s, w);
        CHECK(got == oracle::diagonals(s, w.k(), w.l()));
        CHECK(static_cast<long>(got.size()) == binomial(w.width(), m));
        for (std::size_t t = 1; t < got.size(); ++t)
          CHECK(compare_unchecked(got[t - 1], got[t]) == std::strong_ordering::greater);
      }
    }
}

TEST_CASE("diagonal ideals") {
  const GridShape s(3, 8);
  CHECK(diagonal_ideal(s, Window(s, 2, 6)).size() == 10);
  const GridShape r(1, 3);
  CHECK(diagonal_ideal(r, Window(r, 1, 2)).to_string() == "<x[1,1], x[1,2]>");
  const GridShape s23(2, 3);
  CHECK(diagonal_ideal(s23, Window(s23, 1, 3)).to_string() ==
        "<x[1,1]*x[2,2], x[1,1]*x[2,3], x[1,2]*x[2,3]>");
}

TEST_CASE("column selections") {
  const GridShape s(3, 6);
  CHECK_THROWS_AS(ColumnSelection(s, {1, 1, 2}), SelectionError);
  CHECK_THROWS_AS(ColumnSelection(s, {3, 2, 4}), SelectionError);
  CHECK_THROWS_AS(ColumnSelection(s, {1, 2}), SelectionError);
  CHECK_THROWS_AS(ColumnSelection(s, {1, 2, 7}), SelectionError);
  const ColumnSelection c(s, {2, 4, 5});
  CHECK(c.diagonal(s).to_string() == "x[1,2]*x[2,4]*x[3,5]");
  CHECK(c.within(Window(s, 2, 5)));
  CHECK_FALSE(c.within(Window(s, 3, 6)));
  CHECK(ColumnSelection::from_diagonal(c.diagonal(s)) == c);
  CHECK_FALSE(ColumnSelection::from_diagonal(GridMonomial::parse(s, "x[1,3]*x[2,2]*x[3,5]")));
  CHECK_FALSE(ColumnSelection::from_diagonal(GridMonomial::parse(s, "x[1,3]*x[2,4]")));
}

TEST_CASE("minor expansion") {
  const GridShape s22(2, 2);
  CHECK(minor(s22, ColumnSelection(s22, {1, 2})).to_string() ==
        "x[1,1]*x[2,2] - x[1,2]*x[2,1]");
  const GridShape r(1, 5);
  CHECK(minor(r, ColumnSelection(r, {4})).to_string() == "x[1,4]");
  const GridShape s33(3, 3);
  const auto m = minor(s33, ColumnSelection(s33, {1, 2, 3}));
  CHECK(m.terms.size() == 6);
  CHECK(m.terms.front().monomial.to_string() == "x[1,1]*x[2,2]*x[3,3]");
  CHECK(m.terms.front().sign == 1);
  const GridShape s77(7, 7);
  CHECK_THROWS_AS(minor(s77, ColumnSelection(s77, {1, 2, 3, 4, 5, 6, 7})), DomainError);
}

TEST_CASE("minor expansion agrees with Laplace expansion") {
  for (int m = 1; m <= 4; ++m) {
    const GridShape s(m, m + 2);
    for (const auto& d : enumerate_diagonals(s, Window(s, 1, m + 2))) {
      const auto sel = *ColumnSelection::from_diagonal(d);
      const auto poly = minor(s, sel);
      std::map<std::string, long> got;
      for (const auto& t : poly.terms)
        got[t.monomial.to_string()] = t.sign;
      CHECK(got == oracle::laplace(s, 1, sel.cols()));
      // The leading term under the diagonal order is the diagonal monomial.
      CHECK(poly.terms.front().monomial == d);
      for (std::size_t t = 1; t < poly.terms.size(); ++t)
        CHECK(oracle::lex_greater(poly.terms[t - 1].monomial, poly.terms[t].monomial));
    }
  }
}
