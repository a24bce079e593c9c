#include "diagwin/homology.hpp"

#include "diagwin/error.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>

namespace diagwin {

namespace {

template <class Int>
std::optional<std::size_t> bareiss_rank(std::vector<std::vector<Int>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  Int previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        if constexpr (std::is_same_v<Int, std::int64_t>) {
          std::int64_t x, y, z;
          if (__builtin_mul_overflow(a[rank][col], a[r][c], &x) ||
              __builtin_mul_overflow(a[r][col], a[rank][c], &y) ||
              __builtin_sub_overflow(x, y, &z))
            return std::nullopt;
          a[r][c] = z / previous;
        } else {
          a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / previous;
        }
      }
      a[r][col] = 0;
    }
    previous = a[rank][col];
    ++rank;
  }
  return rank;
}

std::uint64_t mod_reduce(std::int64_t v, std::uint64_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (e != 0) {
    if (e & 1)
      result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

std::size_t modular_rank(const IntMatrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> a;
  a.reserve(m.size());
  for (const auto& row : m) {
    std::vector<std::uint64_t> out(row.size());
    std::transform(row.begin(), row.end(), out.begin(),
                   [p](std::int64_t v) { return mod_reduce(v, p); });
    a.push_back(std::move(out));
  }
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = pow_mod(a[rank][col], p - 2, p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0)
        continue;
      const std::uint64_t factor = mul_mod(a[r][col], inv, p);
      for (std::size_t c = col; c < cols; ++c)
        a[r][c] = (a[r][c] + p - mul_mod(factor, a[rank][c], p)) % p;
    }
    ++rank;
  }
  return rank;
}

} // namespace

std::size_t matrix_rank(const IntMatrix& m, std::uint64_t field_char) {
  if (m.empty() || m.front().empty())
    return 0;
  if (field_char != 0)
    return modular_rank(m, field_char);
  if (auto rank = bareiss_rank<std::int64_t>(m))
    return *rank;
  std::vector<std::vector<mpz_class>> big;
  for (const auto& row : m) {
    std::vector<mpz_class> out;
    for (std::int64_t v : row)
      out.emplace_back(static_cast<long>(v));
    big.push_back(std::move(out));
  }
  return *bareiss_rank<mpz_class>(std::move(big));
}

std::vector<std::size_t> reduced_homology(const SimplicialComplex& complex,
                                          std::uint64_t field_char) {
  if (complex.faces.empty())
    return {};
  // faces_by_dim[d + 1] lists the faces of dimension d, indexed for the
  // boundary matrices.
  std::vector<std::map<std::vector<int>, std::size_t>> faces_by_dim;
  for (const auto& face : complex.faces) {
    const std::size_t slot = face.size();
    if (faces_by_dim.size() <= slot)
      faces_by_dim.resize(slot + 1);
    faces_by_dim[slot].emplace(face, 0);
  }
  for (auto& layer : faces_by_dim) {
    std::size_t index = 0;
    for (auto& [face, id] : layer)
      id = index++;
  }

  // boundary_rank[slot] is the rank of the boundary from faces with `slot`
  // vertices to faces with slot - 1 vertices.
  std::vector<std::size_t> boundary_rank(faces_by_dim.size() + 1, 0);
  for (std::size_t slot = 1; slot < faces_by_dim.size(); ++slot) {
    const auto& upper = faces_by_dim[slot];
    const auto& lower = faces_by_dim[slot - 1];
    if (upper.empty() || lower.empty())
      continue;
    IntMatrix boundary(lower.size(), std::vector<std::int64_t>(upper.size(), 0));
    for (const auto& [face, col] : upper) {
      for (std::size_t drop = 0; drop < face.size(); ++drop) {
        std::vector<int> sub = face;
        sub.erase(sub.begin() + static_cast<long>(drop));
        const auto it = lower.find(sub);
        if (it == lower.end())
          throw DomainError("face list is not closed under taking subsets");
        boundary[it->second][col] = drop % 2 == 0 ? 1 : -1;
      }
    }
    boundary_rank[slot] = matrix_rank(boundary, field_char);
  }

  std::vector<std::size_t> homology(faces_by_dim.size(), 0);
  for (std::size_t slot = 0; slot < faces_by_dim.size(); ++slot)
    homology[slot] = faces_by_dim[slot].size() - boundary_rank[slot] - boundary_rank[slot + 1];
  return homology;
}

} // namespace diagwin
