#pragma once

#include <cstdint>
#include <vector>

namespace diagwin {

/// Integer matrix in row-major dense form.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Exact rank of an integer matrix over Q (field_char 0) or GF(p).
///
/// Over Q this is fraction-free (Bareiss) elimination in 64-bit arithmetic,
/// restarted with GMP integers if an intermediate value would overflow.
std::size_t matrix_rank(const IntMatrix& m, std::uint64_t field_char);

/// A finite simplicial complex closed under taking subsets. Each face is a
/// strictly increasing list of vertex labels; the empty face is included
/// whenever the complex is nonempty as a set system.
struct SimplicialComplex {
  std::vector<std::vector<int>> faces;
};

/// Dimensions of reduced homology over the field: entry d + 1 holds
/// dim H~_d for d = -1, 0, 1, ... up to the complex dimension.
std::vector<std::size_t> reduced_homology(const SimplicialComplex& complex,
                                          std::uint64_t field_char);

} // namespace diagwin
