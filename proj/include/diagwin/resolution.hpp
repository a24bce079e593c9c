#pragma once

#include "diagwin/homology.hpp"
#include "diagwin/monomial_ideal.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace diagwin {

struct ResolutionCaps {
  std::size_t max_oracle_gens = 12;
  std::size_t max_lcm_candidates = 4096;
};

/// Graded Betti numbers beta_{i,j} of an ideal I (not of S/I), so
/// reg(S/I) = regularity() - 1.
class BettiTable {
public:
  explicit BettiTable(std::uint64_t field_char) : field_char_(field_char) {}

  std::uint64_t field_char() const { return field_char_; }
  void add(int i, int j, std::size_t beta);
  std::size_t at(int i, int j) const;
  /// Nonzero entries keyed by (i, j).
  const std::map<std::pair<int, int>, std::size_t>& entries() const { return entries_; }
  /// beta_i = sum over j of beta_{i,j}, for i = 0..projective dimension.
  std::vector<std::size_t> totals() const;
  /// max { j - i : beta_{i,j} != 0 }. Throws DomainError for an empty table.
  int regularity() const;

  /// Same nonzero entries, regardless of the field characteristic.
  bool same_entries(const BettiTable& other) const { return entries_ == other.entries_; }

  /// Betti diagram in the usual layout: rows indexed by j - i, columns by i.
  std::string to_string() const;

private:
  std::uint64_t field_char_;
  std::map<std::pair<int, int>, std::size_t> entries_;
};

/// The upper Koszul simplicial complex K^b(I) = { squarefree sets s of
/// variables : b / x^s lies in I }, stored by its facets. For every
/// generator g dividing b the set { v : b_v > g_v } spans a facet candidate.
struct KoszulComplex {
  GridMonomial multidegree;
  std::vector<std::vector<VarIndex>> facets;

  /// Every face, explicitly. Exponential in the facet sizes; meant for
  /// small multidegrees.
  SimplicialComplex faces() const;
};

KoszulComplex upper_koszul_complex(const MonomialIdeal& ideal, const GridMonomial& b);

struct MultigradedBetti {
  GridMonomial multidegree;
  int i;
  std::size_t beta;
};

/// Nonzero beta_{i,b}(I) over all lcms b of nonempty generator subsets,
/// sorted by (i, b descending). Each value is dim H~_{i-1}(K^b(I)),
/// computed on the nerve of the facet cover of K^b. Throws ResourceError
/// above the caps, DomainError for the zero ideal.
std::vector<MultigradedBetti> multigraded_betti(const MonomialIdeal& ideal,
                                                std::uint64_t field_char,
                                                const ResolutionCaps& caps = {});

/// Betti table from reduced homology of upper Koszul complexes.
BettiTable betti_table(const MonomialIdeal& ideal, std::uint64_t field_char = 0,
                       const ResolutionCaps& caps = {});

/// Betti table of an equigenerated ideal with linear quotients in the
/// descending diagonal order: beta_{i,d+i} = sum_u C(r_u, i), r_u the number
/// of variables generating the u-th colon. Throws DomainError when the
/// quotient chain does not certify linear quotients or degrees are mixed.
BettiTable mapping_cone_betti(const MonomialIdeal& ideal);

enum class RegularityMethod { automatic, homology, mapping_cone };

/// reg(I). `automatic` uses the mapping cone count when the quotient chain
/// certifies linear quotients, otherwise the homology oracle.
int regularity(const MonomialIdeal& ideal, RegularityMethod method = RegularityMethod::automatic,
               std::uint64_t field_char = 0, const ResolutionCaps& caps = {});

/// reg(I) == d for an ideal generated in degree d. Throws DomainError for
/// mixed generator degrees.
bool has_linear_resolution(const MonomialIdeal& ideal,
                           RegularityMethod method = RegularityMethod::automatic,
                           std::uint64_t field_char = 0, const ResolutionCaps& caps = {});

/// {"char":p,"rows":[{"i":..,"j":..,"beta":..}],"reg":r}
nlohmann::ordered_json to_json(const BettiTable& table);

} // namespace diagwin
