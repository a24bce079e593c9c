#include "diagwin/resolution.hpp"

#include "diagwin/error.hpp"
#include "diagwin/linear_quotients.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace diagwin {

void BettiTable::add(int i, int j, std::size_t beta) {
  if (beta != 0)
    entries_[{i, j}] += beta;
}

std::size_t BettiTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<std::size_t> BettiTable::totals() const {
  std::vector<std::size_t> out;
  for (const auto& [key, beta] : entries_) {
    const auto i = static_cast<std::size_t>(key.first);
    if (out.size() <= i)
      out.resize(i + 1, 0);
    out[i] += beta;
  }
  return out;
}

int BettiTable::regularity() const {
  if (entries_.empty())
    throw DomainError("regularity of an empty Betti table");
  int reg = entries_.begin()->first.second - entries_.begin()->first.first;
  for (const auto& [key, beta] : entries_)
    reg = std::max(reg, key.second - key.first);
  return reg;
}

std::string BettiTable::to_string() const {
  if (entries_.empty())
    return "(empty)\n";
  int max_i = 0, min_row = entries_.begin()->first.second, max_row = min_row;
  for (const auto& [key, beta] : entries_) {
    max_i = std::max(max_i, key.first);
    min_row = std::min(min_row, key.second - key.first);
    max_row = std::max(max_row, key.second - key.first);
  }
  std::ostringstream out;
  out << "char " << field_char_ << "\n       ";
  for (int i = 0; i <= max_i; ++i)
    out << ' ' << std::string(5 - std::min<std::size_t>(5, std::to_string(i).size()), ' ') << i;
  out << "\ntotal: ";
  const auto sums = totals();
  for (int i = 0; i <= max_i; ++i) {
    const std::string cell = std::to_string(sums[static_cast<std::size_t>(i)]);
    out << ' ' << std::string(5 - std::min<std::size_t>(5, cell.size()), ' ') << cell;
  }
  out << '\n';
  for (int row = min_row; row <= max_row; ++row) {
    const std::string label = std::to_string(row) + ":";
    out << std::string(7 - std::min<std::size_t>(7, label.size()), ' ') << label;
    for (int i = 0; i <= max_i; ++i) {
      const std::size_t beta = at(i, row + i);
      const std::string cell = beta == 0 ? "." : std::to_string(beta);
      out << ' ' << std::string(5 - std::min<std::size_t>(5, cell.size()), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

SimplicialComplex KoszulComplex::faces() const {
  std::set<std::vector<int>> all;
  const int cols = multidegree.shape().cols();
  for (const auto& facet : facets) {
    std::vector<int> labels;
    for (const auto& v : facet)
      labels.push_back((v.row - 1) * cols + v.col);
    if (labels.size() > 24)
      throw ResourceError("upper Koszul facet too large to enumerate faces explicitly");
    const std::uint32_t subsets = std::uint32_t{1} << labels.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      std::vector<int> face;
      for (std::size_t t = 0; t < labels.size(); ++t)
        if (mask & (std::uint32_t{1} << t))
          face.push_back(labels[t]);
      all.insert(std::move(face));
    }
  }
  return SimplicialComplex{{all.begin(), all.end()}};
}

KoszulComplex upper_koszul_complex(const MonomialIdeal& ideal, const GridMonomial& b) {
  KoszulComplex complex{b, {}};
  std::set<std::vector<VarIndex>> facets;
  for (const auto& g : ideal.generators()) {
    if (!g.divides(b))
      continue;
    std::vector<VarIndex> facet;
    for (const auto& [v, e] : b.factors())
      if (e > g.exponent(v))
        facet.push_back(v);
    facets.insert(std::move(facet));
  }
  // Keep only maximal sets.
  for (const auto& f : facets) {
    const bool dominated = std::any_of(facets.begin(), facets.end(), [&](const auto& other) {
      return other != f && std::includes(other.begin(), other.end(), f.begin(), f.end());
    });
    if (!dominated)
      complex.facets.push_back(f);
  }
  return complex;
}

std::vector<MultigradedBetti> multigraded_betti(const MonomialIdeal& ideal,
                                                std::uint64_t field_char,
                                                const ResolutionCaps& caps) {
  if (ideal.is_zero())
    throw DomainError("Betti numbers of the zero ideal");
  const auto& gens = ideal.generators();
  const std::size_t r = gens.size();
  if (r > caps.max_oracle_gens || r > 20)
    throw ResourceError("homology oracle capped at " + std::to_string(caps.max_oracle_gens) +
                        " generators; ideal has " + std::to_string(r));

  // lcm of every generator subset, bitmask-indexed, with an id per distinct
  // lcm value.
  const std::size_t subsets = std::size_t{1} << r;
  std::vector<std::size_t> lcm_id(subsets);
  std::vector<GridMonomial> distinct;
  std::unordered_map<GridMonomial, std::size_t, GridMonomialHash> ids;
  {
    std::vector<GridMonomial> lcms;
    lcms.reserve(subsets);
    lcms.emplace_back(ideal.shape());
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
      lcms.push_back(lcms[mask & (mask - 1)].lcm(gens[low]));
    }
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      auto [it, fresh] = ids.try_emplace(lcms[mask], distinct.size());
      if (fresh)
        distinct.push_back(lcms[mask]);
      lcm_id[mask] = it->second;
    }
  }
  // Candidates are lcms of nonempty subsets; the empty subset's lcm is 1 and
  // only counts when 1 itself is a generator.
  std::vector<bool> is_candidate(distinct.size(), false);
  for (std::size_t mask = 1; mask < subsets; ++mask)
    is_candidate[lcm_id[mask]] = true;
  const auto candidate_count =
      static_cast<std::size_t>(std::count(is_candidate.begin(), is_candidate.end(), true));
  if (candidate_count > caps.max_lcm_candidates)
    throw ResourceError("ideal has " + std::to_string(candidate_count) +
                        " lcm candidates, above the cap of " +
                        std::to_string(caps.max_lcm_candidates));

  std::vector<MultigradedBetti> out;
  for (std::size_t id = 0; id < distinct.size(); ++id) {
    if (!is_candidate[id])
      continue;
    const GridMonomial& b = distinct[id];
    std::size_t divisors = 0;
    for (std::size_t t = 0; t < r; ++t)
      if (gens[t].divides(b))
        divisors |= std::size_t{1} << t;

    // Nerve of the facet cover: generator sets whose lcm is a proper divisor
    // of b (the facets of those generators meet in a nonempty simplex). The
    // empty face is always present since b lies in I.
    SimplicialComplex nerve;
    for (std::size_t sub = divisors;; sub = (sub - 1) & divisors) {
      if (sub == 0 || lcm_id[sub] != id) {
        std::vector<int> face;
        for (std::size_t t = 0; t < r; ++t)
          if (sub & (std::size_t{1} << t))
            face.push_back(static_cast<int>(t));
        nerve.faces.push_back(std::move(face));
      }
      if (sub == 0)
        break;
    }
    const auto homology = reduced_homology(nerve, field_char);
    for (std::size_t slot = 0; slot < homology.size(); ++slot)
      if (homology[slot] != 0)
        out.push_back({b, static_cast<int>(slot), homology[slot]});
  }
  std::sort(out.begin(), out.end(), [](const MultigradedBetti& a, const MultigradedBetti& b) {
    if (a.i != b.i)
      return a.i < b.i;
    return TauDescending{}(a.multidegree, b.multidegree);
  });
  return out;
}

BettiTable betti_table(const MonomialIdeal& ideal, std::uint64_t field_char,
                       const ResolutionCaps& caps) {
  BettiTable table(field_char);
  for (const auto& entry : multigraded_betti(ideal, field_char, caps))
    table.add(entry.i, static_cast<int>(entry.multidegree.degree()), entry.beta);
  return table;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n)
    return 0;
  std::size_t out = 1;
  for (std::size_t t = 1; t <= k; ++t)
    out = out * (n - k + t) / t;
  return out;
}

} // namespace

BettiTable mapping_cone_betti(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    throw DomainError("Betti numbers of the zero ideal");
  const unsigned d = ideal.generators().front().degree();
  if (!ideal.is_generated_in_degree(d))
    throw DomainError("mapping cone count needs an equigenerated ideal");
  const QuotientChain chain = quotient_chain(ideal);
  if (!chain.certifies_linear_quotients())
    throw DomainError("ideal " + ideal.to_string() +
                      " has no linear quotients in the diagonal order");
  BettiTable table(0);
  for (std::size_t r : chain.colon_sizes())
    for (std::size_t i = 0; i <= r; ++i)
      table.add(static_cast<int>(i), static_cast<int>(d + i), binomial(r, i));
  return table;
}

int regularity(const MonomialIdeal& ideal, RegularityMethod method, std::uint64_t field_char,
               const ResolutionCaps& caps) {
  switch (method) {
  case RegularityMethod::homology:
    return betti_table(ideal, field_char, caps).regularity();
  case RegularityMethod::mapping_cone:
    return mapping_cone_betti(ideal).regularity();
  case RegularityMethod::automatic:
    break;
  }
  if (ideal.is_zero())
    throw DomainError("regularity of the zero ideal");
  const unsigned d = ideal.generators().front().degree();
  if (ideal.is_generated_in_degree(d) && quotient_chain(ideal).certifies_linear_quotients())
    return mapping_cone_betti(ideal).regularity();
  return betti_table(ideal, field_char, caps).regularity();
}

bool has_linear_resolution(const MonomialIdeal& ideal, RegularityMethod method,
                           std::uint64_t field_char, const ResolutionCaps& caps) {
  if (ideal.is_zero())
    throw DomainError("linear resolution test on the zero ideal");
  const unsigned d = ideal.generators().front().degree();
  if (!ideal.is_generated_in_degree(d))
    throw DomainError("linear resolution test needs generators of a single degree");
  return regularity(ideal, method, field_char, caps) == static_cast<int>(d);
}

nlohmann::ordered_json to_json(const BettiTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [key, beta] : table.entries())
    rows.push_back({{"i", key.first}, {"j", key.second}, {"beta", beta}});
  nlohmann::ordered_json out;
  out["char"] = table.field_char();
  out["rows"] = std::move(rows);
  if (!table.entries().empty())
    out["reg"] = table.regularity();
  return out;
}

} // namespace diagwin
