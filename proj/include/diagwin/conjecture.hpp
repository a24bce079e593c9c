#pragma once

#include "diagwin/groebner.hpp"
#include "diagwin/matrix_model.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace diagwin {

inline constexpr std::uint64_t kDefaultCharacteristic = 32003;

/// Instance-size limits for the Groebner experiments.
struct ConjectureCaps {
  int max_rows = 3;
  int max_cols = 6;
  std::size_t max_factors = 3;
  GroebnerCaps groebner;
};

/// Outcome of comparing ini(I_{k_1 l_1} ... I_{k_s l_s}) with
/// J_{k_1 l_1} ... J_{k_s l_s} for one chain. A false verdict is data, not
/// an error.
struct ConjectureVerdict {
  GridShape shape;
  std::vector<Window> chain;
  std::uint64_t field_char = kDefaultCharacteristic;
  bool ini_equals_j = false;
  bool natural_gens_are_gb = false;
  std::size_t spairs = 0;
  std::size_t basis_size = 0;
  long long millis = 0;
  /// A reduced-basis element whose leading monomial lies outside the
  /// product of diagonal ideals, when one exists.
  std::optional<std::string> witness;
  /// Set when the engine hit a resource cap; the flags are then false.
  std::optional<std::string> error;
};

/// Builds I from products of maximal minors, runs Buchberger over Q
/// (field_char 0) or GF(p) and compares initial ideals. Throws
/// WindowOrderError for unsorted chains and ResourceError when the instance
/// exceeds the caps; resource errors inside Buchberger are recorded in the
/// verdict instead.
ConjectureVerdict conjecture_check(const WindowChain& chain,
                                   std::uint64_t field_char = kDefaultCharacteristic,
                                   const ConjectureCaps& caps = {});

/// {"shape":[m,n],"chain":[[k,l],...],"char":p,"ini_equals_J":bool,
///  "natural_gens_are_GB":bool,"spairs":n,"millis":t} plus "witness" /
/// "error" when present.
nlohmann::ordered_json to_json(const ConjectureVerdict& verdict);

struct ScanBounds {
  int max_rows = 2;
  int max_cols = 4;
  std::size_t max_factors = 2;
};

/// Every sorted chain with m <= max_rows, m <= n <= max_cols (n >= 2) and
/// 1 <= s <= max_factors, in enumeration order (m, n, s, chain).
std::vector<WindowChain> scan_instances(const ScanBounds& bounds);

} // namespace diagwin
