#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace diagwin {

/// Contents of an embedded golden data file (e.g. "j26_colons.txt").
/// Throws DomainError for an unknown name.
std::string_view golden_file(std::string_view name);

/// Non-comment, non-blank lines of a golden file.
std::vector<std::string> golden_lines(std::string_view name);

struct ReplayCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool match;
};

struct ReplayReport {
  std::vector<ReplayCheck> checks;
  bool passed() const;
};

/// Recomputes every worked example (J_{2,6} and its colon chain, the 6x16
/// redistribution, the 1x3 product and the two window-order
/// counterexamples) and compares text output with the golden data.
ReplayReport paper_replay();

nlohmann::ordered_json to_json(const ReplayCheck& check);

} // namespace diagwin
