// diagwin: command-line front end for the diagonal-window toolkit.
//
// Exit codes: 0 pass, 1 mismatch, 2 resource or configuration error.

#include "diagwin/conjecture.hpp"
#include "diagwin/error.hpp"
#include "diagwin/groebner.hpp"
#include "diagwin/linear_quotients.hpp"
#include "diagwin/matrix_model.hpp"
#include "diagwin/replay.hpp"
#include "diagwin/resolution.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace diagwin;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitConfig = 2;

struct Caps {
  ResolutionCaps resolution;
  LemmaOptions lemma;
  ConjectureCaps conjecture;
};

// key=value lines (INI syntax); unknown keys are configuration errors.
Caps load_caps(const std::string& path) {
  Caps caps;
  if (path.empty())
    return caps;
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_file(path);
  } catch (const CLI::Error& e) {
    throw ParseError("cannot read caps file " + path + ": " + e.what());
  }
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--")
      continue;
    if (item.inputs.size() != 1)
      throw ParseError("caps key " + item.name + " needs exactly one value");
    std::size_t value = 0;
    try {
      value = std::stoull(item.inputs.front());
    } catch (const std::exception&) {
      throw ParseError("caps key " + item.name + " has a non-numeric value");
    }
    if (item.name == "max_oracle_gens")
      caps.resolution.max_oracle_gens = value;
    else if (item.name == "max_lcm_candidates")
      caps.resolution.max_lcm_candidates = value;
    else if (item.name == "max_product_gens")
      caps.lemma.max_product_gens = value;
    else if (item.name == "max_spairs")
      caps.conjecture.groebner.max_spairs = value;
    else if (item.name == "max_rows")
      caps.conjecture.max_rows = static_cast<int>(value);
    else if (item.name == "max_cols")
      caps.conjecture.max_cols = static_cast<int>(value);
    else if (item.name == "max_factors")
      caps.conjecture.max_factors = value;
    else
      throw ParseError("unknown caps key " + item.name);
  }
  return caps;
}

struct Config {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string caps_file;
  std::string output;

  int rows = 0;
  int cols = 0;
  std::string window;
  std::string chain;
  std::vector<std::string> ideals;
  std::string by;
  std::optional<std::uint64_t> field_char;
  bool force_brute = false;
  std::size_t sample = 0;
  std::string method = "auto";
  std::string target = "all";
  bool omit_timing = false;
  ScanBounds bounds;

  bool json_out() const { return format == "json"; }
  bool has_shape() const { return rows > 0 || cols > 0; }

  GridShape shape() const {
    if (!has_shape())
      throw ParseError("--rows and --cols are required");
    return GridShape(rows, cols);
  }
  WindowChain::OrderCheck order_check() const {
    return force_brute ? WindowChain::OrderCheck::skip : WindowChain::OrderCheck::enforce;
  }
  // --window k,l is a chain of one window.
  std::optional<WindowChain> parsed_chain() const {
    if (!window.empty() && !chain.empty())
      throw ParseError("give either --window or --chain, not both");
    if (!window.empty())
      return WindowChain::parse(shape(), window, order_check());
    if (!chain.empty())
      return WindowChain::parse(shape(), chain, order_check());
    return std::nullopt;
  }
  WindowChain required_chain() const {
    auto c = parsed_chain();
    if (!c)
      throw ParseError("--window or --chain is required");
    return *c;
  }
  // The ideal named by --ideal (sum of all given) or the chain product.
  MonomialIdeal ideal() const {
    if (!ideals.empty()) {
      if (!window.empty() || !chain.empty())
        throw ParseError("give either --ideal or --window/--chain, not both");
      MonomialIdeal out(shape());
      for (const auto& text : ideals)
        out = sum(out, MonomialIdeal::parse(shape(), text));
      return out;
    }
    return chain_product_ideal(required_chain());
  }
};

class Output {
public:
  explicit Output(const Config& config) : json_(config.json_out()) {
    if (!config.output.empty()) {
      file_.open(config.output);
      if (!file_)
        throw ParseError("cannot open output file " + config.output);
      out_ = &file_;
    }
  }
  bool is_json() const { return json_; }
  void record(const json& j) { *out_ << j.dump() << '\n'; }
  void text(const std::string& line) { *out_ << line << '\n'; }
  // One record in either format.
  void emit(const json& j, const std::string& line) { json_ ? record(j) : text(line); }
  void flush() { out_->flush(); }

private:
  bool json_;
  std::ofstream file_;
  std::ostream* out_ = &std::cout;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

json chain_json(const WindowChain& chain) {
  json out = json::array();
  for (const auto& w : chain.windows())
    out.push_back({w.k(), w.l()});
  return out;
}

int cmd_diagonals(const Config& config, Output& out) {
  const GridShape shape = config.shape();
  if (config.window.empty())
    throw ParseError("--window is required");
  const auto chain = WindowChain::parse(shape, config.window);
  const auto diagonals = enumerate_diagonals(shape, chain[0]);
  if (out.is_json()) {
    json j = to_json(diagonal_ideal(shape, chain[0]));
    j["window"] = chain_json(chain).front();
    j["count"] = diagonals.size();
    out.record(j);
  } else {
    for (const auto& d : diagonals)
      out.text(d.to_string());
  }
  return kExitPass;
}

void emit_ideal(Output& out, const MonomialIdeal& ideal) {
  json j = to_json(ideal);
  j["text"] = ideal.to_string();
  out.emit(j, ideal.to_string());
}

int cmd_ideal_product(const Config& config, Output& out) {
  const GridShape shape = config.shape();
  if (!config.ideals.empty()) {
    std::vector<MonomialIdeal> factors;
    for (const auto& text : config.ideals)
      factors.push_back(MonomialIdeal::parse(shape, text));
    emit_ideal(out, product(factors));
  } else {
    emit_ideal(out, chain_product_ideal(config.required_chain()));
  }
  return kExitPass;
}

int cmd_colon(const Config& config, Output& out) {
  if (config.by.empty())
    throw ParseError("--by is required");
  const MonomialIdeal ideal = config.ideal();
  emit_ideal(out, colon(ideal, GridMonomial::parse(ideal.shape(), config.by)));
  return kExitPass;
}

LemmaOptions lemma_options(const Config& config, const Caps& caps) {
  LemmaOptions options = caps.lemma;
  options.force_brute = config.force_brute;
  if (config.sample > 0) {
    options.exhaustive = false;
    options.sampled_steps = config.sample;
    options.seed = config.seed;
  }
  return options;
}

// Streams one record per step; returns whether every step matched.
bool emit_lemma(Output& out, const std::string& target, const LemmaReport& report) {
  for (const auto& step : report.steps) {
    json j;
    if (!target.empty())
      j["target"] = target;
    j.update(to_json(step));
    out.emit(j, "u=" + std::to_string(step.u) + " brute=" + step.brute.to_string() +
                    " closed=" + step.closed.to_string() + (step.equal ? " ok" : " MISMATCH"));
  }
  return report.passed();
}

int cmd_linquot_verify(const Config& config, const Caps& caps, Output& out) {
  const WindowChain chain = config.required_chain();
  const LemmaReport report = verify_colon_lemma(chain, lemma_options(config, caps));
  const bool passed = emit_lemma(out, "", report);
  if (!out.is_json())
    out.text(std::string(passed ? "PASS" : "FAIL") + " " + std::to_string(report.steps.size()) +
             " steps");
  return passed ? kExitPass : kExitMismatch;
}

RegularityMethod regularity_method(const std::string& name) {
  if (name == "auto")
    return RegularityMethod::automatic;
  if (name == "homology")
    return RegularityMethod::homology;
  if (name == "mapping-cone")
    return RegularityMethod::mapping_cone;
  throw ParseError("unknown method " + name);
}

int cmd_betti(const Config& config, const Caps& caps, Output& out) {
  const MonomialIdeal ideal = config.ideal();
  const std::uint64_t p = config.field_char.value_or(0);
  const BettiTable table = config.method == "mapping-cone"
                               ? mapping_cone_betti(ideal)
                               : betti_table(ideal, p, caps.resolution);
  if (config.method != "mapping-cone")
    regularity_method(config.method);
  if (out.is_json()) {
    out.record(to_json(table));
  } else {
    out.text(table.to_string());
    out.text("reg = " + std::to_string(table.regularity()));
  }
  return kExitPass;
}

int cmd_reg(const Config& config, const Caps& caps, Output& out) {
  const MonomialIdeal ideal = config.ideal();
  const auto method = regularity_method(config.method);
  const std::uint64_t p = config.field_char.value_or(0);
  const int reg = regularity(ideal, method, p, caps.resolution);
  const auto& gens = ideal.generators();
  const bool equigenerated = !gens.empty() && ideal.is_generated_in_degree(gens.front().degree());
  json j{{"reg", reg}};
  std::string line = "reg = " + std::to_string(reg);
  if (equigenerated) {
    const bool linear = reg == static_cast<int>(gens.front().degree());
    j["degree"] = gens.front().degree();
    j["linear"] = linear;
    line += ", generated in degree " + std::to_string(gens.front().degree()) +
            ", linear resolution: " + yes_no(linear);
  }
  out.emit(j, line);
  return kExitPass;
}

template <class Field>
int run_groebner(const Field& field, const WindowChain& chain, const Caps& caps, Output& out) {
  const auto gb = buchberger(field, natural_generators(field, chain), TermOrder(chain.shape()),
                             caps.conjecture.groebner);
  const MonomialIdeal initial = initial_ideal(gb);
  const bool matches = equals(initial, chain_product_ideal(chain));
  if (out.is_json()) {
    json basis = json::array();
    for (const auto& g : gb.basis)
      basis.push_back(g.to_string(field));
    out.record({{"char", field.characteristic()},
                {"chain", chain_json(chain)},
                {"basis", basis},
                {"initial", initial.to_string()},
                {"ini_equals_J", matches},
                {"spairs", gb.stats.spairs_reduced}});
  } else {
    for (const auto& g : gb.basis)
      out.text(g.to_string(field));
    out.text("ini = " + initial.to_string());
    out.text("ini equals J: " + yes_no(matches));
  }
  return kExitPass;
}

int cmd_groebner(const Config& config, const Caps& caps, Output& out) {
  const WindowChain chain = config.required_chain();
  const std::uint64_t p = config.field_char.value_or(kDefaultCharacteristic);
  if (p == 0)
    return run_groebner(RationalField{}, chain, caps, out);
  return run_groebner(PrimeField(p), chain, caps, out);
}

int cmd_conjecture_scan(const Config& config, const Caps& caps, Output& out) {
  const auto& b = config.bounds;
  if (b.max_rows > caps.conjecture.max_rows || b.max_cols > caps.conjecture.max_cols ||
      b.max_factors > caps.conjecture.max_factors)
    throw ResourceError("scan bounds exceed the conjecture caps");
  const std::uint64_t p = config.field_char.value_or(kDefaultCharacteristic);
  std::size_t instances = 0, confirmed = 0, errors = 0;
  for (const auto& chain : scan_instances(b)) {
    const ConjectureVerdict verdict = conjecture_check(chain, p, caps.conjecture);
    ++instances;
    if (verdict.error)
      ++errors;
    else if (verdict.ini_equals_j)
      ++confirmed;
    json j = to_json(verdict);
    if (config.omit_timing)
      j.erase("millis");
    std::string line = std::to_string(chain.shape().rows()) + "x" +
                       std::to_string(chain.shape().cols()) + " " + chain.to_string() +
                       " ini=J:" + yes_no(verdict.ini_equals_j) +
                       " natural-GB:" + yes_no(verdict.natural_gens_are_gb) +
                       " spairs=" + std::to_string(verdict.spairs);
    if (verdict.witness)
      line += " witness: " + *verdict.witness;
    if (verdict.error)
      line += " error: " + *verdict.error;
    out.emit(j, line);
    out.flush();
  }
  if (!out.is_json())
    out.text(std::to_string(instances) + " instances, " + std::to_string(confirmed) +
             " with ini = J, " + std::to_string(errors) + " engine errors");
  return errors == 0 ? kExitPass : kExitConfig;
}

bool verify_lemma(const Config& config, const Caps& caps, Output& out, const std::string& target,
                  const WindowChain& chain) {
  const LemmaReport report = verify_colon_lemma(chain, lemma_options(config, caps));
  bool passed = emit_lemma(out, target, report);
  json summary{{"target", target}, {"chain", chain.to_string()}, {"steps", report.steps.size()}};
  std::string line = target + " " + chain.to_string() + ": " + std::to_string(report.steps.size()) +
                     " steps";
  if (chain.size() == 1) {
    const bool lq =
        quotient_chain(diagonal_ideal(chain.shape(), chain[0])).certifies_linear_quotients();
    summary["linear_quotients"] = lq;
    line += ", linear quotients: " + yes_no(lq);
    passed = passed && lq;
  }
  summary["pass"] = passed;
  out.emit(summary, line + (passed ? " PASS" : " FAIL"));
  return passed;
}

bool verify_theorem(const Caps& caps, Output& out, const WindowChain& chain) {
  const MonomialIdeal ideal = chain_product_ideal(chain);
  const bool small = ideal.size() <= caps.resolution.max_oracle_gens;
  const auto method = small ? RegularityMethod::homology : RegularityMethod::mapping_cone;
  const int reg = regularity(ideal, method, 0, caps.resolution);
  const int expected = static_cast<int>(chain.size()) * chain.shape().rows();
  const bool linear = has_linear_resolution(ideal, method, 0, caps.resolution);
  const bool passed = reg == expected && linear;
  out.emit({{"target", "theorem"},
            {"chain", chain.to_string()},
            {"method", small ? "homology" : "mapping-cone"},
            {"reg", reg},
            {"expected", expected},
            {"linear", linear},
            {"pass", passed}},
           "theorem " + chain.to_string() + ": reg = " + std::to_string(reg) + " (s*m = " +
               std::to_string(expected) + "), linear resolution: " + yes_no(linear) +
               (passed ? " PASS" : " FAIL"));
  return passed;
}

bool verify_negative_controls(Output& out) {
  bool passed = true;
  for (const auto& check : paper_replay().checks) {
    if (check.name.find("!=") == std::string::npos)
      continue;
    out.emit({{"target", "remarks"}, {"check", check.name}, {"pass", check.match}},
             "remarks " + check.name + (check.match ? " PASS" : " FAIL"));
    passed = passed && check.match;
  }
  return passed;
}

int cmd_verify(const Config& config, const Caps& caps, Output& out) {
  const std::string& t = config.target;
  if (t != "lemma1" && t != "lemma2" && t != "theorem" && t != "remarks" && t != "all")
    throw ParseError("unknown verify target " + t);
  const bool all = t == "all";
  auto chain_or = [&](int m, int n, const char* text) {
    if (auto c = config.has_shape() ? config.parsed_chain() : std::nullopt)
      return *c;
    return WindowChain::parse(GridShape(m, n), text, config.order_check());
  };
  bool passed = true;
  if (all || t == "lemma1") {
    const WindowChain chain = chain_or(3, 8, "2,6");
    if (chain.size() != 1)
      throw ParseError("lemma1 takes a single --window");
    passed = verify_lemma(config, caps, out, "lemma1", chain) && passed;
  }
  if (all || t == "lemma2")
    passed = verify_lemma(config, caps, out, "lemma2", chain_or(3, 9, "1,5:3,7")) && passed;
  if (all || t == "theorem")
    passed = verify_theorem(caps, out, chain_or(2, 4, "1,3:2,4")) && passed;
  if (all || t == "remarks")
    passed = verify_negative_controls(out) && passed;
  return passed ? kExitPass : kExitMismatch;
}

int cmd_paper_replay(Output& out) {
  const ReplayReport report = paper_replay();
  for (const auto& check : report.checks)
    out.emit(to_json(check), (check.match ? "ok       " : "MISMATCH ") + check.name +
                                 (check.match ? "" : ": expected " + check.expected +
                                                         ", got " + check.actual));
  if (!out.is_json())
    out.text(std::to_string(report.checks.size()) + " checks, " +
             (report.passed() ? "all match" : "MISMATCH"));
  return report.passed() ? kExitPass : kExitMismatch;
}

void add_shape(CLI::App* app, Config& c) {
  app->add_option("--rows", c.rows, "Matrix rows m")->check(CLI::PositiveNumber);
  app->add_option("--cols", c.cols, "Matrix columns n")->check(CLI::PositiveNumber);
}
void add_chain(CLI::App* app, Config& c) {
  app->add_option("--window", c.window, "Single window k,l");
  app->add_option("--chain", c.chain, "Window chain k1,l1:k2,l2:...");
  app->add_flag("--force-brute", c.force_brute, "Accept unsorted chains (brute force only)");
}
void add_ideal(CLI::App* app, Config& c) {
  app->add_option("--ideal", c.ideals, "Ideal text, e.g. \"<x[1,1], x[1,2]>\"");
}
void add_char(CLI::App* app, Config& c) {
  app->add_option("--char", c.field_char, "Field characteristic (0 or a prime)");
}

} // namespace

int main(int argc, char** argv) {
  Config config;
  CLI::App app{"Diagonal-window ideals of a generic matrix: generation and verification"};
  app.set_config("--config", "", "Key-value configuration file");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", config.seed, "Seed for sampled checks");
  app.add_option("--caps", config.caps_file, "Resource caps file (key=value)")
      ->check(CLI::ExistingFile);
  app.add_option("--out,--output", config.output, "Write output to a file");

  auto* diagonals = app.add_subcommand("diagonals", "List the diagonal monomials of a window");
  add_shape(diagonals, config);
  diagonals->add_option("--window", config.window, "Window k,l");

  auto* product_cmd = app.add_subcommand("ideal-product", "Product of ideals or of J over a chain");
  add_shape(product_cmd, config);
  add_chain(product_cmd, config);
  add_ideal(product_cmd, config);

  auto* colon_cmd = app.add_subcommand("colon", "Colon ideal (I : f)");
  add_shape(colon_cmd, config);
  add_chain(colon_cmd, config);
  add_ideal(colon_cmd, config);
  colon_cmd->add_option("--by", config.by, "Monomial f")->required();

  auto* linquot = app.add_subcommand("linquot-verify", "Closed-form colon lemma versus brute force");
  add_shape(linquot, config);
  add_chain(linquot, config);
  linquot->add_option("--sample", config.sample, "Check this many seeded steps only");

  auto* betti = app.add_subcommand("betti", "Graded Betti table");
  add_shape(betti, config);
  add_chain(betti, config);
  add_ideal(betti, config);
  add_char(betti, config);
  betti->add_option("--method", config.method, "homology or mapping-cone")
      ->check(CLI::IsMember({"auto", "homology", "mapping-cone"}));

  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  add_shape(reg, config);
  add_chain(reg, config);
  add_ideal(reg, config);
  add_char(reg, config);
  reg->add_option("--method", config.method, "auto, homology or mapping-cone")
      ->check(CLI::IsMember({"auto", "homology", "mapping-cone"}));

  auto* groebner = app.add_subcommand("groebner", "Reduced Groebner basis of a product of minor ideals");
  add_shape(groebner, config);
  add_chain(groebner, config);
  add_char(groebner, config);

  auto* scan = app.add_subcommand("conjecture-scan", "Compare ini(I) with J over all small chains");
  scan->add_option("--max-rows", config.bounds.max_rows)->check(CLI::PositiveNumber);
  scan->add_option("--max-cols", config.bounds.max_cols)->check(CLI::PositiveNumber);
  scan->add_option("--max-factors", config.bounds.max_factors)->check(CLI::PositiveNumber);
  add_char(scan, config);
  scan->add_flag("--omit-timing", config.omit_timing, "Drop wall-clock fields for diffable output");

  auto* verify = app.add_subcommand("verify", "Check lemmas, the regularity theorem and remarks");
  add_shape(verify, config);
  add_chain(verify, config);
  verify->add_option("--target", config.target)
      ->check(CLI::IsMember({"lemma1", "lemma2", "theorem", "remarks", "all"}));
  verify->add_option("--sample", config.sample, "Check this many seeded steps per lemma");

  auto* replay = app.add_subcommand("paper-replay", "Recompute the worked examples against golden data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    const Caps caps = load_caps(config.caps_file);
    Output out(config);
    if (diagonals->parsed())
      return cmd_diagonals(config, out);
    if (product_cmd->parsed())
      return cmd_ideal_product(config, out);
    if (colon_cmd->parsed())
      return cmd_colon(config, out);
    if (linquot->parsed())
      return cmd_linquot_verify(config, caps, out);
    if (betti->parsed())
      return cmd_betti(config, caps, out);
    if (reg->parsed())
      return cmd_reg(config, caps, out);
    if (groebner->parsed())
      return cmd_groebner(config, caps, out);
    if (scan->parsed())
      return cmd_conjecture_scan(config, caps, out);
    if (verify->parsed())
      return cmd_verify(config, caps, out);
    if (replay->parsed())
      return cmd_paper_replay(out);
  } catch (const diagwin::Error& e) {
    std::cout.flush();
    std::cerr << "diagwin: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
