#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "dwmds/coeff_ring.hpp"
#include "dwmds/decoration.hpp"
#include "dwmds/local_part.hpp"
#include "dwmds/oracle.hpp"
#include "dwmds/pattern.hpp"
#include "dwmds/root_data.hpp"

namespace dwmds::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CommandConfig {
  std::string subcommand;
  int rank = 0;
  int n = 1;
  std::string twist_text;
  std::string weight_text;
  std::string coeff_text;
  std::string pattern_text;
  std::string format = "text";
  std::string output;
  unsigned jobs = 0;
  bool count_only = false;
  std::string eval_p;
  std::string eval_g;
  std::string suite;
  int max_rank = 4;
  int max_twist = 2;
  int max_n = 4;
  int zero_twist_rank = 5;

  std::vector<int> twist;
  std::optional<WeightVector> weight;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(what + ": cannot parse \"" + text + "\" as a comma-separated integer list");
    }
  }
  if (out.empty()) throw UsageError(what + ": empty list");
  return out;
}

std::string lambda_string(const WeightVector& l) {
  std::string s = "(";
  for (std::size_t k = 0; k < l.size(); ++k) s += (k ? "," : "") + std::to_string(l[k]);
  return s + ")";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void emit(const CommandConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + cfg.output);
  file << text;
}

void validate_common(CommandConfig& cfg, bool needs_twist) {
  if (cfg.format != "text" && cfg.format != "json") throw UsageError("--format must be text or json");
  if (cfg.n < 1) throw UsageError("--n must be >= 1");
  if (!needs_twist) return;
  if (cfg.rank < 2) throw UsageError("--rank must be >= 2");
  cfg.twist = parse_int_list(cfg.twist_text, "--twist");
  if (static_cast<int>(cfg.twist.size()) != cfg.rank) {
    throw UsageError("--twist has " + std::to_string(cfg.twist.size()) + " entries but --rank is " +
                     std::to_string(cfg.rank));
  }
  if (std::any_of(cfg.twist.begin(), cfg.twist.end(), [](int l) { return l < 0; })) {
    throw UsageError("--twist entries must be >= 0");
  }
  if (!cfg.weight_text.empty()) {
    cfg.weight = parse_int_list(cfg.weight_text, "--weight");
    if (static_cast<int>(cfg.weight->size()) != cfg.rank) throw UsageError("--weight must have --rank entries");
  }
}

Rational parse_rational(const std::string& text, const std::string& what) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw UsageError(what + ": cannot parse \"" + text + "\" as a rational number");
  }
}

// ---------------------------------------------------------------- compute

int cmd_compute(CommandConfig& cfg, std::ostream& out) {
  validate_common(cfg, true);
  const RootSystemD rs(cfg.rank);
  const auto hw = HighestWeight::from_twist(cfg.twist);

  std::optional<Rational> p_value;
  std::vector<Rational> g_values;
  if (!cfg.eval_p.empty()) {
    p_value = parse_rational(cfg.eval_p, "--eval-p");
    if (*p_value == 0) throw UsageError("--eval-p must be nonzero");
    if (!cfg.eval_g.empty()) {
      std::stringstream ss(cfg.eval_g);
      std::string item;
      while (std::getline(ss, item, ',')) g_values.push_back(parse_rational(item, "--eval-g"));
    }
    if (g_values.size() != static_cast<std::size_t>(cfg.n - 1)) {
      throw UsageError("--eval-p with n=" + std::to_string(cfg.n) + " needs --eval-g with " +
                       std::to_string(cfg.n - 1) + " values");
    }
  }

  if (!cfg.coeff_text.empty()) {
    const WeightVector lambda = parse_int_list(cfg.coeff_text, "--coeff");
    if (static_cast<int>(lambda.size()) != cfg.rank) throw UsageError("--coeff must have --rank entries");
    const RingElem a = coefficient_at(rs, hw, cfg.n, lambda);
    if (cfg.format == "json") {
      emit(cfg, a.to_json().dump() + "\n", out);
    } else {
      std::string text = a.to_string() + "\n";
      if (p_value) text += "value at p=" + p_value->str() + " (non-canonical): " + a.evaluate(*p_value, g_values).str() + "\n";
      emit(cfg, text, out);
    }
    return kSuccess;
  }

  LocalPartOptions options;
  options.weight_filter = cfg.weight;
  options.jobs = cfg.jobs;
  const LocalPart part = compute_local_part(rs, hw, cfg.n, options);

  if (cfg.format == "json") {
    emit(cfg, part.to_json().dump() + "\n", out);
    return kSuccess;
  }
  std::size_t width = 6;
  for (const auto& [lambda, c] : part.coefficients) width = std::max(width, lambda_string(lambda).size());
  std::string text = pad("lambda", width) + "  a_lambda";
  if (p_value) text += "  [value at p=" + p_value->str() + ", non-canonical]";
  text += "\n";
  for (const auto& [lambda, c] : part.coefficients) {
    text += pad(lambda_string(lambda), width) + "  " + c.to_string();
    if (p_value) text += "  [" + c.evaluate(*p_value, g_values).str() + "]";
    text += "\n";
  }
  emit(cfg, text, out);
  return kSuccess;
}

// ---------------------------------------------------------------- patterns

int cmd_patterns(CommandConfig& cfg, std::ostream& out) {
  validate_common(cfg, true);
  const RootSystemD rs(cfg.rank);
  const auto hw = HighestWeight::from_twist(cfg.twist);
  const PatternEnumerator enumerator(rs, hw, cfg.weight);

  std::uint64_t total = 0;
  std::uint64_t nonstrict = 0;
  std::string text;
  enumerator.enumerate([&](const LittelmannPattern& t) {
    ++total;
    const auto mask = critical_mask(t, hw);
    const DecoratedGraph g = decorate_with_mask(t, mask);
    const bool strict = is_strict(g, classify_components(g));
    if (!strict) ++nonstrict;
    if (cfg.count_only) return;
    const auto critical = critical_positions(t, hw);
    if (cfg.format == "json") {
      nlohmann::json crit = nlohmann::json::array();
      for (const Position& p : critical) crit.push_back({p.row, p.col});
      nlohmann::json line = {{"pattern", t.to_string()},
                             {"weight", weight_vector(t)},
                             {"strict", strict},
                             {"critical", crit}};
      text += line.dump() + "\n";
    } else {
      std::string crit;
      for (const Position& p : critical) crit += (crit.empty() ? "" : " ") + p.to_string();
      text += t.to_string() + "  weight=" + lambda_string(weight_vector(t)) +
              (strict ? "  strict" : "  nonstrict") + "  critical=[" + crit + "]\n";
    }
  });

  if (cfg.count_only) {
    if (cfg.format == "json") {
      text = nlohmann::json{{"total", total}, {"nonstrict", nonstrict}, {"strict", total - nonstrict}}.dump() + "\n";
    } else {
      text = "total " + std::to_string(total) + "\nnonstrict " + std::to_string(nonstrict) + "\nstrict " +
             std::to_string(total - nonstrict) + "\n";
    }
  }
  emit(cfg, text, out);
  return kSuccess;
}

// ---------------------------------------------------------------- explain

std::string component_label(const Component& c) {
  std::string cols;
  for (const Position& p : c.vertices) cols += (cols.empty() ? "" : ",") + std::to_string(p.col);
  std::string s = "row " + std::to_string(c.row) + " cols {" + cols + "} value " + std::to_string(c.value) + " " +
                  to_string(c.cls);
  if (c.cls == ComponentClass::ml_symmetric) s += " length " + std::to_string(c.length);
  return s;
}

int cmd_explain(CommandConfig& cfg, std::ostream& out) {
  if (cfg.pattern_text.empty()) throw UsageError("explain needs --pattern");
  const LittelmannPattern t = [&] {
    try {
      return LittelmannPattern::parse(cfg.pattern_text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (cfg.rank == 0) cfg.rank = t.rank();
  if (cfg.rank != t.rank()) {
    throw UsageError("--rank " + std::to_string(cfg.rank) + " does not match the pattern (rank " +
                     std::to_string(t.rank()) + ")");
  }
  validate_common(cfg, true);
  const auto hw = HighestWeight::from_twist(cfg.twist);
  if (auto v = first_violation(t, hw)) {
    throw UsageError("pattern is not theta-admissible: " + v->describe());
  }
  const ContributionBreakdown b = explain_contribution(t, hw, cfg.n);
  int weight_total = 0;
  for (int w : b.weight) weight_total += w;

  if (cfg.format == "json") {
    nlohmann::json comps = nlohmann::json::array();
    for (std::size_t k = 0; k < b.components.size(); ++k) {
      const Component& c = b.components[k];
      nlohmann::json verts = nlohmann::json::array();
      for (const Position& p : c.vertices) verts.push_back({p.row, p.col});
      nlohmann::json jc = {{"vertices", verts},
                           {"value", c.value},
                           {"class", to_string(c.cls)},
                           {"rightmost", {c.rightmost.row, c.rightmost.col}}};
      if (b.strict) {
        jc["rule"] = b.factors[k].rule;
        jc["factor"] = b.factors[k].value.to_json();
      }
      comps.push_back(jc);
    }
    nlohmann::json j = {{"pattern", t.to_json()},      {"weight", b.weight},
                        {"strict", b.strict},           {"components", comps},
                        {"contribution", b.total.to_json()}};
    emit(cfg, j.dump() + "\n", out);
    return kSuccess;
  }

  std::string text = "pattern: " + t.to_string() + "\n";
  text += "weight: " + lambda_string(b.weight) + "  |lambda| = " + std::to_string(weight_total) + "\n";
  text += std::string("strict: ") + (b.strict ? "yes" : "no") + "\n\n";
  text += render_ascii(b.graph) + "\n";
  text += "components:\n";
  for (std::size_t k = 0; k < b.components.size(); ++k) {
    text += "  " + component_label(b.components[k]);
    if (b.strict) text += "\n    " + b.factors[k].rule + ": " + b.factors[k].value.to_string();
    text += "\n";
  }
  if (b.strict) {
    text += "total contribution: p^" + std::to_string(weight_total) + " * product = " + b.total.to_string() + "\n";
  } else {
    text += "total contribution: 0 (nonstrict patterns are discarded)\n";
  }
  emit(cfg, text, out);
  return kSuccess;
}

// ---------------------------------------------------------------- verify

int cmd_verify(CommandConfig& cfg, std::ostream& out) {
  validate_common(cfg, false);
  static const std::vector<std::string> suites = {"dimension", "tokuyama", "rank2", "example2", "normalization", "all"};
  if (std::find(suites.begin(), suites.end(), cfg.suite) == suites.end()) {
    throw UsageError("unknown suite \"" + cfg.suite + "\"");
  }
  const bool all = cfg.suite == "all";
  const int tok_rank = cfg.rank == 0 ? 4 : cfg.rank;
  if (tok_rank < 2) throw UsageError("--rank must be >= 2");

  std::vector<std::pair<int, std::vector<int>>> grid;
  for (int r = 2; r <= cfg.max_rank; ++r) {
    for (auto& tw : twist_grid(r, cfg.max_twist)) grid.emplace_back(r, std::move(tw));
  }
  if (cfg.zero_twist_rank > cfg.max_rank) grid.emplace_back(cfg.zero_twist_rank, std::vector<int>(cfg.zero_twist_rank, 0));

  std::vector<VerificationReport> reports;
  if (all || cfg.suite == "example2") reports.push_back(check_example2());
  if (all) {
    for (int r = 2; r <= tok_rank; ++r) reports.push_back(check_tokuyama(r));
  } else if (cfg.suite == "tokuyama") {
    reports.push_back(check_tokuyama(tok_rank));
  }
  if (all || cfg.suite == "dimension") reports.push_back(check_dimension(grid));
  if (all || cfg.suite == "rank2") reports.push_back(check_rank2(cfg.max_twist, cfg.max_n));
  if (all || cfg.suite == "normalization") reports.push_back(check_normalization(grid, cfg.max_n));

  VerificationReport report;
  if (reports.size() == 1) {
    report = reports.front();
  } else {
    report.suite = "all";
    for (const auto& r : reports) report.append(r);
  }
  emit(cfg, cfg.format == "json" ? report.to_json().dump() + "\n" : report.to_table(), out);
  return verification_status(report);
}

}  // namespace

int verification_status(const VerificationReport& report) {
  return report.ok() ? kSuccess : kVerificationFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Local parts of type D Weyl group multiple Dirichlet series from Littelmann patterns"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: text or json")->capture_default_str();
    sub->add_option("--output", cfg.output, "Write output to this file instead of standard output");
  };

  auto* compute = app.add_subcommand("compute", "Compute the local part N(x; l)");
  compute->add_option("--rank", cfg.rank, "Rank r >= 2")->required();
  compute->add_option("--n", cfg.n, "Cover degree n >= 1")->capture_default_str();
  compute->add_option("--twist", cfg.twist_text, "Twist l_1,...,l_r")->required();
  compute->add_option("--weight", cfg.weight_text, "Restrict to one weight class lambda_1,...,lambda_r");
  compute->add_option("--coeff", cfg.coeff_text, "Print only the coefficient of x^lambda");
  compute->add_option("--jobs", cfg.jobs, "Worker threads (0 = sequential)")->capture_default_str();
  compute->add_option("--eval-p", cfg.eval_p, "Also print values at this rational p (non-canonical)");
  compute->add_option("--eval-g", cfg.eval_g, "Rational values for g_1..g_{n-1} used with --eval-p");
  add_format(compute);

  auto* patterns = app.add_subcommand("patterns", "List theta-admissible patterns");
  patterns->add_option("--rank", cfg.rank, "Rank r >= 2")->required();
  patterns->add_option("--twist", cfg.twist_text, "Twist l_1,...,l_r")->required();
  patterns->add_option("--weight", cfg.weight_text, "Only patterns of this weight");
  patterns->add_flag("--count-only", cfg.count_only, "Print total / nonstrict / strict counts");
  add_format(patterns);

  auto* explain = app.add_subcommand("explain", "Decorated graph and contribution of one pattern");
  explain->add_option("--pattern", cfg.pattern_text, "Pattern literal, rows separated by ';'")->required();
  explain->add_option("--twist", cfg.twist_text, "Twist l_1,...,l_r")->required();
  explain->add_option("--n", cfg.n, "Cover degree n >= 1")->capture_default_str();
  explain->add_option("--rank", cfg.rank, "Rank (defaults to the pattern's)");
  add_format(explain);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", cfg.suite, "dimension | tokuyama | rank2 | example2 | normalization | all")
      ->required();
  verify->add_option("--rank", cfg.rank, "Rank for the tokuyama suite (default 4)");
  verify->add_option("--max-rank", cfg.max_rank, "Largest rank in the dimension grid")->capture_default_str();
  verify->add_option("--max-twist", cfg.max_twist, "Largest twist entry in the grids")->capture_default_str();
  verify->add_option("--max-n", cfg.max_n, "Largest n for rank2 / normalization")->capture_default_str();
  verify->add_option("--zero-twist-rank", cfg.zero_twist_rank,
                     "Extra rank checked at twist 0 when above --max-rank (0 disables)")
      ->capture_default_str();
  add_format(verify);

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  if (storage.empty()) storage.emplace_back("dwmds");
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (app.got_subcommand(compute)) return cmd_compute(cfg, out);
    if (app.got_subcommand(patterns)) return cmd_patterns(cfg, out);
    if (app.got_subcommand(explain)) return cmd_explain(cfg, out);
    if (app.got_subcommand(verify)) return cmd_verify(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace dwmds::cli
