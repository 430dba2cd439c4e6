#include "dwmds/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dwmds/local_part.hpp"
#include "dwmds/pattern.hpp"
#include "dwmds/root_data.hpp"

namespace dwmds {

namespace {

std::string list_string(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

// First lambda where two series disagree, for failure messages.
std::string first_difference(const LocalPart& expected, const LocalPart& actual) {
  std::vector<WeightVector> keys;
  for (const auto& [l, c] : expected.coefficients) keys.push_back(l);
  for (const auto& [l, c] : actual.coefficients) keys.push_back(l);
  std::sort(keys.begin(), keys.end());
  for (const auto& l : keys) {
    const RingElem e = expected.coefficient_at(l);
    const RingElem a = actual.coefficient_at(l);
    if (e != a) return "lambda=" + list_string(l) + ": expected " + e.to_string() + ", got " + a.to_string();
  }
  return "";
}

std::string series_summary(const LocalPart& s) { return std::to_string(s.support_size()) + " monomials"; }

}  // namespace

void VerificationReport::add(std::string input, std::string expected, std::string actual) {
  const bool pass = expected == actual;
  cases.push_back({std::move(input), std::move(expected), std::move(actual), pass});
}

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& c : other.cases) {
    cases.push_back(c);
    cases.back().input = other.suite + ": " + c.input;
  }
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.pass; }));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : cases) {
    cs.push_back({{"input", c.input}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  return {{"suite", suite},
          {"cases", cs},
          {"summary", {{"total", cases.size()}, {"passed", passed()}, {"failed", failed()}}}};
}

std::string VerificationReport::to_table() const {
  std::size_t width = 5;
  for (const auto& c : cases) width = std::max(width, c.input.size());
  std::ostringstream out;
  out << "suite: " << suite << "\n";
  for (const auto& c : cases) {
    out << (c.pass ? "PASS  " : "FAIL  ") << c.input << std::string(width - c.input.size() + 2, ' ');
    if (c.pass) {
      out << c.actual;
    } else {
      out << "expected " << c.expected << " | actual " << c.actual;
    }
    out << "\n";
  }
  out << passed() << "/" << cases.size() << " passed\n";
  return out.str();
}

LocalPart kubota_local(int l, int n) {
  if (l < 0) throw std::invalid_argument("kubota_local: l must be >= 0");
  LocalPart out(1, n, {l});
  out.accumulate({0}, RingElem::one(n));
  for (int k = n; k <= l; k += n) {
    out.accumulate({k}, pow_p(n, k) - pow_p(n, k - 1));
  }
  out.accumulate({l + 1}, gauss_symbol(l + 1, n) * pow_p(n, l));
  return out;
}

std::vector<std::vector<int>> twist_grid(int rank, int max_twist) {
  std::vector<std::vector<int>> out;
  std::vector<int> twist(rank, 0);
  while (true) {
    out.push_back(twist);
    int k = rank - 1;
    while (k >= 0 && twist[k] == max_twist) twist[k--] = 0;
    if (k < 0) break;
    ++twist[k];
  }
  return out;
}

VerificationReport check_dimension(const std::vector<std::pair<int, std::vector<int>>>& grid) {
  VerificationReport report{"dimension", {}};
  for (const auto& [rank, twist] : grid) {
    const RootSystemD rs(rank);
    const auto hw = HighestWeight::from_twist(twist);
    const std::uint64_t count = PatternEnumerator(rs, hw).count();
    report.add("r=" + std::to_string(rank) + " twist=" + list_string(twist), weyl_dimension(rs, hw).str(),
               std::to_string(count));
  }
  return report;
}

VerificationReport check_dimension(int max_rank, int max_twist) {
  std::vector<std::pair<int, std::vector<int>>> grid;
  for (int r = 2; r <= max_rank; ++r) {
    for (auto& t : twist_grid(r, max_twist)) grid.emplace_back(r, std::move(t));
  }
  return check_dimension(grid);
}

VerificationReport check_tokuyama(int rank) {
  VerificationReport report{"tokuyama", {}};
  const RootSystemD rs(rank);
  const auto hw = HighestWeight::from_twist(std::vector<int>(rank, 0));
  LocalPartStats stats;
  const LocalPart computed = compute_local_part(rs, hw, 1, {}, &stats);
  const LocalPart product = tokuyama_product(rs);
  const std::string tag = "r=" + std::to_string(rank) + " n=1 twist=0";
  const std::string diff = first_difference(product, computed);
  report.add(tag + " local part", series_summary(product),
             diff.empty() ? series_summary(computed) : series_summary(computed) + "; " + diff);
  report.add(tag + " pattern count", weyl_dimension(rs, hw).str(), std::to_string(stats.patterns));
  // With n = 1 no factor vanishes, so every strict pattern contributes.
  report.add(tag + " strict patterns all nonzero", std::to_string(stats.strict()), std::to_string(stats.nonzero));
  return report;
}

VerificationReport check_rank2(const std::vector<std::pair<int, int>>& twists, int max_n) {
  VerificationReport report{"rank2", {}};
  const RootSystemD rs(2);
  for (const auto& [l1, l2] : twists) {
    for (int n = 1; n <= max_n; ++n) {
      const LocalPart computed = compute_local_part(rs, HighestWeight::from_twist({l1, l2}), n);
      // Column r-1 (lambda_1) is bounded by m_2, so x_1 carries the twist l_2.
      LocalPart expected = outer_product(kubota_local(l2, n), kubota_local(l1, n));
      expected.twist = {l1, l2};
      const std::string diff = first_difference(expected, computed);
      report.add("twist=(" + std::to_string(l1) + "," + std::to_string(l2) + ") n=" + std::to_string(n),
                 "K(l2;x1)*K(l1;x2)", diff.empty() ? "K(l2;x1)*K(l1;x2)" : diff);
    }
  }
  return report;
}

VerificationReport check_rank2(int max_twist, int max_n) {
  std::vector<std::pair<int, int>> twists;
  for (int a = 0; a <= max_twist; ++a) {
    for (int b = 0; b <= max_twist; ++b) twists.emplace_back(a, b);
  }
  return check_rank2(twists, max_n);
}

VerificationReport check_example2() {
  VerificationReport report{"example2", {}};
  const RootSystemD rs(4);
  const auto hw = HighestWeight::from_twist({0, 1, 2, 0});
  const WeightVector lambda{10, 10, 17, 10};
  LocalPartStats stats;
  const RingElem a = coefficient_at(rs, hw, 2, lambda, &stats);
  // -p^36 (p^3 - 2p^2 + 2p - 1) g_1^3
  const RingElem expected = -pow_p(2, 36) *
                            (pow_p(2, 3) - RingElem::constant(2, 2) * pow_p(2, 2) +
                             RingElem::constant(2, 2) * pow_p(2, 1) - RingElem::one(2)) *
                            pow(gauss_symbol(1, 2), 3);
  const std::string tag = "r=4 twist=(0,1,2,0) n=2 lambda=(10,10,17,10)";
  report.add(tag + " patterns", "27", std::to_string(stats.patterns));
  report.add(tag + " nonstrict", "6", std::to_string(stats.nonstrict));
  report.add(tag + " nonzero contributors", "2", std::to_string(stats.nonzero));
  report.add(tag + " a_lambda", expected.to_string(), a.to_string());
  return report;
}

VerificationReport check_normalization(const std::vector<std::pair<int, std::vector<int>>>& grid, int max_n) {
  VerificationReport report{"normalization", {}};
  for (const auto& [rank, twist] : grid) {
    const RootSystemD rs(rank);
    const auto hw = HighestWeight::from_twist(twist);
    for (int n = 1; n <= max_n; ++n) {
      const RingElem a0 = coefficient_at(rs, hw, n, WeightVector(rank, 0));
      report.add("r=" + std::to_string(rank) + " twist=" + list_string(twist) + " n=" + std::to_string(n), "1",
                 a0.to_string());
    }
  }
  return report;
}

}  // namespace dwmds
