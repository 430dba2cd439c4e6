#pragma once

// Self-verification suites. Every case compares exact canonical forms.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dwmds/series.hpp"

namespace dwmds {

struct VerificationCase {
  std::string input;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationCase> cases;

  void add(std::string input, std::string expected, std::string actual);
  void append(const VerificationReport& other);

  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
  bool ok() const { return failed() == 0; }

  nlohmann::json to_json() const;
  /// Fixed-width table, one case per line, then a summary line.
  std::string to_table() const;
};

/// Rank-1 local part 1 + sum_{0<k<=l, n|k} (p^k - p^(k-1)) x^k + g_{l+1} p^l x^(l+1).
LocalPart kubota_local(int l, int n);

/// Pattern count against the Weyl dimension for every (rank, twist) listed.
VerificationReport check_dimension(const std::vector<std::pair<int, std::vector<int>>>& grid);
/// Every rank 2..max_rank with every twist entry in 0..max_twist.
VerificationReport check_dimension(int max_rank, int max_twist);

/// local part at twist 0, n = 1 against the product over positive roots.
VerificationReport check_tokuyama(int rank);

/// D_2 local part against kubota_local(l2) in x_1 times kubota_local(l1) in x_2.
VerificationReport check_rank2(const std::vector<std::pair<int, int>>& twists, int max_n);
VerificationReport check_rank2(int max_twist, int max_n);

/// The D_4 twist (0,1,2,0), n = 2, weight (10,10,17,10) regression.
VerificationReport check_example2();

/// a_0 = 1 for every listed (rank, twist) and every n in 1..max_n.
VerificationReport check_normalization(const std::vector<std::pair<int, std::vector<int>>>& grid, int max_n);

/// All twists of the given rank with entries in 0..max_twist, lexicographic.
std::vector<std::vector<int>> twist_grid(int rank, int max_twist);

}  // namespace dwmds
