#pragma once

// Littelmann patterns for D_r.
//
// A pattern has r-1 rows; row i holds a_{i,j} for i <= j <= 2r-1-i, so the
// first row has 2r-2 entries and the last row 2. Columns r-1 and r are the
// incomparable middle pair. The bar involution maps column j to 2r-1-j, so
// a barred entry abar_{i,j} with j <= r-2 is the same thing as the entry in
// column 2r-1-j. Positions are therefore always given as (row, column) with
// the column in the unbarred range i .. 2r-1-i.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dwmds/root_data.hpp"
#include "dwmds/series.hpp"

namespace dwmds {

struct Position {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
  std::string to_string() const;
};

class LittelmannPattern {
 public:
  /// The all-zero pattern of the given rank.
  explicit LittelmannPattern(int rank);

  static LittelmannPattern from_rows(int rank, const std::vector<std::vector<int>>& rows);
  /// Parses "a,b,c,d;e,f" (row 1 first). The rank is the number of rows + 1.
  static LittelmannPattern parse(std::string_view text);
  static LittelmannPattern from_json(const nlohmann::json& j);

  int rank() const { return rank_; }
  int num_rows() const { return rank_ - 1; }
  int first_col(int row) const { return row; }
  int last_col(int row) const { return 2 * rank_ - 1 - row; }
  bool contains(Position p) const;

  int at(int row, int col) const { return entries_[index(row, col)]; }
  int at(Position p) const { return at(p.row, p.col); }
  /// abar_{i,j} = a_{i,2r-1-j}.
  int bar(int row, int col) const { return at(row, 2 * rank_ - 1 - col); }
  void set(Position p, int value);

  /// Row i as a_{i,i}, ..., a_{i,2r-1-i}.
  std::span<const int> row(int i) const;
  void set_row(int i, std::span<const int> values);
  std::span<const int> entries() const { return entries_; }

  /// All positions in row-major order.
  std::vector<Position> positions() const;
  std::size_t index(int row, int col) const;
  std::size_t index(Position p) const { return index(p.row, p.col); }

  std::string to_string() const;
  nlohmann::json to_json() const;

  /// Equal ranks compare row-major lexicographically.
  friend auto operator<=>(const LittelmannPattern&, const LittelmannPattern&) = default;
  friend bool operator==(const LittelmannPattern&, const LittelmannPattern&) = default;

 private:
  int rank_;
  std::vector<int> entries_;  // row-major
};

/// Cumulative sums used by the bound inequalities: column totals over the
/// rows above the current one plus the entries of the current row. Both
/// arrays are indexed by column 0 .. 2r; out-of-range columns hold 0.
struct PartialSums {
  int rank = 0;
  std::vector<int> above;    // sum over rows 1..i-1 of a_{k,col}
  std::vector<int> current;  // a_{i,col}, 0 outside row i

  PartialSums(const LittelmannPattern& t, int row);
  PartialSums(int rank, std::vector<int> above, std::vector<int> current);

  /// s(abar_{i,j}) = abar_{i,j} + sum_{k<i} (a_{k,j} + abar_{k,j}); j = 0 gives 0.
  int s_bar(int j) const;
  /// s(a_{i,j}) including the current row; j = r-1 gives the middle-pair sum.
  int s_current(int j) const;
  /// s(a_{i-1,j}).
  int s_above(int j) const;
  /// t(a_{i-1,col}) for col in {r-1, r}.
  int t_above(int col) const { return above[col]; }
};

/// Right-hand side of the unique bound inequality whose left side is the
/// entry at `col` of the current row. Only entries that precede `col` in the
/// fill order are read: the right half from the outer edge inward, then the
/// middle pair, then the left half from the middle outward.
int entry_bound(const HighestWeight& hw, int col, const PartialSums& sums);

/// Bound for the entry at p of a complete pattern.
int upper_bound(const LittelmannPattern& t, const HighestWeight& hw, Position p);

/// Within-row chain inequalities only (independent of the highest weight).
bool is_admissible(const LittelmannPattern& t);

struct BoundViolation {
  Position position;
  int value = 0;
  int bound = 0;
  /// True when the chain (admissibility) inequality fails rather than the bound.
  bool chain = false;
  std::string describe() const;
};

/// First failing inequality in row-major order, if any.
std::optional<BoundViolation> first_violation(const LittelmannPattern& t, const HighestWeight& hw);

bool is_theta_admissible(const LittelmannPattern& t, const HighestWeight& hw);

/// Positions whose entry equals its bound, row-major. Requires theta-admissibility.
std::vector<Position> critical_positions(const LittelmannPattern& t, const HighestWeight& hw);

/// Per-entry criticality flags in the pattern's flat row-major layout.
std::vector<bool> critical_mask(const LittelmannPattern& t, const HighestWeight& hw);

/// lambda_1, lambda_2 from columns r-1, r; lambda_k (k >= 3) from column r+1-k and its mirror.
WeightVector weight_vector(const LittelmannPattern& t);

/// Weight index k (1-based) that column `col` feeds.
int weight_index_of_column(int rank, int col);

/// Enumerates theta-admissible patterns. Sequential traversal visits patterns
/// in row-major lexicographic order. The first rows form independent work
/// units; a unit's completions are also produced in canonical order, so
/// concatenating units in order reproduces the sequential stream.
class PatternEnumerator {
 public:
  using Visitor = std::function<void(const LittelmannPattern&)>;

  PatternEnumerator(const RootSystemD& rs, const HighestWeight& hw,
                    std::optional<WeightVector> weight_filter = std::nullopt);

  /// Valid first rows (already pruned by the weight filter), sorted.
  const std::vector<std::vector<int>>& work_units() const { return units_; }

  void enumerate_unit(std::size_t unit, const Visitor& visit) const;
  void enumerate(const Visitor& visit) const;

  /// Counts without materializing the last row.
  std::uint64_t count_unit(std::size_t unit) const;
  std::uint64_t count() const;

  int rank() const { return rank_; }
  const HighestWeight& highest_weight() const { return hw_; }

 private:
  void rows_for(int row, const std::vector<int>& above, std::vector<std::vector<int>>& out) const;
  void descend(int row, std::vector<int>& above, LittelmannPattern& t, const Visitor& visit) const;
  std::uint64_t count_below(int row, const std::vector<int>& above) const;
  bool weight_prefix_ok(int completed_row, const std::vector<int>& above) const;

  int rank_;
  HighestWeight hw_;
  std::optional<WeightVector> filter_;
  std::vector<std::vector<int>> units_;
};

/// Convenience wrapper: all patterns in canonical order.
std::vector<LittelmannPattern> enumerate_patterns(const RootSystemD& rs, const HighestWeight& hw,
                                                  const std::optional<WeightVector>& weight_filter = std::nullopt);

}  // namespace dwmds
