#include "dwmds/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace dwmds {

std::string Position::to_string() const {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

// ------------------------------------------------------------ the pattern

LittelmannPattern::LittelmannPattern(int rank) : rank_(rank) {
  if (rank < 2) throw std::invalid_argument("pattern rank must be >= 2");
  entries_.assign(static_cast<std::size_t>(rank) * (rank - 1), 0);
}

bool LittelmannPattern::contains(Position p) const {
  return p.row >= 1 && p.row <= num_rows() && p.col >= first_col(p.row) && p.col <= last_col(p.row);
}

std::size_t LittelmannPattern::index(int row, int col) const {
  if (!contains({row, col})) {
    throw std::out_of_range("position " + Position{row, col}.to_string() + " outside D_" +
                            std::to_string(rank_) + " pattern");
  }
  // Rows 1..row-1 hold 2(r-1) + 2(r-2) + ... + 2(r-row+1) entries.
  const int before = (row - 1) * (2 * rank_ - row);
  return static_cast<std::size_t>(before + (col - row));
}

void LittelmannPattern::set(Position p, int value) {
  if (value < 0) throw std::invalid_argument("pattern entries must be >= 0");
  entries_[index(p)] = value;
}

std::span<const int> LittelmannPattern::row(int i) const {
  return std::span<const int>(entries_).subspan(index(i, first_col(i)), 2 * (rank_ - i));
}

void LittelmannPattern::set_row(int i, std::span<const int> values) {
  if (values.size() != static_cast<std::size_t>(2 * (rank_ - i))) {
    throw std::invalid_argument("row " + std::to_string(i) + " needs " + std::to_string(2 * (rank_ - i)) +
                                " entries");
  }
  std::copy(values.begin(), values.end(), entries_.begin() + static_cast<std::ptrdiff_t>(index(i, first_col(i))));
}

LittelmannPattern LittelmannPattern::from_rows(int rank, const std::vector<std::vector<int>>& rows) {
  LittelmannPattern t(rank);
  if (static_cast<int>(rows.size()) != rank - 1) {
    throw std::invalid_argument("D_" + std::to_string(rank) + " pattern needs " + std::to_string(rank - 1) + " rows");
  }
  for (int i = 1; i <= rank - 1; ++i) {
    const auto& r = rows[i - 1];
    if (std::any_of(r.begin(), r.end(), [](int v) { return v < 0; })) {
      throw std::invalid_argument("pattern entries must be >= 0");
    }
    t.set_row(i, r);
  }
  return t;
}

LittelmannPattern LittelmannPattern::parse(std::string_view text) {
  std::vector<std::vector<int>> rows(1);
  std::size_t pos = 0;
  bool expect_number = true;
  while (pos <= text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (expect_number) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
      if (ec != std::errc{}) {
        throw std::invalid_argument("malformed pattern literal at offset " + std::to_string(pos) + ": \"" +
                                    std::string(text) + "\"");
      }
      rows.back().push_back(v);
      pos = static_cast<std::size_t>(ptr - text.data());
      expect_number = false;
      continue;
    }
    if (pos == text.size()) break;
    if (text[pos] == ';') {
      rows.emplace_back();
    } else if (text[pos] != ',') {
      throw std::invalid_argument("unexpected character '" + std::string(1, text[pos]) + "' in pattern literal");
    }
    ++pos;
    expect_number = true;
  }
  return from_rows(static_cast<int>(rows.size()) + 1, rows);
}

LittelmannPattern LittelmannPattern::from_json(const nlohmann::json& j) {
  return from_rows(j.at("rank").get<int>(), j.at("rows").get<std::vector<std::vector<int>>>());
}

std::vector<Position> LittelmannPattern::positions() const {
  std::vector<Position> out;
  out.reserve(entries_.size());
  for (int i = 1; i <= num_rows(); ++i) {
    for (int j = first_col(i); j <= last_col(i); ++j) out.push_back({i, j});
  }
  return out;
}

std::string LittelmannPattern::to_string() const {
  std::string out;
  for (int i = 1; i <= num_rows(); ++i) {
    if (i > 1) out += ';';
    bool first = true;
    for (int v : row(i)) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
  }
  return out;
}

nlohmann::json LittelmannPattern::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= num_rows(); ++i) {
    auto r = row(i);
    rows.push_back(std::vector<int>(r.begin(), r.end()));
  }
  return {{"rank", rank_}, {"rows", rows}};
}

// ------------------------------------------------------------ partial sums

PartialSums::PartialSums(int rank_, std::vector<int> above_, std::vector<int> current_)
    : rank(rank_), above(std::move(above_)), current(std::move(current_)) {}

PartialSums::PartialSums(const LittelmannPattern& t, int row)
    : rank(t.rank()), above(2 * t.rank() + 1, 0), current(2 * t.rank() + 1, 0) {
  for (int k = 1; k < row; ++k) {
    for (int c = t.first_col(k); c <= t.last_col(k); ++c) above[c] += t.at(k, c);
  }
  for (int c = t.first_col(row); c <= t.last_col(row); ++c) current[c] = t.at(row, c);
}

int PartialSums::s_bar(int j) const {
  if (j <= 0) return 0;
  const int mirror = 2 * rank - 1 - j;
  return current[mirror] + above[j] + above[mirror];
}

int PartialSums::s_current(int j) const {
  const int mirror = 2 * rank - 1 - j;
  return above[j] + above[mirror] + current[j] + current[mirror];
}

int PartialSums::s_above(int j) const { return above[j] + above[2 * rank - 1 - j]; }

// ------------------------------------------------------------ bounds

int entry_bound(const HighestWeight& hw, int col, const PartialSums& sums) {
  const int r = sums.rank;
  if (col >= r + 1) {
    const int j = 2 * r - 1 - col;  // the entry is abar_{i,j}
    return hw.m(r - j + 1) + sums.s_bar(j - 1) - 2 * sums.s_above(j) + sums.s_above(j + 1);
  }
  if (col <= r - 2) {
    const int j = col;
    return hw.m(r - j + 1) + sums.s_current(j + 1) - 2 * sums.s_bar(j) + sums.s_bar(j - 1);
  }
  if (col == r - 1) return hw.m(2) + sums.s_bar(r - 2) - 2 * sums.t_above(r - 1);
  return hw.m(1) + sums.s_bar(r - 2) - 2 * sums.t_above(r);
}

namespace {

void check_ranks(const LittelmannPattern& t, const HighestWeight& hw) {
  if (t.rank() != hw.rank()) throw std::invalid_argument("pattern and highest weight have different ranks");
}

// Chain neighbours to the right of col in inequality (1): the entries that
// must not exceed a_{row,col}.
std::vector<int> smaller_neighbours(int rank, int row, int col) {
  const int last = 2 * rank - 1 - row;
  if (col == rank - 2) return {rank - 1, rank};
  if (col == rank - 1 || col == rank) {
    return rank + 1 <= last ? std::vector<int>{rank + 1} : std::vector<int>{};
  }
  return col < last ? std::vector<int>{col + 1} : std::vector<int>{};
}

}  // namespace

int upper_bound(const LittelmannPattern& t, const HighestWeight& hw, Position p) {
  check_ranks(t, hw);
  if (!t.contains(p)) throw std::out_of_range("upper_bound: position " + p.to_string() + " out of range");
  return entry_bound(hw, p.col, PartialSums(t, p.row));
}

bool is_admissible(const LittelmannPattern& t) {
  for (const Position& p : t.positions()) {
    if (t.at(p) < 0) return false;
    for (int c : smaller_neighbours(t.rank(), p.row, p.col)) {
      if (t.at(p.row, c) > t.at(p)) return false;
    }
  }
  return true;
}

std::string BoundViolation::describe() const {
  if (chain) {
    return "entry a" + position.to_string() + " = " + std::to_string(value) +
           " is smaller than a right-hand chain neighbour (" + std::to_string(bound) + ")";
  }
  return "entry a" + position.to_string() + " = " + std::to_string(value) + " exceeds its bound " +
         std::to_string(bound);
}

std::optional<BoundViolation> first_violation(const LittelmannPattern& t, const HighestWeight& hw) {
  check_ranks(t, hw);
  for (int i = 1; i <= t.num_rows(); ++i) {
    const PartialSums sums(t, i);
    for (int c = t.first_col(i); c <= t.last_col(i); ++c) {
      const int v = t.at(i, c);
      for (int nb : smaller_neighbours(t.rank(), i, c)) {
        if (t.at(i, nb) > v) return BoundViolation{{i, c}, v, t.at(i, nb), true};
      }
      const int b = entry_bound(hw, c, sums);
      if (v > b) return BoundViolation{{i, c}, v, b, false};
    }
  }
  return std::nullopt;
}

bool is_theta_admissible(const LittelmannPattern& t, const HighestWeight& hw) {
  return !first_violation(t, hw).has_value();
}

std::vector<bool> critical_mask(const LittelmannPattern& t, const HighestWeight& hw) {
  check_ranks(t, hw);
  std::vector<bool> mask(t.entries().size(), false);
  std::size_t idx = 0;
  for (int i = 1; i <= t.num_rows(); ++i) {
    const PartialSums sums(t, i);
    for (int c = t.first_col(i); c <= t.last_col(i); ++c, ++idx) {
      mask[idx] = t.at(i, c) == entry_bound(hw, c, sums);
    }
  }
  return mask;
}

std::vector<Position> critical_positions(const LittelmannPattern& t, const HighestWeight& hw) {
  const auto mask = critical_mask(t, hw);
  std::vector<Position> out;
  const auto all = t.positions();
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (mask[k]) out.push_back(all[k]);
  }
  return out;
}

int weight_index_of_column(int rank, int col) {
  if (col == rank - 1) return 1;
  if (col == rank) return 2;
  if (col <= rank - 2) return rank + 1 - col;
  return col - rank + 2;
}

WeightVector weight_vector(const LittelmannPattern& t) {
  WeightVector lambda(t.rank(), 0);
  for (const Position& p : t.positions()) lambda[weight_index_of_column(t.rank(), p.col) - 1] += t.at(p);
  return lambda;
}

// ------------------------------------------------------------ enumeration

PatternEnumerator::PatternEnumerator(const RootSystemD& rs, const HighestWeight& hw,
                                     std::optional<WeightVector> weight_filter)
    : rank_(rs.rank()), hw_(hw), filter_(std::move(weight_filter)) {
  if (rs.rank() != hw.rank()) throw std::invalid_argument("root system and highest weight have different ranks");
  if (filter_ && static_cast<int>(filter_->size()) != rank_) {
    throw std::invalid_argument("weight filter has wrong length");
  }
  rows_for(1, std::vector<int>(2 * rank_ + 1, 0), units_);
  std::sort(units_.begin(), units_.end());
}

bool PatternEnumerator::weight_prefix_ok(int completed_row, const std::vector<int>& above) const {
  if (!filter_) return true;
  const auto& target = *filter_;
  const int r = rank_;
  // Column pair (j, 2r-1-j) appears only in rows 1..j, so it is final after row j.
  if (completed_row <= r - 2) {
    const int j = completed_row;
    if (above[j] + above[2 * r - 1 - j] != target[r + 1 - j - 1]) return false;
  }
  if (completed_row == r - 1) {
    if (above[r - 1] != target[0] || above[r] != target[1]) return false;
  }
  return true;
}

void PatternEnumerator::rows_for(int row, const std::vector<int>& above,
                                 std::vector<std::vector<int>>& out) const {
  const int r = rank_;
  const int first = row;
  const int last = 2 * r - 1 - row;

  // Fill order: right half from the outer edge inward, the middle pair, then
  // the left half from the middle outward.
  std::vector<int> order;
  for (int c = last; c >= r + 1; --c) order.push_back(c);
  order.push_back(r - 1);
  order.push_back(r);
  for (int c = r - 2; c >= first; --c) order.push_back(c);

  PartialSums sums(r, above, std::vector<int>(2 * r + 1, 0));

  // Running weight contribution per weight index, for pruning.
  std::vector<int> weight_so_far;
  if (filter_) {
    weight_so_far.assign(r, 0);
    for (int c = 1; c <= 2 * r - 2; ++c) weight_so_far[weight_index_of_column(r, c) - 1] += above[c];
  }

  auto lower = [&](int c) {
    if (c == r - 2) return std::max(sums.current[r - 1], sums.current[r]);
    if (c == r - 1 || c == r) return r + 1 <= last ? sums.current[r + 1] : 0;
    return c < last ? sums.current[c + 1] : 0;
  };

  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      std::vector<int> above_next = above;
      for (int c = first; c <= last; ++c) above_next[c] += sums.current[c];
      if (!weight_prefix_ok(row, above_next)) return;
      out.emplace_back(sums.current.begin() + first, sums.current.begin() + last + 1);
      return;
    }
    const int c = order[k];
    const int lo = lower(c);
    int hi = entry_bound(hw_, c, sums);
    int widx = 0;
    if (filter_) {
      widx = weight_index_of_column(r, c) - 1;
      hi = std::min(hi, (*filter_)[widx] - weight_so_far[widx]);
    }
    for (int v = lo; v <= hi; ++v) {
      sums.current[c] = v;
      if (filter_) weight_so_far[widx] += v;
      self(self, k + 1);
      if (filter_) weight_so_far[widx] -= v;
    }
    sums.current[c] = 0;
  };
  fill(fill, 0);
}

void PatternEnumerator::descend(int row, std::vector<int>& above, LittelmannPattern& t,
                                const Visitor& visit) const {
  std::vector<std::vector<int>> rows;
  rows_for(row, above, rows);
  std::sort(rows.begin(), rows.end());
  for (const auto& values : rows) {
    t.set_row(row, values);
    if (row == rank_ - 1) {
      visit(t);
      continue;
    }
    for (int c = row; c <= 2 * rank_ - 1 - row; ++c) above[c] += values[c - row];
    descend(row + 1, above, t, visit);
    for (int c = row; c <= 2 * rank_ - 1 - row; ++c) above[c] -= values[c - row];
  }
}

void PatternEnumerator::enumerate_unit(std::size_t unit, const Visitor& visit) const {
  const auto& first_row = units_.at(unit);
  LittelmannPattern t(rank_);
  t.set_row(1, first_row);
  if (rank_ == 2) {
    visit(t);
    return;
  }
  std::vector<int> above(2 * rank_ + 1, 0);
  for (int c = 1; c <= 2 * rank_ - 2; ++c) above[c] = first_row[c - 1];
  descend(2, above, t, visit);
}

void PatternEnumerator::enumerate(const Visitor& visit) const {
  for (std::size_t u = 0; u < units_.size(); ++u) enumerate_unit(u, visit);
}

std::uint64_t PatternEnumerator::count_below(int row, const std::vector<int>& above) const {
  const int r = rank_;
  if (row == r - 1) {
    // The last row is just the middle pair; its two bounds are independent.
    const PartialSums sums(r, above, std::vector<int>(2 * r + 1, 0));
    const int b1 = entry_bound(hw_, r - 1, sums);
    const int b2 = entry_bound(hw_, r, sums);
    if (b1 < 0 || b2 < 0) return 0;
    if (!filter_) return static_cast<std::uint64_t>(b1 + 1) * static_cast<std::uint64_t>(b2 + 1);
    const int v1 = (*filter_)[0] - above[r - 1];
    const int v2 = (*filter_)[1] - above[r];
    return (v1 >= 0 && v1 <= b1 && v2 >= 0 && v2 <= b2) ? 1 : 0;
  }
  std::vector<std::vector<int>> rows;
  rows_for(row, above, rows);
  std::uint64_t total = 0;
  std::vector<int> next = above;
  for (const auto& values : rows) {
    for (int c = row; c <= 2 * r - 1 - row; ++c) next[c] = above[c] + values[c - row];
    total += count_below(row + 1, next);
  }
  return total;
}

std::uint64_t PatternEnumerator::count_unit(std::size_t unit) const {
  if (rank_ == 2) return 1;
  const auto& first_row = units_.at(unit);
  std::vector<int> above(2 * rank_ + 1, 0);
  for (int c = 1; c <= 2 * rank_ - 2; ++c) above[c] = first_row[c - 1];
  return count_below(2, above);
}

std::uint64_t PatternEnumerator::count() const {
  std::uint64_t total = 0;
  for (std::size_t u = 0; u < units_.size(); ++u) total += count_unit(u);
  return total;
}

std::vector<LittelmannPattern> enumerate_patterns(const RootSystemD& rs, const HighestWeight& hw,
                                                  const std::optional<WeightVector>& weight_filter) {
  std::vector<LittelmannPattern> out;
  PatternEnumerator(rs, hw, weight_filter).enumerate([&](const LittelmannPattern& t) { out.push_back(t); });
  return out;
}

}  // namespace dwmds
