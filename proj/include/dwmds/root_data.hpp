#pragma once

/*
 * Root system of type D_r in the node labeling used throughout this library:
 *
 *                     1
 *                    /
 *   r - ... - 4 - 3
 *                    \
 *                     2
 *
 * Nodes 1 and 2 are the two prongs of the fork, 3 is the elbow, and the
 * remaining nodes run 4..r away from the fork. This is NOT Bourbaki's
 * numbering; see bourbaki_label() for the translation.
 */

#include <vector>

#include "dwmds/coeff_ring.hpp"
#include "dwmds/series.hpp"

namespace dwmds {

/// Coefficients (k_1, ..., k_r) of a root sum k_i alpha_i.
using Root = std::vector<int>;

/// d(alpha) = k_1 + ... + k_r.
int height(const Root& alpha);

class RootSystemD {
 public:
  /// Builds D_r for r >= 2 by closing the simple roots under the simple
  /// reflections. Roots are ordered by height, then lexicographically.
  explicit RootSystemD(int rank);

  int rank() const { return rank_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const Root& highest_root() const { return roots_.back(); }

 private:
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
};

RootSystemD build_root_system(int rank);

/// Bourbaki index (1-based) of the node carrying the given label here.
int bourbaki_label(int rank, int label);

/// theta = sum m_k omega_k with every m_k >= 1. The twist is l_k = m_k - 1.
class HighestWeight {
 public:
  static HighestWeight from_m(std::vector<int> m);
  static HighestWeight from_twist(const std::vector<int>& twist);

  int rank() const { return static_cast<int>(m_.size()); }
  /// m_k for 1 <= k <= rank.
  int m(int k) const { return m_.at(k - 1); }
  const std::vector<int>& coefficients() const { return m_; }
  std::vector<int> twist() const;

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;

 private:
  explicit HighestWeight(std::vector<int> m) : m_(std::move(m)) {}
  std::vector<int> m_;
};

/// dim V_theta by the Weyl dimension formula, computed exactly.
BigInt weyl_dimension(const RootSystemD& rs, const HighestWeight& hw);

/// prod over positive roots of (1 - p^{d(alpha)-1} x^alpha), expanded, with n = 1.
LocalPart tokuyama_product(const RootSystemD& rs);

}  // namespace dwmds
