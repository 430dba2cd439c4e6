#include "dwmds/root_data.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dwmds {

int height(const Root& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

namespace {

std::vector<std::vector<int>> d_cartan(int r) {
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto join = [&](int u, int v) { a[u - 1][v - 1] = a[v - 1][u - 1] = -1; };
  if (r >= 3) {
    join(1, 3);
    join(2, 3);
    for (int j = 3; j < r; ++j) join(j, j + 1);
  }
  return a;
}

}  // namespace

RootSystemD::RootSystemD(int rank) : rank_(rank) {
  if (rank < 2) throw std::invalid_argument("type D root system needs rank >= 2");
  cartan_ = d_cartan(rank);

  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 0; i < rank; ++i) {
    Root e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  // s_j(alpha) = alpha - <alpha, alpha_j^vee> alpha_j
  while (!queue.empty()) {
    Root alpha = std::move(queue.front());
    queue.pop_front();
    for (int j = 0; j < rank; ++j) {
      int pairing = 0;
      for (int i = 0; i < rank; ++i) pairing += alpha[i] * cartan_[i][j];
      Root beta = alpha;
      beta[j] -= pairing;
      const bool positive = std::all_of(beta.begin(), beta.end(), [](int k) { return k >= 0; });
      if (positive && height(beta) > 0 && seen.insert(beta).second) queue.push_back(std::move(beta));
    }
  }
  roots_.assign(seen.begin(), seen.end());
  std::stable_sort(roots_.begin(), roots_.end(),
                   [](const Root& a, const Root& b) { return height(a) < height(b); });
}

RootSystemD build_root_system(int rank) { return RootSystemD(rank); }

int bourbaki_label(int rank, int label) {
  if (label < 1 || label > rank) throw std::out_of_range("node label out of range");
  if (rank == 2) return label;
  if (label == 1) return rank - 1;
  if (label == 2) return rank;
  return rank + 1 - label;
}

HighestWeight HighestWeight::from_m(std::vector<int> m) {
  if (m.size() < 2) throw std::invalid_argument("highest weight needs rank >= 2");
  if (std::any_of(m.begin(), m.end(), [](int v) { return v < 1; })) {
    throw std::invalid_argument("highest weight coefficients must be >= 1");
  }
  return HighestWeight(std::move(m));
}

HighestWeight HighestWeight::from_twist(const std::vector<int>& twist) {
  std::vector<int> m(twist.size());
  std::transform(twist.begin(), twist.end(), m.begin(), [](int l) {
    if (l < 0) throw std::invalid_argument("twist entries must be >= 0");
    return l + 1;
  });
  return from_m(std::move(m));
}

std::vector<int> HighestWeight::twist() const {
  std::vector<int> l(m_.size());
  std::transform(m_.begin(), m_.end(), l.begin(), [](int v) { return v - 1; });
  return l;
}

BigInt weyl_dimension(const RootSystemD& rs, const HighestWeight& hw) {
  if (rs.rank() != hw.rank()) throw std::invalid_argument("weyl_dimension: rank mismatch");
  // Simply laced, so alpha^vee has the same simple-coroot coordinates as alpha.
  BigInt num = 1;
  BigInt den = 1;
  for (const Root& alpha : rs.positive_roots()) {
    int shifted = 0;
    for (int i = 0; i < rs.rank(); ++i) shifted += alpha[i] * (hw.m(i + 1) + 1);
    num *= shifted;
    den *= height(alpha);
  }
  if (num % den != 0) throw std::logic_error("weyl_dimension: inexact division");
  return num / den;
}

LocalPart tokuyama_product(const RootSystemD& rs) {
  const int r = rs.rank();
  LocalPart prod(r, 1, std::vector<int>(r, 0));
  prod.accumulate(WeightVector(r, 0), RingElem::one(1));
  for (const Root& alpha : rs.positive_roots()) {
    const RingElem factor = RingElem::from_laurent(1, Laurent::monomial(-1, height(alpha) - 1));
    LocalPart next = prod;
    for (const auto& [lambda, c] : prod.coefficients) {
      WeightVector shifted = lambda;
      for (int i = 0; i < r; ++i) shifted[i] += alpha[i];
      next.accumulate(shifted, c * factor);
    }
    prod = std::move(next);
  }
  return prod;
}

}  // namespace dwmds
