#pragma once

// Sparse generating function sum_lambda a_lambda x^lambda with coefficients
// in the Gauss-sum ring. This is the output object of the local-part
// computation and of the product formulas used to check it.

#include <map>
#include <vector>

#include <json.hpp>

#include "dwmds/coeff_ring.hpp"

namespace dwmds {

/// Exponent vector lambda = (lambda_1, ..., lambda_r).
using WeightVector = std::vector<int>;

struct LocalPart {
  int rank = 0;
  int n = 1;
  std::vector<int> twist;
  /// Only nonzero coefficients are stored; keys are ordered lexicographically.
  std::map<WeightVector, RingElem> coefficients;

  LocalPart() = default;
  LocalPart(int rank, int n, std::vector<int> twist);

  /// a_lambda, or zero when lambda is not in the support.
  RingElem coefficient_at(const WeightVector& lambda) const;

  /// Adds c to a_lambda, dropping the entry if the sum cancels.
  void accumulate(const WeightVector& lambda, const RingElem& c);

  /// Adds every coefficient of other into this one.
  void merge(const LocalPart& other);

  std::size_t support_size() const { return coefficients.size(); }

  nlohmann::json to_json() const;
  static LocalPart from_json(const nlohmann::json& j);

  friend bool operator==(const LocalPart&, const LocalPart&) = default;
};

/// Product of two series in disjoint variable sets: exponents of a come first.
LocalPart outer_product(const LocalPart& a, const LocalPart& b);

}  // namespace dwmds
