#include "dwmds/series.hpp"

#include <stdexcept>

namespace dwmds {

LocalPart::LocalPart(int rank_, int n_, std::vector<int> twist_)
    : rank(rank_), n(n_), twist(std::move(twist_)) {
  if (n < 1) throw std::invalid_argument("cover degree n must be >= 1");
}

RingElem LocalPart::coefficient_at(const WeightVector& lambda) const {
  if (auto it = coefficients.find(lambda); it != coefficients.end()) return it->second;
  return RingElem::zero(n);
}

void LocalPart::accumulate(const WeightVector& lambda, const RingElem& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(lambda.size()) != rank) throw std::invalid_argument("weight has wrong length");
  auto [it, inserted] = coefficients.try_emplace(lambda, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coefficients.erase(it);
}

void LocalPart::merge(const LocalPart& other) {
  if (other.rank != rank || other.n != n) throw std::invalid_argument("merging incompatible local parts");
  for (const auto& [lambda, c] : other.coefficients) accumulate(lambda, c);
}

nlohmann::json LocalPart::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [lambda, value] : coefficients) {
    coeffs.push_back({{"lambda", lambda}, {"value", value.to_json()}});
  }
  return {{"rank", rank}, {"n", n}, {"twist", twist}, {"coefficients", coeffs}};
}

LocalPart LocalPart::from_json(const nlohmann::json& j) {
  LocalPart out(j.at("rank").get<int>(), j.at("n").get<int>(), j.at("twist").get<std::vector<int>>());
  for (const auto& c : j.at("coefficients")) {
    out.accumulate(c.at("lambda").get<WeightVector>(), RingElem::from_json(c.at("value")));
  }
  return out;
}

LocalPart outer_product(const LocalPart& a, const LocalPart& b) {
  if (a.n != b.n) throw std::invalid_argument("outer_product: modulus mismatch");
  std::vector<int> twist = a.twist;
  twist.insert(twist.end(), b.twist.begin(), b.twist.end());
  LocalPart out(a.rank + b.rank, a.n, std::move(twist));
  for (const auto& [la, ca] : a.coefficients) {
    for (const auto& [lb, cb] : b.coefficients) {
      WeightVector lambda = la;
      lambda.insert(lambda.end(), lb.begin(), lb.end());
      out.accumulate(lambda, ca * cb);
    }
  }
  return out;
}

}  // namespace dwmds
