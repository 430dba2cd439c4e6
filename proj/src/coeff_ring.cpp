#include "dwmds/coeff_ring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace dwmds {

namespace {

std::string power_of_p(int e) {
  if (e == 1) return "p";
  return "p^" + std::to_string(e);
}

// |c| * p^e without sign; "1" for the unit monomial.
std::string unsigned_monomial(const BigInt& abs_c, int e) {
  if (e == 0) return abs_c.str();
  if (abs_c == 1) return power_of_p(e);
  return abs_c.str() + "*" + power_of_p(e);
}

// Joins signed pieces into "a - b + c".
std::string join_signed(const std::vector<std::pair<bool, std::string>>& pieces) {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& [negative, body] = pieces[i];
    if (i == 0) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Laurent

Laurent Laurent::constant(const BigInt& c) { return monomial(c, 0); }

Laurent Laurent::monomial(const BigInt& c, int exponent) {
  if (c == 0) return Laurent{};
  return Laurent(std::vector<Term>{{exponent, c}});
}

int Laurent::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.front().first;
}

int Laurent::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.back().first;
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Laurent& Laurent::operator+=(const Laurent& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      BigInt c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return Laurent{};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    return Laurent::monomial(a.terms_[0].second * b.terms_[0].second,
                             a.terms_[0].first + b.terms_[0].first);
  }
  std::map<int, BigInt> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  }
  std::vector<Laurent::Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) out.emplace_back(e, std::move(c));
  }
  return Laurent(std::move(out));
}

Rational Laurent::evaluate(const Rational& p) const {
  if (p == 0) throw std::invalid_argument("evaluate: p must be nonzero");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational power = 1;
    const Rational base = e >= 0 ? p : Rational(1) / p;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) power *= base;
    sum += Rational(c) * power;
  }
  return sum;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  if (terms_.size() == 1) {
    const auto& [e, c] = terms_.front();
    return (c < 0 ? "-" : "") + unsigned_monomial(abs(c), e);
  }
  const int shift = terms_.front().first;
  const bool negate = terms_.back().second < 0;
  std::vector<std::pair<bool, std::string>> pieces;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const BigInt c = negate ? BigInt(-it->second) : it->second;
    pieces.emplace_back(c < 0, unsigned_monomial(abs(c), it->first - shift));
  }
  std::string out = negate ? "-" : "";
  if (shift != 0) out += power_of_p(shift) + "*";
  return out + "(" + join_signed(pieces) + ")";
}

// ---------------------------------------------------------------- RingElem

RingElem::RingElem(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("cover degree n must be >= 1");
}

RingElem RingElem::constant(int n, const BigInt& c) { return from_laurent(n, Laurent::constant(c)); }

RingElem RingElem::from_laurent(int n, const Laurent& l) { return term(n, GMonomial(n - 1, 0), l); }

RingElem RingElem::term(int n, GMonomial exponents, const Laurent& l) {
  RingElem out(n);
  if (exponents.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("g-exponent vector must have length n-1");
  }
  if (std::any_of(exponents.begin(), exponents.end(), [](int e) { return e < 0; })) {
    throw std::invalid_argument("g-exponents must be nonnegative");
  }
  if (!l.is_zero()) out.terms_.emplace_back(std::move(exponents), l);
  return out;
}

bool RingElem::is_one() const { return *this == one(n_); }

bool RingElem::is_pure_laurent() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return std::all_of(t.first.begin(), t.first.end(), [](int e) { return e == 0; });
  });
}

void RingElem::check_same_modulus(const RingElem& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("modulus mismatch: " + std::to_string(n_) + " vs " +
                                std::to_string(other.n_));
  }
}

RingElem RingElem::operator-() const {
  RingElem out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

RingElem& RingElem::operator+=(const RingElem& other) {
  check_same_modulus(other);
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      a->second += b->second;
      if (!a->second.is_zero()) merged.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& other) {
  *this = *this * other;
  return *this;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  a.check_same_modulus(b);
  RingElem out(a.n_);
  if (a.is_zero() || b.is_zero()) return out;
  std::map<GMonomial, Laurent> acc;
  for (const auto& [ga, la] : a.terms_) {
    for (const auto& [gb, lb] : b.terms_) {
      GMonomial g(ga.size());
      for (std::size_t k = 0; k < g.size(); ++k) g[k] = ga[k] + gb[k];
      acc[std::move(g)] += la * lb;
    }
  }
  for (auto& [g, l] : acc) {
    if (!l.is_zero()) out.terms_.emplace_back(g, std::move(l));
  }
  return out;
}

Rational RingElem::evaluate(const Rational& p_value, std::span<const Rational> g_values) const {
  if (p_value == 0) throw std::invalid_argument("evaluate: p must be nonzero");
  if (g_values.size() != static_cast<std::size_t>(n_ - 1)) {
    throw std::invalid_argument("evaluate: expected " + std::to_string(n_ - 1) + " Gauss-sum values");
  }
  Rational sum = 0;
  for (const auto& [g, l] : terms_) {
    Rational term = l.evaluate(p_value);
    for (std::size_t k = 0; k < g.size(); ++k) {
      for (int e = 0; e < g[k]; ++e) term *= g_values[k];
    }
    sum += term;
  }
  return sum;
}

std::string RingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<bool, std::string>> pieces;
  for (const auto& [g, l] : terms_) {
    std::string gs;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k] == 0) continue;
      if (!gs.empty()) gs += "*";
      gs += "g" + std::to_string(k + 1);
      if (g[k] != 1) gs += "^" + std::to_string(g[k]);
    }
    std::string ls = l.to_string();
    const bool negative = ls.front() == '-';
    if (negative) ls.erase(0, 1);
    if (gs.empty()) {
      pieces.emplace_back(negative, ls);
    } else if (ls == "1") {
      pieces.emplace_back(negative, gs);
    } else {
      pieces.emplace_back(negative, ls + "*" + gs);
    }
  }
  return join_signed(pieces);
}

nlohmann::json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

nlohmann::json RingElem::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [g, l] : terms_) {
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& [e, c] : l.terms()) ps.push_back({bigint_to_json(c), e});
    terms.push_back({{"g", g}, {"p", ps}});
  }
  return {{"n", n_}, {"terms", terms}};
}

RingElem RingElem::from_json(const nlohmann::json& j) {
  RingElem out(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    auto g = t.at("g").get<GMonomial>();
    if (g.size() != static_cast<std::size_t>(out.n_ - 1)) {
      throw std::invalid_argument("RingElem JSON: g-exponent vector has wrong length");
    }
    Laurent l;
    for (const auto& pe : t.at("p")) l += Laurent::monomial(bigint_from_json(pe.at(0)), pe.at(1).get<int>());
    out += term(out.n_, std::move(g), l);
  }
  return out;
}

RingElem gauss_symbol(int k, int n) {
  if (n < 1) throw std::invalid_argument("gauss_symbol: n must be >= 1");
  if (k < 0) throw std::invalid_argument("gauss_symbol: index must be >= 0");
  const int idx = k % n;
  if (idx == 0) return RingElem::constant(n, -1);
  GMonomial g(n - 1, 0);
  g[idx - 1] = 1;
  return RingElem::term(n, std::move(g), Laurent::constant(1));
}

RingElem pow_p(int n, int e) { return RingElem::from_laurent(n, Laurent::monomial(1, e)); }

RingElem pow(RingElem base, unsigned exponent) {
  RingElem result = RingElem::one(base.modulus());
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

}  // namespace dwmds
