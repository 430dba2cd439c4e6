#pragma once

// Exact arithmetic in Z[p, 1/p][g_1, ..., g_{n-1}].
//
// The Gauss-sum symbols g_k are kept formal. Indices are reduced mod n on
// construction and g_0 is replaced by the constant -1, so a RingElem never
// stores a symbol outside g_1 .. g_{n-1}. No relations among the g_k are
// imposed.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace dwmds {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Laurent polynomial in p with arbitrary-precision integer coefficients.
/// Terms are kept sorted by exponent with no zero coefficients.
class Laurent {
 public:
  using Term = std::pair<int, BigInt>;  // (exponent, coefficient)

  Laurent() = default;
  static Laurent constant(const BigInt& c);
  static Laurent monomial(const BigInt& c, int exponent);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& other);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a += -b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent&, const Laurent&) = default;

  Rational evaluate(const Rational& p) const;

  /// Human-readable form with the lowest power of p and the sign of the
  /// leading coefficient pulled out, e.g. "-p^36*(p^3 - 2*p^2 + 2*p - 1)".
  std::string to_string() const;

 private:
  explicit Laurent(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
  std::vector<Term> terms_;
};

/// Exponent vector over g_1 .. g_{n-1}.
using GMonomial = std::vector<int>;

class RingElem {
 public:
  using Term = std::pair<GMonomial, Laurent>;

  /// The zero element of the ring for cover degree n.
  explicit RingElem(int n);

  static RingElem zero(int n) { return RingElem(n); }
  static RingElem one(int n) { return constant(n, 1); }
  static RingElem constant(int n, const BigInt& c);
  static RingElem from_laurent(int n, const Laurent& l);
  /// Single term g^exponents * l; the exponent vector must have length n-1.
  static RingElem term(int n, GMonomial exponents, const Laurent& l);

  int modulus() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when no g symbol appears (every key is the zero monomial).
  bool is_pure_laurent() const;

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& other);
  RingElem& operator*=(const RingElem& other);
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a += -b; }
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend bool operator==(const RingElem&, const RingElem&) = default;

  /// Substitution homomorphism p -> p_value, g_k -> g_values[k-1].
  Rational evaluate(const Rational& p_value, std::span<const Rational> g_values) const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static RingElem from_json(const nlohmann::json& j);

 private:
  void check_same_modulus(const RingElem& other) const;

  int n_;
  std::vector<Term> terms_;  // sorted lexicographically by g-monomial
};

/// g_{k mod n}, with g_0 = -1.
RingElem gauss_symbol(int k, int n);

/// p^e as an element of the ring for cover degree n.
RingElem pow_p(int n, int e);

RingElem pow(RingElem base, unsigned exponent);

/// Coefficients that fit in 64 bits serialize as JSON integers, larger ones
/// as decimal strings.
nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

}  // namespace dwmds
