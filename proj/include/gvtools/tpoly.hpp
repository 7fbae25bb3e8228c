// Even-exponent Laurent polynomials in t with exact coefficients and a
// tracked validity order.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gvtools/rational.hpp"

namespace gvt {

/// A truncated Laurent series Σ c_e t^e over even e.
///
/// Coefficients at exponents <= valid_to() are exact; above that nothing is
/// known. min_exp() is a lower bound for every possibly-nonzero exponent,
/// including the unknown tail. A value known to all orders (a polynomial)
/// carries valid_to() == kExact.
///
/// Stored exponents are even and lie in [min_exp, valid_to]. Construction
/// tightens min_exp to the lowest stored exponent, or to valid_to when
/// nothing is stored.
class TPoly {
 public:
  /// Sentinel validity for values known to every order.
  static constexpr int kExact = 1 << 28;

  /// The exact zero.
  TPoly();
  TPoly(std::map<int, Rational> coeffs, int min_exp, int valid_to);

  static TPoly zero(int valid_to = kExact);
  /// c · t^e, exact.
  static TPoly monomial(int exponent, const Rational& c);
  static TPoly constant(const Rational& c) { return monomial(0, c); }
  /// Polynomial known to every order, from (exponent, coefficient) pairs.
  static TPoly exact(std::map<int, Rational> coeffs);

  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  int min_exp() const { return min_exp_; }
  int valid_to() const { return valid_to_; }
  bool is_exact() const { return valid_to_ == kExact; }
  /// No stored coefficient; says nothing about the unknown tail.
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient at `e`; throws ValidityExhausted above valid_to.
  Rational coeff(int e) const;

  /// Lowest nonzero term. Throws ValidityExhausted when no term is stored.
  std::pair<int, Rational> leading() const;

  /// Lowers valid_to to `order` (never raises it).
  TPoly truncate(int order) const;
  TPoly scale(const Rational& c) const;
  TPoly operator-() const { return scale(Rational(-1)); }

  friend TPoly operator+(const TPoly& a, const TPoly& b);
  friend TPoly operator-(const TPoly& a, const TPoly& b);
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly& operator+=(const TPoly& b) { return *this = *this + b; }
  TPoly& operator-=(const TPoly& b) { return *this = *this - b; }

  /// Same coefficients and validity.
  friend bool operator==(const TPoly& a, const TPoly& b);

  /// Agreement of the coefficients at every exponent <= order.
  bool agrees_with(const TPoly& other, int order) const;

  std::string to_string() const;

 private:
  void normalize();

  std::map<int, Rational> coeffs_;
  int min_exp_ = kExact;
  int valid_to_ = kExact;
};

TPoly add(const TPoly& a, const TPoly& b);
/// Convolution; valid_to = min(a.valid_to + b.min_exp, b.valid_to + a.min_exp).
/// Throws ValidityExhausted when that falls below the product's min_exp.
TPoly mul(const TPoly& a, const TPoly& b);
/// Multiplicative inverse of a series with a nonzero lowest coefficient.
/// An exact input has an infinite inverse; `order` caps the result's
/// validity and is required in that case.
TPoly invert_unit(const TPoly& a, std::optional<int> order = std::nullopt);
inline std::pair<int, Rational> leading(const TPoly& a) { return a.leading(); }
inline TPoly truncate(const TPoly& a, int order) { return a.truncate(order); }
inline TPoly scale(const TPoly& a, const Rational& c) { return a.scale(c); }

}  // namespace gvt
