// Mass-truncated formal series Σ_A c_A q^A with TPoly coefficients.
#pragma once

#include <map>

#include "gvtools/lattice.hpp"
#include "gvtools/tpoly.hpp"

namespace gvt {

/// A series over the classes of mass <= cap, plus a separate q^0 term.
///
/// Class coefficients are truncated to the config's t_order on storage. A
/// class without an entry is either exactly zero or zero up to t_order,
/// depending on absent_exact(); a zero that is trusted to a lower order than
/// that stays stored so its validity is not lost. The q^0 coefficient is
/// exempt from the t_order cap so that exact units like 1 + x are
/// representable.
class QSeries {
 public:
  QSeries() : QSeries(LatticeConfig{}) {}
  explicit QSeries(LatticeConfig config, bool absent_exact = true);

  const LatticeConfig& config() const { return config_; }
  const std::map<LatticeClass, TPoly>& terms() const { return terms_; }
  const TPoly& const_term() const { return const_term_; }
  bool absent_exact() const { return absent_exact_; }

  /// Stored coefficient, or the implied zero for an absent class.
  TPoly coeff(const LatticeClass& a) const;
  /// Zero as an absent class would report it.
  TPoly absent_value() const;

  /// Replaces the coefficient of q^A. Throws ConfigError when M(A) exceeds the cap.
  void set(const LatticeClass& a, const TPoly& p);
  void add_to(const LatticeClass& a, const TPoly& p);
  void set_const(TPoly p) { const_term_ = std::move(p); }

  /// Smallest validity order over the stored class coefficients and absent classes.
  int min_valid_to() const;
  /// Smallest min_exp over the stored class coefficients.
  int min_exp() const;

  QSeries scale(const Rational& c) const;
  /// Same series under a lower mass cap (Λ-truncation).
  QSeries truncate_mass(const Rational& cap) const;
  /// Every class coefficient truncated to `order`; the config's t_order follows.
  QSeries truncate_t(int order) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries& operator+=(const QSeries& b) { return *this = *this + b; }
  QSeries& operator-=(const QSeries& b) { return *this = *this - b; }

  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  void check_compatible(const QSeries& other) const;

  LatticeConfig config_;
  std::map<LatticeClass, TPoly> terms_;
  TPoly const_term_;
  bool absent_exact_ = true;
};

QSeries mul(const QSeries& a, const QSeries& b);
/// Σ_{n>=1} (-1)^{n+1} x^n / n. Requires a vanishing q^0 term.
QSeries log1p(const QSeries& x);
/// Σ_{n>=0} x^n / n!. Requires a vanishing q^0 term.
QSeries exp(const QSeries& x);

/// Substitutes q -> q^A in a rank-1 series, dropping classes above the target cap.
/// Throws ConfigError if `s` is truncated below a degree the target can reach.
QSeries pushforward(const QSeries& s, const LatticeClass& a, const LatticeConfig& target);

}  // namespace gvt
