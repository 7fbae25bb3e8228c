// Single-class BPS transform for Fano classes, where the kernels carry the
// exponent shift 2·c1.
#pragma once

#include <map>

#include "gvtools/rational.hpp"
#include "gvtools/tpoly.hpp"

namespace gvt {

/// GW_{A,g}(γ) for one class A and one fixed insertion γ.
struct FanoSeries {
  int c1 = 1;                          ///< c_1(A) >= 1
  std::map<int, Rational> gw_coeffs;   ///< g -> coefficient of t^{2g-2}
  int window = 0;                      ///< highest genus represented

  /// Throws ConfigError on c1 < 1, negative window, or keys outside [0, window].
  void validate() const;
  friend bool operator==(const FanoSeries&, const FanoSeries&) = default;
};

/// Peels p against (2 sin(t/2))^{2g-2+2·c1}, g = 0, 1, ... while the
/// leading power fits in p's window. c1 = 0 is the Calabi-Yau basis.
/// Throws ConfigError if p has a term below t^{2·c1-2}.
std::map<int, Rational> shifted_genus_peel(int c1, const TPoly& p);

/// BPS_{A,g}(γ) for g <= window - c1.
std::map<int, Rational> fano_bps_from_gw(const FanoSeries& f);

/// Σ_g b_g (2 sin(t/2))^{2g-2+2·c1}, as coefficients of t^{2g-2} for 2g-2 <= t_order.
FanoSeries fano_gw_from_bps(int c1, const std::map<int, Rational>& bps, int t_order);

}  // namespace gvt
