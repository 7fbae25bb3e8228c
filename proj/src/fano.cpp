#include "gvtools/fano.hpp"

#include "gvtools/errors.hpp"
#include "gvtools/kernels.hpp"

namespace gvt {

void FanoSeries::validate() const {
  if (c1 < 1) throw ConfigError("Fano classes need c1 >= 1, got " + std::to_string(c1));
  if (window < 0) throw ConfigError("Fano window must be non-negative");
  for (const auto& [g, c] : gw_coeffs) {
    if (g < 0 || g > window)
      throw ConfigError("genus " + std::to_string(g) + " outside the window [0, " + std::to_string(window) + "]");
  }
}

std::map<int, Rational> shifted_genus_peel(int c1, const TPoly& p) {
  if (c1 < 0) throw ConfigError("c1 must be non-negative");
  if (p.is_exact()) throw ValidityExhausted("peel needs a finite window");
  const int lowest = 2 * c1 - 2;
  if (!p.is_zero() && p.leading().first < lowest)
    throw ConfigError("term t^" + std::to_string(p.leading().first) + " lies below t^" + std::to_string(lowest) +
                      ", which no shifted kernel produces");
  const int order = p.valid_to();
  std::map<int, Rational> out;
  TPoly residual = p;
  for (int g = 0; 2 * (g + c1) - 2 <= order; ++g) {
    const int e = 2 * (g + c1) - 2;
    Rational c = residual.coeff(e);
    if (c == 0) continue;
    out.emplace(g, c);
    residual -= sin_kernel(1, g + c1, order).scale(c);
  }
  return out;
}

std::map<int, Rational> fano_bps_from_gw(const FanoSeries& f) {
  f.validate();
  std::map<int, Rational> coeffs;
  for (const auto& [g, c] : f.gw_coeffs) coeffs.emplace(2 * g - 2, c);
  return shifted_genus_peel(f.c1, TPoly(std::move(coeffs), -2, 2 * f.window - 2));
}

FanoSeries fano_gw_from_bps(int c1, const std::map<int, Rational>& bps, int t_order) {
  if (t_order < -2 || t_order % 2 != 0) throw ConfigError("t-order must be even and at least -2");
  FanoSeries out;
  out.c1 = c1;
  out.window = (t_order + 2) / 2;
  TPoly sum = TPoly::zero(t_order);
  for (const auto& [g, b] : bps) {
    if (g < 0) throw ConfigError("genus must be non-negative");
    if (2 * (g + c1) - 2 > t_order)
      throw ValidityExhausted("BPS genus " + std::to_string(g) + " lies outside the t-window " +
                              std::to_string(t_order));
    sum += sin_kernel(1, g + c1, t_order).scale(b);
  }
  for (const auto& [e, c] : sum.coeffs()) out.gw_coeffs.emplace((e + 2) / 2, c);
  out.validate();
  return out;
}

}  // namespace gvt
