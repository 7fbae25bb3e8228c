#include "gvtools/gv.hpp"

#include "gvtools/errors.hpp"
#include "gvtools/kernels.hpp"

namespace gvt {

QSeries gw_from_bps(const BPSTable& table) {
  const LatticeConfig& config = table.config;
  config.validate();
  const int order = config.t_order;
  QSeries out(config, /*absent_exact=*/false);
  for (const auto& [key, value] : table.entries) {
    const auto& [a, g] = key;
    if (2 * g - 2 > order)
      throw ValidityExhausted("entry " + a.to_string() + " g=" + std::to_string(g) + " lies outside the t-window " +
                              std::to_string(order));
    for (std::int64_t k = 1;; ++k) {
      LatticeClass ka = a.scaled(k);
      if (mass(config, ka) > config.mass_cap) break;
      out.add_to(ka, sin_kernel(k, g, order).scale(value / k));
    }
  }
  return out;
}

BPSTable bps_from_gw(const QSeries& series, const InversionOptions& options) {
  const LatticeConfig& config = series.config();
  const int order = config.t_order;
  BPSTable out;
  out.config = config;
  for (const auto& a : enumerate_classes(config)) {
    TPoly residual = series.coeff(a).truncate(order);
    if (residual.min_exp() < -2)
      throw ConfigError("class " + a.to_string() + " has a term below t^-2");
    for (const auto& [k, b] : divisors(a)) {
      if (k == 1) continue;
      // b has lower mass, so its entries are final.
      auto lo = out.entries.lower_bound({b, 0});
      for (auto it = lo; it != out.entries.end() && it->first.first == b; ++it) {
        residual -= sin_kernel(k, it->first.second, order).scale(it->second / k);
      }
    }
    GenusDecomposition dec = decompose_in_genus_basis(residual);
    out.genus_windows[a] = dec.genus_window;
    for (const auto& [g, c] : dec.coefficients) {
      if (options.strict && !is_integer(c))
        throw StrictIntegrality("BPS " + a.to_string() + " g=" + std::to_string(g) + " = " + c.get_str() +
                                " is not an integer");
      out.entries.emplace(ClassGenus{a, g}, c);
    }
  }
  out.refresh_diagnostics();
  return out;
}

}  // namespace gvt
