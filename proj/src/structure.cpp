#include "gvtools/structure.hpp"

#include <algorithm>

#include "gvtools/errors.hpp"
#include "gvtools/kernels.hpp"

namespace gvt {

namespace {

// Highest degree any class can reach under the cap.
int degree_reach(const LatticeConfig& config) {
  Rational lightest = *std::min_element(config.mass_vector.begin(), config.mass_vector.end());
  Rational q = config.mass_cap / lightest;
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return std::max(1, static_cast<int>(f.get_si()));
}

QSeries basis_element(GSeriesCache& cache, int g, const LatticeClass& a, const LatticeConfig& config) {
  return pushforward(cache.get(g, degree_reach(config), config.t_order), a, config);
}

}  // namespace

QSeries series_from_e(const ETable& e, GSeriesCache& cache) {
  const LatticeConfig& config = e.config;
  config.validate();
  QSeries out(config, /*absent_exact=*/false);
  for (const auto& [key, value] : e.entries) {
    const auto& [a, g] = key;
    if (2 * g - 2 > config.t_order)
      throw ValidityExhausted("e entry " + a.to_string() + " g=" + std::to_string(g) + " lies outside the t-window");
    out += basis_element(cache, g, a, config).scale(value);
  }
  return out;
}

ETable extract_e(const QSeries& s, GSeriesCache& cache) {
  const LatticeConfig& config = s.config();
  ETable out;
  out.config = config;
  QSeries residual = s;
  for (const auto& a : enumerate_classes(config)) {
    TPoly r = residual.coeff(a).truncate(config.t_order);
    if (r.min_exp() < -2) throw ConfigError("class " + a.to_string() + " has a term below t^-2");
    // G_g(q^A) restricted to q^A is (2 sin(t/2))^{2g-2}, so this is the peel at A.
    GenusDecomposition dec = decompose_in_genus_basis(r);
    out.genus_windows[a] = dec.genus_window;
    for (const auto& [g, c] : dec.coefficients) {
      out.entries.emplace(ClassGenus{a, g}, c);
      residual -= basis_element(cache, g, a, config).scale(c);
    }
  }
  out.refresh_diagnostics();
  return out;
}

SuperRigidSplit superrigid_decompose(const QSeries& s, int base_genus, GSeriesCache& cache) {
  if (s.config().rank != 1) throw ConfigError("superrigid_decompose expects a rank-1 series");
  if (base_genus < 0) throw ConfigError("genus must be non-negative");
  ETable e = extract_e(s, cache);
  const LatticeClass unit{1};
  if (e.window(unit) < base_genus)
    throw ValidityExhausted("genus " + std::to_string(base_genus) + " lies outside the t-window");

  SuperRigidSplit out;
  out.tail.config = e.config;
  bool found = false;
  for (const auto& [key, value] : e.entries) {
    const auto& [a, h] = key;
    if (a == unit) {
      if (h != base_genus || (value != 1 && value != -1))
        throw NotSuperRigidShape("degree-1 layer has e_{1," + std::to_string(h) + "} = " + value.get_str() +
                                 ", expected only ±1 at genus " + std::to_string(base_genus));
      out.sign = value > 0 ? 1 : -1;
      found = true;
      continue;
    }
    if (h < base_genus)
      throw NotSuperRigidShape("tail entry at degree " + a.to_string() + " has genus " + std::to_string(h) +
                               " below the base genus " + std::to_string(base_genus));
    out.tail.entries.emplace(key, value);
  }
  if (!found) throw NotSuperRigidShape("degree-1 layer is zero, expected ±G_" + std::to_string(base_genus));
  for (const auto& [a, w] : e.genus_windows) {
    if (!(a == unit)) out.tail.genus_windows.emplace(a, w);
  }
  out.tail.refresh_diagnostics();
  return out;
}

}  // namespace gvt
