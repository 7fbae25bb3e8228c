#include "gvtools/table.hpp"

#include <algorithm>

#include "gvtools/errors.hpp"

namespace gvt {

int InvariantTable::window(const LatticeClass& a) const {
  auto it = genus_windows.find(a);
  return it == genus_windows.end() ? config.genus_window() : it->second;
}

std::optional<Rational> InvariantTable::get(const LatticeClass& a, int g) const {
  if (g < 0 || g > window(a)) return std::nullopt;
  auto it = entries.find({a, g});
  return it == entries.end() ? Rational(0) : it->second;
}

void InvariantTable::set(const LatticeClass& a, int g, const Rational& value) {
  if (g < 0) throw ConfigError("genus must be non-negative");
  if (mass(config, a) > config.mass_cap) throw ConfigError("class " + a.to_string() + " exceeds the mass cap");
  if (value == 0)
    entries.erase({a, g});
  else
    entries.insert_or_assign({a, g}, value);
}

void InvariantTable::refresh_diagnostics() {
  integrality_ok = true;
  observed_genus_cutoffs.clear();
  for (const auto& [a, w] : genus_windows) observed_genus_cutoffs[a] = 0;
  for (const auto& [key, value] : entries) {
    integrality_ok = integrality_ok && is_integer(value);
    int& cut = observed_genus_cutoffs[key.first];
    cut = std::max(cut, key.second + 1);
  }
}

}  // namespace gvt
