// Sparse (class, genus) -> rational tables with window and integrality diagnostics.
#pragma once

#include <map>
#include <optional>
#include <utility>

#include "gvtools/lattice.hpp"
#include "gvtools/rational.hpp"

namespace gvt {

using ClassGenus = std::pair<LatticeClass, int>;

/// Entries of an invariant table. Absent keys inside a class's genus window
/// are zero; keys beyond the window are unknown.
struct InvariantTable {
  LatticeConfig config;
  std::map<ClassGenus, Rational> entries;  ///< nonzero values only
  /// Highest certified genus per class; classes not listed use config.genus_window().
  std::map<LatticeClass, int> genus_windows;
  bool integrality_ok = true;
  /// Smallest g0 such that every recovered entry with g >= g0 vanishes.
  std::map<LatticeClass, int> observed_genus_cutoffs;

  int window(const LatticeClass& a) const;
  /// The value at (A, g), or nullopt when g lies outside A's window.
  std::optional<Rational> get(const LatticeClass& a, int g) const;
  /// Sets a value; zero erases. Throws ConfigError above the mass cap.
  void set(const LatticeClass& a, int g, const Rational& value);

  /// Recomputes integrality_ok and the cutoffs of every class with entries or a window.
  void refresh_diagnostics();

  /// Same config and entries; diagnostics are derived data and not compared.
  bool same_values(const InvariantTable& other) const {
    return config == other.config && entries == other.entries;
  }
};

/// BPS_{A,g}.
struct BPSTable : InvariantTable {};

/// Structure coefficients e_{A,g}.
struct ETable : InvariantTable {};

}  // namespace gvt
