// Effective classes in N^r \ {0}, their mass grading, and mass-capped enumeration.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gvtools/rational.hpp"

namespace gvt {

/// Rank, basis masses, mass cap and the retained t-window of a computation.
struct LatticeConfig {
  int rank = 1;
  std::vector<Rational> mass_vector{Rational(1)};
  Rational mass_cap{1};
  int t_order = 0;

  /// Throws ConfigError unless rank >= 1, masses > 0, cap > 0, t_order >= -2 and even.
  void validate() const;

  /// Largest genus whose leading power t^{2g-2} lies in the window.
  int genus_window() const { return (t_order + 2) / 2; }

  /// Rank-1 lattice with unit mass and cap `d_max`.
  static LatticeConfig rank_one(int d_max, int t_order);

  friend bool operator==(const LatticeConfig&, const LatticeConfig&) = default;
};

/// A nonzero class with non-negative coordinates. Ordered lexicographically.
class LatticeClass {
 public:
  LatticeClass() = default;
  explicit LatticeClass(std::vector<std::int64_t> coords);
  LatticeClass(std::initializer_list<std::int64_t> coords)
      : LatticeClass(std::vector<std::int64_t>(coords)) {}

  std::span<const std::int64_t> coords() const { return coords_; }
  int rank() const { return static_cast<int>(coords_.size()); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }

  /// gcd of the coordinates.
  std::int64_t content() const;
  LatticeClass scaled(std::int64_t k) const;
  LatticeClass divided(std::int64_t k) const;

  std::string to_string() const;

  friend auto operator<=>(const LatticeClass&, const LatticeClass&) = default;
  friend bool operator==(const LatticeClass&, const LatticeClass&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// Σ coords_i · mass_i. Throws ConfigError on rank mismatch.
Rational mass(const LatticeConfig& config, const LatticeClass& a);

/// True when `a` precedes `b` in the (mass, lex) total order.
bool mass_order_less(const LatticeConfig& config, const LatticeClass& a, const LatticeClass& b);

/// Default budget for enumerate_classes.
inline constexpr std::size_t kDefaultClassBudget = 5'000'000;

/// Every class with 0 < M(A) <= cap, sorted by (mass, lex).
std::vector<LatticeClass> enumerate_classes(const LatticeConfig& config,
                                            std::size_t budget = kDefaultClassBudget);

/// All (k, B) with k·B = A, k ascending; k runs over the divisors of gcd(A).
std::vector<std::pair<std::int64_t, LatticeClass>> divisors(const LatticeClass& a);

}  // namespace gvt
