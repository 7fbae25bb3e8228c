#include "gvtools/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gvtools/errors.hpp"

namespace gvt {

void LatticeConfig::validate() const {
  if (rank < 1) throw ConfigError("rank must be at least 1");
  if (static_cast<int>(mass_vector.size()) != rank)
    throw ConfigError("mass vector has " + std::to_string(mass_vector.size()) +
                      " entries, rank is " + std::to_string(rank));
  for (const auto& m : mass_vector) {
    if (m <= 0) throw ConfigError("basis masses must be positive");
  }
  if (mass_cap <= 0) throw ConfigError("mass cap must be positive");
  if (t_order < -2 || t_order % 2 != 0)
    throw ConfigError("t-order must be even and at least -2, got " + std::to_string(t_order));
}

LatticeConfig LatticeConfig::rank_one(int d_max, int t_order) {
  LatticeConfig c;
  c.rank = 1;
  c.mass_vector = {Rational(1)};
  c.mass_cap = Rational(d_max);
  c.t_order = t_order;
  return c;
}

LatticeClass::LatticeClass(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ConfigError("lattice class needs at least one coordinate");
  bool nonzero = false;
  for (auto c : coords_) {
    if (c < 0) throw ConfigError("lattice class coordinates must be non-negative");
    nonzero |= c != 0;
  }
  if (!nonzero) throw ConfigError("lattice class must be nonzero");
}

std::int64_t LatticeClass::content() const {
  std::int64_t g = 0;
  for (auto c : coords_) g = std::gcd(g, c);
  return g;
}

LatticeClass LatticeClass::scaled(std::int64_t k) const {
  auto out = coords_;
  for (auto& c : out) c *= k;
  return LatticeClass(std::move(out));
}

LatticeClass LatticeClass::divided(std::int64_t k) const {
  auto out = coords_;
  for (auto& c : out) {
    if (c % k != 0) throw ConfigError("class " + to_string() + " is not divisible by " + std::to_string(k));
    c /= k;
  }
  return LatticeClass(std::move(out));
}

std::string LatticeClass::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

Rational mass(const LatticeConfig& config, const LatticeClass& a) {
  if (a.rank() != config.rank)
    throw ConfigError("class " + a.to_string() + " has rank " + std::to_string(a.rank()) +
                      ", lattice rank is " + std::to_string(config.rank));
  Rational m = 0;
  for (int i = 0; i < a.rank(); ++i) m += Rational(Integer(static_cast<long>(a[i]))) * config.mass_vector[i];
  return m;
}

bool mass_order_less(const LatticeConfig& config, const LatticeClass& a, const LatticeClass& b) {
  int c = cmp(mass(config, a), mass(config, b));
  if (c != 0) return c < 0;
  return a < b;
}

std::vector<LatticeClass> enumerate_classes(const LatticeConfig& config, std::size_t budget) {
  config.validate();
  // Product of per-axis ranges bounds the number of candidate tuples.
  double bound = 1.0;
  for (const auto& m : config.mass_vector) {
    Rational steps = config.mass_cap / m;
    bound *= std::floor(steps.get_d()) + 1.0;
  }
  if (bound - 1.0 > static_cast<double>(budget))
    throw ResourceError("class enumeration bound " + std::to_string(static_cast<std::size_t>(bound)) +
                            " exceeds budget " + std::to_string(budget),
                        static_cast<std::size_t>(bound));

  std::vector<std::pair<Rational, LatticeClass>> found;
  std::vector<std::int64_t> coords(config.rank, 0);
  auto recurse = [&](auto&& self, int axis, const Rational& used) -> void {
    if (axis == config.rank) {
      if (used > 0) found.emplace_back(used, LatticeClass(coords));
      return;
    }
    Rational m = used;
    for (std::int64_t c = 0; m <= config.mass_cap; ++c, m += config.mass_vector[axis]) {
      coords[axis] = c;
      self(self, axis + 1, m);
    }
    coords[axis] = 0;
  };
  recurse(recurse, 0, Rational(0));

  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    int c = cmp(x.first, y.first);
    return c != 0 ? c < 0 : x.second < y.second;
  });
  std::vector<LatticeClass> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::vector<std::pair<std::int64_t, LatticeClass>> divisors(const LatticeClass& a) {
  std::int64_t g = a.content();
  std::vector<std::pair<std::int64_t, LatticeClass>> out;
  for (std::int64_t k = 1; k <= g; ++k) {
    if (g % k == 0) out.emplace_back(k, a.divided(k));
  }
  return out;
}

}  // namespace gvt
