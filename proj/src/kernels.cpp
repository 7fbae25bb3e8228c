#include "gvtools/kernels.hpp"

#include <algorithm>

#include "gvtools/errors.hpp"

namespace gvt {

namespace {

// (2 sin(kt/2))^2 = 2 - 2 cos(kt) = Σ_{j>=1} 2 (-1)^{j+1} (kt)^{2j} / (2j)!, to t^order.
TPoly squared_sine(long k, int order) {
  std::map<int, Rational> out;
  Integer fact = 1;
  Integer kpow = 1;
  const Integer kk = Integer(k) * k;
  for (int j = 1; 2 * j <= order; ++j) {
    fact *= (2 * j - 1) * (2 * j);
    kpow *= kk;
    Rational c(2 * kpow, fact);
    c.canonicalize();
    if (j % 2 == 0) c = -c;
    out.emplace(2 * j, c);
  }
  return TPoly(std::move(out), 2, std::max(order, 2));
}

}  // namespace

TPoly compute_sin_kernel(long k, int g, int order) {
  if (k < 1) throw ConfigError("kernel multiplicity must be positive");
  if (g < 0) throw ConfigError("genus must be non-negative");
  if (order % 2 != 0) throw ConfigError("kernel order must be even");
  if (order < 2 * g - 2)
    throw ValidityExhausted("kernel genus " + std::to_string(g) + " needs order >= " + std::to_string(2 * g - 2) +
                            ", got " + std::to_string(order));
  if (g == 1) return TPoly::constant(1).truncate(order);
  if (g == 0) {
    // Inverting a series with leading t^2 loses 4 orders of validity.
    return invert_unit(compute_sin_kernel(k, 2, order + 4)).truncate(order);
  }
  // X^{g-1} with X = squared_sine: valid_to(X^n) = valid_to(X) + 2(n-1).
  const int n = g - 1;
  const TPoly base = squared_sine(k, order - 2 * (n - 1));
  TPoly out = base;
  for (int i = 1; i < n; ++i) out = out * base;
  return out.truncate(order);
}

TPoly KernelCache::get(long k, int g, int order) {
  auto key = std::make_tuple(k, g, order);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  TPoly value = compute_sin_kernel(k, g, order);
  std::lock_guard lock(mutex_);
  return memo_.emplace(key, std::move(value)).first->second;
}

std::size_t KernelCache::size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

void KernelCache::clear() {
  std::lock_guard lock(mutex_);
  memo_.clear();
}

KernelCache& KernelCache::global() {
  static KernelCache cache;
  return cache;
}

TPoly sin_kernel(long k, int g, int order) { return KernelCache::global().get(k, g, order); }

GenusDecomposition decompose_in_genus_basis(const TPoly& p) {
  if (p.valid_to() < -2)
    throw ValidityExhausted("series valid only to t^" + std::to_string(p.valid_to()) + ", nothing to decompose");
  if (p.min_exp() < -2)
    throw ConfigError("series has terms below t^-2 (t^" + std::to_string(p.min_exp()) + ")");
  GenusDecomposition out;
  if (p.is_exact()) throw ValidityExhausted("decomposition of an exact series needs a finite window");
  const int order = p.valid_to();
  TPoly residual = p;
  int g = 0;
  for (; 2 * g - 2 <= order; ++g) {
    Rational c = residual.coeff(2 * g - 2);
    if (c == 0) continue;
    out.coefficients.emplace(g, c);
    residual -= sin_kernel(1, g, order).scale(c);
  }
  out.genus_window = g - 1;
  out.residual = residual;
  return out;
}

}  // namespace gvt
