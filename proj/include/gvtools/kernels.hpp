// The multiple-cover kernels (2 sin(kt/2))^{2g-2} and the triangular
// decomposition in the genus basis {(2 sin(t/2))^{2g-2}}.
#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include "gvtools/tpoly.hpp"

namespace gvt {

/// Thread-safe memo of kernels keyed by (k, g, order).
class KernelCache {
 public:
  /// (2 sin(kt/2))^{2g-2} valid to `order`. Throws ValidityExhausted if order < 2g-2.
  TPoly get(long k, int g, int order);

  std::size_t size() const;
  void clear();

  /// Process-wide instance used by the free functions.
  static KernelCache& global();

 private:
  mutable std::mutex mutex_;
  std::map<std::tuple<long, int, int>, TPoly> memo_;
};

/// Uncached evaluation. g = 0 is obtained by inverting the g = 2 kernel.
TPoly compute_sin_kernel(long k, int g, int order);

/// Cached through KernelCache::global().
TPoly sin_kernel(long k, int g, int order);

struct GenusDecomposition {
  std::map<int, Rational> coefficients;  ///< g -> c_g, nonzero entries only
  TPoly residual;                         ///< zero through the input's valid_to
  int genus_window = -1;                  ///< highest genus determined
};

/// Writes p = Σ_g c_g (2 sin(t/2))^{2g-2} by peeling from t^{-2} upward for
/// every g with 2g-2 <= p.valid_to(). Requires p.min_exp() >= -2.
GenusDecomposition decompose_in_genus_basis(const TPoly& p);

}  // namespace gvt
