#include "gvtools/localcurves.hpp"

#include <algorithm>

#include "gvtools/errors.hpp"
#include "gvtools/kernels.hpp"

namespace gvt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw ConfigError("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw ConfigError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++out[j];
  }
  return Partition(std::move(out));
}

std::vector<Partition> partitions(int d) {
  if (d < 1) throw ConfigError("partitions: d must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int largest) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, largest); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

std::vector<int> hook_lengths(const Partition& mu) {
  const auto& rows = mu.parts();
  const auto cols = mu.conjugate().parts();
  std::vector<int> out;
  out.reserve(mu.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      int arm = rows[i] - j - 1;
      int leg = cols[j] - static_cast<int>(i) - 1;
      out.push_back(arm + leg + 1);
    }
  }
  return out;
}

int g_series_budget(int h, int d_max, int t_order) {
  // Each of up to d_max kernels (2 sin)^{-2} costs two orders in a product.
  return h == 0 ? t_order + 2 * d_max : t_order;
}

QSeries g_series(int h, int d_max, int t_order) {
  if (h < 0) throw ConfigError("genus h must be non-negative");
  if (d_max < 1) throw ConfigError("d_max must be positive");
  const int budget = g_series_budget(h, d_max, t_order);
  QSeries x(LatticeConfig::rank_one(d_max, budget));
  for (int d = 1; d <= d_max; ++d) {
    TPoly sum;
    for (const auto& mu : partitions(d)) {
      TPoly prod = TPoly::constant(1);
      for (int hook : hook_lengths(mu)) prod = prod * sin_kernel(hook, h, budget);
      sum += prod;
    }
    x.set(LatticeClass{d}, sum);
  }
  QSeries g = log1p(x);
  for (const auto& [a, p] : g.terms()) {
    if (p.valid_to() < t_order)
      throw ValidityExhausted("G_" + std::to_string(h) + " at degree " + a.to_string() + " trusted only to t^" +
                              std::to_string(p.valid_to()) + "; internal budget " + std::to_string(budget) +
                              " is insufficient for window " + std::to_string(t_order));
  }
  return g.truncate_t(t_order);
}

QSeries GSeriesCache::get(int h, int d_max, int t_order) {
  auto key = std::make_tuple(h, d_max, t_order);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  QSeries value = g_series(h, d_max, t_order);
  std::lock_guard lock(mutex_);
  return memo_.emplace(key, std::move(value)).first->second;
}

GSeriesCache& GSeriesCache::global() {
  static GSeriesCache cache;
  return cache;
}

LocalBPS local_bps(int h, int d_max, int t_order, const InversionOptions& options) {
  LocalBPS out;
  out.h = h;
  out.table = bps_from_gw(GSeriesCache::global().get(h, d_max, t_order), options);
  return out;
}

}  // namespace gvt
