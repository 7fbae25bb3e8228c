// Local-curve series G_h(q,t) built from partitions and hook lengths.
#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "gvtools/gv.hpp"
#include "gvtools/qseries.hpp"

namespace gvt {

/// A weakly decreasing tuple of positive parts.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  Partition conjugate() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of d in reverse-lexicographic order: (d), (d-1,1), ..., (1,...,1).
std::vector<Partition> partitions(int d);

/// Arm + leg + 1 for every box, row by row.
std::vector<int> hook_lengths(const Partition& mu);

/// Internal kernel order needed so that G_h is trusted to `t_order` through degree d_max.
int g_series_budget(int h, int d_max, int t_order);

/// G_h = log(1 + Σ_{d<=d_max} Σ_{μ ⊢ d} Π_{boxes} (2 sin(hook·t/2))^{2h-2} q^d)
/// on the rank-1 unit-mass lattice with cap d_max, trusted to t_order.
QSeries g_series(int h, int d_max, int t_order);

/// Thread-safe memo of g_series keyed by (h, d_max, t_order).
class GSeriesCache {
 public:
  QSeries get(int h, int d_max, int t_order);
  static GSeriesCache& global();

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, QSeries> memo_;
};

struct LocalBPS {
  int h = 0;
  BPSTable table;  ///< rank 1; class (d) holds BPS_{d,g}(h)

  std::optional<Rational> get(int d, int g) const { return table.get(LatticeClass{d}, g); }
};

/// BPS_{d,g}(h): the GV inversion of G_h.
LocalBPS local_bps(int h, int d_max, int t_order, const InversionOptions& options = {});

}  // namespace gvt
