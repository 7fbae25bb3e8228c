// Basis change between GW-type series and the local-curve basis {G_g(q^A, t)}.
#pragma once

#include "gvtools/localcurves.hpp"
#include "gvtools/qseries.hpp"
#include "gvtools/table.hpp"

namespace gvt {

/// Σ_{A,g} e_{A,g} · G_g(q^A, t), truncated at the table's mass cap and t_order.
QSeries series_from_e(const ETable& e, GSeriesCache& cache = GSeriesCache::global());

/// The unique e_{A,g} with s = Σ e_{A,g} G_g(q^A, t) inside the window.
/// Classes are peeled by increasing mass and genera ascending; each pivot is 1.
ETable extract_e(const QSeries& s, GSeriesCache& cache = GSeriesCache::global());

struct SuperRigidSplit {
  int sign = 1;
  ETable tail;  ///< the d >= 2 part
};

/// Splits a rank-1 series of the shape ±G_g(q) + Σ_{d>=2, h>=g} e_{d,h} G_h(q^d).
/// Throws NotSuperRigidShape when the degree-1 layer is not ±G_g or a tail
/// entry has h < g.
SuperRigidSplit superrigid_decompose(const QSeries& s, int base_genus,
                                     GSeriesCache& cache = GSeriesCache::global());

}  // namespace gvt
