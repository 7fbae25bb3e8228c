// The Gromov-Witten <-> BPS transform with multiple-cover inversion.
#pragma once

#include "gvtools/qseries.hpp"
#include "gvtools/table.hpp"

namespace gvt {

struct InversionOptions {
  /// Promote a non-integral recovered entry to StrictIntegrality.
  bool strict = false;
};

/// Σ_{A,g} BPS_{A,g} Σ_{k>=1, M(kA)<=cap} (1/k) (2 sin(kt/2))^{2g-2} q^{kA},
/// truncated at the table's mass cap and t_order.
QSeries gw_from_bps(const BPSTable& table);

/// Inverts gw_from_bps: walks the classes by increasing mass, removes the
/// k >= 2 covers of already-recovered classes, and decomposes the residual in
/// the genus basis. Every class coefficient must start at t^-2 or later.
BPSTable bps_from_gw(const QSeries& series, const InversionOptions& options = {});

}  // namespace gvt
