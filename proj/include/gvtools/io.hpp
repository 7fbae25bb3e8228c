// Line-oriented text format for series and tables, and seeded generators.
//
//   gv-table v1
//   kind gw|bps|e|fano          (optional; inferred from the rows otherwise)
//   rank R
//   mass m1 ... mR
//   masscap M
//   tmin E
//   tmax E
//   GW (a1,...,aR) [valid=E] : e1 c1 ; e2 c2 ; ...
//   BPS (a1,...,aR) g=G : c
//   E (a1,...,aR) g=G : c
//   FANO c1=N g=G : c
//
// '#' starts a comment. Rationals are "p/q" (canonical, reduced, q > 0) or
// plain integers on input. A GW row for the all-zero class holds the q^0 term.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "gvtools/errors.hpp"
#include "gvtools/fano.hpp"
#include "gvtools/qseries.hpp"
#include "gvtools/table.hpp"

namespace gvt {

using GVFile = std::variant<QSeries, BPSTable, ETable, FanoSeries>;

/// Throws ParseError (with 1-based line and column) or DimensionMismatch.
GVFile parse(std::string_view text);

/// Parses and requires a specific kind.
template <typename T>
T parse_as(std::string_view text) {
  GVFile f = parse(text);
  if (auto* v = std::get_if<T>(&f)) return std::move(*v);
  throw ParseError("file holds a different kind of table", 1, 1);
}

/// Canonical text: classes in (mass, lex) order, exponents and genera ascending.
std::string print(const GVFile& value);

/// Random rank 1 or 2 config with cap <= max_cap and masses from {1/2, 1, 3/2, 2}.
LatticeConfig gen_config(std::uint64_t seed, int max_cap, int t_order);

/// Integer table: each (A, g <= genus_max) is nonzero with probability `density`,
/// values in [-5, 5] \ {0}. Identical seeds give identical tables.
BPSTable gen_bps_table(std::uint64_t seed, const LatticeConfig& config, double density, int genus_max);
ETable gen_e_table(std::uint64_t seed, const LatticeConfig& config, double density, int genus_max);

/// Random GW-type series with rational coefficients and occasional reduced validity.
QSeries gen_gw_series(std::uint64_t seed, const LatticeConfig& config, double density);

/// Random integer BPS vector for the Fano transform, genera 0..genus_max.
std::map<int, Rational> gen_fano_bps(std::uint64_t seed, int genus_max);

}  // namespace gvt
