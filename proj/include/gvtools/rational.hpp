// Exact rational scalars (GMP) and their canonical text form.
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gvt {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical form: reduced "p/q" with q > 0; integers print as "p/1".
std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with an optional sign on p. Returns false on malformed input or q == 0.
bool parse_rational(std::string_view text, Rational& out);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace gvt
