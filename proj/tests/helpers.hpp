#pragma once

#include <map>
#include <random>
#include <utility>

#include "gvtools/tpoly.hpp"

namespace testing {

using gvt::Rational;
using gvt::TPoly;

inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

/// TPoly from (exponent, coefficient) pairs, trusted to `valid_to`.
inline TPoly tp(std::initializer_list<std::pair<const int, Rational>> terms, int valid_to = TPoly::kExact,
                int min_exp = -1000) {
  std::map<int, Rational> m(terms);
  int lo = m.empty() ? valid_to : m.begin()->first;
  if (min_exp != -1000) lo = min_exp;
  return TPoly(std::move(m), lo, valid_to);
}

/// Random TPoly with small rational coefficients on even exponents in [lo, valid].
inline TPoly random_tpoly(std::mt19937_64& rng, int lo, int valid) {
  std::map<int, Rational> m;
  for (int e = lo; e <= valid; e += 2) {
    if (rng() % 3 == 0) continue;
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 4) + 1;
    m.emplace(e, q(num, den));
  }
  return TPoly(std::move(m), lo, valid);
}

}  // namespace testing
