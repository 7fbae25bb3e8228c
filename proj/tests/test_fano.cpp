#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gvtools/errors.hpp"
#include "gvtools/fano.hpp"
#include "gvtools/io.hpp"
#include "gvtools/kernels.hpp"
#include "helpers.hpp"

using namespace gvt;
using testing::q;

TEST_CASE("c1 = 1: a lone t^0 term is BPS_0") {
  FanoSeries f{1, {{1, Rational(7)}}, 4};
  CHECK(fano_bps_from_gw(f) == std::map<int, Rational>{{0, 7}});
}

TEST_CASE("zero in, zero out") {
  CHECK(fano_bps_from_gw(FanoSeries{2, {}, 5}).empty());
  CHECK(fano_gw_from_bps(2, {}, 8).gw_coeffs.empty());
}

TEST_CASE("single kernel forward") {
  // b_0 = 1 with c1 = 1 is the constant kernel.
  FanoSeries f = fano_gw_from_bps(1, {{0, Rational(1)}}, 6);
  CHECK(f.gw_coeffs == std::map<int, Rational>{{1, 1}});
  CHECK(f.window == 4);
  // b_0 = 1 with c1 = 2: (2 sin(t/2))^2 = t^2 - t^4/12 + t^6/360 - ...
  FanoSeries f2 = fano_gw_from_bps(2, {{0, Rational(1)}}, 6);
  CHECK(f2.gw_coeffs == std::map<int, Rational>{{2, 1}, {3, q(-1, 12)}, {4, q(1, 360)}});
}

TEST_CASE("round trips both ways (property)") {
  for (int c1 = 1; c1 <= 3; ++c1) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      auto b = gen_fano_bps(seed * 7 + c1, 8);
      const int order = 2 * (8 + c1) - 2;
      FanoSeries f = fano_gw_from_bps(c1, b, order);
      CHECK(fano_bps_from_gw(f) == b);
      CHECK(fano_gw_from_bps(c1, fano_bps_from_gw(f), order) == f);
    }
  }
}

TEST_CASE("c1 = 0 peel is the genus-basis decomposition") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    TPoly p = testing::random_tpoly(rng, -2, 2 * static_cast<int>(rng() % 8));
    CHECK(shifted_genus_peel(0, p) == decompose_in_genus_basis(p).coefficients);
  }
}

TEST_CASE("terms no shifted kernel can produce are rejected") {
  FanoSeries f{2, {{0, Rational(1)}}, 5};  // t^-2 with c1 = 2
  CHECK_THROWS_AS(fano_bps_from_gw(f), ConfigError);
  FanoSeries g{1, {{0, Rational(1)}}, 5};  // t^-2 with c1 = 1
  CHECK_THROWS_AS(fano_bps_from_gw(g), ConfigError);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(fano_bps_from_gw(FanoSeries{0, {}, 3}), ConfigError);
  CHECK_THROWS_AS(fano_bps_from_gw(FanoSeries{1, {{9, Rational(1)}}, 3}), ConfigError);
  CHECK_THROWS_AS(fano_gw_from_bps(1, {{5, Rational(1)}}, 6), ValidityExhausted);
}
