#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gvtools/errors.hpp"
#include "gvtools/gv.hpp"
#include "gvtools/io.hpp"
#include "gvtools/kernels.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gvt;
using testing::q;
using testing::tp;

namespace {

BPSTable table(const LatticeConfig& c, std::initializer_list<std::pair<ClassGenus, Rational>> rows) {
  BPSTable t;
  t.config = c;
  for (const auto& [k, v] : rows) t.set(k.first, k.second, v);
  t.refresh_diagnostics();
  return t;
}

std::map<ClassGenus, Rational> sum(const InvariantTable& a, const InvariantTable& b) {
  auto out = a.entries;
  for (const auto& [k, v] : b.entries) {
    out[k] += v;
    if (out[k] == 0) out.erase(k);
  }
  return out;
}

}  // namespace

TEST_CASE("gw_from_bps: genus-0 class with its double cover") {
  auto c = LatticeConfig::rank_one(2, 2);
  QSeries s = gw_from_bps(table(c, {{{LatticeClass{1}, 0}, 1}}));
  CHECK(s.coeff({1}) == tp({{-2, q(1)}, {0, q(1, 12)}, {2, q(1, 240)}}, 2));
  CHECK(s.coeff({2}) == tp({{-2, q(1, 8)}, {0, q(1, 24)}, {2, q(1, 120)}}, 2));
  // Oracle: (1/k)(2 sin(kt/2))^{-2} from the Bernoulli expansion.
  for (long k = 1; k <= 2; ++k) {
    auto ref = oracle::inverse_square_kernel(k, 2);
    for (auto& [e, v] : ref) CHECK(s.coeff(LatticeClass{k}).coeff(e) == v / k);
  }
}

TEST_CASE("gw_from_bps: empty table and genus-one covers") {
  auto c = LatticeConfig::rank_one(3, 4);
  CHECK(gw_from_bps(table(c, {})).terms().empty());
  QSeries s = gw_from_bps(table(c, {{{LatticeClass{1}, 1}, 1}}));
  for (long k = 1; k <= 3; ++k) CHECK(s.coeff(LatticeClass{k}) == TPoly::constant(q(1, k)).truncate(4));
}

TEST_CASE("gw_from_bps rejects entries outside the t-window") {
  auto c = LatticeConfig::rank_one(2, 2);
  CHECK_THROWS_AS(gw_from_bps(table(c, {{{LatticeClass{1}, 3}, 1}})), ValidityExhausted);
}

TEST_CASE("bps_from_gw: zero input, half-integral input, strict mode") {
  auto c = LatticeConfig::rank_one(3, 6);
  BPSTable z = bps_from_gw(QSeries(c));
  CHECK(z.entries.empty());
  CHECK(z.integrality_ok);
  CHECK(z.get({2}, 4) == Rational(0));
  CHECK_FALSE(z.get({2}, 5).has_value());

  auto c1 = LatticeConfig::rank_one(1, 4);
  QSeries s(c1);
  s.set({1}, TPoly::monomial(-2, q(1, 2)));
  BPSTable t = bps_from_gw(s);
  CHECK(t.get({1}, 0) == q(1, 2));
  CHECK_FALSE(t.integrality_ok);
  CHECK_THROWS_AS(bps_from_gw(s, {.strict = true}), StrictIntegrality);
}

TEST_CASE("bps_from_gw rejects terms below t^-2") {
  auto c = LatticeConfig::rank_one(1, 4);
  QSeries s(c);
  s.set({1}, TPoly::monomial(-4, 1));
  CHECK_THROWS_AS(bps_from_gw(s), ConfigError);
}

TEST_CASE("round trips in both directions (property)") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    LatticeConfig c = gen_config(seed, 6, 10);
    BPSTable t = gen_bps_table(seed, c, 0.4, 6);
    QSeries s = gw_from_bps(t);
    BPSTable back = bps_from_gw(s);
    CHECK(back.same_values(t));
    CHECK(back.integrality_ok);
    CHECK(gw_from_bps(back) == s);
  }
}

TEST_CASE("bps_from_gw then gw_from_bps on arbitrary rational series (property)") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    LatticeConfig c = gen_config(seed + 100, 5, 6);
    QSeries s = gen_gw_series(seed, c, 0.7).truncate_t(c.t_order);
    // Only full-validity coefficients can be reproduced by a table.
    QSeries full(c, false);
    for (const auto& [a, p] : s.terms())
      if (p.valid_to() == c.t_order) full.set(a, p);
    CHECK(gw_from_bps(bps_from_gw(full)) == full);
  }
}

TEST_CASE("triangularity: higher data does not move lower entries") {
  LatticeConfig c = gen_config(7, 6, 8);
  QSeries s = gen_gw_series(7, c, 1.0);
  QSeries full(c, false);
  for (const auto& [a, p] : s.terms()) full.set(a, p.valid_to() == c.t_order ? p : TPoly::zero(c.t_order));
  BPSTable base = bps_from_gw(full);
  auto classes = enumerate_classes(c);
  REQUIRE(classes.size() >= 2);
  const LatticeClass& a = classes[classes.size() / 2];
  const int g = 2;

  // Raise a coefficient of t^{2g} at A: entries (A, h <= g) are unchanged.
  QSeries bumped = full;
  bumped.add_to(a, TPoly::monomial(2 * g, 7).truncate(c.t_order));
  BPSTable t1 = bps_from_gw(bumped);
  for (int h = 0; h <= g; ++h) CHECK(t1.get(a, h) == base.get(a, h));

  // Change every class of larger mass: nothing at A moves.
  QSeries heavier = full;
  for (const auto& b : classes)
    if (mass(c, b) > mass(c, a)) heavier.add_to(b, TPoly::monomial(-2, 3).truncate(c.t_order));
  BPSTable t2 = bps_from_gw(heavier);
  for (int h = 0; h <= c.genus_window(); ++h) CHECK(t2.get(a, h) == base.get(a, h));
}

TEST_CASE("linearity") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    LatticeConfig c = gen_config(seed, 5, 8);
    BPSTable t1 = gen_bps_table(seed, c, 0.3, 4);
    BPSTable t2 = gen_bps_table(seed + 50, c, 0.3, 4);
    QSeries s1 = gw_from_bps(t1), s2 = gw_from_bps(t2);
    CHECK(bps_from_gw(s1 + s2).entries == sum(t1, t2));
    BPSTable doubled = t1;
    for (auto& [k, v] : doubled.entries) v *= 2;
    CHECK(gw_from_bps(doubled) == s1.scale(2));
  }
}
