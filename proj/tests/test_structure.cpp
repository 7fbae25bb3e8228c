#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gvtools/errors.hpp"
#include "gvtools/gv.hpp"
#include "gvtools/io.hpp"
#include "gvtools/structure.hpp"
#include "helpers.hpp"

using namespace gvt;
using testing::q;

namespace {

ETable etable(const LatticeConfig& c, std::initializer_list<std::pair<ClassGenus, Rational>> rows) {
  ETable t;
  t.config = c;
  for (const auto& [k, v] : rows) t.set(k.first, k.second, v);
  t.refresh_diagnostics();
  return t;
}

}  // namespace

TEST_CASE("series_from_e: single basis element, zero, linear combination") {
  auto c = LatticeConfig::rank_one(4, 6);
  QSeries g0 = g_series(0, 4, 6);
  QSeries s = series_from_e(etable(c, {{{LatticeClass{1}, 0}, 1}}));
  for (int d = 1; d <= 4; ++d) CHECK(s.coeff(LatticeClass{d}).agrees_with(g0.coeff(LatticeClass{d}), 6));

  CHECK(series_from_e(etable(c, {})).terms().empty());

  // Oracle: direct summation 2·G_1(q) - G_0(q^2).
  QSeries mixed = series_from_e(etable(c, {{{LatticeClass{1}, 1}, 2}, {{LatticeClass{2}, 0}, -1}}));
  QSeries g1 = g_series(1, 4, 6);
  for (int d = 1; d <= 4; ++d) {
    TPoly want = g1.coeff(LatticeClass{d}).scale(2);
    if (d % 2 == 0) want -= g0.coeff(LatticeClass{d / 2});
    CHECK(mixed.coeff(LatticeClass{d}).agrees_with(want, 6));
  }
}

TEST_CASE("extract_e: basis elements and a bare monomial") {
  auto c = LatticeConfig::rank_one(4, 6);
  ETable e0 = extract_e(g_series(0, 4, 6));
  CHECK(e0.entries == std::map<ClassGenus, Rational>{{{LatticeClass{1}, 0}, 1}});

  // t^0 q: peel G_1(q) = q + (3/2) q^2 + ..., so e_{(2),1} = -3/2.
  QSeries m(c);
  m.set({1}, TPoly::constant(1));
  ETable e = extract_e(m);
  CHECK(e.get({1}, 1) == 1);
  CHECK(e.get({1}, 0) == 0);
  CHECK(e.get({2}, 1) == q(-3, 2));
  CHECK_FALSE(e.integrality_ok);
}

TEST_CASE("uniqueness: extract_e and series_from_e are mutually inverse (property)") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    LatticeConfig c = gen_config(seed, 5, 8);
    ETable t = gen_e_table(seed, c, 0.35, 4);
    QSeries s = series_from_e(t);
    ETable back = extract_e(s);
    CHECK(back.same_values(t));
    CHECK(series_from_e(back) == s);
  }
}

TEST_CASE("extract_e is additive") {
  for (std::uint64_t seed = 20; seed <= 24; ++seed) {
    LatticeConfig c = gen_config(seed, 4, 6);
    QSeries a = gen_gw_series(seed, c, 0.6), b = gen_gw_series(seed + 1, c, 0.6);
    ETable ea = extract_e(a), eb = extract_e(b), es = extract_e(a + b);
    auto total = ea.entries;
    for (const auto& [k, v] : eb.entries) {
      total[k] += v;
      if (total[k] == 0) total.erase(k);
    }
    // Compare only inside the windows of the sum.
    for (const auto& [k, v] : es.entries) CHECK(total[k] == v);
    for (const auto& [k, v] : total)
      if (k.second <= es.window(k.first)) CHECK(es.get(k.first, k.second) == v);
  }
}

TEST_CASE("integer e-tables give integer BPS tables") {
  for (std::uint64_t seed = 30; seed <= 36; ++seed) {
    LatticeConfig c = gen_config(seed, 5, 8);
    ETable t = gen_e_table(seed, c, 0.35, 4);
    BPSTable b = bps_from_gw(series_from_e(t));
    CHECK(b.integrality_ok);
  }
}

TEST_CASE("superrigid_decompose") {
  auto c = LatticeConfig::rank_one(3, 8);
  auto split = superrigid_decompose(g_series(3, 3, 8), 3);
  CHECK(split.sign == 1);
  CHECK(split.tail.entries.empty());

  QSeries s = series_from_e(etable(c, {{{LatticeClass{1}, 2}, -1}, {{LatticeClass{2}, 4}, 5}}));
  auto split2 = superrigid_decompose(s, 2);
  CHECK(split2.sign == -1);
  CHECK(split2.tail.entries == std::map<ClassGenus, Rational>{{{LatticeClass{2}, 4}, 5}});

  QSeries low = series_from_e(etable(c, {{{LatticeClass{1}, 2}, 1}, {{LatticeClass{2}, 1}, 3}}));
  CHECK_THROWS_AS(superrigid_decompose(low, 2), NotSuperRigidShape);

  QSeries twice = series_from_e(etable(c, {{{LatticeClass{1}, 2}, 2}}));
  CHECK_THROWS_AS(superrigid_decompose(twice, 2), NotSuperRigidShape);

  QSeries wrong_genus = series_from_e(etable(c, {{{LatticeClass{1}, 1}, 1}}));
  CHECK_THROWS_AS(superrigid_decompose(wrong_genus, 2), NotSuperRigidShape);
}
