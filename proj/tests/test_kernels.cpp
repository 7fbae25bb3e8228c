#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "gvtools/errors.hpp"
#include "gvtools/kernels.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gvt;
using testing::q;
using testing::tp;

namespace {

// Independent reference for (2 sin(kt/2))^{2g-2} through t^order.
std::map<int, Rational> reference_kernel(long k, int g, int order) {
  if (g == 0) return oracle::inverse_square_kernel(k, order);
  if (g == 1) return {{0, Rational(1)}};
  return oracle::positive_kernel(k, g - 1, order);
}

}  // namespace

TEST_CASE("sin_kernel: frozen values") {
  CHECK(sin_kernel(1, 1, 6) == tp({{0, q(1)}}, 6));
  CHECK(sin_kernel(1, 2, 6) == tp({{2, q(1)}, {4, q(-1, 12)}, {6, q(1, 360)}}, 6));
  CHECK(sin_kernel(1, 0, 2) == tp({{-2, q(1)}, {0, q(1, 12)}, {2, q(1, 240)}}, 2));
  CHECK(sin_kernel(2, 0, 2) == tp({{-2, q(1, 4)}, {0, q(1, 12)}, {2, q(1, 60)}}, 2));
}

TEST_CASE("sin_kernel agrees with the dense Taylor oracle") {
  for (long k = 1; k <= 5; ++k) {
    for (int g = 0; g <= 5; ++g) {
      const int order = std::max(2 * g - 2, 0) + 10;
      TPoly got = sin_kernel(k, g, order);
      CHECK(got.valid_to() == order);
      CHECK(got.min_exp() == 2 * g - 2);
      CHECK(got.coeffs() == reference_kernel(k, g, order));
    }
  }
}

TEST_CASE("leading-term and k-scaling laws") {
  for (long k = 1; k <= 5; ++k) {
    for (int g = 0; g <= 4; ++g) {
      const int order = 2 * g + 8;
      TPoly base = sin_kernel(1, g, order);
      TPoly scaled = sin_kernel(k, g, order);
      auto [e, c] = scaled.leading();
      CHECK(e == 2 * g - 2);
      Rational kp = 1;
      for (int i = 0; i < std::abs(2 * g - 2); ++i) kp *= k;
      CHECK(c == (g == 0 ? Rational(1 / kp) : kp));
      for (const auto& [ex, cx] : base.coeffs()) {
        Rational f = 1;
        for (int i = 0; i < std::abs(ex); ++i) f *= k;
        CHECK(scaled.coeff(ex) == (ex >= 0 ? Rational(cx * f) : Rational(cx / f)));
      }
    }
  }
}

TEST_CASE("sin_kernel errors") {
  CHECK_THROWS_AS(sin_kernel(1, 3, 2), ValidityExhausted);
  CHECK_THROWS_AS(sin_kernel(0, 1, 2), ConfigError);
}

TEST_CASE("cache is observationally pure and shareable") {
  KernelCache cache;
  TPoly first = cache.get(3, 2, 12);
  CHECK(first == compute_sin_kernel(3, 2, 12));
  CHECK(cache.get(3, 2, 12) == first);
  std::vector<std::thread> pool;
  std::vector<TPoly> results(8);
  for (int i = 0; i < 8; ++i) pool.emplace_back([&, i] { results[i] = cache.get(2 + i % 3, i % 4, 16); });
  for (auto& t : pool) t.join();
  for (int i = 0; i < 8; ++i) CHECK(results[i] == compute_sin_kernel(2 + i % 3, i % 4, 16));
  CHECK(cache.size() == 9);  // eight distinct keys from the pool plus the first
}

TEST_CASE("decompose_in_genus_basis") {
  auto d0 = decompose_in_genus_basis(sin_kernel(1, 0, 8));
  CHECK(d0.coefficients == std::map<int, Rational>{{0, 1}});
  CHECK(d0.residual.is_zero());
  CHECK(d0.genus_window == 5);

  auto d1 = decompose_in_genus_basis(tp({{-2, q(1)}, {0, q(1, 12)}, {2, q(1, 240)}}, 2));
  CHECK(d1.coefficients == std::map<int, Rational>{{0, 1}});
  CHECK(d1.residual.is_zero());

  TPoly p = sin_kernel(1, 1, 10).scale(3) + sin_kernel(1, 2, 10).scale(2);
  CHECK(decompose_in_genus_basis(p).coefficients == std::map<int, Rational>{{1, 3}, {2, 2}});

  CHECK_THROWS_AS(decompose_in_genus_basis(TPoly::zero(-4)), ValidityExhausted);
  CHECK_THROWS_AS(decompose_in_genus_basis(tp({{-4, q(1)}}, 4)), ConfigError);
}

TEST_CASE("decomposition round trip (property)") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int order = 2 * static_cast<int>(rng() % 8);
    std::map<int, Rational> c;
    TPoly sum = TPoly::zero(order);
    for (int g = 0; 2 * g - 2 <= order; ++g) {
      if (rng() % 2) continue;
      Rational v = q(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 3) + 1);
      if (v == 0) continue;
      c.emplace(g, v);
      sum += sin_kernel(1, g, order).scale(v);
    }
    auto dec = decompose_in_genus_basis(sum);
    CHECK(dec.coefficients == c);
    CHECK(dec.residual.is_zero());
  }
}
