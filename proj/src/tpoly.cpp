#include "gvtools/tpoly.hpp"

#include <algorithm>
#include <vector>

#include "gvtools/errors.hpp"

namespace gvt {

namespace {

// Saturating sum for validity budgets: anything near the sentinel stays exact.
int budget_add(int a, int b) {
  if (a >= TPoly::kExact || b >= TPoly::kExact) return TPoly::kExact;
  long s = static_cast<long>(a) + b;
  if (s >= TPoly::kExact / 2) return TPoly::kExact;
  return static_cast<int>(s);
}

void check_even(int e) {
  if (e % 2 != 0) throw ConfigError("odd t-exponent " + std::to_string(e));
}

}  // namespace

TPoly::TPoly() = default;

TPoly::TPoly(std::map<int, Rational> coeffs, int min_exp, int valid_to)
    : coeffs_(std::move(coeffs)), min_exp_(min_exp), valid_to_(valid_to) {
  check_even(min_exp_);
  check_even(valid_to_);
  for (const auto& [e, c] : coeffs_) {
    check_even(e);
    if (e < min_exp_) throw ConfigError("stored exponent " + std::to_string(e) + " below min_exp");
  }
  normalize();
}

void TPoly::normalize() {
  if (valid_to_ >= kExact / 2) valid_to_ = kExact;
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0 || it->first > valid_to_)
      it = coeffs_.erase(it);
    else
      ++it;
  }
  if (!coeffs_.empty())
    min_exp_ = std::max(min_exp_, coeffs_.begin()->first);
  else
    min_exp_ = std::max(min_exp_, valid_to_);
  if (min_exp_ > valid_to_) min_exp_ = valid_to_;
}

TPoly TPoly::zero(int valid_to) { return TPoly({}, valid_to, valid_to); }

TPoly TPoly::monomial(int exponent, const Rational& c) {
  return TPoly({{exponent, c}}, exponent, kExact);
}

TPoly TPoly::exact(std::map<int, Rational> coeffs) {
  int lo = coeffs.empty() ? kExact : coeffs.begin()->first;
  return TPoly(std::move(coeffs), lo, kExact);
}

Rational TPoly::coeff(int e) const {
  if (e > valid_to_)
    throw ValidityExhausted("coefficient of t^" + std::to_string(e) + " requested, valid only to t^" +
                            std::to_string(valid_to_));
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::pair<int, Rational> TPoly::leading() const {
  if (coeffs_.empty())
    throw ValidityExhausted("no nonzero term up to t^" + std::to_string(valid_to_));
  return *coeffs_.begin();
}

TPoly TPoly::truncate(int order) const {
  check_even(order);
  return TPoly(coeffs_, std::min(min_exp_, std::min(order, valid_to_)), std::min(order, valid_to_));
}

TPoly TPoly::scale(const Rational& c) const {
  if (c == 0) return TPoly({}, min_exp_, valid_to_);
  auto out = coeffs_;
  for (auto& [e, v] : out) v *= c;
  return TPoly(std::move(out), min_exp_, valid_to_);
}

TPoly operator+(const TPoly& a, const TPoly& b) {
  int valid = std::min(a.valid_to_, b.valid_to_);
  auto out = a.coeffs_;
  for (const auto& [e, c] : b.coeffs_) {
    if (e > valid) break;
    out[e] += c;
  }
  return TPoly(std::move(out), std::min(a.min_exp_, b.min_exp_), valid);
}

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
  int lo = budget_add(a.min_exp_, b.min_exp_);
  int valid = std::min(budget_add(a.valid_to_, b.min_exp_), budget_add(b.valid_to_, a.min_exp_));
  if (valid < lo)
    throw ValidityExhausted("product valid only to t^" + std::to_string(valid) + " below its lowest term t^" +
                            std::to_string(lo));
  std::map<int, Rational> out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      int e = ea + eb;
      if (e > valid) break;
      out[e] += ca * cb;
    }
  }
  return TPoly(std::move(out), lo, valid);
}

bool operator==(const TPoly& a, const TPoly& b) {
  return a.valid_to_ == b.valid_to_ && a.coeffs_ == b.coeffs_;
}

bool TPoly::agrees_with(const TPoly& other, int order) const {
  if (order > valid_to_ || order > other.valid_to_) return false;
  auto below = [order](const std::map<int, Rational>& m) {
    std::map<int, Rational> out;
    for (const auto& [e, c] : m) {
      if (e > order) break;
      out.emplace(e, c);
    }
    return out;
  };
  return below(coeffs_) == below(other.coeffs_);
}

std::string TPoly::to_string() const {
  std::string s;
  for (const auto& [e, c] : coeffs_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.get_str() + ")t^" + std::to_string(e);
  }
  if (s.empty()) s = "0";
  if (!is_exact()) s += " + O(t^" + std::to_string(valid_to_ + 2) + ")";
  return s;
}

TPoly add(const TPoly& a, const TPoly& b) { return a + b; }

TPoly mul(const TPoly& a, const TPoly& b) { return a * b; }

TPoly invert_unit(const TPoly& a, std::optional<int> order) {
  if (a.is_zero()) throw NotAUnit("series has no nonzero term up to t^" + std::to_string(a.valid_to()));
  auto [e0, c0] = a.leading();
  int valid = a.is_exact() ? TPoly::kExact : a.valid_to() - 2 * e0;
  if (order) valid = std::min(valid, *order);
  if (valid >= TPoly::kExact) throw ValidityExhausted("inverse of an exact series needs an explicit order");
  if (valid < -e0)
    throw ValidityExhausted("inverse valid only to t^" + std::to_string(valid) + ", below its leading term");

  // a = c0 t^e0 (1 + u); solve b = t^{-e0}/c0 · Σ w_j t^{2j} with w_0 = 1 by
  // the recurrence w_j = -Σ_{i>=1} u_i w_{j-i}.
  const int steps = (valid + e0) / 2;
  Rational inv_c0 = 1 / c0;
  std::vector<Rational> u(steps + 1), w(steps + 1);
  for (const auto& [e, c] : a.coeffs()) {
    int j = (e - e0) / 2;
    if (j > steps) break;
    u[j] = c * inv_c0;
  }
  std::map<int, Rational> out;
  for (int j = 0; j <= steps; ++j) {
    if (j == 0) {
      w[0] = 1;
    } else {
      Rational acc = 0;
      for (int i = 1; i <= j; ++i) {
        if (u[i] != 0) acc -= u[i] * w[j - i];
      }
      w[j] = acc;
    }
    if (w[j] != 0) out.emplace(2 * j - e0, w[j] * inv_c0);
  }
  return TPoly(std::move(out), -e0, valid);
}

}  // namespace gvt
