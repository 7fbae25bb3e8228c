#include "gvtools/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "gvtools/errors.hpp"

namespace gvt {

QSeries::QSeries(LatticeConfig config, bool absent_exact)
    : config_(std::move(config)), absent_exact_(absent_exact) {
  config_.validate();
}

TPoly QSeries::absent_value() const {
  return absent_exact_ ? TPoly() : TPoly::zero(config_.t_order);
}

TPoly QSeries::coeff(const LatticeClass& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? absent_value() : it->second;
}

void QSeries::set(const LatticeClass& a, const TPoly& p) {
  if (mass(config_, a) > config_.mass_cap)
    throw ConfigError("class " + a.to_string() + " exceeds the mass cap");
  if (p.is_zero() && p.is_exact()) {
    terms_.erase(a);
    return;
  }
  TPoly q = p.truncate(config_.t_order);
  // Stored values never carry information past t_order, so a zero known that far
  // is indistinguishable from an absent class.
  if (q.is_zero() && q.valid_to() >= config_.t_order) {
    terms_.erase(a);
    return;
  }
  terms_.insert_or_assign(a, std::move(q));
}

void QSeries::add_to(const LatticeClass& a, const TPoly& p) { set(a, coeff(a) + p); }

int QSeries::min_valid_to() const {
  int v = absent_exact_ ? TPoly::kExact : config_.t_order;
  for (const auto& [a, p] : terms_) v = std::min(v, p.valid_to());
  return v;
}

int QSeries::min_exp() const {
  int v = TPoly::kExact;
  for (const auto& [a, p] : terms_) v = std::min(v, p.min_exp());
  return v;
}

QSeries QSeries::scale(const Rational& c) const {
  QSeries out(config_, absent_exact_);
  for (const auto& [a, p] : terms_) out.set(a, p.scale(c));
  out.const_term_ = const_term_.scale(c);
  return out;
}

QSeries QSeries::truncate_mass(const Rational& cap) const {
  if (cap > config_.mass_cap) throw ConfigError("mass truncation can only lower the cap");
  LatticeConfig c = config_;
  c.mass_cap = cap;
  QSeries out(c, absent_exact_);
  for (const auto& [a, p] : terms_) {
    if (mass(c, a) <= cap) out.set(a, p);
  }
  out.const_term_ = const_term_;
  return out;
}

QSeries QSeries::truncate_t(int order) const {
  LatticeConfig c = config_;
  c.t_order = std::min(order, config_.t_order);
  QSeries out(c, absent_exact_);
  for (const auto& [a, p] : terms_) out.set(a, p);
  out.const_term_ = const_term_;
  return out;
}

void QSeries::check_compatible(const QSeries& other) const {
  if (!(config_ == other.config_)) throw ConfigError("series live on different lattice configurations");
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  a.check_compatible(b);
  QSeries out(a.config_, a.absent_exact_ && b.absent_exact_);
  for (const auto& [c, p] : a.terms_) out.set(c, p + b.coeff(c));
  for (const auto& [c, p] : b.terms_) {
    if (!a.terms_.contains(c)) out.set(c, a.coeff(c) + p);
  }
  out.const_term_ = a.const_term_ + b.const_term_;
  return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + b.scale(Rational(-1)); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  a.check_compatible(b);
  const LatticeConfig& config = a.config_;
  const auto classes = enumerate_classes(config);

  // Slot 0 is q^0; slots 1..n are the classes of the capped lattice.
  const std::size_t n = classes.size() + 1;
  std::map<LatticeClass, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i], i + 1);

  auto slots = [&](const QSeries& s) {
    std::vector<std::optional<TPoly>> v(n);
    v[0] = s.const_term_;
    for (const auto& [c, p] : s.terms_) v[index.at(c)] = p;
    return v;
  };
  const auto sa = slots(a);
  const auto sb = slots(b);
  const TPoly absent_a = a.absent_value();
  const TPoly absent_b = b.absent_value();

  std::vector<std::optional<TPoly>> acc(n);
  std::vector<std::int64_t> sum(config.rank);
  for (std::size_t i = 0; i < n; ++i) {
    if (!sa[i] && a.absent_exact_) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!sb[j] && b.absent_exact_) continue;
      if (!sa[i] && !sb[j]) continue;  // both implied zeros: trusted past t_order
      std::size_t target;
      if (i == 0) {
        target = j;
      } else if (j == 0) {
        target = i;
      } else {
        const auto& ci = classes[i - 1];
        const auto& cj = classes[j - 1];
        for (int r = 0; r < config.rank; ++r) sum[r] = ci[r] + cj[r];
        auto it = index.find(LatticeClass(sum));
        if (it == index.end()) continue;  // above the mass cap
        target = it->second;
      }
      TPoly prod = (sa[i] ? *sa[i] : absent_a) * (sb[j] ? *sb[j] : absent_b);
      if (acc[target])
        *acc[target] += prod;
      else
        acc[target] = std::move(prod);
    }
  }

  QSeries out(config, a.absent_exact_ && b.absent_exact_);
  out.const_term_ = acc[0] ? *acc[0] : TPoly();
  for (std::size_t i = 1; i < n; ++i) {
    if (acc[i]) out.set(classes[i - 1], *acc[i]);
  }
  return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.config_ == b.config_ && a.absent_exact_ == b.absent_exact_ && a.terms_ == b.terms_ &&
         a.const_term_ == b.const_term_;
}

QSeries mul(const QSeries& a, const QSeries& b) { return a * b; }

namespace {

// Beyond this power every class term of x^n exceeds the cap.
int max_power(const LatticeConfig& c) {
  Rational lightest = *std::min_element(c.mass_vector.begin(), c.mass_vector.end());
  Rational q = c.mass_cap / lightest;
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return static_cast<int>(f.get_si());
}

void require_zero_constant(const QSeries& x, const char* op) {
  if (!x.const_term().is_zero())
    throw NonzeroConstantTerm(std::string(op) + " needs a series without q^0 term");
}

}  // namespace

QSeries log1p(const QSeries& x) {
  require_zero_constant(x, "log1p");
  QSeries out(x.config(), x.absent_exact());
  out.set_const(x.const_term());
  QSeries power = x;
  const int n_max = max_power(x.config());
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) power = power * x;
    Rational c(n % 2 == 1 ? 1 : -1, n);
    c.canonicalize();
    out += power.scale(c);
  }
  return out;
}

QSeries exp(const QSeries& x) {
  require_zero_constant(x, "exp");
  QSeries out(x.config(), x.absent_exact());
  out.set_const(TPoly::constant(1));
  QSeries power = x;
  Integer factorial = 1;
  const int n_max = max_power(x.config());
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) power = power * x;
    factorial *= n;
    out += power.scale(Rational(Integer(1), factorial));
  }
  return out;
}

QSeries pushforward(const QSeries& s, const LatticeClass& a, const LatticeConfig& target) {
  if (s.config().rank != 1) throw ConfigError("pushforward expects a rank-1 series");
  target.validate();
  const Rational ma = mass(target, a);
  // Degrees d with d·M(A) <= cap must be covered by the source.
  Rational reach = target.mass_cap / ma;
  Integer d_reach;
  mpz_fdiv_q(d_reach.get_mpz_t(), reach.get_num_mpz_t(), reach.get_den_mpz_t());
  if (Rational(d_reach) * s.config().mass_vector[0] > s.config().mass_cap)
    throw ConfigError("source series is truncated below degree " + d_reach.get_str() + " needed by the target");

  QSeries out(target, s.absent_exact());
  out.set_const(s.const_term());
  for (const auto& [d, p] : s.terms()) {
    LatticeClass da = a.scaled(d[0]);
    if (mass(target, da) <= target.mass_cap) out.set(da, p);
  }
  return out;
}

}  // namespace gvt
