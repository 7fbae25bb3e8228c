#include "gvtools/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "gvtools/errors.hpp"

namespace gvt {

namespace {

class Cursor {
 public:
  Cursor(std::string_view line, std::size_t lineno) : line_(line), lineno_(lineno) {}

  void skip_ws() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= line_.size();
  }
  std::size_t column() const { return pos_ + 1; }
  std::size_t lineno() const { return lineno_; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, lineno_, pos_ + 1); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t col) const { throw ParseError(msg, lineno_, col); }

  /// Letters, digits, '-', '+', '/', '.'.
  std::string_view word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < line_.size()) {
      char c = line_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/' || c == '.' || c == '_')
        ++pos_;
      else
        break;
    }
    if (start == pos_) fail("expected a token");
    return line_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= line_.size() || line_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (line_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t col = column();
    std::string_view w = word();
    std::int64_t v = 0;
    bool neg = false;
    std::size_t i = 0;
    if (!w.empty() && (w[0] == '-' || w[0] == '+')) {
      neg = w[0] == '-';
      i = 1;
    }
    if (i == w.size()) fail_at("expected an integer", col);
    for (; i < w.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(w[i]))) fail_at("expected an integer, got '" + std::string(w) + "'", col);
      if (v > (INT64_MAX - 9) / 10) fail_at("integer out of range", col);
      v = v * 10 + (w[i] - '0');
    }
    return neg ? -v : v;
  }

  int small_int() {
    std::size_t col = column();
    std::int64_t v = integer();
    if (v > (1 << 20) || v < -(1 << 20)) fail_at("integer out of range", col);
    return static_cast<int>(v);
  }

  Rational rational() {
    skip_ws();
    std::size_t col = column();
    std::string_view w = word();
    Rational q;
    if (!parse_rational(w, q)) fail_at("expected a rational p/q, got '" + std::string(w) + "'", col);
    return q;
  }

 private:
  std::string_view line_;
  std::size_t lineno_;
  std::size_t pos_ = 0;
};

enum class Kind { kGW, kBPS, kE, kFano };

std::optional<Kind> kind_from_name(std::string_view s) {
  if (s == "gw") return Kind::kGW;
  if (s == "bps") return Kind::kBPS;
  if (s == "e") return Kind::kE;
  if (s == "fano") return Kind::kFano;
  return std::nullopt;
}

struct GWRow {
  std::map<int, Rational> coeffs;
  std::optional<int> valid;
};

struct Parsed {
  std::optional<Kind> kind;
  std::optional<int> rank;
  std::optional<std::vector<Rational>> mass;
  std::optional<Rational> masscap;
  int tmin = -2;
  std::optional<int> tmax;
  std::optional<int> c1;
  bool saw_row = false;

  std::map<std::vector<std::int64_t>, GWRow> gw;
  std::map<std::pair<std::vector<std::int64_t>, int>, Rational> table;
  std::map<int, Rational> fano;
};

void set_kind(Parsed& p, Kind k, Cursor& cur, std::size_t col) {
  if (p.kind && *p.kind != k) cur.fail_at("row kind differs from the file kind", col);
  p.kind = k;
}

LatticeConfig header_config(const Parsed& p, Cursor& cur) {
  if (!p.rank || !p.mass || !p.masscap || !p.tmax) cur.fail("header incomplete: need rank, mass, masscap, tmax before rows");
  LatticeConfig c;
  c.rank = *p.rank;
  c.mass_vector = *p.mass;
  c.mass_cap = *p.masscap;
  c.t_order = *p.tmax;
  try {
    c.validate();
  } catch (const ConfigError& e) {
    cur.fail(std::string("invalid header: ") + e.what());
  }
  return c;
}

std::vector<std::int64_t> parse_class(Cursor& cur, const LatticeConfig& config, bool allow_zero) {
  std::size_t col = cur.column();
  cur.skip_ws();
  col = cur.column();
  cur.expect('(');
  std::vector<std::int64_t> coords;
  do {
    std::size_t ccol = cur.column();
    std::int64_t v = cur.integer();
    if (v < 0) cur.fail_at("class coordinates must be non-negative", ccol);
    coords.push_back(v);
  } while (cur.accept(','));
  cur.expect(')');
  if (static_cast<int>(coords.size()) != config.rank)
    throw DimensionMismatch("class has " + std::to_string(coords.size()) + " coordinates, header rank is " +
                                std::to_string(config.rank),
                            cur.lineno(), col);
  bool zero = std::all_of(coords.begin(), coords.end(), [](auto v) { return v == 0; });
  if (zero) {
    if (!allow_zero) cur.fail_at("class must be nonzero", col);
    return coords;
  }
  if (mass(config, LatticeClass(coords)) > config.mass_cap)
    throw DimensionMismatch("class mass exceeds the header masscap", cur.lineno(), col);
  return coords;
}

int parse_genus(Cursor& cur, const LatticeConfig* config) {
  cur.skip_ws();
  std::size_t col = cur.column();
  if (!cur.accept_word("g=")) cur.fail("expected 'g='");
  int g = cur.small_int();
  if (g < 0) cur.fail_at("genus must be non-negative", col);
  if (config && 2 * g - 2 > config->t_order) cur.fail_at("genus lies outside the header t-window", col);
  return g;
}

void parse_line(Parsed& p, Cursor& cur) {
  std::size_t col = (cur.skip_ws(), cur.column());
  std::string_view key = cur.word();

  if (key == "kind") {
    if (p.saw_row) cur.fail_at("header line after rows", col);
    std::size_t kcol = (cur.skip_ws(), cur.column());
    auto k = kind_from_name(cur.word());
    if (!k) cur.fail_at("unknown kind", kcol);
    set_kind(p, *k, cur, kcol);
  } else if (key == "rank") {
    if (p.saw_row) cur.fail_at("header line after rows", col);
    std::size_t vcol = (cur.skip_ws(), cur.column());
    int r = cur.small_int();
    if (r < 1) cur.fail_at("rank must be positive", vcol);
    p.rank = r;
  } else if (key == "mass") {
    if (p.saw_row) cur.fail_at("header line after rows", col);
    std::vector<Rational> m;
    while (!cur.at_end()) m.push_back(cur.rational());
    if (!p.rank) cur.fail_at("mass line before rank", col);
    if (static_cast<int>(m.size()) != *p.rank)
      throw DimensionMismatch("mass vector has " + std::to_string(m.size()) + " entries, rank is " +
                                  std::to_string(*p.rank),
                              cur.lineno(), col);
    p.mass = std::move(m);
  } else if (key == "masscap") {
    if (p.saw_row) cur.fail_at("header line after rows", col);
    p.masscap = cur.rational();
  } else if (key == "tmin") {
    if (p.saw_row) cur.fail_at("header line after rows", col);
    p.tmin = cur.small_int();
    if (p.tmin % 2 != 0) cur.fail_at("tmin must be even", col);
  } else if (key == "tmax") {
    if (p.saw_row) cur.fail_at("header line after rows", col);
    std::size_t vcol = (cur.skip_ws(), cur.column());
    int t = cur.small_int();
    if (t % 2 != 0 || t < -2) cur.fail_at("tmax must be even and at least -2", vcol);
    p.tmax = t;
  } else if (key == "c1") {
    if (p.saw_row) cur.fail_at("header line after rows", col);
    p.c1 = cur.small_int();
  } else if (key == "GW") {
    set_kind(p, Kind::kGW, cur, col);
    LatticeConfig config = header_config(p, cur);
    p.saw_row = true;
    auto coords = parse_class(cur, config, /*allow_zero=*/true);
    GWRow row;
    cur.skip_ws();
    std::size_t vcol = cur.column();
    if (cur.accept_word("valid=")) {
      int v = cur.small_int();
      if (v % 2 != 0 || v > config.t_order || v < -2) cur.fail_at("valid= must be even and within [-2, tmax]", vcol);
      row.valid = v;
    }
    cur.expect(':');
    if (!cur.at_end()) {
      do {
        std::size_t ecol = (cur.skip_ws(), cur.column());
        int e = cur.small_int();
        if (e % 2 != 0) cur.fail_at("odd t-exponent " + std::to_string(e), ecol);
        if (e < p.tmin || e > row.valid.value_or(config.t_order))
          cur.fail_at("t-exponent " + std::to_string(e) + " outside the window", ecol);
        if (row.coeffs.contains(e)) cur.fail_at("repeated t-exponent", ecol);
        Rational c = cur.rational();
        row.coeffs.emplace(e, c);
      } while (cur.accept(';'));
    }
    if (!cur.at_end()) cur.fail("unexpected trailing text");
    if (p.gw.contains(coords)) cur.fail_at("repeated class", col);
    p.gw.emplace(std::move(coords), std::move(row));
  } else if (key == "BPS" || key == "E") {
    set_kind(p, key == "BPS" ? Kind::kBPS : Kind::kE, cur, col);
    LatticeConfig config = header_config(p, cur);
    p.saw_row = true;
    auto coords = parse_class(cur, config, /*allow_zero=*/false);
    int g = parse_genus(cur, &config);
    cur.expect(':');
    Rational c = cur.rational();
    if (!cur.at_end()) cur.fail("unexpected trailing text");
    if (!p.table.emplace(std::make_pair(std::move(coords), g), c).second) cur.fail_at("repeated entry", col);
  } else if (key == "FANO") {
    set_kind(p, Kind::kFano, cur, col);
    if (!p.tmax) cur.fail_at("header incomplete: need tmax before rows", col);
    p.saw_row = true;
    cur.skip_ws();
    std::size_t ccol = cur.column();
    if (!cur.accept_word("c1=")) cur.fail("expected 'c1='");
    int c1 = cur.small_int();
    if (c1 < 1) cur.fail_at("c1 must be at least 1", ccol);
    if (p.c1 && *p.c1 != c1) cur.fail_at("all FANO rows must share c1", ccol);
    p.c1 = c1;
    std::size_t gcol = (cur.skip_ws(), cur.column());
    int g = parse_genus(cur, nullptr);
    if (2 * g - 2 > *p.tmax) cur.fail_at("genus lies outside the header t-window", gcol);
    cur.expect(':');
    Rational c = cur.rational();
    if (!cur.at_end()) cur.fail("unexpected trailing text");
    if (!p.fano.emplace(g, c).second) cur.fail_at("repeated entry", col);
  } else {
    cur.fail_at("unknown line keyword '" + std::string(key) + "'", col);
  }
  if (!cur.at_end()) cur.fail("unexpected trailing text");
}

}  // namespace

GVFile parse(std::string_view text) {
  Parsed p;
  std::size_t lineno = 0;
  bool saw_magic = false;
  std::size_t last_line = 1;
  while (!text.empty()) {
    ++lineno;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor cur(line, lineno);
    if (cur.at_end()) continue;
    last_line = lineno;
    if (!saw_magic) {
      std::size_t col = cur.column();
      std::string_view w = cur.word();
      if (w != "gv-table") cur.fail_at("expected 'gv-table v1' header", col);
      std::size_t vcol = (cur.skip_ws(), cur.column());
      if (cur.at_end() || cur.word() != "v1") cur.fail_at("unsupported format version", vcol);
      if (!cur.at_end()) cur.fail("unexpected trailing text");
      saw_magic = true;
      continue;
    }
    parse_line(p, cur);
  }
  if (!saw_magic) throw ParseError("empty input: expected 'gv-table v1' header", 1, 1);

  Cursor end("", last_line);
  Kind kind = p.kind.value_or(Kind::kGW);
  if (kind == Kind::kFano) {
    if (!p.tmax) end.fail("header incomplete: need tmax");
    FanoSeries f;
    f.c1 = p.c1.value_or(1);
    f.window = (*p.tmax + 2) / 2;
    for (const auto& [g, c] : p.fano) {
      if (c != 0) f.gw_coeffs.emplace(g, c);
    }
    return f;
  }
  LatticeConfig config = header_config(p, end);
  if (kind == Kind::kGW) {
    QSeries s(config, /*absent_exact=*/false);
    for (auto& [coords, row] : p.gw) {
      int valid = row.valid.value_or(config.t_order);
      TPoly poly(std::move(row.coeffs), std::min(p.tmin, valid), valid);
      bool zero = std::all_of(coords.begin(), coords.end(), [](auto v) { return v == 0; });
      if (zero)
        s.set_const(poly);
      else
        s.set(LatticeClass(coords), poly);
    }
    return s;
  }
  InvariantTable t;
  t.config = config;
  for (const auto& [key, c] : p.table) t.set(LatticeClass(key.first), key.second, c);
  t.refresh_diagnostics();
  if (kind == Kind::kBPS) return BPSTable{t};
  return ETable{t};
}

namespace {

void print_header(std::ostringstream& out, const char* kind, const LatticeConfig& c) {
  out << "gv-table v1\n";
  out << "kind " << kind << "\n";
  out << "rank " << c.rank << "\n";
  out << "mass";
  for (const auto& m : c.mass_vector) out << ' ' << to_string(m);
  out << "\n";
  out << "masscap " << to_string(c.mass_cap) << "\n";
  out << "tmin -2\n";
  out << "tmax " << c.t_order << "\n";
}

void print_gw_row(std::ostringstream& out, const std::string& cls, const TPoly& p, int tmax) {
  out << "GW " << cls;
  if (p.valid_to() < tmax) out << " valid=" << p.valid_to();
  out << " :";
  bool first = true;
  for (const auto& [e, c] : p.coeffs()) {
    out << (first ? " " : " ; ") << e << ' ' << to_string(c);
    first = false;
  }
  out << "\n";
}

std::string compact_class(const LatticeClass& a) { return a.to_string(); }

std::vector<LatticeClass> sorted_classes(const LatticeConfig& c, std::vector<LatticeClass> v) {
  std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) { return mass_order_less(c, x, y); });
  return v;
}

void print_table(std::ostringstream& out, const char* row, const InvariantTable& t) {
  std::vector<LatticeClass> classes;
  for (const auto& [key, v] : t.entries) {
    if (classes.empty() || !(classes.back() == key.first)) classes.push_back(key.first);
  }
  for (const auto& a : sorted_classes(t.config, classes)) {
    for (auto it = t.entries.lower_bound({a, 0}); it != t.entries.end() && it->first.first == a; ++it) {
      out << row << ' ' << compact_class(a) << " g=" << it->first.second << " : " << to_string(it->second) << "\n";
    }
  }
}

}  // namespace

std::string print(const GVFile& value) {
  std::ostringstream out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, QSeries>) {
          const auto& c = v.config();
          print_header(out, "gw", c);
          if (!v.const_term().is_zero() || (!v.const_term().is_exact() && v.const_term().valid_to() < c.t_order)) {
            std::string zero = "(";
            for (int i = 0; i < c.rank; ++i) zero += i ? ",0" : "0";
            print_gw_row(out, zero + ")", v.const_term(), c.t_order);
          }
          std::vector<LatticeClass> classes;
          for (const auto& [a, p] : v.terms()) classes.push_back(a);
          for (const auto& a : sorted_classes(c, classes)) print_gw_row(out, compact_class(a), v.terms().at(a), c.t_order);
        } else if constexpr (std::is_same_v<T, BPSTable>) {
          print_header(out, "bps", v.config);
          print_table(out, "BPS", v);
        } else if constexpr (std::is_same_v<T, ETable>) {
          print_header(out, "e", v.config);
          print_table(out, "E", v);
        } else {
          out << "gv-table v1\nkind fano\nc1 " << v.c1 << "\ntmin -2\ntmax " << 2 * v.window - 2 << "\n";
          for (const auto& [g, c] : v.gw_coeffs) {
            out << "FANO c1=" << v.c1 << " g=" << g << " : " << to_string(c) << "\n";
          }
        }
      },
      value);
  return out.str();
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// Uniform in [0, 1) from the top 53 bits; portable across standard libraries.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  std::int64_t nonzero(int bound) {
    auto v = static_cast<std::int64_t>(1 + below(bound));
    return below(2) ? v : -v;
  }

 private:
  std::mt19937_64 eng_;
};

InvariantTable gen_table(std::uint64_t seed, const LatticeConfig& config, double density, int genus_max) {
  Rng rng(seed);
  InvariantTable t;
  t.config = config;
  const int gmax = std::min(genus_max, config.genus_window());
  for (const auto& a : enumerate_classes(config)) {
    for (int g = 0; g <= gmax; ++g) {
      if (rng.uniform() < density) t.set(a, g, Rational(static_cast<long>(rng.nonzero(5))));
    }
  }
  t.refresh_diagnostics();
  return t;
}

}  // namespace

LatticeConfig gen_config(std::uint64_t seed, int max_cap, int t_order) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  static const Rational masses[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
  LatticeConfig c;
  c.rank = 1 + static_cast<int>(rng.below(2));
  c.mass_vector.clear();
  for (int i = 0; i < c.rank; ++i) c.mass_vector.push_back(masses[rng.below(4)]);
  c.mass_cap = Rational(static_cast<long>(1 + rng.below(max_cap)));
  c.t_order = t_order;
  c.validate();
  return c;
}

BPSTable gen_bps_table(std::uint64_t seed, const LatticeConfig& config, double density, int genus_max) {
  return BPSTable{gen_table(seed, config, density, genus_max)};
}

ETable gen_e_table(std::uint64_t seed, const LatticeConfig& config, double density, int genus_max) {
  return ETable{gen_table(seed ^ 0x5851f42d4c957f2dULL, config, density, genus_max)};
}

QSeries gen_gw_series(std::uint64_t seed, const LatticeConfig& config, double density) {
  Rng rng(seed);
  QSeries s(config, /*absent_exact=*/false);
  for (const auto& a : enumerate_classes(config)) {
    if (rng.uniform() >= density) continue;
    int valid = config.t_order;
    if (rng.uniform() < 0.2) valid = std::max(-2, config.t_order - 2 * static_cast<int>(1 + rng.below(2)));
    std::map<int, Rational> coeffs;
    for (int e = -2; e <= valid; e += 2) {
      if (rng.uniform() < 0.6) {
        Rational q(static_cast<long>(rng.nonzero(9)), static_cast<long>(1 + rng.below(4)));
        q.canonicalize();
        coeffs.emplace(e, q);
      }
    }
    s.set(a, TPoly(std::move(coeffs), -2, valid));
  }
  return s;
}

std::map<int, Rational> gen_fano_bps(std::uint64_t seed, int genus_max) {
  Rng rng(seed);
  std::map<int, Rational> out;
  for (int g = 0; g <= genus_max; ++g) {
    if (rng.uniform() < 0.7) out.emplace(g, Rational(static_cast<long>(rng.nonzero(9))));
  }
  return out;
}

}  // namespace gvt
