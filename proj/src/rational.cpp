#include "gvtools/rational.hpp"

#include <cctype>

namespace gvt {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_int_literal(std::string_view s, bool allow_sign) {
  if (!s.empty() && allow_sign && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

bool parse_rational(std::string_view text, Rational& out) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_int_literal(num, true) || !is_int_literal(den, false)) return false;
  if (num[0] == '+') num.remove_prefix(1);
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) return false;
  out = Rational(p, q);
  out.canonicalize();
  return true;
}

}  // namespace gvt
