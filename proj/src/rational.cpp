#include "liegeo/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace liegeo {

Rational frac(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den)))
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  Rational r(parse_integer(num));
  if (slash != std::string_view::npos) {
    const Integer d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    r = Rational(parse_integer(num), d);
    r.canonicalize();
  }
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace liegeo
