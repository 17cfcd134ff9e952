#include "shadowcalc/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>

namespace shadowcalc {

Rational rational_from_double(double d) {
  // cpp_rational's double constructor performs the exact dyadic conversion.
  return Rational(d);
}

namespace {

bool scan_digits(std::string_view text, std::size_t& pos, Integer& out) {
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
  Integer value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    ++pos;
  }
  out = value;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  Integer whole;
  if (!scan_digits(text, pos, whole)) return std::nullopt;
  Rational value(whole);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    Integer den;
    if (!scan_digits(text, pos, den) || den == 0) return std::nullopt;
    value = Rational(whole, den);
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t start = pos;
    Integer frac;
    if (!scan_digits(text, pos, frac)) return std::nullopt;
    Integer scale = 1;
    for (std::size_t i = start; i < pos; ++i) scale *= 10;
    value = Rational(whole * scale + frac, scale);
  }
  if (pos != text.size()) return std::nullopt;
  return negative ? Rational(-value) : value;
}

}  // namespace shadowcalc
