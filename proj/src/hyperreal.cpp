#include "shadowcalc/hyperreal.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "shadowcalc/errors.hpp"

namespace shadowcalc {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Zero: return "ZERO";
    case Classification::Infinitesimal: return "INFINITESIMAL";
    case Classification::Appreciable: return "APPRECIABLE";
    case Classification::Infinite: return "INFINITE";
  }
  return "?";
}

HyperReal HyperReal::from_real(Rational value, int truncation_order) {
  if (truncation_order < 1) throw DomainError("bad_order", "truncation order must be >= 1");
  std::vector<Term> terms;
  if (value != 0) terms.push_back({0, std::move(value)});
  return HyperReal(std::move(terms), truncation_order, false);
}

HyperReal HyperReal::epsilon(int power, int truncation_order) {
  if (truncation_order < 1) throw DomainError("bad_order", "truncation order must be >= 1");
  if (power < -truncation_order || power > truncation_order)
    throw WindowExceeded("epsilon power " + std::to_string(power) + " outside window [-" +
                         std::to_string(truncation_order) + ", " +
                         std::to_string(truncation_order) + "]");
  return HyperReal({{power, Rational(1)}}, truncation_order, false);
}

HyperReal HyperReal::zero(int truncation_order) { return from_real(Rational(0), truncation_order); }

HyperReal HyperReal::from_terms(std::vector<Term> raw, int truncation_order, bool saturated) {
  if (truncation_order < 1) throw DomainError("bad_order", "truncation order must be >= 1");
  std::map<int, Rational> merged;
  for (auto& t : raw) merged[t.exponent] += t.coefficient;
  std::vector<Term> terms;
  terms.reserve(merged.size());
  for (auto& [exp, coeff] : merged) {
    if (coeff == 0) continue;
    if (exp < -truncation_order)
      throw WindowExceeded("exponent " + std::to_string(exp) + " below window -" +
                           std::to_string(truncation_order));
    if (exp > truncation_order) {
      saturated = true;
      continue;
    }
    terms.push_back({exp, std::move(coeff)});
  }
  return HyperReal(std::move(terms), truncation_order, saturated);
}

int HyperReal::valuation() const {
  if (terms_.empty()) throw DomainError("valuation_of_zero", "valuation of zero is undefined");
  return terms_.front().exponent;
}

Classification HyperReal::classify() const {
  if (terms_.empty()) return Classification::Zero;
  int v = terms_.front().exponent;
  if (v < 0) return Classification::Infinite;
  if (v > 0) return Classification::Infinitesimal;
  return Classification::Appreciable;
}

Rational HyperReal::shadow() const {
  if (classify() == Classification::Infinite)
    throw NotFinite("shadow of an infinite element (" + to_string() + ") is undefined");
  return coefficient(0);
}

Rational HyperReal::coefficient(int exponent) const {
  for (const auto& t : terms_) {
    if (t.exponent == exponent) return t.coefficient;
    if (t.exponent > exponent) break;
  }
  return Rational(0);
}

void HyperReal::require_same_order(const HyperReal& x, const HyperReal& y) {
  if (x.order_ != y.order_)
    throw OrderMismatch("operands have truncation orders " + std::to_string(x.order_) + " and " +
                        std::to_string(y.order_));
}

HyperReal HyperReal::operator-() const {
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.coefficient = -t.coefficient;
  return HyperReal(std::move(terms), order_, saturated_);
}

HyperReal operator+(const HyperReal& x, const HyperReal& y) {
  HyperReal::require_same_order(x, y);
  std::vector<HyperReal::Term> terms;
  terms.reserve(x.terms_.size() + y.terms_.size());
  auto a = x.terms_.begin(), b = y.terms_.begin();
  while (a != x.terms_.end() || b != y.terms_.end()) {
    if (b == y.terms_.end() || (a != x.terms_.end() && a->exponent < b->exponent)) {
      terms.push_back(*a++);
    } else if (a == x.terms_.end() || b->exponent < a->exponent) {
      terms.push_back(*b++);
    } else {
      Rational sum = a->coefficient + b->coefficient;
      if (sum != 0) terms.push_back({a->exponent, std::move(sum)});
      ++a;
      ++b;
    }
  }
  return HyperReal(std::move(terms), x.order_, x.saturated_ || y.saturated_);
}

HyperReal operator-(const HyperReal& x, const HyperReal& y) { return x + (-y); }

HyperReal operator*(const HyperReal& x, const HyperReal& y) {
  HyperReal::require_same_order(x, y);
  bool saturated = x.saturated_ || y.saturated_;
  if (x.terms_.empty() || y.terms_.empty())
    return HyperReal({}, x.order_, saturated);
  // The lowest product exponent carries lead(x)*lead(y) != 0, so window
  // underflow cannot cancel away.
  int low = x.terms_.front().exponent + y.terms_.front().exponent;
  if (low < -x.order_)
    throw WindowExceeded("product valuation " + std::to_string(low) + " below window -" +
                         std::to_string(x.order_));
  std::map<int, Rational> acc;
  for (const auto& a : x.terms_) {
    for (const auto& b : y.terms_) {
      int exp = a.exponent + b.exponent;
      if (exp > x.order_) {
        saturated = true;
        continue;
      }
      acc[exp] += a.coefficient * b.coefficient;
    }
  }
  std::vector<HyperReal::Term> terms;
  for (auto& [exp, coeff] : acc)
    if (coeff != 0) terms.push_back({exp, std::move(coeff)});
  return HyperReal(std::move(terms), x.order_, saturated);
}

HyperReal operator/(const HyperReal& x, const HyperReal& y) {
  HyperReal::require_same_order(x, y);
  if (y.terms_.empty()) throw DivisionByZero("division by zero series");
  bool saturated = x.saturated_ || y.saturated_;
  const int order = x.order_;
  const int vy = y.terms_.front().exponent;
  // Long division from the lowest exponent up. The running remainder may
  // temporarily hold exponents beyond +K; only emitted quotient terms are
  // confined to the window.
  std::map<int, Rational> remainder;
  for (const auto& t : x.terms_) remainder[t.exponent] = t.coefficient;
  std::vector<HyperReal::Term> quotient;
  const Rational& lead_y = y.terms_.front().coefficient;
  while (!remainder.empty()) {
    auto lead = remainder.begin();
    int exp = lead->first - vy;
    if (exp > order) {
      saturated = true;  // quotient continues past the window
      break;
    }
    if (exp < -order)
      throw WindowExceeded("quotient valuation " + std::to_string(exp) + " below window -" +
                           std::to_string(order));
    Rational coeff = lead->second / lead_y;
    for (const auto& t : y.terms_) {
      int e = exp + t.exponent;
      auto it = remainder.find(e);
      Rational next = (it == remainder.end() ? Rational(0) : it->second) - coeff * t.coefficient;
      if (next == 0) {
        if (it != remainder.end()) remainder.erase(it);
      } else {
        remainder[e] = std::move(next);
      }
    }
    quotient.push_back({exp, std::move(coeff)});
  }
  return HyperReal(std::move(quotient), order, saturated);
}

std::strong_ordering HyperReal::operator<=>(const HyperReal& y) const {
  require_same_order(*this, y);
  HyperReal diff = *this - y;
  if (diff.terms_.empty()) return std::strong_ordering::equal;
  return diff.terms_.front().coefficient > 0 ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
}

bool HyperReal::operator==(const HyperReal& y) const {
  require_same_order(*this, y);
  return terms_ == y.terms_;
}

bool HyperReal::infinitely_close(const HyperReal& y) const {
  HyperReal diff = *this - y;
  return diff.terms_.empty() || diff.terms_.front().exponent >= 1;
}

namespace {

std::string render_epsilon(int exponent) {
  if (exponent == 1) return "e";
  return "e^" + std::to_string(exponent);
}

}  // namespace

std::string HyperReal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coefficient < 0;
    Rational mag = negative ? Rational(-t.coefficient) : t.coefficient;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.exponent == 0) {
      out += shadowcalc::to_string(mag);
    } else {
      if (mag != 1) out += shadowcalc::to_string(mag);
      out += render_epsilon(t.exponent);
    }
  }
  return out;
}

namespace {

struct LiteralScanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Integer scan_digits(const char* what) {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw SyntaxError(pos, what);
    Integer value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      ++pos;
    }
    return value;
  }

  Rational scan_rational() {
    Integer whole = scan_digits("digits");
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      Integer den = scan_digits("denominator digits");
      if (den == 0) throw SyntaxError(pos, "nonzero denominator");
      return Rational(whole, den);
    }
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      std::size_t start = pos;
      Integer frac = scan_digits("fraction digits");
      Integer scale = 1;
      for (std::size_t i = start; i < pos; ++i) scale *= 10;
      return Rational(whole * scale + frac, scale);
    }
    return Rational(whole);
  }

  int scan_exponent() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      neg = text[pos] == '-';
      ++pos;
    }
    Integer digits = scan_digits("exponent digits");
    if (digits > 1000000) throw SyntaxError(pos, "a smaller exponent");
    int value = digits.convert_to<int>();
    return neg ? -value : value;
  }
};

}  // namespace

HyperReal HyperReal::parse(std::string_view text, int truncation_order) {
  LiteralScanner s{text};
  std::vector<Term> terms;
  bool first = true;
  while (true) {
    if (s.at_end()) {
      if (first) throw SyntaxError(s.pos, "a term");
      break;
    }
    bool negative = false;
    if (s.consume('-')) {
      negative = true;
    } else if (s.consume('+')) {
      // explicit plus
    } else if (!first) {
      throw SyntaxError(s.pos, "'+' or '-'");
    }
    first = false;
    s.skip_ws();
    Rational coeff(1);
    bool have_coeff = false;
    if (s.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[s.pos]))) {
      coeff = s.scan_rational();
      have_coeff = true;
    }
    int exponent = 0;
    if (s.pos < text.size() && (text[s.pos] == 'e' || text[s.pos] == 'E')) {
      ++s.pos;
      exponent = 1;
      if (s.pos < text.size() && text[s.pos] == '^') {
        ++s.pos;
        exponent = s.scan_exponent();
      }
    } else if (!have_coeff) {
      throw SyntaxError(s.pos, "a coefficient or 'e'");
    }
    if (exponent < -truncation_order || exponent > truncation_order)
      throw WindowExceeded("exponent " + std::to_string(exponent) + " outside window [-" +
                           std::to_string(truncation_order) + ", " +
                           std::to_string(truncation_order) + "]");
    terms.push_back({exponent, negative ? Rational(-coeff) : coeff});
  }
  return from_terms(std::move(terms), truncation_order);
}

}  // namespace shadowcalc
