#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "shadowcalc/rational.hpp"

namespace shadowcalc {

enum class Classification { Zero, Infinitesimal, Appreciable, Infinite };

std::string to_string(Classification c);

// Truncated formal Laurent series in one infinitesimal e with exact rational
// coefficients: the computable stand-in for an element of a proper ordered
// field extension of the reals. Exponents live in the window [-K, +K];
// contributions above +K are dropped and flagged via saturated(), an exponent
// below -K is an error. Values are immutable after construction.
class HyperReal {
 public:
  struct Term {
    int exponent;
    Rational coefficient;
    bool operator==(const Term&) const = default;
  };

  static constexpr int kDefaultOrder = 8;

  // The real subfield embeds as exponent-0 series.
  static HyperReal from_real(Rational value, int truncation_order = kDefaultOrder);
  // c * e^power. Throws WindowExceeded when |power| > K.
  static HyperReal epsilon(int power = 1, int truncation_order = kDefaultOrder);
  static HyperReal zero(int truncation_order = kDefaultOrder);

  // Builds from arbitrary (exponent, coefficient) pairs; merges duplicates,
  // drops zero coefficients, clips above +K (setting saturated), throws
  // WindowExceeded below -K.
  static HyperReal from_terms(std::vector<Term> terms, int truncation_order,
                              bool saturated = false);

  int order() const { return order_; }
  bool saturated() const { return saturated_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Lowest exponent with nonzero coefficient. Throws DomainError on zero.
  int valuation() const;
  Classification classify() const;
  // Exponent-0 coefficient of a finite element. Throws NotFinite.
  Rational shadow() const;
  // Coefficient at the given exponent (0 if absent).
  Rational coefficient(int exponent) const;

  HyperReal operator-() const;
  friend HyperReal operator+(const HyperReal& x, const HyperReal& y);
  friend HyperReal operator-(const HyperReal& x, const HyperReal& y);
  friend HyperReal operator*(const HyperReal& x, const HyperReal& y);
  friend HyperReal operator/(const HyperReal& x, const HyperReal& y);

  // The unique field order with 0 < e < r for every positive real r: the
  // sign of x - y is the sign of its lowest-exponent coefficient.
  // Throws OrderMismatch when the truncation orders differ.
  std::strong_ordering operator<=>(const HyperReal& y) const;
  bool operator==(const HyperReal& y) const;

  // x - y is zero or has valuation >= 1.
  bool infinitely_close(const HyperReal& y) const;

  // "3 + 5e - e^2", "e^-1", "0". parse() round-trips this exactly and also
  // accepts compact CLI literals like "1+2e-e^2" and explicit unit
  // coefficients like "1e^2".
  std::string to_string() const;
  static HyperReal parse(std::string_view text, int truncation_order = kDefaultOrder);

 private:
  HyperReal(std::vector<Term> terms, int order, bool saturated)
      : terms_(std::move(terms)), order_(order), saturated_(saturated) {}

  static void require_same_order(const HyperReal& x, const HyperReal& y);

  std::vector<Term> terms_;  // exponents strictly increasing, coefficients nonzero
  int order_;
  bool saturated_;
};

inline bool infinitely_close(const HyperReal& x, const HyperReal& y) {
  return x.infinitely_close(y);
}

}  // namespace shadowcalc
