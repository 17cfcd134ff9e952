#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace shadowcalc {

// Exact arbitrary-precision rational. All algebraic modules compute with
// these; doubles appear only in the grid/rearrangement code.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Renders "3", "-1/2". cpp_rational::str() already omits a unit denominator.
inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double d);

// Parses "3", "-7/2", "0.25" (decimal converted exactly). Returns nullopt on
// anything else, including overlong garbage after the number.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace shadowcalc
