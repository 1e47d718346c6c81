#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace veto {

/// Exact rational coordinate. Always kept in canonical reduced form by GMP.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Accepts `p/q`, integers and finite decimals (`2.5`, `-0.125`).
Rational parse_rational(std::string_view text);

/// `p/q`, or just `p` when the denominator is 1.
std::string format_rational(const Rational& value);

Integer floor(const Rational& value);
bool is_odd(const Integer& value);

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

}  // namespace veto
