#include "veto/rational.hpp"

#include <cctype>

#include "veto/error.hpp"

namespace veto {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::tied_points: return "TiedPoints";
    case ErrorKind::arity_mismatch: return "ArityMismatch";
    case ErrorKind::unsupported_family: return "UnsupportedFamily";
    case ErrorKind::bad_parameters: return "BadParameters";
    case ErrorKind::too_many_edges: return "TooManyEdges";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::not_unit: return "NotUnit";
    case ErrorKind::not_proper: return "NotProper";
    case ErrorKind::not_midpoint_unit: return "NotMidpointUnit";
    case ErrorKind::not_unit_intervals: return "NotUnitIntervals";
    case ErrorKind::invalid_representation: return "InvalidRepresentation";
  }
  return "Error";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorKind::parse, "bad number '" + std::string(whole) + "'");
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw Error(ErrorKind::parse, "bad denominator in '" + std::string(text) + "'");
    Integer den(std::string{den_text});
    if (den == 0) throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) throw Error(ErrorKind::parse, "bad decimal '" + std::string(text) + "'");
    std::string_view whole = text.substr(0, dot);
    bool negative = !whole.empty() && whole.front() == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole = negative ? "-0" : "0";
    Integer int_part = parse_integer(whole, text);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer frac_part(std::string{frac});
    Rational magnitude = Rational(abs(int_part)) + Rational(frac_part, scale);
    return negative ? Rational(-magnitude) : magnitude;
  }
  return Rational(parse_integer(text, text));
}

std::string format_rational(const Rational& value) {
  Integer num = numerator(value);
  Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer floor(const Rational& value) {
  Integer num = numerator(value);
  Integer den = denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

bool is_odd(const Integer& value) {
  return bit_test(abs(value), 0);
}

}  // namespace veto
