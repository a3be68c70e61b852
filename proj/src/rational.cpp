#include "hdet/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hdet {
namespace {

std::string strip_zeros(std::string_view s) {
  std::string out(s);
  out.erase(0, std::min(out.find_first_not_of('0'), out.size() - 1));
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer pow10(unsigned exponent) {
  Integer result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= 10;
  return result;
}

[[noreturn]] void reject(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) reject(original);
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) reject(original);
  if (!int_part.empty() && !all_digits(int_part)) reject(original);
  if (!frac_part.empty() && !all_digits(frac_part)) reject(original);

  // cpp_int reads a leading 0 as an octal prefix.
  std::string digits = std::string(int_part) + std::string(frac_part);
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  Integer mantissa(digits.empty() ? std::string("0") : digits);
  if (negative) mantissa = -mantissa;

  exponent -= static_cast<long>(frac_part.size());
  if (exponent >= 0) {
    return Rational(mantissa * pow10(static_cast<unsigned>(exponent)));
  }
  return Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) reject(text);
  std::string_view trimmed = text.substr(first, last - first + 1);

  if (auto slash = trimmed.find('/'); slash != std::string_view::npos) {
    std::string_view num = trimmed.substr(0, slash);
    std::string_view den = trimmed.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) reject(text);
    Integer n{strip_zeros(num)};
    Integer d{strip_zeros(den)};
    if (d == 0) reject(text);
    if (negative) n = -n;
    return Rational(n, d);
  }
  return parse_decimal(trimmed, text);
}

std::string to_string(const Rational& value) {
  const Integer den = boost::multiprecision::denominator(value);
  const Integer num = boost::multiprecision::numerator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace hdet
