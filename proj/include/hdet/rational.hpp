#pragma once

#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace hdet {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses an exact rational from `p/q`, an integer, or a decimal literal with
/// an optional exponent (`0.25`, `-3`, `1e-3`, `2.5E2`). Throws
/// std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: `p/q` in lowest terms, or `p` when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

bool is_integral(const Rational& value);

/// Moves an exact value into the evaluation scalar. Identity for Rational.
template <typename Scalar>
Scalar scalar_cast(const Rational& value) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return value;
  } else {
    return static_cast<Scalar>(to_double(value));
  }
}

/// Converts any supported argument (Rational, double, or Scalar itself) into
/// the evaluation scalar.
template <typename Scalar, typename T>
Scalar lift(const T& value) {
  if constexpr (std::is_same_v<T, Rational>) {
    return scalar_cast<Scalar>(value);
  } else {
    return Scalar(value);
  }
}

}  // namespace hdet
