#include "hdet/model.hpp"

#include <cmath>
#include <limits>

namespace hdet {

std::string_view field_name(Field field) {
  switch (field) {
    case Field::m: return "m";
    case Field::lambda: return "lambda";
    case Field::gamma: return "gamma";
    case Field::beta: return "beta";
    case Field::rho: return "rho";
    case Field::mu: return "mu";
    case Field::argument: return "argument";
  }
  return "unknown";
}

namespace {

void check_beta(const Rational& beta) {
  if (beta < 0 || beta >= 1) {
    throw RangeError(Field::beta, "beta must lie in [0, 1), got " + to_string(beta));
  }
}

int to_int(const Rational& value, Field field) {
  const Integer n = boost::multiprecision::numerator(value);
  if (n > std::numeric_limits<int>::max()) {
    throw RangeError(field, std::string(field_name(field)) + " is too large");
  }
  return n.convert_to<int>();
}

}  // namespace

Params validate_params(const Rational& m, const Rational& lambda,
                       const Rational& gamma, const Rational& beta) {
  if (m < 1 || !is_integral(m)) {
    throw RangeError(Field::m, "m must be an integer >= 1, got " + to_string(m));
  }
  if (lambda < 1) {
    throw RangeError(Field::lambda, "lambda must be >= 1, got " + to_string(lambda));
  }
  if (gamma < 0 || !is_integral(gamma)) {
    throw RangeError(Field::gamma,
                     "gamma must be a nonnegative integer, got " + to_string(gamma));
  }
  check_beta(beta);
  return Params{to_int(m, Field::m), lambda, to_int(gamma, Field::gamma), beta};
}

Params validate_params(int m, const Rational& lambda, int gamma, const Rational& beta) {
  return validate_params(Rational(m), lambda, Rational(gamma), beta);
}

Params validate_params(int m, double lambda, int gamma, double beta) {
  // cpp_rational converts a finite double exactly.
  if (m >= 1 && !std::isfinite(lambda)) throw RangeError(Field::lambda, "lambda must be finite");
  if (m >= 1 && lambda >= 1 && gamma >= 0 && !std::isfinite(beta)) {
    throw RangeError(Field::beta, "beta must be finite");
  }
  return validate_params(Rational(m), std::isfinite(lambda) ? Rational(lambda) : Rational(0),
                         Rational(gamma), std::isfinite(beta) ? Rational(beta) : Rational(-1));
}

Params parse_params(std::string_view m, std::string_view lambda,
                    std::string_view gamma, std::string_view beta) {
  auto parse = [](std::string_view text, Field field) {
    try {
      return parse_rational(text);
    } catch (const std::invalid_argument& e) {
      throw RangeError(field, std::string(field_name(field)) + ": " + e.what());
    }
  };
  return validate_params(parse(m, Field::m), parse(lambda, Field::lambda),
                         parse(gamma, Field::gamma), parse(beta, Field::beta));
}

Params with_beta(const Params& p, const Rational& beta) {
  check_beta(beta);
  Params q = p;
  q.beta = beta;
  return q;
}

}  // namespace hdet
