#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hdet/rational.hpp"

namespace hdet {

/// Which quantity an out-of-domain error refers to.
enum class Field { m, lambda, gamma, beta, rho, mu, argument };

std::string_view field_name(Field field);

class RangeError : public std::domain_error {
 public:
  RangeError(Field field, const std::string& what)
      : std::domain_error(what), field_(field) {}

  Field field() const noexcept { return field_; }

 private:
  Field field_;
};

/// The quadruple (m, lambda, gamma, beta) selecting one function class.
///
/// Always holds m >= 1, lambda >= 1, gamma >= 0 and 0 <= beta < 1. lambda and
/// beta are exact so that the omega products and the branch test stay exact.
struct Params {
  int m = 1;
  Rational lambda = 1;
  int gamma = 0;
  Rational beta = 0;

  friend bool operator==(const Params&, const Params&) = default;
};

/// Checks m, lambda, gamma, beta in that order and throws RangeError naming the
/// first violated constraint. Values are never clamped.
Params validate_params(const Rational& m, const Rational& lambda,
                       const Rational& gamma, const Rational& beta);

Params validate_params(int m, const Rational& lambda, int gamma, const Rational& beta);

/// Converts the doubles exactly (binary expansion), so 0.1 is not 1/10. Prefer
/// the string overload when decimal exactness matters.
Params validate_params(int m, double lambda, int gamma, double beta);

/// Parses each field with parse_rational and validates. A malformed number is
/// reported as a RangeError on that field.
Params parse_params(std::string_view m, std::string_view lambda,
                    std::string_view gamma, std::string_view beta);

/// Same parameters with a different beta; revalidates beta only.
Params with_beta(const Params& p, const Rational& beta);

}  // namespace hdet
