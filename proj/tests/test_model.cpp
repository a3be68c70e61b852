#include <gtest/gtest.h>

#include <random>

#include "hdet/model.hpp"

namespace hdet {
namespace {

Field failing_field(auto&& call) {
  try {
    call();
  } catch (const RangeError& e) {
    return e.field();
  }
  ADD_FAILURE() << "expected RangeError";
  return Field::argument;
}

TEST(ParseRational, AcceptsFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("1/3"), Rational(1, 3));
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational("2"), Rational(2));
  EXPECT_EQ(parse_rational(" 2 "), Rational(2));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("1.5e-1"), Rational(3, 20));
  EXPECT_EQ(parse_rational("2E2"), Rational(200));
}

TEST(ParseRational, LeadingZerosAreDecimal) {
  EXPECT_EQ(parse_rational("0.9"), Rational(9, 10));
  EXPECT_EQ(parse_rational("0.09"), Rational(9, 100));
  EXPECT_EQ(parse_rational("007/010"), Rational(7, 10));
  EXPECT_EQ(parse_rational("08"), Rational(8));
  EXPECT_EQ(parse_rational("0"), Rational(0));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
}

TEST(ParseRational, RejectsGarbage) {
  for (const char* bad : {"", " ", "x", "1/0", "1.2.3", "1/", "/2", "1e", "--1", "1/-2", "0x10"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(ParseRational, ToStringRoundTrips) {
  EXPECT_EQ(to_string(Rational(3, 20)), "3/20");
  EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
  for (const char* text : {"7/3", "-1/8", "12", "0"}) {
    EXPECT_EQ(to_string(parse_rational(text)), text);
  }
}

TEST(ValidateParams, Examples) {
  const Params base = validate_params(1, 1.0, 0, 0.0);
  EXPECT_EQ(base.m, 1);
  EXPECT_EQ(base.lambda, Rational(1));
  EXPECT_EQ(base.gamma, 0);
  EXPECT_EQ(base.beta, Rational(0));

  EXPECT_EQ(failing_field([] { validate_params(1, 0.5, 0, 0.0); }), Field::lambda);

  const Params near = validate_params(2, 1.0, 3, 0.99);
  EXPECT_EQ(near.gamma, 3);
  EXPECT_EQ(near.beta, Rational(0.99));
}

TEST(ValidateParams, ClosedAndOpenEndpoints) {
  EXPECT_NO_THROW(validate_params(1, Rational(1), 0, Rational(0)));
  EXPECT_EQ(failing_field([] { validate_params(1, Rational(1), 0, Rational(1)); }), Field::beta);
  EXPECT_EQ(failing_field([] { validate_params(1, Rational(1), 0, Rational(-1, 100)); }),
            Field::beta);
  EXPECT_EQ(failing_field([] { validate_params(0, Rational(1), 0, Rational(0)); }), Field::m);
  EXPECT_EQ(failing_field([] { validate_params(1, Rational(1), -1, Rational(0)); }), Field::gamma);
  EXPECT_EQ(failing_field([] {
              validate_params(Rational(1), Rational(1), Rational(1, 2), Rational(0));
            }),
            Field::gamma);
  EXPECT_EQ(failing_field([] {
              validate_params(Rational(3, 2), Rational(1), Rational(0), Rational(0));
            }),
            Field::m);
}

TEST(ValidateParams, ReportsFirstViolation) {
  EXPECT_EQ(failing_field([] { validate_params(0, Rational(0), -1, Rational(2)); }), Field::m);
  EXPECT_EQ(failing_field([] { validate_params(1, Rational(0), -1, Rational(2)); }), Field::lambda);
  EXPECT_EQ(failing_field([] { validate_params(1, Rational(1), -1, Rational(2)); }), Field::gamma);
}

TEST(ValidateParams, RejectsNonFiniteDoubles) {
  EXPECT_EQ(failing_field([] { validate_params(1, std::nan(""), 0, 0.0); }), Field::lambda);
  EXPECT_EQ(failing_field([] { validate_params(1, 1.0, 0, INFINITY); }), Field::beta);
}

TEST(ValidateParams, TotalOverRandomInputs) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-3, 6);
  std::uniform_int_distribution<int> num(-40, 80);
  std::uniform_int_distribution<int> den(1, 20);
  for (int i = 0; i < 2000; ++i) {
    const int m = small(rng);
    const int gamma = small(rng);
    const Rational lambda(num(rng), den(rng));
    const Rational beta(num(rng), den(rng) * 4);
    const bool valid = m >= 1 && lambda >= 1 && gamma >= 0 && beta >= 0 && beta < 1;
    try {
      const Params p = validate_params(m, lambda, gamma, beta);
      EXPECT_TRUE(valid);
      EXPECT_EQ(validate_params(p.m, p.lambda, p.gamma, p.beta), p);
    } catch (const RangeError&) {
      EXPECT_FALSE(valid);
    }
  }
}

TEST(ParseParams, ExactInputsAndFieldErrors) {
  const Params p = parse_params("2", "3/2", "1", "1/3");
  EXPECT_EQ(p.m, 2);
  EXPECT_EQ(p.lambda, Rational(3, 2));
  EXPECT_EQ(p.beta, Rational(1, 3));

  EXPECT_EQ(failing_field([] { parse_params("two", "1", "0", "0"); }), Field::m);
  EXPECT_EQ(failing_field([] { parse_params("1", "abc", "0", "0"); }), Field::lambda);
  EXPECT_EQ(failing_field([] { parse_params("1", "1", "0.5", "0"); }), Field::gamma);
  EXPECT_EQ(failing_field([] { parse_params("1", "1", "0", "1"); }), Field::beta);
}

TEST(WithBeta, ChangesOnlyBeta) {
  const Params p = parse_params("3", "2", "2", "0");
  const Params q = with_beta(p, Rational(9, 10));
  EXPECT_EQ(q.m, 3);
  EXPECT_EQ(q.lambda, Rational(2));
  EXPECT_EQ(q.gamma, 2);
  EXPECT_EQ(q.beta, Rational(9, 10));
  EXPECT_THROW(with_beta(p, Rational(1)), RangeError);
}

}  // namespace
}  // namespace hdet
