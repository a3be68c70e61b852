#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "hdet/series.hpp"

namespace hdet {
namespace {

using Triple = CoefficientTriple<Rational>;

MFoldSeries<Rational> rational_series(int m, std::vector<Rational> c) { return {m, std::move(c)}; }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 12);
  return Rational(num(rng), den(rng));
}

TEST(RuscheweyhWeight, Examples) {
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(ruscheweyh_weight(0, k), Rational(1));
  EXPECT_EQ(ruscheweyh_weight(1, 1), Rational(2));
  EXPECT_EQ(ruscheweyh_weight(2, 2), Rational(6));
  EXPECT_EQ(ruscheweyh_weight(2, 1), Rational(3));
}

TEST(RuscheweyhWeight, Recurrence) {
  for (int gamma = 0; gamma <= 20; ++gamma) {
    EXPECT_EQ(ruscheweyh_weight(gamma, 1), Rational(gamma + 1));
    for (int k = 1; k < 50; ++k) {
      EXPECT_EQ(ruscheweyh_weight(gamma, k + 1),
                ruscheweyh_weight(gamma, k) * Rational(gamma + k + 1, k + 1))
          << "gamma=" << gamma << " k=" << k;
    }
  }
}

TEST(RuscheweyhWeight, LargeArgumentsStayExact) {
  // C(150, 50) has 40 digits, far beyond double precision.
  const Rational w = ruscheweyh_weight(100, 50);
  EXPECT_TRUE(is_integral(w));
  EXPECT_EQ(to_string(w), "20128660909731932294240234380929315748140");
}

TEST(ApplyRuscheweyh, Examples) {
  const auto f = rational_series(1, {Rational(1, 2), Rational(-3), Rational(7, 5)});
  EXPECT_EQ(apply_ruscheweyh(f, 0).coeffs, f.coeffs);

  const auto one = rational_series(1, {Rational(1), Rational(0), Rational(0)});
  EXPECT_EQ(apply_ruscheweyh(one, 1).coefficient(1), Rational(2));

  const auto two_fold = rational_series(2, {Rational(1)});
  const auto r = apply_ruscheweyh(two_fold, 2);
  EXPECT_EQ(r.coefficient(1), Rational(3));
  EXPECT_EQ(r.depth(), 1);
}

TEST(OperatorLhsCoeffs, Examples) {
  const auto ones = rational_series(1, {Rational(1), Rational(1), Rational(1)});
  const auto c = operator_lhs_coeffs(ones, Rational(1), 0);
  EXPECT_EQ(c.c_m, Rational(2));
  EXPECT_EQ(c.c_2m, Rational(3));
  EXPECT_EQ(c.c_3m, Rational(4));

  const auto ones2 = rational_series(2, {Rational(1), Rational(1), Rational(1)});
  const auto d = operator_lhs_coeffs(ones2, Rational(1), 0);
  EXPECT_EQ(d.c_m, Rational(3));
  EXPECT_EQ(d.c_2m, Rational(5));
  EXPECT_EQ(d.c_3m, Rational(7));

  const auto zeros = rational_series(3, {Rational(0), Rational(0), Rational(0)});
  const auto z = operator_lhs_coeffs(zeros, Rational(5, 2), 4);
  EXPECT_EQ(z.c_m, Rational(0));
  EXPECT_EQ(z.c_2m, Rational(0));
  EXPECT_EQ(z.c_3m, Rational(0));
}

TEST(OperatorLhsCoeffs, MatchesExplicitPrefactors) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + trial % 3;
    const int gamma = trial % 5;
    const Rational lambda = Rational(1) + Rational(trial % 7, 3);
    const auto f = rational_series(m, {random_rational(rng), random_rational(rng),
                                       random_rational(rng)});
    const Rational g1(gamma + 1), g2(gamma + 2), g3(gamma + 3);
    const auto c = operator_lhs_coeffs(f, lambda, gamma);
    EXPECT_EQ(c.c_m, g1 * (m * lambda + 1) * f.coefficient(1));
    EXPECT_EQ(c.c_2m, g1 * g2 * (2 * m * lambda + 1) * f.coefficient(2) / 2);
    EXPECT_EQ(c.c_3m, g1 * g2 * g3 * (3 * m * lambda + 1) * f.coefficient(3) / 6);
  }
}

TEST(OperatorLhsCoeffs, NeedsDepthThree) {
  const auto shallow = rational_series(1, {Rational(1), Rational(2)});
  EXPECT_THROW(operator_lhs_coeffs(shallow, Rational(1), 0), TruncationError);
}

TEST(InvertSeries, IdentityInvertsToIdentity) {
  const Triple b = invert_series(rational_series(2, {Rational(0), Rational(0), Rational(0)}));
  EXPECT_EQ(b.a_m1, Rational(0));
  EXPECT_EQ(b.a_2m1, Rational(0));
  EXPECT_EQ(b.a_3m1, Rational(0));
}

TEST(InvertSeries, MinusLogOneMinusZ) {
  const auto f = rational_series(1, {Rational(1, 2), Rational(1, 3), Rational(1, 4)});
  const Triple b = invert_series(f);
  EXPECT_EQ(b.a_m1, Rational(-1, 2));
  EXPECT_EQ(b.a_2m1, Rational(1, 6));
  EXPECT_EQ(b.a_3m1, Rational(-1, 24));

  // The inverse is 1 - exp(-w); its Taylor coefficients are -(-1)^k / k!.
  Rational factorial(1);
  std::vector<Rational> expected;
  for (int k = 1; k <= 4; ++k) {
    factorial *= k;
    expected.push_back((k % 2 == 0 ? Rational(-1) : Rational(1)) / factorial);
  }
  EXPECT_EQ(expected[0], Rational(1));
  EXPECT_EQ(b.a_m1, expected[1]);
  EXPECT_EQ(b.a_2m1, expected[2]);
  EXPECT_EQ(b.a_3m1, expected[3]);
}

TEST(InvertSeries, OneFoldMatchesClassicalFormula) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a2 = random_rational(rng), a3 = random_rational(rng), a4 = random_rational(rng);
    const Triple b = invert_series(rational_series(1, {a2, a3, a4}));
    EXPECT_EQ(b.a_m1, -a2);
    EXPECT_EQ(b.a_2m1, 2 * a2 * a2 - a3);
    EXPECT_EQ(b.a_3m1, -(5 * a2 * a2 * a2 - 5 * a2 * a3 + a4));
  }
}

TEST(InvertSeries, NeedsDepthThree) {
  EXPECT_THROW(invert_series(rational_series(3, {Rational(1), Rational(1)})), TruncationError);
}

template <typename Scalar>
DenseSeries<Scalar> identity_series(int order) {
  DenseSeries<Scalar> id = DenseSeries<Scalar>::Constant(order + 1, Scalar(0));
  id(1) = Scalar(1);
  return id;
}

TEST(InvertSeries, RoundTripExact) {
  std::mt19937_64 rng(5);
  for (int m = 1; m <= 3; ++m) {
    const int order = 3 * m + 1;
    for (int trial = 0; trial < 100; ++trial) {
      const MFoldSeries<Rational> f(m, {random_rational(rng), random_rational(rng),
                                        random_rational(rng)});
      const auto g = truncated_inverse(f);
      const auto fd = to_dense(f, order);
      const auto gd = to_dense(g, order);
      EXPECT_EQ(compose_truncated(fd, gd, order), identity_series<Rational>(order));
      EXPECT_EQ(compose_truncated(gd, fd, order), identity_series<Rational>(order));
    }
  }
}

TEST(InvertSeries, RoundTripDouble) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int m = 1; m <= 3; ++m) {
    const int order = 3 * m + 1;
    for (int trial = 0; trial < 100; ++trial) {
      const MFoldSeries<double> f(m, {coeff(rng), coeff(rng), coeff(rng)});
      const auto composed =
          compose_truncated(to_dense(f, order), to_dense(truncated_inverse(f), order), order);
      const double residual = (composed - identity_series<double>(order)).cwiseAbs().maxCoeff();
      EXPECT_LT(residual, 1e-12);
    }
  }
}

TEST(InvertSeries, ComplexCoefficients) {
  using C = std::complex<double>;
  const MFoldSeries<C> f(2, {C(0.3, -0.2), C(-0.1, 0.4), C(0.25, 0.05)});
  const auto composed = compose_truncated(to_dense(f, 7), to_dense(truncated_inverse(f), 7), 7);
  const auto id = identity_series<C>(7);
  EXPECT_LT((composed - id).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(ToDense, ChecksTruncation) {
  const auto f = rational_series(2, {Rational(1), Rational(2), Rational(3)});
  const auto d = to_dense(f, 7);
  EXPECT_EQ(d(0), Rational(0));
  EXPECT_EQ(d(1), Rational(1));
  EXPECT_EQ(d(2), Rational(0));
  EXPECT_EQ(d(3), Rational(1));
  EXPECT_EQ(d(5), Rational(2));
  EXPECT_EQ(d(7), Rational(3));
  EXPECT_THROW(to_dense(f, 8), TruncationError);
  EXPECT_THROW(f.coefficient(4), TruncationError);
}

TEST(HankelDeterminant, Examples) {
  const std::vector<Rational> flat{Rational(1), Rational(0), Rational(0)};
  EXPECT_EQ(hankel_determinant<Rational>(flat, 2, 1), Rational(0));

  const std::vector<Rational> a{Rational(1), Rational(2), Rational(1), Rational(3)};
  EXPECT_EQ(hankel_determinant<Rational>(a, 2, 2), Rational(5));
}

TEST(HankelDeterminant, SecondOrderIsA2A4MinusA3Squared) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational a2 = random_rational(rng), a3 = random_rational(rng), a4 = random_rational(rng);
    const std::vector<Rational> a{Rational(1), a2, a3, a4};
    EXPECT_EQ(hankel_determinant<Rational>(a, 2, 2), a2 * a4 - a3 * a3);
    EXPECT_EQ(hankel_determinant<Rational>(a, 2, 1), fekete_szego(a2, a3, Rational(1)));
  }
}

TEST(HankelDeterminant, OrderOneIsTheCoefficient) {
  const std::vector<Rational> a{Rational(1), Rational(-2), Rational(7, 3), Rational(5)};
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(hankel_determinant<Rational>(a, 1, n), a[static_cast<std::size_t>(n - 1)]);
  }
}

TEST(HankelDeterminant, ThirdOrderByCofactors) {
  const std::vector<Rational> a{Rational(1), Rational(2), Rational(-1), Rational(3),
                               Rational(1, 2)};
  // | 1  2 -1 |
  // | 2 -1  3 |
  // |-1  3 1/2|
  const Rational expected = Rational(1) * (Rational(-1, 2) - 9) - 2 * (Rational(1) + 3) +
                            Rational(-1) * (6 - 1);
  EXPECT_EQ(hankel_determinant<Rational>(a, 3, 1), expected);

  const std::vector<double> ad{1, 2, -1, 3, 0.5};
  EXPECT_NEAR(hankel_determinant<double>(ad, 3, 1), to_double(expected), 1e-12);
}

TEST(HankelDeterminant, MissingCoefficients) {
  const std::vector<Rational> a{Rational(1), Rational(2), Rational(3)};
  EXPECT_THROW(hankel_determinant<Rational>(a, 2, 2), IndexError);
  EXPECT_THROW(hankel_determinant<Rational>(a, 3, 1), IndexError);
  EXPECT_NO_THROW(hankel_determinant<Rational>(a, 2, 1));
}

TEST(FeketeSzego, Examples) {
  EXPECT_EQ(fekete_szego(Rational(1), Rational(2), Rational(0)), Rational(2));
  EXPECT_EQ(fekete_szego(Rational(2), Rational(3), Rational(1, 2)), Rational(1));
  EXPECT_DOUBLE_EQ(fekete_szego(2.0, 3.0, 0.5), 1.0);
}

TEST(SecondHankel, MatchesDeterminantForm) {
  const Triple t{Rational(2), Rational(1), Rational(3)};
  EXPECT_EQ(second_hankel(t), Rational(5));
}

}  // namespace
}  // namespace hdet
