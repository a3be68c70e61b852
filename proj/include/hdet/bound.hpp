#pragma once

#include <cmath>
#include <optional>
#include <string_view>

#include "hdet/model.hpp"
#include "hdet/rational.hpp"

namespace hdet {

/// The four parameter products governing the bound. Independent of beta and
/// strictly positive for every valid Params.
template <typename Scalar>
struct OmegaSet {
  Scalar omega1{};
  Scalar omega2{};
  Scalar omega3{};
  Scalar omega4{};
};

/// Coefficients of the surrogate quadratic form
/// F(mu1, mu2) = F1 + F2 (mu1 + mu2) + F3 (mu1^2 + mu2^2) + F4 (mu1 + mu2)^2
/// at a fixed modulus rho = |p_m|.
template <typename Scalar>
struct FCoeffs {
  Scalar rho{};
  Scalar F1{};
  Scalar F2{};
  Scalar F3{};
  Scalar F4{};
};

/// K(rho) = t^2 / (4 D) * (quartic rho^4 + quadratic rho^2 + constant), t = 1 - beta.
template <typename Scalar>
struct KPolynomial {
  Scalar scale{};      // t^2 / (4 D)
  Scalar quartic{};    // omega1 t^2 - 2 omega2 t - 12 omega3 + 4 omega4
  Scalar quadratic{};  // 8 omega2 t + 72 omega3 - 32 omega4
  Scalar constant{};   // 64 omega4
};

enum class Branch { AtRhoTwo, AtRhoStar };

std::string_view branch_name(Branch branch);

struct BoundResult {
  double value = 0;
  Branch branch = Branch::AtRhoTwo;
  /// Branch threshold; may be negative, in which case every valid beta takes
  /// the interior branch.
  double tau = 0;
  /// Maximizer of K: 2 on AtRhoTwo, the interior critical point on AtRhoStar
  /// (NaN if that critical point does not exist).
  double rho_star = 2;
};

struct KExtremes {
  double k_at_zero = 0;
  double k_at_two = 0;
  std::optional<double> k_at_rho2;
};

namespace detail {

template <typename Scalar>
struct ClassFactors {
  Scalar m, m_plus_1;
  Scalar g1, g2, g3;  // gamma + 1, gamma + 2, gamma + 3
  Scalar l1, l2, l3;  // m lambda + 1, 2 m lambda + 1, 3 m lambda + 1
};

template <typename Scalar>
ClassFactors<Scalar> class_factors(const Params& p) {
  const Scalar m(p.m);
  const Scalar ml = m * scalar_cast<Scalar>(p.lambda);
  const Scalar g(p.gamma);
  const Scalar one(1);
  return {m,      m + one,          g + one,           g + Scalar(2), g + Scalar(3),
          ml + one, Scalar(2) * ml + one, Scalar(3) * ml + one};
}

template <typename Scalar>
Scalar square(const Scalar& x) {
  return x * x;
}

void check_rho(double rho);
void check_rho(const Rational& rho);
void check_mu(double mu);
void check_mu(const Rational& mu);

}  // namespace detail

template <typename Scalar>
OmegaSet<Scalar> omega_set(const Params& p) {
  using detail::square;
  const auto c = detail::class_factors<Scalar>(p);
  return {square(c.m_plus_1) * square(c.g2) * c.g3 * square(c.l2) * c.l3,
          c.m * c.g1 * c.g2 * c.g3 * square(c.l1) * c.l2 * c.l3,
          square(c.g1) * c.g2 * c.l1 * square(c.l1) * square(c.l2),
          square(c.g1) * c.g3 * square(square(c.l1)) * c.l3};
}

/// Branch threshold 1 - (omega2 + sqrt(omega2^2 + 12 omega1 omega3)) / (2 omega1).
///
/// The discriminant is formed exactly; only the square root rounds, so the
/// result carries a relative error of a few ulp (well inside 1e-14).
double tau(const Params& p);

/// Exact test for beta <= tau. With t = 1 - beta > 0 this is
/// omega1 t^2 - omega2 t - 3 omega3 >= 0, since tau corresponds to the positive
/// root of that quadratic in t.
bool selects_endpoint_branch(const Params& p);

/// F1..F4 at modulus rho for class parameters p with beta overridden. Throws
/// RangeError if rho is outside [0, 2]. beta is not range-checked so the
/// formulas can be probed at formal points such as beta = tau.
template <typename Scalar>
FCoeffs<Scalar> f_coeffs(const Params& p, const Scalar& rho, const Scalar& beta) {
  using detail::square;
  detail::check_rho(rho);
  const auto c = detail::class_factors<Scalar>(p);
  const Scalar t = Scalar(1) - beta;
  const Scalar t2 = t * t;
  const Scalar r2 = rho * rho;
  const Scalar gap = Scalar(4) - r2;  // 4 - rho^2
  const Scalar common = Scalar(3) * t2 / (square(c.g1) * c.g2 * c.g3 * c.l1 * c.l3);

  FCoeffs<Scalar> f;
  f.rho = rho;
  f.F1 = square(c.m_plus_1) * t2 * t2 * r2 * r2 /
             (Scalar(4) * square(square(c.g1)) * square(square(c.l1))) +
         common * r2 * r2 / Scalar(2) + common * rho * gap;
  f.F2 = c.m * t2 * t * r2 * gap /
             (Scalar(4) * square(c.g1) * c.g1 * c.g2 * square(c.l1) * c.l2) +
         common * r2 * gap / Scalar(2);
  f.F3 = common * r2 * gap / Scalar(4) - common * rho * gap / Scalar(2);
  f.F4 = t2 * gap * gap / (Scalar(4) * square(c.g1) * square(c.g2) * square(c.l2));
  return f;
}

template <typename Scalar>
FCoeffs<Scalar> f_coeffs(const Params& p, const Scalar& rho) {
  return f_coeffs(p, rho, scalar_cast<Scalar>(p.beta));
}

template <typename Scalar>
Scalar f_surface(const FCoeffs<Scalar>& f, const Scalar& mu1, const Scalar& mu2) {
  const Scalar s = mu1 + mu2;
  return f.F1 + f.F2 * s + f.F3 * (mu1 * mu1 + mu2 * mu2) + f.F4 * s * s;
}

/// Surrogate surface at (rho, mu1, mu2); throws RangeError outside
/// [0,2] x [0,1] x [0,1].
template <typename Scalar>
Scalar f_surface(const Params& p, const Scalar& rho, const Scalar& mu1, const Scalar& mu2) {
  detail::check_mu(mu1);
  detail::check_mu(mu2);
  return f_surface(f_coeffs(p, rho), mu1, mu2);
}

/// K(rho) = F(1, 1) = F1 + 2 (F2 + F3) + 4 F4.
template <typename Scalar>
Scalar k_of_rho(const Params& p, const Scalar& rho, const Scalar& beta) {
  const FCoeffs<Scalar> f = f_coeffs(p, rho, beta);
  return f.F1 + Scalar(2) * (f.F2 + f.F3) + Scalar(4) * f.F4;
}

template <typename Scalar>
Scalar k_of_rho(const Params& p, const Scalar& rho) {
  return k_of_rho(p, rho, scalar_cast<Scalar>(p.beta));
}

/// Expanded even quartic of K in rho, assembled from the omega products.
template <typename Scalar>
KPolynomial<Scalar> k_polynomial(const Params& p, const Scalar& beta) {
  using detail::square;
  const auto c = detail::class_factors<Scalar>(p);
  const OmegaSet<Scalar> w = omega_set<Scalar>(p);
  const Scalar t = Scalar(1) - beta;
  const Scalar denominator = square(square(c.g1)) * square(c.g2) * c.g3 *
                             square(square(c.l1)) * square(c.l2) * c.l3;
  KPolynomial<Scalar> k;
  k.scale = t * t / (Scalar(4) * denominator);
  k.quartic = w.omega1 * t * t - Scalar(2) * w.omega2 * t - Scalar(12) * w.omega3 +
              Scalar(4) * w.omega4;
  k.quadratic = Scalar(8) * w.omega2 * t + Scalar(72) * w.omega3 - Scalar(32) * w.omega4;
  k.constant = Scalar(64) * w.omega4;
  return k;
}

/// Second evaluation path for K through the expanded quartic.
template <typename Scalar>
Scalar k_expanded(const Params& p, const Scalar& rho, const Scalar& beta) {
  detail::check_rho(rho);
  const KPolynomial<Scalar> k = k_polynomial(p, beta);
  const Scalar r2 = rho * rho;
  return k.scale * ((k.quartic * r2 + k.quadratic) * r2 + k.constant);
}

template <typename Scalar>
Scalar k_expanded(const Params& p, const Scalar& rho) {
  return k_expanded(p, rho, scalar_cast<Scalar>(p.beta));
}

/// K'(rho) = t^2 / D * (quartic rho^3 + quadratic / 2 * rho).
template <typename Scalar>
Scalar k_prime(const Params& p, const Scalar& rho, const Scalar& beta) {
  detail::check_rho(rho);
  const KPolynomial<Scalar> k = k_polynomial(p, beta);
  return Scalar(4) * k.scale * (k.quartic * rho * rho * rho + k.quadratic / Scalar(2) * rho);
}

template <typename Scalar>
Scalar k_prime(const Params& p, const Scalar& rho) {
  return k_prime(p, rho, scalar_cast<Scalar>(p.beta));
}

/// Value of F on the whole square at rho = 2, where F2 = F3 = F4 = 0.
template <typename Scalar>
Scalar surface_at_rho_two(const Params& p, const Scalar& beta) {
  using detail::square;
  const auto c = detail::class_factors<Scalar>(p);
  const Scalar t = Scalar(1) - beta;
  const Scalar t2 = t * t;
  return (Scalar(4) * c.g2 * c.g3 * c.l3 * square(c.m_plus_1) * t2 * t2 +
          Scalar(24) * square(c.g1) * c.l1 * square(c.l1) * t2) /
         (square(square(c.g1)) * c.g2 * c.g3 * square(square(c.l1)) * c.l3);
}

/// First branch of the bound, K(2).
template <typename Scalar>
Scalar branch_at_rho_two(const Params& p, const Scalar& beta) {
  using detail::square;
  const auto c = detail::class_factors<Scalar>(p);
  const Scalar t = Scalar(1) - beta;
  return Scalar(4) * t * t / (square(c.g1) * c.l1) *
         (square(c.m_plus_1) * t * t / (square(c.g1) * c.l1 * square(c.l1)) +
          Scalar(6) / (c.g2 * c.g3 * c.l3));
}

/// Second branch of the bound, K at the interior critical point.
template <typename Scalar>
Scalar branch_at_rho_star(const Params& p, const Scalar& beta) {
  using detail::square;
  const auto c = detail::class_factors<Scalar>(p);
  const OmegaSet<Scalar> w = omega_set<Scalar>(p);
  const Scalar t = Scalar(1) - beta;
  const Scalar quartic = w.omega1 * t * t - Scalar(2) * w.omega2 * t -
                         Scalar(12) * w.omega3 + Scalar(4) * w.omega4;
  const Scalar shift = w.omega2 * t + Scalar(9) * w.omega3 - Scalar(4) * w.omega4;
  return Scalar(4) * t * t / (square(c.g1) * square(c.g2) * square(c.l2)) *
         (Scalar(4) - shift * shift / (w.omega4 * quartic));
}

/// K(0) = 16 t^2 / ((gamma+1)^2 (gamma+2)^2 (2 m lambda + 1)^2).
template <typename Scalar>
Scalar k_at_zero(const Params& p, const Scalar& beta) {
  using detail::square;
  const auto c = detail::class_factors<Scalar>(p);
  const Scalar t = Scalar(1) - beta;
  return Scalar(16) * t * t / (square(c.g1) * square(c.g2) * square(c.l2));
}

/// Raw critical-point formula sqrt((16 omega4 - 4 omega2 t - 36 omega3) / quartic),
/// without the (0, 2) window. Absent when the quartic coefficient is within
/// 1e-13 of zero or the radicand is not positive.
std::optional<double> rho_two_formula(const Params& p, double beta);

/// Interior critical point of K, present only when it lies strictly inside
/// (0, 2). Evaluated exactly up to the final square root.
std::optional<double> rho_two(const Params& p);

KExtremes k_extremes(const Params& p);

BoundResult theorem_bound(const Params& p);

}  // namespace hdet
