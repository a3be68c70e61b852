#include "hdet/bound.hpp"

#include <limits>
#include <string>

namespace hdet {

std::string_view branch_name(Branch branch) {
  return branch == Branch::AtRhoTwo ? "AtRhoTwo" : "AtRhoStar";
}

namespace detail {
namespace {

template <typename T>
void check_interval(const T& value, const T& hi, Field field) {
  if (!(value >= T(0) && value <= hi)) {
    throw RangeError(field, std::string(field_name(field)) + " must lie in [0, " +
                                (hi == T(2) ? "2" : "1") + "]");
  }
}

}  // namespace

void check_rho(double rho) { check_interval(rho, 2.0, Field::rho); }
void check_rho(const Rational& rho) { check_interval(rho, Rational(2), Field::rho); }
void check_mu(double mu) { check_interval(mu, 1.0, Field::mu); }
void check_mu(const Rational& mu) { check_interval(mu, Rational(1), Field::mu); }

}  // namespace detail

namespace {

constexpr double kDegenerateQuartic = 1e-13;

struct CriticalPoint {
  Rational numerator;  // 16 omega4 - 4 omega2 t - 36 omega3
  Rational quartic;    // omega1 t^2 - 2 omega2 t - 12 omega3 + 4 omega4
};

CriticalPoint critical_point(const Params& p) {
  const OmegaSet<Rational> w = omega_set<Rational>(p);
  const Rational t = 1 - p.beta;
  return {16 * w.omega4 - 4 * w.omega2 * t - 36 * w.omega3,
          w.omega1 * t * t - 2 * w.omega2 * t - 12 * w.omega3 + 4 * w.omega4};
}

}  // namespace

double tau(const Params& p) {
  const OmegaSet<Rational> w = omega_set<Rational>(p);
  const double root = std::sqrt(to_double(w.omega2 * w.omega2 + 12 * w.omega1 * w.omega3));
  return 1.0 - (to_double(w.omega2) + root) / (2.0 * to_double(w.omega1));
}

bool selects_endpoint_branch(const Params& p) {
  const OmegaSet<Rational> w = omega_set<Rational>(p);
  const Rational t = 1 - p.beta;
  return w.omega1 * t * t - w.omega2 * t - 3 * w.omega3 >= 0;
}

std::optional<double> rho_two_formula(const Params& p, double beta) {
  const OmegaSet<double> w = omega_set<double>(p);
  const double t = 1.0 - beta;
  const double quartic = w.omega1 * t * t - 2 * w.omega2 * t - 12 * w.omega3 + 4 * w.omega4;
  if (std::abs(quartic) < kDegenerateQuartic) return std::nullopt;
  const double radicand = (16 * w.omega4 - 4 * w.omega2 * t - 36 * w.omega3) / quartic;
  if (!(radicand > 0)) return std::nullopt;
  return std::sqrt(radicand);
}

std::optional<double> rho_two(const Params& p) {
  const CriticalPoint cp = critical_point(p);
  if (abs(cp.quartic) < Rational(kDegenerateQuartic)) return std::nullopt;
  const Rational radicand = cp.numerator / cp.quartic;
  if (radicand <= 0 || radicand >= 4) return std::nullopt;
  return std::sqrt(to_double(radicand));
}

KExtremes k_extremes(const Params& p) {
  KExtremes e;
  e.k_at_zero = to_double(k_at_zero<Rational>(p, p.beta));
  e.k_at_two = to_double(branch_at_rho_two<Rational>(p, p.beta));
  if (rho_two(p)) e.k_at_rho2 = to_double(branch_at_rho_star<Rational>(p, p.beta));
  return e;
}

BoundResult theorem_bound(const Params& p) {
  BoundResult r;
  r.tau = tau(p);
  if (selects_endpoint_branch(p)) {
    r.branch = Branch::AtRhoTwo;
    r.value = to_double(branch_at_rho_two<Rational>(p, p.beta));
    r.rho_star = 2.0;
  } else {
    r.branch = Branch::AtRhoStar;
    r.value = to_double(branch_at_rho_star<Rational>(p, p.beta));
    r.rho_star = rho_two(p).value_or(std::numeric_limits<double>::quiet_NaN());
  }
  return r;
}

}  // namespace hdet
