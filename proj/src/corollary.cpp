#include "hdet/corollary.hpp"

#include <cmath>

#include "hdet/model.hpp"

namespace hdet {

std::string_view corollary_name(CorollaryKind kind) {
  switch (kind) {
    case CorollaryKind::MFold: return "MFold";
    case CorollaryKind::General1Fold: return "General1Fold";
    case CorollaryKind::Lambda1Fold: return "Lambda1Fold";
    case CorollaryKind::Base: return "Base";
  }
  return "unknown";
}

std::optional<CorollaryKind> parse_corollary_kind(std::string_view text) {
  for (CorollaryKind k : {CorollaryKind::MFold, CorollaryKind::General1Fold,
                          CorollaryKind::Lambda1Fold, CorollaryKind::Base}) {
    if (text == corollary_name(k)) return k;
  }
  return std::nullopt;
}

namespace {

double sq(double x) { return x * x; }

void check_beta(double beta) {
  if (!(beta >= 0 && beta < 1)) throw RangeError(Field::beta, "beta must lie in [0, 1)");
}
void check_lambda(double lambda) {
  if (!(lambda >= 1)) throw RangeError(Field::lambda, "lambda must be >= 1");
}

// lambda = 1, gamma = 0, general m
CorollaryValue m_fold(int m, double beta) {
  if (m < 1) throw RangeError(Field::m, "m must be >= 1");
  check_beta(beta);
  const double md = m;
  const double t = 1 - beta;
  const double psi1 = (2 * md + 1) * (3 * md + 1);
  const double psi2 = (md + 1) * sq(2 * md + 1);
  const double psi3 = sq(md + 1) * (3 * md + 1);
  const double v = ((3 * md + 1) * (7 * md + 4) -
                    std::sqrt(sq(md) * sq(3 * md + 1) + 8 * psi2 * (3 * md + 1))) /
                   (4 * psi1);
  if (beta <= v) {
    return {4 * t * t / (md + 1) * (t * t / (md + 1) + 1 / (3 * md + 1)), v};
  }
  const double shift = md * t * psi1 + 3 * psi2 - 2 * psi3;
  const double denom = psi3 * ((2 * md + 1) * t * t * psi1 - md * t * psi1 + psi3 - 2 * psi2);
  return {t * t / sq(2 * md + 1) * (4 - shift * shift / denom), v};
}

// m = 1, general lambda and gamma
CorollaryValue general_one_fold(double lambda, int gamma, double beta) {
  check_lambda(lambda);
  if (gamma < 0) throw RangeError(Field::gamma, "gamma must be >= 0");
  check_beta(beta);
  const double g = gamma;
  const double t = 1 - beta;
  const double l1 = lambda + 1, l2 = 2 * lambda + 1, l3 = 3 * lambda + 1;
  const double th1 = sq(g + 2) * (g + 3) * sq(l2) * l3;
  const double th2 = (g + 1) * (g + 2) * (g + 3) * sq(l1) * l2 * l3;
  const double th3 = sq(g + 1) * (g + 2) * l1 * sq(l1) * sq(l2);
  const double th4 = sq(g + 1) * (g + 3) * sq(sq(l1)) * l3;
  const double xi = 1 - (th2 + std::sqrt(th2 * th2 + 48 * th1 * th3)) / (8 * th1);
  if (beta <= xi) {
    return {8 * t * t / (sq(g + 1) * l1) *
                (2 * t * t / (sq(g + 1) * l1 * sq(l1)) + 3 / ((g + 2) * (g + 3) * l3)),
            xi};
  }
  const double shift = th2 * t + 9 * th3 - 4 * th4;
  const double denom = th4 * (4 * th1 * t * t - 2 * th2 * t - 12 * th3 + 4 * th4);
  return {4 * t * t / (sq(g + 1) * sq(g + 2) * sq(l2)) * (4 - shift * shift / denom), xi};
}

// m = 1, gamma = 0, general lambda
CorollaryValue lambda_one_fold(double lambda, double beta) {
  check_lambda(lambda);
  check_beta(beta);
  const double t = 1 - beta;
  const double l1 = lambda + 1, l2 = 2 * lambda + 1, l3 = 3 * lambda + 1;
  const double eta1 = sq(l2) * l3;
  const double eta2 = sq(l1) * l2 * l3;
  const double eta3 = l1 * sq(l1) * sq(l2);
  const double eta4 = sq(sq(l1)) * l3;
  const double eps = 1 - (sq(l1) * l3 + std::sqrt(sq(sq(l1)) * sq(l3) +
                                                  32 * l1 * sq(l1) * sq(l2) * l3)) /
                             (16 * l2 * l3);
  if (beta <= eps) {
    return {8 * t * t / l1 * (2 * t * t / (l1 * sq(l1)) + 1 / (2 * l3)), eps};
  }
  // With the prefactor 2 t^2 / (2 lambda + 1)^2 the leading bracket term is 2;
  // the gamma = 0 reduction of the general 1-fold form fixes it.
  const double shift = eta2 * t + 3 * eta3 - 2 * eta4;
  const double denom = eta4 * (8 * eta1 * t * t - 2 * eta2 * t - 4 * eta3 + 2 * eta4);
  return {2 * t * t / sq(l2) * (2 - shift * shift / denom), eps};
}

// m = 1, lambda = 1, gamma = 0
CorollaryValue base(double beta) {
  check_beta(beta);
  const double t = 1 - beta;
  const double threshold = (11 - std::sqrt(37.0)) / 12;
  if (beta <= threshold) return {t * t * (t * t + 0.5), threshold};
  return {t * t / 16 * (60 * beta * beta - 84 * beta - 25) / (9 * beta * beta - 15 * beta + 1),
          threshold};
}

}  // namespace

CorollaryValue corollary_bound(CorollaryKind kind, const CorollaryArgs& args) {
  switch (kind) {
    case CorollaryKind::MFold: return m_fold(args.m, args.beta);
    case CorollaryKind::General1Fold: return general_one_fold(args.lambda, args.gamma, args.beta);
    case CorollaryKind::Lambda1Fold: return lambda_one_fold(args.lambda, args.beta);
    case CorollaryKind::Base: return base(args.beta);
  }
  throw RangeError(Field::argument, "unknown corollary kind");
}

}  // namespace hdet
