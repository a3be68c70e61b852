#include "hdet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <boost/random/uniform_real_distribution.hpp>

#include "hdet/bound.hpp"
#include "hdet/parallel.hpp"

namespace hdet {

bool CaratheodorySample::valid() const {
  return rho >= 0 && rho <= 2 && std::abs(x) <= 1 && std::abs(y) <= 1 && std::abs(z) <= 1 &&
         std::abs(w) <= 1;
}

PQDifferences reconstruct_pq(const CaratheodorySample& s) {
  const double r = s.rho;
  const double gap = 4 - r * r;
  const double nx = 1 - std::norm(s.x);
  const double ny = 1 - std::norm(s.y);

  PQDifferences d;
  d.p2m_minus_q2m = gap / 2 * (s.x - s.y);
  d.p3m_minus_q3m = r * r * r / 2 + r * gap / 2 * (s.x + s.y) -
                    r * gap / 4 * (s.x * s.x + s.y * s.y) + gap / 2 * (nx * s.z - ny * s.w);
  d.p2m_plus_q2m = r * r + gap / 2 * (s.x + s.y);

  d.p2m = (d.p2m_plus_q2m + d.p2m_minus_q2m) / 2.0;
  d.q2m = (d.p2m_plus_q2m - d.p2m_minus_q2m) / 2.0;
  // third coefficients of p (first coefficient rho) and q (first coefficient -rho)
  d.p3m = (r * r * r + 2 * gap * r * s.x - r * gap * s.x * s.x + 2 * gap * nx * s.z) / 4.0;
  d.q3m = (-r * r * r - 2 * gap * r * s.y + r * gap * s.y * s.y + 2 * gap * ny * s.w) / 4.0;
  return d;
}

namespace {

struct Factors {
  double m, t, g1, g2, g3, l1, l2, l3;
};

Factors factors(const Params& p) {
  const auto c = detail::class_factors<double>(p);
  return {c.m, 1 - to_double(p.beta), c.g1, c.g2, c.g3, c.l1, c.l2, c.l3};
}

CoefficientTriple<Complex> coefficients(const Factors& f, double rho, const PQDifferences& d) {
  CoefficientTriple<Complex> a;
  a.a_m1 = f.t * rho / (f.g1 * f.l1);
  a.a_2m1 = (f.m + 1) * f.t * f.t * rho * rho / (2 * f.g1 * f.g1 * f.l1 * f.l1) +
            f.t / (f.g1 * f.g2 * f.l2) * d.p2m_minus_q2m;
  a.a_3m1 = (3 * f.m + 2) * f.t * f.t * rho / (2 * f.g1 * f.g1 * f.g2 * f.l1 * f.l2) *
                d.p2m_minus_q2m +
            3 * f.t / (f.g1 * f.g2 * f.g3 * f.l3) * d.p3m_minus_q3m;
  return a;
}

struct Expansion {
  Complex value;
  double magnitude;  // sum of |term|
};

Expansion expansion(const Factors& f, double rho, const PQDifferences& d) {
  const double t = f.t, t2 = t * t, r2 = rho * rho;
  const Complex terms[] = {
      -(f.m + 1) * (f.m + 1) * t2 * t2 * r2 * r2 /
          (4 * std::pow(f.g1, 4) * std::pow(f.l1, 4)),
      f.m * t2 * t * r2 / (2 * std::pow(f.g1, 3) * f.g2 * f.l1 * f.l1 * f.l2) *
          d.p2m_minus_q2m,
      3 * t2 * rho / (f.g1 * f.g1 * f.g2 * f.g3 * f.l1 * f.l3) * d.p3m_minus_q3m,
      -t2 / (f.g1 * f.g1 * f.g2 * f.g2 * f.l2 * f.l2) * d.p2m_minus_q2m * d.p2m_minus_q2m,
  };
  Expansion e{0.0, 0.0};
  for (const Complex& term : terms) {
    e.value += term;
    e.magnitude += std::abs(term);
  }
  return e;
}

}  // namespace

CoefficientTriple<Complex> coefficients_from_sample(const Params& p,
                                                    const CaratheodorySample& s) {
  return coefficients(factors(p), s.rho, reconstruct_pq(s));
}

Complex hankel_expansion(const Params& p, const CaratheodorySample& s) {
  return expansion(factors(p), s.rho, reconstruct_pq(s)).value;
}

double hankel_functional(const Params& p, const CaratheodorySample& s) {
  const Factors f = factors(p);
  const PQDifferences d = reconstruct_pq(s);
  const Complex direct = second_hankel(coefficients(f, s.rho, d));
  const Expansion expanded = expansion(f, s.rho, d);

  const double scale = std::max({std::abs(direct), std::abs(expanded.value), expanded.magnitude});
  if (std::abs(direct - expanded.value) > 1e-10 * scale) {
    throw ConsistencyError("Hankel functional paths disagree at rho = " +
                           std::to_string(s.rho));
  }
  return std::abs(direct);
}

// ---------------------------------------------------------------------------
// brute force

namespace {

struct GridBest {
  double value = -std::numeric_limits<double>::infinity();
  int i = 0, j = 0, k = 0;
};

template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi) {
  constexpr int kMaxIterations = 100;
  constexpr double kTolerance = 1e-10;
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;

  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < kMaxIterations && b - a > kTolerance; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  std::pair<double, double> best{0.5 * (a + b), f(0.5 * (a + b))};
  for (double x : {lo, hi}) {
    if (const double fx = f(x); fx > best.second) best = {x, fx};
  }
  return best;
}

}  // namespace

SearchResult brute_force_max(const Params& p, int rho_steps, int mu_steps, bool refine) {
  if (rho_steps < 3 || mu_steps < 3) {
    throw std::invalid_argument("brute_force_max needs at least 3 steps per axis");
  }
  const double rho_h = 2.0 / (rho_steps - 1);
  const double mu_h = 1.0 / (mu_steps - 1);
  auto rho_at = [&](int i) { return i == rho_steps - 1 ? 2.0 : i * rho_h; };
  auto mu_at = [&](int j) { return j == mu_steps - 1 ? 1.0 : j * mu_h; };

  std::vector<GridBest> rows(static_cast<std::size_t>(rho_steps));
  parallel_for(rows.size(), [&](std::size_t row) {
    const int i = static_cast<int>(row);
    const FCoeffs<double> f = f_coeffs(p, rho_at(i));
    GridBest best;
    for (int j = 0; j < mu_steps; ++j) {
      for (int k = 0; k < mu_steps; ++k) {
        const double v = f_surface(f, mu_at(j), mu_at(k));
        if (v > best.value) best = {v, i, j, k};
      }
    }
    rows[row] = best;
  });

  GridBest best;
  for (const GridBest& r : rows) {
    if (r.value > best.value) best = r;
  }

  SearchResult out{best.value, rho_at(best.i), mu_at(best.j), mu_at(best.k), false};
  if (!refine) return out;

  out.refined = true;
  constexpr int kSweeps = 4;
  for (int sweep = 0; sweep < kSweeps; ++sweep) {
    {
      auto along_rho = [&](double r) {
        return f_surface(f_coeffs(p, r), out.arg_mu1, out.arg_mu2);
      };
      const auto [r, v] = golden_max(along_rho, std::max(0.0, out.arg_rho - rho_h),
                                     std::min(2.0, out.arg_rho + rho_h));
      if (v > out.max_value) {
        out.max_value = v;
        out.arg_rho = r;
      }
    }
    const FCoeffs<double> f = f_coeffs(p, out.arg_rho);
    {
      auto along_mu1 = [&](double mu) { return f_surface(f, mu, out.arg_mu2); };
      const auto [mu, v] = golden_max(along_mu1, std::max(0.0, out.arg_mu1 - mu_h),
                                      std::min(1.0, out.arg_mu1 + mu_h));
      if (v > out.max_value) {
        out.max_value = v;
        out.arg_mu1 = mu;
      }
    }
    {
      auto along_mu2 = [&](double mu) { return f_surface(f, out.arg_mu1, mu); };
      const auto [mu, v] = golden_max(along_mu2, std::max(0.0, out.arg_mu2 - mu_h),
                                      std::min(1.0, out.arg_mu2 + mu_h));
      if (v > out.max_value) {
        out.max_value = v;
        out.arg_mu2 = mu;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monte Carlo

SampleEngine substream_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  SampleEngine engine;
  engine.seed(seq);
  return engine;
}

CaratheodorySample draw_sample(SampleEngine& engine) {
  boost::random::uniform_real_distribution<double> unit(0.0, 1.0);
  auto disk = [&] {
    const double radius = std::sqrt(unit(engine));
    const double angle = 2 * std::numbers::pi * unit(engine);
    return std::polar(radius, angle);
  };
  CaratheodorySample s;
  s.rho = 2 * unit(engine);
  s.x = disk();
  s.y = disk();
  s.z = disk();
  s.w = disk();
  return s;
}

VerifyReport monte_carlo_verify(const Params& p, std::uint64_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("monte_carlo_verify needs at least one sample");

  VerifyReport report;
  report.params = p;
  report.seed = seed;
  report.samples = n;
  report.bound = theorem_bound(p).value;

  struct Partial {
    double max_value = 0;
    std::uint64_t violations = 0;
    std::uint64_t surface_violations = 0;
  };
  const std::uint64_t streams = (n + kSamplesPerStream - 1) / kSamplesPerStream;
  std::vector<Partial> partials(static_cast<std::size_t>(streams));

  const double bound = report.bound;
  parallel_for(partials.size(), [&](std::size_t stream) {
    SampleEngine engine = substream_engine(seed, stream);
    const std::uint64_t begin = stream * kSamplesPerStream;
    const std::uint64_t end = std::min(n, begin + kSamplesPerStream);
    Partial part;
    for (std::uint64_t i = begin; i < end; ++i) {
      const CaratheodorySample s = draw_sample(engine);
      const double value = hankel_functional(p, s);
      const double surface =
          f_surface(f_coeffs(p, s.rho), std::min(1.0, std::abs(s.x)), std::min(1.0, std::abs(s.y)));
      part.max_value = std::max(part.max_value, value);
      if (value > bound * (1 + kViolationTolerance)) ++part.violations;
      if (value > surface * (1 + kViolationTolerance)) ++part.surface_violations;
    }
    partials[stream] = part;
  });

  for (const Partial& part : partials) {
    report.observed_max = std::max(report.observed_max, part.max_value);
    report.violations += part.violations;
    report.surface_violations += part.surface_violations;
  }
  report.worst_ratio = report.observed_max / bound;
  return report;
}

// ---------------------------------------------------------------------------
// sign suite

bool SignReport::all_passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const InvariantOutcome& o) { return o.passed; });
}

SignReport sign_invariant_check(const Params& p, int rho_steps) {
  if (rho_steps < 3) throw std::invalid_argument("sign_invariant_check needs rho_steps >= 3");

  enum Claim { F1Pos, F2Pos, F3Neg, F4Pos, F3Plus2F4, Hessian, F2Plus2F3F4, KPos, ClaimCount };
  SignReport report;
  for (const char* name : {"F1 >= 0", "F2 >= 0", "F3 <= 0", "F4 >= 0", "F3 + 2 F4 > 0 on (0,2)",
                           "4 F3 (F3 + 2 F4) < 0 on (0,2)", "F2 + 2 (F3 + F4) >= 0", "K >= 0"}) {
    report.outcomes.push_back(InvariantOutcome{name, true, std::nullopt});
  }

  auto record = [&](Claim claim, bool ok, double rho) {
    InvariantOutcome& o = report.outcomes[claim];
    if (!ok && o.passed) {
      o.passed = false;
      o.first_failure_rho = rho;
    }
  };

  for (int i = 0; i < rho_steps; ++i) {
    const double rho = i == rho_steps - 1 ? 2.0 : 2.0 * i / (rho_steps - 1);
    const FCoeffs<double> f = f_coeffs(p, rho);
    const double slack =
        kViolationTolerance * (std::abs(f.F1) + std::abs(f.F2) + std::abs(f.F3) + std::abs(f.F4));
    const bool interior = i > 0 && i < rho_steps - 1;

    record(F1Pos, f.F1 >= -slack, rho);
    record(F2Pos, f.F2 >= -slack, rho);
    record(F3Neg, f.F3 <= slack, rho);
    record(F4Pos, f.F4 >= -slack, rho);
    if (interior) {
      record(F3Plus2F4, f.F3 + 2 * f.F4 > 0, rho);
      record(Hessian, 4 * f.F3 * (f.F3 + 2 * f.F4) < 0, rho);
    }
    record(F2Plus2F3F4, f.F2 + 2 * (f.F3 + f.F4) >= -slack, rho);
    record(KPos, f.F1 + 2 * (f.F2 + f.F3) + 4 * f.F4 >= -slack, rho);
  }
  static_assert(ClaimCount == 8);
  return report;
}

// ---------------------------------------------------------------------------
// lemma checks

LemmaReport lemma_identity_check(double h1, Complex x, Complex z) {
  if (!(h1 >= 0 && h1 <= 2)) throw RangeError(Field::argument, "h1 must lie in [0, 2]");
  if (std::abs(x) > 1 || std::abs(z) > 1) {
    throw RangeError(Field::argument, "x and z must lie in the closed unit disk");
  }
  const double gap = 4 - h1 * h1;
  LemmaReport r;
  r.h2 = (h1 * h1 + x * gap) / 2.0;
  r.h3 = (h1 * h1 * h1 + 2 * gap * h1 * x - h1 * gap * x * x +
          2 * gap * (1 - std::norm(x)) * z) /
         4.0;

  const double tol = 1 + kViolationTolerance;
  r.coefficient_bounds = std::abs(r.h2) <= 2 * tol && std::abs(r.h3) <= 2 * tol;
  const double lhs = std::abs(r.h2 - h1 * h1 / 2);
  r.fekete_szego_bound = lhs <= (2 - h1 * h1 / 2) * tol + kViolationTolerance;
  r.h2_variant_bound = lhs <= (2 - std::norm(r.h2) / 2) * tol + kViolationTolerance;
  return r;
}

}  // namespace hdet
