#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/random/mersenne_twister.hpp>

#include "hdet/model.hpp"
#include "hdet/series.hpp"

namespace hdet {

using Complex = std::complex<double>;

/// Relative slack on every "<=" comparison made by the oracles.
inline constexpr double kViolationTolerance = 1e-9;

/// One point of the Caratheodory representation: p_m = rho (real, in [0, 2]),
/// q_m = -rho, and the free parameters x, y, z, w of the closed unit disk.
struct CaratheodorySample {
  double rho = 0;
  Complex x, y, z, w;

  bool valid() const;
};

/// Second and third coefficients of p and q reconstructed from a sample.
struct PQDifferences {
  Complex p2m_minus_q2m;
  Complex p3m_minus_q3m;
  Complex p2m_plus_q2m;
  Complex p2m, q2m, p3m, q3m;
};

class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PQDifferences reconstruct_pq(const CaratheodorySample& s);

/// (a_{m+1}, a_{2m+1}, a_{3m+1}) of the function whose operator images are
/// beta + (1 - beta) p and beta + (1 - beta) q.
CoefficientTriple<Complex> coefficients_from_sample(const Params& p,
                                                    const CaratheodorySample& s);

/// The four-term expansion of a_{m+1} a_{3m+1} - a_{2m+1}^2 in p_m and the
/// p/q differences. Second path for hankel_functional.
Complex hankel_expansion(const Params& p, const CaratheodorySample& s);

/// |a_{m+1} a_{3m+1} - a_{2m+1}^2| for the sample. Computed directly from the
/// coefficient triple and through hankel_expansion; throws ConsistencyError
/// if the two differ by more than 1e-10 relative to the size of the terms.
double hankel_functional(const Params& p, const CaratheodorySample& s);

struct SearchResult {
  double max_value = 0;
  double arg_rho = 0;
  double arg_mu1 = 0;
  double arg_mu2 = 0;
  bool refined = false;
};

/// Exhaustive grid maximum of the surrogate surface over
/// [0,2] x [0,1] x [0,1], optionally polished by coordinate-wise golden-section
/// search around the best grid point. Requires rho_steps, mu_steps >= 3.
SearchResult brute_force_max(const Params& p, int rho_steps, int mu_steps, bool refine);

struct VerifyReport {
  Params params;
  double bound = 0;
  double observed_max = 0;
  std::uint64_t violations = 0;          // functional > bound (1 + tol)
  std::uint64_t surface_violations = 0;  // functional > F(rho, |x|, |y|) (1 + tol)
  double worst_ratio = 0;                // max functional / bound
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;

  bool operator==(const VerifyReport&) const = default;
};

using SampleEngine = boost::random::mt19937_64;

/// Samples per independent random substream in monte_carlo_verify.
inline constexpr std::uint64_t kSamplesPerStream = 4096;

/// Engine for substream `stream` of a run seeded with `seed`.
SampleEngine substream_engine(std::uint64_t seed, std::uint64_t stream);

/// rho uniform on [0, 2]; x, y, z, w uniform on the closed unit disk.
CaratheodorySample draw_sample(SampleEngine& engine);

/// Draws n samples and compares the functional against theorem_bound. The
/// sample sequence depends only on (seed, n): substreams are fixed-size and
/// merged in stream order, whatever the worker count.
VerifyReport monte_carlo_verify(const Params& p, std::uint64_t n, std::uint64_t seed);

struct InvariantOutcome {
  std::string name;
  bool passed = true;
  std::optional<double> first_failure_rho;
};

struct SignReport {
  std::vector<InvariantOutcome> outcomes;

  bool all_passed() const;
};

/// Sign claims on F1..F4 and their combinations over a uniform rho grid on
/// [0, 2]. Strict inequalities are checked at interior grid points only.
SignReport sign_invariant_check(const Params& p, int rho_steps);

struct LemmaReport {
  Complex h2, h3;
  bool coefficient_bounds = false;  // |h2| <= 2 and |h3| <= 2
  bool fekete_szego_bound = false;  // |h2 - h1^2/2| <= 2 - h1^2/2
  /// The variant with |h2|^2 on the right. Reported, not required: it fails at
  /// h1 = 0, x = 1.
  bool h2_variant_bound = false;

  bool all_passed() const { return coefficient_bounds && fekete_szego_bound; }
};

/// Builds h2, h3 of a Caratheodory function from (h1, x, z) via the standard
/// parametrization and checks the coefficient inequalities. Throws RangeError
/// if h1 is outside [0, 2] or |x|, |z| > 1.
LemmaReport lemma_identity_check(double h1, Complex x, Complex z);

}  // namespace hdet
