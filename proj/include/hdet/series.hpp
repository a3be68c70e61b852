#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hdet/rational.hpp"

namespace hdet {

class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// f(z) = z + sum_{k=1..K} a_{mk+1} z^{mk+1}.
///
/// coeffs[k-1] holds a_{mk+1}. The leading a_1 = 1 is implicit and never stored;
/// indices not of the form mk+1 are structurally zero.
template <typename Scalar>
struct MFoldSeries {
  int m = 1;
  std::vector<Scalar> coeffs;

  MFoldSeries() = default;
  MFoldSeries(int fold, std::vector<Scalar> c) : m(fold), coeffs(std::move(c)) {
    if (m < 1) throw std::invalid_argument("fold order m must be >= 1");
  }

  int depth() const noexcept { return static_cast<int>(coeffs.size()); }

  /// a_{mk+1}; throws TruncationError past the stored depth.
  const Scalar& coefficient(int k) const {
    if (k < 1 || k > depth()) {
      throw TruncationError("coefficient a_{" + std::to_string(m * k + 1) +
                            "} is beyond truncation depth " + std::to_string(depth()));
    }
    return coeffs[static_cast<std::size_t>(k - 1)];
  }
};

/// (a_{m+1}, a_{2m+1}, a_{3m+1}), or the matching coefficients of an inverse.
template <typename Scalar>
struct CoefficientTriple {
  Scalar a_m1{};
  Scalar a_2m1{};
  Scalar a_3m1{};
};

/// z^m, z^{2m}, z^{3m} coefficients of (1-lambda) R f(z)/z + lambda (R f(z))'.
template <typename Scalar>
struct LhsCoefficients {
  Scalar c_m{};
  Scalar c_2m{};
  Scalar c_3m{};
};

/// Weight multiplying a_{mk+1} under the order-gamma Ruscheweyh derivative,
/// Gamma(gamma+k+1) / (Gamma(k+1) Gamma(gamma+1)) = C(gamma+k, k), built as an
/// exact running product.
///
/// The classical 1-fold weight on a_k is this weight at k-1.
Rational ruscheweyh_weight(int gamma, int k);

template <typename Scalar>
MFoldSeries<Scalar> apply_ruscheweyh(const MFoldSeries<Scalar>& f, int gamma) {
  if (gamma < 0) throw std::invalid_argument("Ruscheweyh order must be >= 0");
  MFoldSeries<Scalar> out = f;
  for (int k = 1; k <= f.depth(); ++k) {
    out.coeffs[static_cast<std::size_t>(k - 1)] =
        scalar_cast<Scalar>(ruscheweyh_weight(gamma, k)) * f.coefficient(k);
  }
  return out;
}

/// Coefficients of the class-defining operator, read off term by term: the
/// z^{mk+1} term of R f contributes (1 - lambda + lambda (mk+1)) times its
/// coefficient to z^{mk}.
template <typename Scalar, typename Lambda>
LhsCoefficients<Scalar> operator_lhs_coeffs(const MFoldSeries<Scalar>& f,
                                            const Lambda& lambda, int gamma) {
  if (f.depth() < 3) throw TruncationError("operator coefficients need truncation depth >= 3");
  const MFoldSeries<Scalar> r = apply_ruscheweyh(f, gamma);
  auto factor = [&](int k) {
    return Scalar(1) + lift<Scalar>(lambda) * Scalar(f.m * k);
  };
  return {factor(1) * r.coefficient(1), factor(2) * r.coefficient(2),
          factor(3) * r.coefficient(3)};
}

/// First three nontrivial coefficients of g = f^{-1} for an m-fold f.
template <typename Scalar>
CoefficientTriple<Scalar> invert_series(const MFoldSeries<Scalar>& f) {
  if (f.depth() < 3) throw TruncationError("series reversion needs truncation depth >= 3");
  const Scalar& a1 = f.coefficient(1);
  const Scalar& a2 = f.coefficient(2);
  const Scalar& a3 = f.coefficient(3);
  const Scalar m(f.m);
  const Scalar one(1);
  const Scalar two(2);
  CoefficientTriple<Scalar> b;
  b.a_m1 = -a1;
  b.a_2m1 = (m + one) * a1 * a1 - a2;
  b.a_3m1 = -((m + one) * (Scalar(3) * m + two) * a1 * a1 * a1 / two -
              (Scalar(3) * m + two) * a1 * a2 + a3);
  return b;
}

/// The inverse as a depth-3 m-fold series.
template <typename Scalar>
MFoldSeries<Scalar> truncated_inverse(const MFoldSeries<Scalar>& f) {
  const CoefficientTriple<Scalar> b = invert_series(f);
  return MFoldSeries<Scalar>(f.m, {b.a_m1, b.a_2m1, b.a_3m1});
}

template <typename Scalar>
using DenseSeries = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Dense coefficients z^0..z^order of an m-fold series (index 1 holds a_1 = 1).
/// Throws TruncationError if the series does not reach `order`.
template <typename Scalar>
DenseSeries<Scalar> to_dense(const MFoldSeries<Scalar>& f, int order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  if (f.m * f.depth() + 1 < order) {
    throw TruncationError("series known only to order " + std::to_string(f.m * f.depth() + 1));
  }
  DenseSeries<Scalar> d = DenseSeries<Scalar>::Constant(order + 1, Scalar(0));
  d(1) = Scalar(1);
  for (int k = 1; k <= f.depth() && f.m * k + 1 <= order; ++k) {
    d(f.m * k + 1) = f.coefficient(k);
  }
  return d;
}

/// outer(inner(z)) truncated after z^order. inner must have zero constant term.
template <typename Scalar>
DenseSeries<Scalar> compose_truncated(const DenseSeries<Scalar>& outer,
                                      const DenseSeries<Scalar>& inner, int order) {
  if (inner.size() > 0 && inner(0) != Scalar(0)) {
    throw std::invalid_argument("inner series must vanish at the origin");
  }
  const Eigen::Index n = order + 1;
  auto coeff = [](const DenseSeries<Scalar>& s, Eigen::Index i) {
    return i < s.size() ? s(i) : Scalar(0);
  };

  DenseSeries<Scalar> result = DenseSeries<Scalar>::Constant(n, Scalar(0));
  DenseSeries<Scalar> power = DenseSeries<Scalar>::Constant(n, Scalar(0));
  power(0) = Scalar(1);
  result(0) = coeff(outer, 0);
  for (Eigen::Index k = 1; k < n && k < outer.size(); ++k) {
    DenseSeries<Scalar> next = DenseSeries<Scalar>::Constant(n, Scalar(0));
    for (Eigen::Index i = 0; i < n; ++i) {
      if (power(i) == Scalar(0)) continue;
      for (Eigen::Index j = 1; i + j < n; ++j) next(i + j) += power(i) * coeff(inner, j);
    }
    power = std::move(next);
    result += coeff(outer, k) * power;
  }
  return result;
}

namespace detail {

// Gaussian elimination with largest-magnitude pivoting. Eigen's LU does not
// instantiate for Boost rationals, and for exact scalars this is exact anyway.
template <typename Scalar>
Scalar determinant(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
  using std::abs;
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = c;
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (abs(a(r, c)) > abs(a(pivot, c))) pivot = r;
    }
    if (a(pivot, c) == Scalar(0)) return Scalar(0);
    if (pivot != c) {
      a.row(pivot).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      const Scalar factor = a(r, c) / a(c, c);
      for (Eigen::Index k = c; k < n; ++k) a(r, k) -= factor * a(c, k);
    }
  }
  return det;
}

}  // namespace detail

/// Determinant of the q x q Hankel matrix with (i,j) entry a_{n+i+j-2}
/// (1-indexed), so the bottom-right entry is a_{n+2q-2}.
///
/// coeffs[0] is a_1 (= 1 for a normalized function). Throws IndexError when
/// coeffs does not reach a_{n+2q-2}.
template <typename Scalar>
Scalar hankel_determinant(std::span<const Scalar> coeffs, int q, int n) {
  if (q < 1 || n < 1) throw std::invalid_argument("Hankel order q and start n must be >= 1");
  const std::size_t last = static_cast<std::size_t>(n + 2 * q - 2);
  if (coeffs.size() < last) {
    throw IndexError("H_" + std::to_string(q) + "(" + std::to_string(n) + ") needs a_" +
                     std::to_string(last) + " but only " + std::to_string(coeffs.size()) +
                     " coefficients were given");
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> h(q, q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) h(i, j) = coeffs[static_cast<std::size_t>(n + i + j - 1)];
  }
  return detail::determinant(std::move(h));
}

template <typename Scalar>
Scalar fekete_szego(const Scalar& a2, const Scalar& a3, const Scalar& mu) {
  return a3 - mu * a2 * a2;
}

/// a_{m+1} a_{3m+1} - a_{2m+1}^2.
template <typename Scalar>
Scalar second_hankel(const CoefficientTriple<Scalar>& a) {
  return a.a_m1 * a.a_3m1 - a.a_2m1 * a.a_2m1;
}

}  // namespace hdet
