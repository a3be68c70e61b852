#pragma once

#include <cmath>
#include <vector>

#include "hdet/model.hpp"

namespace hdet::testing {

inline Params params(int m, double lambda, int gamma, double beta) {
  return validate_params(m, lambda, gamma, beta);
}

/// (m, lambda, gamma) in {1,2,3} x {1,1.5,2} x {0,1,2}, beta = 0.
inline std::vector<Params> shape_grid() {
  std::vector<Params> grid;
  for (int m : {1, 2, 3}) {
    for (double lambda : {1.0, 1.5, 2.0}) {
      for (int gamma : {0, 1, 2}) grid.push_back(params(m, lambda, gamma, 0));
    }
  }
  return grid;
}

/// shape_grid crossed with beta in {0, 0.2, 0.5, 0.9}.
inline std::vector<Params> sweep_grid() {
  std::vector<Params> grid;
  for (const Params& s : shape_grid()) {
    for (const char* b : {"0", "0.2", "0.5", "0.9"}) {
      grid.push_back(with_beta(s, parse_rational(b)));
    }
  }
  return grid;
}

/// 0, 0.05, ..., 0.95 as exact rationals.
inline std::vector<Rational> beta_tower() {
  std::vector<Rational> betas;
  for (int i = 0; i < 20; ++i) betas.emplace_back(i, 20);
  return betas;
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0 ? 0 : std::abs(a - b) / scale;
}

}  // namespace hdet::testing
