#pragma once

#include <random>
#include <vector>

#include "rslevy/model.hpp"

namespace rslevy::testing {

inline Matrix random_generator_matrix(int n, std::mt19937_64& rng,
                                      double rate_scale = 1.5) {
  std::uniform_real_distribution<double> unif(0.05, rate_scale);
  Matrix q = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (i != j) q(i, j) = unif(rng);
    q(i, i) = -q.row(i).sum();
  }
  return q;
}

inline PhaseType random_jump_tail(int phases, std::mt19937_64& rng,
                                  double min_decay = 2.0) {
  std::uniform_real_distribution<double> unif(0.2, 1.5);
  Matrix a = Matrix::Zero(phases, phases);
  for (int i = 0; i < phases; ++i) {
    for (int j = 0; j < phases; ++j)
      if (i != j) a(i, j) = unif(rng);
    a(i, i) = -(a.row(i).sum() + min_decay + unif(rng));
  }
  RowVector alpha(phases);
  for (int i = 0; i < phases; ++i) alpha(i) = unif(rng);
  alpha /= alpha.sum();
  return PhaseType(alpha, a);
}

/// Random martingale-repaired model with DPH jumps in every regime.
/// min_decay > 1 keeps the moment condition satisfiable.
inline RegimeModel random_model(std::mt19937_64& rng, int n_regimes,
                                int max_phases = 3, double min_decay = 2.5,
                                bool with_jumps = true) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  GeneratorMatrix q(random_generator_matrix(n_regimes, rng));
  Vector mu = Vector::Zero(n_regimes);
  Vector sigma(n_regimes), lambda(n_regimes), rd(n_regimes), rf(n_regimes);
  std::vector<DoublePhaseType> jumps;
  for (int i = 0; i < n_regimes; ++i) {
    sigma(i) = 0.1 + 0.3 * unif(rng);
    lambda(i) = with_jumps ? 0.2 + unif(rng) : 0.0;
    rd(i) = 0.05 * unif(rng);
    rf(i) = 0.03 * unif(rng);
    const int pu = 1 + static_cast<int>(rng() % max_phases);
    const int pd = 1 + static_cast<int>(rng() % max_phases);
    jumps.emplace_back(0.2 + 0.6 * unif(rng),
                       random_jump_tail(pu, rng, min_decay),
                       random_jump_tail(pd, rng, min_decay));
  }
  RegimeModel raw(q, mu, sigma, lambda, std::move(jumps), rd, rf,
                  /*x0=*/0.0, /*z0=*/0);
  return solve_drift(raw);
}

inline RegimeModel black_scholes_model(double spot, double sigma, double r,
                                       double d) {
  Matrix q(1, 1);
  q << 0.0;
  Vector mu(1), sv(1), lam(1), rd(1), rf(1);
  mu << r - d - 0.5 * sigma * sigma;
  sv << sigma;
  lam << 0.0;
  rd << r;
  rf << d;
  std::vector<DoublePhaseType> jumps{double_exponential(0.5, 3.0, 3.0)};
  return RegimeModel(GeneratorMatrix(q), mu, sv, lam, std::move(jumps), rd, rf,
                     std::log(spot), 0);
}

}  // namespace rslevy::testing
