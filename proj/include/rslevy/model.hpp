#pragma once

#include <optional>
#include <vector>

#include "rslevy/markov.hpp"
#include "rslevy/phase_type.hpp"
#include "rslevy/types.hpp"

namespace rslevy {

/// Analyticity strip of the characteristic function: Im(u) in
/// (-alpha_plus_star, alpha_minus_star). Infinite when a tail has no jumps.
struct StripBounds {
  double alpha_plus_star;
  double alpha_minus_star;
};

struct MartingaleReport {
  bool moment_condition_ok;      // alpha_k^+ > 1 wherever lambda_k p_k > 0
  int first_bad_regime;          // -1 when moment condition holds
  double drift_residual;         // max_i |psi_i(-i) - (rd_i - rf_i)|
  double tolerance;
  bool passed() const { return moment_condition_ok && drift_residual <= tolerance; }
};

/// Regime-switching log-price model: within regime i the log-price moves as a
/// Brownian motion with drift mu_i and volatility sigma_i plus a compound
/// Poisson jump part with intensity lambda_i and double phase-type jumps;
/// regimes switch with generator Q and carry discount/dividend rates.
class RegimeModel {
 public:
  RegimeModel(GeneratorMatrix q, Vector mu, Vector sigma, Vector lambda,
              std::vector<DoublePhaseType> jumps, Vector rd, Vector rf,
              double x0, int z0, const NumericalSettings& settings = {});

  int regimes() const { return static_cast<int>(mu_.size()); }
  const GeneratorMatrix& q() const { return q_; }
  const Vector& mu() const { return mu_; }
  const Vector& sigma() const { return sigma_; }
  const Vector& lambda() const { return lambda_; }
  const std::vector<DoublePhaseType>& jumps() const { return jumps_; }
  const Vector& rd() const { return rd_; }
  const Vector& rf() const { return rf_; }
  double x0() const { return x0_; }
  int z0() const { return z0_; }
  const NumericalSettings& settings() const { return settings_; }

  bool has_up_jumps(int i) const { return lambda_(i) * jumps_[i].p() > 0; }
  bool has_down_jumps(int i) const {
    return lambda_(i) * (1.0 - jumps_[i].p()) > 0;
  }

  /// Per-regime decay rates of the jump tails (+inf when the tail is absent).
  double alpha_plus(int i) const { return alpha_plus_[i]; }
  double alpha_minus(int i) const { return alpha_minus_[i]; }
  StripBounds strip() const { return strip_; }

  RegimeModel with_mu(Vector mu) const;

 private:
  GeneratorMatrix q_;
  Vector mu_, sigma_, lambda_;
  std::vector<DoublePhaseType> jumps_;
  Vector rd_, rf_;
  double x0_;
  int z0_;
  std::vector<double> alpha_plus_, alpha_minus_;
  StripBounds strip_;
  NumericalSettings settings_;
};

/// Characteristic exponent of the process in regime i, analytic on
/// Im(u) in (-alpha_i^+, alpha_i^-); hard DomainError outside.
Complex psi_regime(const RegimeModel& m, int i, Complex u);

/// K(u) = Q + diag(psi_i(u)).
CMatrix char_matrix_exponent(const RegimeModel& m, Complex u);

/// exp(iu x0) * exp(t(K(u) - Lambda_D)); entry (i,j) is
/// E_{x,i}[exp(iu X_t)/B_t^D 1{Z_t=j}].
CMatrix discounted_cf(const RegimeModel& m, Complex u, double t);

MartingaleReport check_martingale(const RegimeModel& m, double tol = 1e-10);

/// Returns the model with drifts mu_i chosen so psi_i(-i) = rd_i - rf_i
/// exactly; requires alpha_k^+ > 1 wherever up jumps are active.
RegimeModel solve_drift(const RegimeModel& m);

/// Per-regime zero-coupon bond prices exp(t(Q - Lambda_D)) * 1.
Vector zcb_price(const RegimeModel& m, double t);

/// Marginal law of (X_t, Z_t) started from (x0, z0), evaluated on a grid of
/// log-prices by Fourier inversion. Column j holds q_t(y, j); an extra last
/// column holds the regime sum q_t(y).
Matrix joint_density_grid(const RegimeModel& m, double t,
                          const Vector& ys);

/// q_t(y, j) for one point; j = -1 gives the regime sum q_t(y).
double joint_density(const RegimeModel& m, double t, double y, int j);

}  // namespace rslevy
