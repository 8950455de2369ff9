#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace rslevy {

using Complex = std::complex<double>;

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;

inline constexpr Complex kImag{0.0, 1.0};

/// Raised when an argument leaves the analyticity strip or the domain of a
/// transform (never silently continued).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a numerical routine cannot reach its requested accuracy or a
/// linear-algebra kernel fails.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when input data violates a structural invariant (generator rows,
/// phase-type validity, file schema, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All tolerances and grid choices in one place so they can be overridden
/// from a settings file without touching module code.
struct NumericalSettings {
  // generator / matrix checks
  double generator_row_sum_tol = 1e-12;
  double identity_check_tol = 1e-10;

  // phase-type laws
  double mgf_domain_margin = 1e-9;
  double quad_abs_tol = 1e-10;
  double survival_cutoff = 1e-12;

  // Fourier inversion of densities
  double density_tail_bound = 1e-12;

  // Carr-Madan style strike transforms
  int fourier_grid_size = 4096;
  double call_damping = 1.25;
  double put_damping = -1.25;
  double strike_grid_stddevs = 6.0;
  double strike_grid_min_width = 16.0;

  // volatility derivatives
  double volswap_tail_tol = 1e-6;
  double varswap_fd_step = 1e-6;
  double matrix_phi_cond_limit = 1e8;

  // Wiener-Hopf factorisation
  double wh_residual_tol = 1e-8;
  double wh_imag_axis_margin = 1e-9;
  double wh_eigvec_cond_limit = 1e10;
  int wh_newton_steps = 3;

  // Laplace inversion (Bromwich line, Euler acceleration)
  int laplace_sum_terms = 40;
  int laplace_euler_terms = 15;
  double laplace_decay = 18.4;  // 2T * (c - q*)
  double laplace_tol = 1e-6;

  // Monte Carlo
  double mc_bridge_subdivision = 16.0;  // substep if sigma^2 dt > width^2/this
  double mc_max_substep_fraction = 1.0 / 32.0;
};

}  // namespace rslevy
