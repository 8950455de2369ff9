#include "rslevy/model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace rslevy {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

RegimeModel::RegimeModel(GeneratorMatrix q, Vector mu, Vector sigma,
                         Vector lambda, std::vector<DoublePhaseType> jumps,
                         Vector rd, Vector rf, double x0, int z0,
                         const NumericalSettings& settings)
    : q_(std::move(q)),
      mu_(std::move(mu)),
      sigma_(std::move(sigma)),
      lambda_(std::move(lambda)),
      jumps_(std::move(jumps)),
      rd_(std::move(rd)),
      rf_(std::move(rf)),
      x0_(x0),
      z0_(z0),
      settings_(settings) {
  const Eigen::Index n = q_.dim();
  if (mu_.size() != n || sigma_.size() != n || lambda_.size() != n ||
      rd_.size() != n || rf_.size() != n ||
      jumps_.size() != static_cast<size_t>(n))
    throw InvalidInput("model: per-regime data must match the generator dimension");
  if ((sigma_.array() <= 0).any())
    throw InvalidInput("model: sigma must be strictly positive");
  if ((lambda_.array() < 0).any())
    throw InvalidInput("model: lambda must be non-negative");
  if ((rd_.array() < 0).any() || (rf_.array() < 0).any())
    throw InvalidInput("model: rates must be non-negative");
  if (z0_ < 0 || z0_ >= n) throw InvalidInput("model: z0 out of range");

  alpha_plus_.resize(n);
  alpha_minus_.resize(n);
  strip_ = {kInf, kInf};
  for (Eigen::Index i = 0; i < n; ++i) {
    alpha_plus_[i] = has_up_jumps(static_cast<int>(i))
                         ? jumps_[i].plus().decay_rate()
                         : kInf;
    alpha_minus_[i] = has_down_jumps(static_cast<int>(i))
                          ? jumps_[i].minus().decay_rate()
                          : kInf;
    strip_.alpha_plus_star = std::min(strip_.alpha_plus_star, alpha_plus_[i]);
    strip_.alpha_minus_star = std::min(strip_.alpha_minus_star, alpha_minus_[i]);
  }
}

RegimeModel RegimeModel::with_mu(Vector mu) const {
  return RegimeModel(q_, std::move(mu), sigma_, lambda_, jumps_, rd_, rf_, x0_,
                     z0_, settings_);
}

Complex psi_regime(const RegimeModel& m, int i, Complex u) {
  const double margin = m.settings().mgf_domain_margin;
  if (u.imag() <= -m.alpha_plus(i) + margin ||
      u.imag() >= m.alpha_minus(i) - margin) {
    std::ostringstream msg;
    msg << "psi_regime: Im(u)=" << u.imag() << " outside the strip (-"
        << m.alpha_plus(i) << ", " << m.alpha_minus(i) << ") of regime " << i;
    throw DomainError(msg.str());
  }
  Complex value = kImag * u * m.mu()(i) -
                  0.5 * m.sigma()(i) * m.sigma()(i) * u * u;
  if (m.lambda()(i) > 0) {
    const DoublePhaseType& law = m.jumps()[i];
    Complex jump_mgf = 0.0;
    if (law.p() > 0) jump_mgf += law.p() * ph_mgf(law.plus(), kImag * u, m.settings());
    if (law.p() < 1)
      jump_mgf += (1.0 - law.p()) * ph_mgf(law.minus(), -kImag * u, m.settings());
    value += m.lambda()(i) * (jump_mgf - 1.0);
  }
  return value;
}

CMatrix char_matrix_exponent(const RegimeModel& m, Complex u) {
  CMatrix k = m.q().entries().cast<Complex>();
  for (int i = 0; i < m.regimes(); ++i) k(i, i) += psi_regime(m, i, u);
  return k;
}

CMatrix discounted_cf(const RegimeModel& m, Complex u, double t) {
  if (t < 0) throw InvalidInput("discounted_cf: t must be >= 0");
  CMatrix a = char_matrix_exponent(m, u);
  a.diagonal() -= m.rd().cast<Complex>();
  return std::exp(kImag * u * m.x0()) * matrix_exp(CMatrix(t * a));
}

MartingaleReport check_martingale(const RegimeModel& m, double tol) {
  MartingaleReport report{true, -1, 0.0, tol};
  for (int i = 0; i < m.regimes(); ++i) {
    if (m.has_up_jumps(i) && m.alpha_plus(i) <= 1.0) {
      report.moment_condition_ok = false;
      report.first_bad_regime = i;
      report.drift_residual = kInf;
      return report;
    }
  }
  double residual = 0.0;
  for (int i = 0; i < m.regimes(); ++i) {
    const Complex psi = psi_regime(m, i, Complex(0.0, -1.0));
    residual = std::max(residual,
                        std::abs(psi - Complex(m.rd()(i) - m.rf()(i), 0.0)));
  }
  report.drift_residual = residual;
  return report;
}

RegimeModel solve_drift(const RegimeModel& m) {
  Vector mu(m.regimes());
  for (int i = 0; i < m.regimes(); ++i) {
    if (m.has_up_jumps(i) && m.alpha_plus(i) <= 1.0) {
      std::ostringstream msg;
      msg << "solve_drift: regime " << i
          << " has alpha+ <= 1, E[S_t] is infinite";
      throw DomainError(msg.str());
    }
    double jump_compensator = 0.0;
    if (m.lambda()(i) > 0)
      jump_compensator =
          m.lambda()(i) * (m.jumps()[i].mgf(1.0, m.settings()).real() - 1.0);
    mu(i) = m.rd()(i) - m.rf()(i) - 0.5 * m.sigma()(i) * m.sigma()(i) -
            jump_compensator;
  }
  return m.with_mu(std::move(mu));
}

Vector zcb_price(const RegimeModel& m, double t) {
  if (t < 0) throw InvalidInput("zcb_price: t must be >= 0");
  Matrix a = m.q().entries();
  a.diagonal() -= m.rd();
  return matrix_exp(Matrix(t * a)) * Vector::Ones(m.regimes());
}

namespace {

// Fourier inversion q_t(y,j) = (1/pi) int_0^xi* Re[e^{i xi (x-y)}
// exp(tK(xi))(z0,j)] dxi on a trapezoid grid; the integrand decays at least
// like exp(-t sigma_min^2 xi^2 / 2).
struct DensityTransform {
  std::vector<double> xis;
  std::vector<CRowVector> rows;  // exp(tK(xi)) row of z0
  double h;
};

DensityTransform build_density_transform(const RegimeModel& m, double t,
                                         double osc_range) {
  const double sigma_min2 = m.sigma().array().square().minCoeff();
  const double bound = m.settings().density_tail_bound;
  const double xi_star = std::sqrt(2.0 * std::log(1.0 / bound) / (t * sigma_min2));
  const double h = std::min(M_PI / (8.0 * osc_range), xi_star / 512.0);
  const int n = static_cast<int>(std::ceil(xi_star / h)) + 1;

  DensityTransform out;
  out.h = h;
  out.xis.reserve(n);
  out.rows.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double xi = k * h;
    CMatrix km = char_matrix_exponent(m, Complex(xi, 0.0));
    out.xis.push_back(xi);
    out.rows.push_back(matrix_exp(CMatrix(t * km)).row(m.z0()));
  }
  return out;
}

}  // namespace

Matrix joint_density_grid(const RegimeModel& m, double t, const Vector& ys) {
  if (t <= 0) throw InvalidInput("joint_density: t must be > 0");
  const int n0 = m.regimes();
  const double sigma_max = m.sigma().maxCoeff();
  double osc = 1.0 + m.mu().cwiseAbs().maxCoeff() * t +
               8.0 * sigma_max * std::sqrt(t);
  for (Eigen::Index k = 0; k < ys.size(); ++k)
    osc = std::max(osc, std::abs(ys(k) - m.x0()));

  const DensityTransform tf = build_density_transform(m, t, osc);
  Matrix out(ys.size(), n0 + 1);
  for (Eigen::Index yi = 0; yi < ys.size(); ++yi) {
    const double shift = m.x0() - ys(yi);
    RowVector acc = RowVector::Zero(n0);
    RowVector acc_coarse = RowVector::Zero(n0);
    for (size_t k = 0; k < tf.xis.size(); ++k) {
      const double w = (k == 0 || k + 1 == tf.xis.size()) ? 0.5 : 1.0;
      const Complex phase = std::exp(kImag * tf.xis[k] * shift);
      const RowVector term = (phase * tf.rows[k]).real();
      acc += w * term;
      if (k % 2 == 0) {
        const double w2 = (k == 0 || k + 2 >= tf.xis.size()) ? 0.5 : 1.0;
        acc_coarse += w2 * term;
      }
    }
    const RowVector fine = acc * tf.h / M_PI;
    const RowVector coarse = acc_coarse * 2.0 * tf.h / M_PI;
    const double err = (fine - coarse).cwiseAbs().maxCoeff() / 3.0;
    if (err > 1e-7) {
      std::ostringstream msg;
      msg << "joint_density: quadrature not converged, error estimate " << err;
      throw NumericalError(msg.str());
    }
    out.row(yi).head(n0) = fine;
    out(yi, n0) = fine.sum();
  }
  return out;
}

double joint_density(const RegimeModel& m, double t, double y, int j) {
  Vector ys(1);
  ys << y;
  const Matrix grid = joint_density_grid(m, t, ys);
  if (j < 0) return grid(0, m.regimes());
  if (j >= m.regimes()) throw InvalidInput("joint_density: regime out of range");
  return grid(0, j);
}

}  // namespace rslevy
