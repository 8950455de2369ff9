#include "rslevy/phase_type.hpp"

#include <cmath>
#include <sstream>

namespace rslevy {

PhaseType::PhaseType(RowVector alpha, Matrix a,
                     const NumericalSettings& settings)
    : alpha_(std::move(alpha)), a_(std::move(a)) {
  if (a_.rows() != a_.cols() || a_.rows() == 0)
    throw InvalidInput("phase-type: A must be square and non-empty");
  if (alpha_.size() != a_.rows())
    throw InvalidInput("phase-type: alpha/A dimension mismatch");
  const double tol = settings.generator_row_sum_tol;
  if ((alpha_.array() < -tol).any() || alpha_.sum() > 1.0 + tol)
    throw InvalidInput("phase-type: alpha must be a sub-probability vector");
  for (Eigen::Index i = 0; i < a_.rows(); ++i) {
    for (Eigen::Index j = 0; j < a_.cols(); ++j)
      if (i != j && a_(i, j) < 0) {
        std::ostringstream msg;
        msg << "phase-type: off-diagonal A(" << i << "," << j << ") negative";
        throw InvalidInput(msg.str());
      }
    if (a_.row(i).sum() > tol) {
      std::ostringstream msg;
      msg << "phase-type: row " << i << " of A has positive sum";
      throw InvalidInput(msg.str());
    }
  }
  decay_rate_ = -spectral_abscissa(a_);
  if (decay_rate_ < -tol)
    throw InvalidInput("phase-type: A has an eigenvalue with positive real part");
}

double ph_pdf(const PhaseType& d, double t) {
  if (t <= 0) throw InvalidInput("ph_pdf: t must be > 0");
  const Vector exit_rates = -d.a() * Vector::Ones(d.phases());
  return (d.alpha() * matrix_exp(Matrix(t * d.a())) * exit_rates).value();
}

double ph_cdf(const PhaseType& d, double t) {
  if (t < 0) throw InvalidInput("ph_cdf: t must be >= 0");
  return 1.0 -
         (d.alpha() * matrix_exp(Matrix(t * d.a())) * Vector::Ones(d.phases()))
             .value();
}

double ph_moment(const PhaseType& d, int n) {
  if (n < 1) throw InvalidInput("ph_moment: n must be >= 1");
  Eigen::PartialPivLU<Matrix> lu(Matrix(-d.a()));
  Vector v = Vector::Ones(d.phases());
  double factorial = 1.0;
  for (int k = 1; k <= n; ++k) {
    v = lu.solve(v);
    factorial *= k;
    if (!v.allFinite()) throw NumericalError("ph_moment: A is singular");
  }
  return factorial * (d.alpha() * v).value();
}

Complex ph_mgf(const PhaseType& d, Complex u,
               const NumericalSettings& settings) {
  if (u.real() >= d.decay_rate() - settings.mgf_domain_margin) {
    std::ostringstream msg;
    msg << "ph_mgf: Re(u)=" << u.real() << " at or beyond the decay rate "
        << d.decay_rate();
    throw DomainError(msg.str());
  }
  CMatrix shifted = d.a().cast<Complex>();
  shifted.diagonal().array() += u;
  CVector rhs = (d.a() * Vector::Ones(d.phases())).cast<Complex>();
  CVector x = Eigen::PartialPivLU<CMatrix>(shifted).solve(rhs);
  return (d.alpha().cast<Complex>() * x).value() + (1.0 - d.alpha().sum());
}

double ph_sample(const PhaseType& d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const Eigen::Index m = d.phases();

  // pick the starting phase; leftover mass is the atom at zero
  double u = unif(rng);
  Eigen::Index phase = -1;
  for (Eigen::Index i = 0; i < m; ++i) {
    u -= d.alpha()(i);
    if (u < 0) {
      phase = i;
      break;
    }
  }
  if (phase < 0) return 0.0;

  std::exponential_distribution<double> expo(1.0);
  double t = 0.0;
  while (true) {
    const double rate = -d.a()(phase, phase);
    t += expo(rng) / rate;
    double v = unif(rng) * rate;
    Eigen::Index next = -1;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (j == phase) continue;
      v -= d.a()(phase, j);
      if (v < 0) {
        next = j;
        break;
      }
    }
    if (next < 0) return t;  // absorbed
    phase = next;
  }
}

DoublePhaseType::DoublePhaseType(double p, PhaseType plus, PhaseType minus,
                                 const NumericalSettings& settings)
    : p_(p), plus_(std::move(plus)), minus_(std::move(minus)) {
  if (p < 0.0 || p > 1.0) throw InvalidInput("dph: p must lie in [0,1]");
  const double tol = 1e-12;
  if (p > 0.0 && std::abs(plus_.initial_mass() - 1.0) > tol)
    throw InvalidInput("dph: upward tail has an atom at zero (beta+ must sum to 1)");
  if (p < 1.0 && std::abs(minus_.initial_mass() - 1.0) > tol)
    throw InvalidInput("dph: downward tail has an atom at zero (beta- must sum to 1)");
  (void)settings;
}

double DoublePhaseType::mean() const {
  double m = 0.0;
  if (p_ > 0) m += p_ * ph_moment(plus_, 1);
  if (p_ < 1) m -= (1.0 - p_) * ph_moment(minus_, 1);
  return m;
}

double DoublePhaseType::second_moment() const {
  double m = 0.0;
  if (p_ > 0) m += p_ * ph_moment(plus_, 2);
  if (p_ < 1) m += (1.0 - p_) * ph_moment(minus_, 2);
  return m;
}

Complex DoublePhaseType::mgf(Complex u, const NumericalSettings& settings) const {
  Complex m = 0.0;
  if (p_ > 0) m += p_ * ph_mgf(plus_, u, settings);
  if (p_ < 1) m += (1.0 - p_) * ph_mgf(minus_, -u, settings);
  return m;
}

double dph_pdf(const DoublePhaseType& d, double x) {
  if (x == 0.0) throw InvalidInput("dph_pdf: density not defined at x = 0");
  if (x > 0) return d.p() > 0 ? d.p() * ph_pdf(d.plus(), x) : 0.0;
  return d.p() < 1 ? (1.0 - d.p()) * ph_pdf(d.minus(), -x) : 0.0;
}

DoublePhaseType dph_scale(const DoublePhaseType& d, double c) {
  if (c <= 0) throw InvalidInput("dph_scale: c must be > 0");
  PhaseType plus(d.plus().alpha(), d.plus().a() / c);
  PhaseType minus(d.minus().alpha(), d.minus().a() / c);
  return DoublePhaseType(d.p(), std::move(plus), std::move(minus));
}

double dph_sample(const DoublePhaseType& d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  if (unif(rng) < d.p()) return ph_sample(d.plus(), rng);
  return -ph_sample(d.minus(), rng);
}

PhaseType exponential_ph(double rate) {
  if (rate <= 0) throw InvalidInput("exponential_ph: rate must be > 0");
  RowVector alpha(1);
  alpha << 1.0;
  Matrix a(1, 1);
  a << -rate;
  return PhaseType(alpha, a);
}

PhaseType erlang_ph(int stages, double rate) {
  if (stages < 1 || rate <= 0)
    throw InvalidInput("erlang_ph: need stages >= 1 and rate > 0");
  RowVector alpha = RowVector::Zero(stages);
  alpha(0) = 1.0;
  Matrix a = Matrix::Zero(stages, stages);
  for (int i = 0; i < stages; ++i) {
    a(i, i) = -rate;
    if (i + 1 < stages) a(i, i + 1) = rate;
  }
  return PhaseType(alpha, a);
}

DoublePhaseType double_exponential(double p, double rate_up, double rate_down) {
  return DoublePhaseType(p, exponential_ph(rate_up), exponential_ph(rate_down));
}

}  // namespace rslevy
