#include "rslevy/european.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "rslevy/numerics.hpp"

namespace rslevy {

namespace {

// conservative stddev bound for X_T used to size the strike grid
double stddev_bound(const RegimeModel& m, double t) {
  double var = 0.0;
  for (int i = 0; i < m.regimes(); ++i) {
    double v = m.sigma()(i) * m.sigma()(i);
    if (m.lambda()(i) > 0) v += m.lambda()(i) * m.jumps()[i].second_moment();
    var = std::max(var, v);
  }
  return std::sqrt(var * t);
}

// Damped Fourier inversion of a log-strike transform: the inner evaluator
// returns [exp(...)1](j)-style factors; prefactor and pole term are shared.
// price(k) = e^{-alpha k}/pi * int_0^inf Re[e^{-isk} g(s - i alpha)] ds
double invert_strike_transform(const RegimeModel& m, double maturity, double k,
                               double alpha,
                               const std::function<Complex(Complex)>& transform) {
  const NumericalSettings& st = m.settings();
  const double sd = stddev_bound(m, maturity);
  // the damped price decays like e^{-min(|alpha|,|1+alpha|)|k|} in the far
  // wings; the alias period must make that tail negligible
  const double damping_decay = std::min(std::abs(alpha), std::abs(1.0 + alpha));
  const double width = std::max(
      {st.strike_grid_min_width,
       2.0 * st.strike_grid_stddevs * sd + 4.0 * (std::abs(k - m.x0()) +
           m.mu().cwiseAbs().maxCoeff() * maturity),
       18.4 / damping_decay});
  const double sigma_min2 = m.sigma().array().square().minCoeff();
  const double s_decay =
      std::sqrt(2.0 * 37.0 / (maturity * sigma_min2));  // e^{-37} ~ 1e-16
  int n = st.fourier_grid_size;  // intervals; n+1 nodes, n even
  // the step must resolve both the decay range and the pole of the transform
  // nearest to the contour (distance min(|alpha|, |1+alpha|) from s = 0)
  double eta = std::min({2.0 * M_PI / width, s_decay / (n / 8.0),
                         damping_decay / 8.0});
  while (n * eta < s_decay && n < (1 << 22)) n *= 2;  // cover the decay range

  double acc = 0.0;
  for (int idx = 0; idx <= n; ++idx) {
    const double s = idx * eta;
    const double w = (idx == 0 || idx == n) ? 1.0 : (idx % 2 == 1 ? 4.0 : 2.0);
    const Complex value = transform(Complex(s, -alpha));
    acc += w * (std::exp(-kImag * s * k) * value).real();
  }
  acc *= eta / 3.0;
  return std::exp(-alpha * k) / M_PI * acc;
}

double pick_call_damping(const RegimeModel& m) {
  const double requested = m.settings().call_damping;
  const double limit = m.strip().alpha_plus_star - 1.0;  // need 1+alpha < alpha*+
  if (limit <= 0)
    throw DomainError("price_european: alpha*+ <= 1, call prices are infinite");
  return std::isinf(limit) ? requested : std::min(requested, 0.5 * limit);
}

// the damped put needs alpha in (-1 - alpha*-, -1): integrability at large
// strikes forces alpha < -1, the CF strip bounds it below
double pick_put_damping(const RegimeModel& m) {
  const double requested = m.settings().put_damping;
  const double limit = m.strip().alpha_minus_star;
  double alpha = std::isinf(limit) ? requested
                                   : std::max(requested, -1.0 - 0.5 * limit);
  return std::min(alpha, -1.0 - 1e-3);
}

}  // namespace

Complex call_transform(const RegimeModel& m, double maturity, Complex xi,
                       int j) {
  if (xi.imag() >= 0)
    throw DomainError("call_transform: Im(xi) must be negative");
  const Complex pole = kImag * xi - xi * xi;
  if (std::abs(pole) < 1e-14)
    throw DomainError("call_transform: xi at a pole of the transform");
  CMatrix a = char_matrix_exponent(m, xi - kImag);
  a.diagonal() -= m.rd().cast<Complex>();
  const CVector u =
      matrix_exp(CMatrix(maturity * a)) * CVector::Ones(m.regimes());
  return std::exp((1.0 + kImag * xi) * m.x0()) / pole * u(j);
}

double price_european(const RegimeModel& m, OptionKind kind, double strike,
                      double maturity) {
  if (strike <= 0) throw InvalidInput("price_european: strike must be > 0");
  if (maturity <= 0) throw InvalidInput("price_european: maturity must be > 0");
  const double k = std::log(strike);
  const double alpha = kind == OptionKind::Call ? pick_call_damping(m)
                                                : pick_put_damping(m);
  // cache the matrix-exponential factor: it depends on xi only through s
  auto transform = [&](Complex xi) {
    CMatrix a = char_matrix_exponent(m, xi - kImag);
    a.diagonal() -= m.rd().cast<Complex>();
    const CVector u =
        matrix_exp(CMatrix(maturity * a)) * CVector::Ones(m.regimes());
    return std::exp((1.0 + kImag * xi) * m.x0()) /
           (kImag * xi - xi * xi) * u(m.z0());
  };
  return invert_strike_transform(m, maturity, k, alpha, transform);
}

double price_forward_start(const RegimeModel& m, double kappa, double t1,
                           double t2) {
  if (kappa <= 0) throw InvalidInput("price_forward_start: kappa must be > 0");
  if (t1 < 0 || t2 <= t1)
    throw InvalidInput("price_forward_start: need 0 <= t1 < t2");
  const double k = std::log(kappa);
  const double alpha = pick_call_damping(m);

  Matrix qf = m.q().entries();
  qf.diagonal() -= m.rf();
  const Matrix front = matrix_exp(Matrix(t1 * qf));

  // spot enters as the scalar S0: the transform is taken in the relative
  // log-strike log(kappa), and the inner call prices start at unit spot
  auto transform = [&](Complex xi) {
    CMatrix a = char_matrix_exponent(m, xi - kImag);
    a.diagonal() -= m.rd().cast<Complex>();
    const CVector u = front.cast<Complex>() *
                      (matrix_exp(CMatrix((t2 - t1) * a)) *
                       CVector::Ones(m.regimes()));
    return std::exp(m.x0()) / (kImag * xi - xi * xi) * u(m.z0());
  };
  return invert_strike_transform(m, t2 - t1, k, alpha, transform);
}

double implied_vol(const VanillaQuote& quote, double spot, double r, double d) {
  if (quote.strike <= 0 || quote.maturity <= 0 || quote.price < 0)
    throw InvalidInput("implied_vol: invalid quote");
  const double df_r = std::exp(-r * quote.maturity);
  const double df_d = std::exp(-d * quote.maturity);
  const double lower = std::max(spot * df_d - quote.strike * df_r, 0.0);
  const double upper = spot * df_d;
  if (quote.price <= lower || quote.price >= upper) {
    std::ostringstream msg;
    msg << "implied_vol: price " << quote.price
        << " outside the arbitrage bounds (" << lower << ", " << upper << ")";
    throw DomainError(msg.str());
  }
  auto objective = [&](double vol) {
    return black_scholes_price(true, spot, quote.strike, quote.maturity, vol,
                               r, d) -
           quote.price;
  };
  double hi = 1.0;
  while (objective(hi) < 0 && hi < 64.0) hi *= 2.0;
  return find_root(objective, 1e-12, hi, 1e-14);
}

namespace {

bool strongly_connected(const Matrix& q) {
  const int n = static_cast<int>(q.rows());
  if (n == 1) return true;
  auto reach = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        const double rate = forward ? q(v, w) : q(w, v);
        if (w != v && rate > 0 && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    for (bool s : seen)
      if (!s) return false;
    return true;
  };
  return reach(true) && reach(false);
}

double lee_slope(double q) {
  if (std::isinf(q)) return 0.0;
  return 2.0 - 4.0 * (std::sqrt(q * q + q) - q);
}

}  // namespace

WingSlopes wing_slopes(const RegimeModel& m) {
  if (!strongly_connected(m.q().entries()))
    throw InvalidInput("wing_slopes: switching chain must be irreducible");
  double q_plus = std::numeric_limits<double>::infinity();
  double q_minus = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m.regimes(); ++i) {
    if (m.has_up_jumps(i)) q_plus = std::min(q_plus, m.alpha_plus(i) - 1.0);
    if (m.has_down_jumps(i)) q_minus = std::min(q_minus, m.alpha_minus(i));
  }
  return {q_plus, q_minus, lee_slope(q_plus), lee_slope(q_minus)};
}

Vector forward_smile_weights(const RegimeModel& m, double y, double t) {
  Vector ys(1);
  ys << y;
  const Matrix grid = joint_density_grid(m, t, ys);
  const double total = grid(0, m.regimes());
  if (total <= 1e-300)
    throw NumericalError("forward_smile_weights: vanishing density at y");
  return grid.row(0).head(m.regimes()).transpose() / total;
}

}  // namespace rslevy
