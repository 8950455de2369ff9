#include "rslevy/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace rslevy {

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double b, double fa, double fm, double fb, double whole,
                     double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = simpson(fa, fm, fb, b - a);
  return adaptive_step(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

double find_root(const std::function<double(double)>& f, double a, double b,
                 double tol, int max_iter) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0)
    throw InvalidInput("find_root: endpoints do not bracket a root");
  if (std::abs(fa) < std::abs(fb)) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = a, fc = fa, d = c;
  bool mflag = true;
  for (int iter = 0; iter < max_iter; ++iter) {
    if (fb == 0.0 || std::abs(b - a) < tol) return b;
    double s;
    if (fa != fc && fb != fc) {
      s = a * fb * fc / ((fa - fb) * (fa - fc)) +
          b * fa * fc / ((fb - fa) * (fb - fc)) +
          c * fa * fb / ((fc - fa) * (fc - fb));
    } else {
      s = b - fb * (b - a) / (fb - fa);
    }
    const double lo = std::min((3.0 * a + b) / 4.0, b);
    const double hi = std::max((3.0 * a + b) / 4.0, b);
    const bool cond = (s < lo || s > hi) ||
                      (mflag && std::abs(s - b) >= std::abs(b - c) / 2.0) ||
                      (!mflag && std::abs(s - b) >= std::abs(c - d) / 2.0) ||
                      (mflag && std::abs(b - c) < tol) ||
                      (!mflag && std::abs(c - d) < tol);
    if (cond) {
      s = 0.5 * (a + b);
      mflag = true;
    } else {
      mflag = false;
    }
    const double fs = f(s);
    d = c;
    c = b;
    fc = fb;
    if (fa * fs < 0.0) {
      b = s;
      fb = fs;
    } else {
      a = s;
      fa = fs;
    }
    if (std::abs(fa) < std::abs(fb)) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
  }
  return b;
}

double black_scholes_price(bool call, double spot, double strike,
                           double maturity, double vol, double r, double d) {
  if (spot <= 0 || strike <= 0 || maturity <= 0)
    throw InvalidInput("black_scholes_price: spot, strike, maturity must be > 0");
  const double fwd = spot * std::exp((r - d) * maturity);
  const double df = std::exp(-r * maturity);
  if (vol <= 0) {
    const double intrinsic = call ? std::max(fwd - strike, 0.0)
                                  : std::max(strike - fwd, 0.0);
    return df * intrinsic;
  }
  const double sd = vol * std::sqrt(maturity);
  const double d1 = std::log(fwd / strike) / sd + 0.5 * sd;
  const double d2 = d1 - sd;
  if (call) return df * (fwd * norm_cdf(d1) - strike * norm_cdf(d2));
  return df * (strike * norm_cdf(-d2) - fwd * norm_cdf(-d1));
}

}  // namespace rslevy
