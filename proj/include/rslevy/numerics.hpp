#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "rslevy/types.hpp"

namespace rslevy {

inline double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

inline double norm_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

/// Adaptive Simpson quadrature on [a,b] with absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, int max_depth = 40);

/// Bracketed root finding (Brent). f(a) and f(b) must have opposite signs.
double find_root(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12, int max_iter = 200);

/// Black-Scholes price of a call/put with continuous rates r (discount) and
/// d (dividend/foreign).
double black_scholes_price(bool call, double spot, double strike,
                           double maturity, double vol, double r, double d);

}  // namespace rslevy
