#pragma once

#include <optional>

#include "rslevy/model.hpp"
#include "rslevy/types.hpp"

namespace rslevy {

enum class OptionKind { Call, Put };

struct VanillaQuote {
  double strike;
  double maturity;
  double price;
  std::optional<double> implied_vol;
};

/// Large/small-strike implied-variance asymptotics. q_plus/q_minus are the
/// extreme positive/negative moment exponents; slopes lie in [0,2] with 0 for
/// a jump-free tail.
struct WingSlopes {
  double q_plus;
  double q_minus;
  double slope_right;
  double slope_left;
};

/// Fourier transform in log-strike of the discounted call price:
/// D(xi) = e^{(1+i xi)x} / (i xi - xi^2) * [exp(T(K(xi - i) - Lambda_D)) 1](j).
/// Requires Im(xi) < 0 away from the poles {0, i} and xi - i inside the
/// characteristic-function strip.
Complex call_transform(const RegimeModel& m, double maturity, Complex xi,
                       int j);

double price_european(const RegimeModel& m, OptionKind kind, double strike,
                      double maturity);

/// Price of (S_{T2} - kappa S_{T1})^+ via the forward-start transform.
double price_forward_start(const RegimeModel& m, double kappa, double t1,
                           double t2);

/// Black-Scholes implied volatility of a quoted price (bracketed root find).
double implied_vol(const VanillaQuote& quote, double spot, double r, double d);

/// Lee-type smile slopes; requires an irreducible switching chain.
WingSlopes wing_slopes(const RegimeModel& m);

/// P[Z_T = j | X_T = y] as a vector over j; errors when the marginal density
/// at y vanishes.
Vector forward_smile_weights(const RegimeModel& m, double y, double t);

}  // namespace rslevy
