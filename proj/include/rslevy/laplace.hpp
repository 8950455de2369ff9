#pragma once

#include <functional>
#include <vector>

#include "rslevy/types.hpp"

namespace rslevy {

/// Bromwich-line contour for numerical Laplace inversion.
struct LaplaceContour {
  double abscissa;   // c, strictly right of all singularities
  int sum_terms;     // alternating-series terms before acceleration
  int euler_terms;   // binomial averaging order
};

LaplaceContour make_contour(double q_star, double t,
                            const NumericalSettings& settings = {});

struct LaplaceResult {
  double value;
  double error_estimate;  // difference of successive acceleration orders
};

/// Evaluation nodes c + ik*pi/t, k = 0..count-1.
std::vector<Complex> bromwich_nodes(const LaplaceContour& contour, double t);

/// Euler-accelerated combination of transform values at bromwich_nodes.
LaplaceResult euler_combine(const std::vector<Complex>& values,
                            const LaplaceContour& contour, double t);

/// Inverts a Laplace transform at time t; the transform must be analytic
/// right of the contour abscissa.
LaplaceResult invert_laplace(const std::function<Complex(Complex)>& transform,
                             double t, const LaplaceContour& contour);

LaplaceResult invert_laplace(const std::function<Complex(Complex)>& transform,
                             double t, double q_star,
                             const NumericalSettings& settings = {});

}  // namespace rslevy
