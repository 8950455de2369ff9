#include "rslevy/laplace.hpp"

#include <cmath>

namespace rslevy {

LaplaceContour make_contour(double q_star, double t,
                            const NumericalSettings& settings) {
  if (t <= 0) throw InvalidInput("make_contour: t must be > 0");
  return {q_star + settings.laplace_decay / (2.0 * t),
          settings.laplace_sum_terms, settings.laplace_euler_terms};
}

std::vector<Complex> bromwich_nodes(const LaplaceContour& contour, double t) {
  const int count = contour.sum_terms + contour.euler_terms + 1;
  std::vector<Complex> nodes(count);
  for (int k = 0; k < count; ++k)
    nodes[k] = Complex(contour.abscissa, k * M_PI / t);
  return nodes;
}

LaplaceResult euler_combine(const std::vector<Complex>& values,
                            const LaplaceContour& contour, double t) {
  const int n = contour.sum_terms, m = contour.euler_terms;
  if (static_cast<int>(values.size()) != n + m + 1)
    throw InvalidInput("euler_combine: value count does not match the contour");

  // partial sums of the alternating series
  std::vector<double> s(n + m + 1);
  double acc = 0.5 * values[0].real();
  s[0] = acc;  // unused below the n-th sum, kept for clarity
  for (int k = 1; k <= n + m; ++k) {
    acc += (k % 2 == 0 ? 1.0 : -1.0) * values[k].real();
    s[k] = acc;
  }

  // successive binomial averages of s[n..n+j]
  const double scale = std::exp(contour.abscissa * t) / t;
  double prev = 0.0, current = 0.0;
  for (int j = 0; j <= m; ++j) {
    double avg = 0.0, binom = 1.0, total = 0.0;
    for (int i = 0; i <= j; ++i) {
      avg += binom * s[n + i];
      total += binom;
      binom *= static_cast<double>(j - i) / (i + 1.0);
    }
    prev = current;
    current = scale * avg / total;
  }
  return {current, std::abs(current - prev)};
}

LaplaceResult invert_laplace(const std::function<Complex(Complex)>& transform,
                             double t, const LaplaceContour& contour) {
  const std::vector<Complex> nodes = bromwich_nodes(contour, t);
  std::vector<Complex> values(nodes.size());
  for (size_t k = 0; k < nodes.size(); ++k) values[k] = transform(nodes[k]);
  return euler_combine(values, contour, t);
}

LaplaceResult invert_laplace(const std::function<Complex(Complex)>& transform,
                             double t, double q_star,
                             const NumericalSettings& settings) {
  return invert_laplace(transform, t, make_contour(q_star, t, settings));
}

}  // namespace rslevy
