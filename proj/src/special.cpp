#include "rslevy/special.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace rslevy {

namespace {

// Faddeeva function w(z) = e^{-z^2} erfc(-iz) on Im(z) >= 0 via Weideman's
// rational approximation (SIAM Rev. 36, 1994); N = 36 terms give ~1e-14.
constexpr int kWeidemanN = 36;

const std::vector<double>& weideman_coefficients() {
  static const std::vector<double> coeffs = [] {
    const int n = kWeidemanN;
    const int m = 2 * n;
    const int m2 = 2 * m;
    const double ell = std::sqrt(n / std::sqrt(2.0));
    // f = [0, exp(-t_k^2)(ell^2 + t_k^2)] on the tangent grid, fftshifted
    std::vector<double> f(m2, 0.0);
    for (int k = -m + 1; k <= m - 1; ++k) {
      const double theta = k * M_PI / m;
      const double t = ell * std::tan(0.5 * theta);
      const double value = std::exp(-t * t) * (ell * ell + t * t);
      const int idx = k + m;  // position after the leading zero
      f[(idx + m) % m2] = value;
    }
    std::vector<double> out(n);
    for (int j = 1; j <= n; ++j) {
      double re = 0.0;
      for (int i = 0; i < m2; ++i)
        re += f[i] * std::cos(2.0 * M_PI * j * i / m2);
      out[j - 1] = re / m2;
    }
    return out;
  }();
  return coeffs;
}

Complex faddeeva_upper(Complex z) {
  const int n = kWeidemanN;
  const double ell = std::sqrt(n / std::sqrt(2.0));
  const std::vector<double>& a = weideman_coefficients();
  const Complex iz = kImag * z;
  const Complex zz = (ell + iz) / (ell - iz);
  Complex p = 0.0;
  for (int j = n - 1; j >= 0; --j) p = p * zz + a[j];
  return 2.0 * p / ((ell - iz) * (ell - iz)) +
         (1.0 / std::sqrt(M_PI)) / (ell - iz);
}

Complex faddeeva(Complex z) {
  if (z.imag() >= 0) return faddeeva_upper(z);
  // w(z) = 2 e^{-z^2} - w(-z)
  return 2.0 * std::exp(-z * z) - faddeeva_upper(-z);
}

}  // namespace

Complex erfcx(Complex z) { return faddeeva(kImag * z); }

Complex normal_mills(Complex z) {
  return 0.5 * erfcx(-z / std::sqrt(2.0));
}

}  // namespace rslevy
