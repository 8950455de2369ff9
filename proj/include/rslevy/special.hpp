#pragma once

#include "rslevy/types.hpp"

namespace rslevy {

/// Scaled complementary error function e^{z^2} erfc(z) for complex z.
Complex erfcx(Complex z);

/// phi(z) = e^{z^2/2} N(z) with the standard normal cdf N, for complex z.
/// Equals erfcx(-z/sqrt(2)) / 2.
Complex normal_mills(Complex z);

}  // namespace rslevy
