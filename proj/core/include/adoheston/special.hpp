#pragma once

namespace adoheston {

// Exponential integral E1(x) = Gamma(0, x), x > 0.
double exp_integral_e1(double x);

// Standard normal distribution function.
double normal_cdf(double x);

} // namespace adoheston
