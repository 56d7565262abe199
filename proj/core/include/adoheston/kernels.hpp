#pragma once

namespace adoheston {

// Hurst exponent and the fractional-kernel constants derived from it.
struct HurstParams {
    double H = 0.5;
    double alpha_H = 1.0;   // covariance scale
    double c_H = 1.0;
    double B_H = 1.0;       // diffusion scale, nu(t) = B_H t^(H-1/2)
    double psi_coef = 1.0;  // coefficient of t^(2H-1) in psi_H(t)
};

// Throws DomainError unless 0 < H < 1.
HurstParams hurst_constants(double H);

// Time-dependent vol-of-vol kernel B_H t^(H-1/2).
double nu(double t, const HurstParams& hp);

// xi^2 nu(t)^2 / (4 kappa).
double theta_of_t(double t, const HurstParams& hp, double xi, double kappa);

} // namespace adoheston
