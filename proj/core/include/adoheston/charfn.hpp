#pragma once

#include "adoheston/kernels.hpp"

#include <complex>

namespace adoheston {

using cplx = std::complex<double>;

// Which closed forms back the Riccati series, the A-exponents and the
// skew bound.
//   integrated: B carries nu(T); A is the exact integral of that series;
//               the bound uses the exact Gaussian rate of exp(A + vB).
//   as_printed: B carries nu(T)^2; A and the bound use the literal
//               coefficients. Kept for comparison only.
enum class ClosedForm { integrated, as_printed };

// Risk-neutral ADO-Heston parameters.
struct ModelParams {
    HurstParams hp;
    double kappa = 1.0;    // mean reversion
    double xi = 0.01;      // vol-of-vol
    double rho = 0.0;      // correlation of the two Brownian drivers
    double zeta = 0.0;     // zeta(h0), conserved along Q-paths
    double I = 0.5;        // implied-vol level of the skew formula
    double eps = 0.0;      // cutoff of the indicator 1{t > eps}
    double v0 = 0.25;
    double V0 = 0.0;       // initial value of the ADO factor
    double F0 = 1.0;
    double r = 0.0;
    double delta = 0.0;    // dividend yield
    ClosedForm form = ClosedForm::integrated;
    bool couple_variance = true;  // skew evaluates exp(A + vB) at v = I^2, else at v0

    void validate() const;
    double skew_variance() const { return couple_variance ? I * I : v0; }
};

// Real and imaginary parts of A and B at one frequency.
struct CFExponents {
    double A_re = 0.0;
    double A_im = 0.0;
    double B_re = 0.0;
    double B_im = 0.0;
};

// Coefficients of B' = -lin nu(s) B - quad nu(s)^2 B^2 + src.
struct RiccatiCoefficients {
    cplx lin;
    cplx quad;
    cplx src;
};

// At the shifted frequency u - i/2 (real u in all skew code).
RiccatiCoefficients shifted_coefficients(cplx u, const ModelParams& mp);
// At the plain frequency w: exp(A + vB) is E[exp(i w log(F_T/F_t))].
RiccatiCoefficients unshifted_coefficients(cplx w, const ModelParams& mp);

// Short-maturity series for B(u; t, T) at the shifted frequency.
cplx riccati_series(cplx u, double t, double T, const ModelParams& mp);
inline cplx riccati_series(double u, double t, double T, const ModelParams& mp)
{
    return riccati_series(cplx(u, 0.0), t, T, mp);
}

// Backward RK4 solve of the Riccati equation from B(T) = 0 down to t > 0.
cplx riccati_ode(const RiccatiCoefficients& c, double t, double T, const HurstParams& hp,
                 int n_steps = 1024);
cplx riccati_ode(double u, double t, double T, const ModelParams& mp, int n_steps = 1024);

// A(u; 0, T) for a vanilla option, and A for the forward-start case with
// horizon Tbar = T - s. Both integrate the market price from 0 (eps ignored).
cplx exponent_A_vanilla(cplx u, double T, const ModelParams& mp);
cplx exponent_A_forward(cplx u, double s, double T, const ModelParams& mp);
inline cplx exponent_A_vanilla(double u, double T, const ModelParams& mp)
{
    return exponent_A_vanilla(cplx(u, 0.0), T, mp);
}
inline cplx exponent_A_forward(double u, double s, double T, const ModelParams& mp)
{
    return exponent_A_forward(cplx(u, 0.0), s, T, mp);
}

CFExponents cf_exponents(double u, double T, const ModelParams& mp);
CFExponents cf_exponents_forward(double u, double s, double T, const ModelParams& mp);

// -zeta / (xi t^(1-H)) for t > eps, else 0.
double market_price_m(double t, const ModelParams& mp);

// Im phi(u - i/2) = exp(A_re + v B_re) sin(A_im) with v = mp.skew_variance().
double phi_im_shifted(double u, double T, const ModelParams& mp);

// Black-Scholes CF of log(S_T/S_t) over tau.
cplx bs_cf(cplx u, double tau, double r, double delta, double sigma);

// Closed-form ADO-Heston CF of log(F_T/F_s) given the variance at s and the
// horizon Tbar = T - s: exp(A + vB) at the shifted frequency w + i/2.
cplx ado_cf(cplx w, double Tbar, double variance, const ModelParams& mp);

// A and B behind ado_cf. A is linear in zeta, so callers holding a
// per-path zeta can rescale A computed at zeta = 1.
struct CFPair {
    cplx A;
    cplx B;
};
CFPair ado_cf_exponents(cplx w, double Tbar, const ModelParams& mp);

} // namespace adoheston
