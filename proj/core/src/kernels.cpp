#include "adoheston/kernels.hpp"

#include "adoheston/error.hpp"

#include <cmath>
#include <numbers>

namespace adoheston {

HurstParams hurst_constants(double H)
{
    if (!(H > 0.0 && H < 1.0))
        throw DomainError("Hurst exponent must lie in (0,1)");

    const double pi = std::numbers::pi;
    const double s = std::sin(pi * H);
    const double g32 = std::tgamma(1.5 - H);

    HurstParams hp;
    hp.H = H;
    const double xi_H = std::sqrt(std::tgamma(2.0 * H + 1.0) * std::tgamma(3.0 - 2.0 * H));
    hp.alpha_H = xi_H * s * s;
    hp.c_H = hp.alpha_H / (2.0 * H * g32 * std::tgamma(H + 0.5));
    hp.B_H = std::pow(2.0, 3.0 - 4.0 * H) / (s * s * s * s) * std::tgamma(2.0 - H)
             / (g32 * g32 * std::tgamma(H));
    hp.psi_coef = std::tgamma(3.0 - 2.0 * H) / (hp.c_H * g32 * g32);
    return hp;
}

double nu(double t, const HurstParams& hp)
{
    if (t < 0.0 || std::isnan(t))
        throw DomainError("nu: negative time");
    if (t == 0.0) {
        if (hp.H < 0.5)
            throw DomainError("nu: singular at t = 0 for H < 1/2");
        return hp.H == 0.5 ? hp.B_H : 0.0;
    }
    return hp.B_H * std::pow(t, hp.H - 0.5);
}

double theta_of_t(double t, const HurstParams& hp, double xi, double kappa)
{
    if (!(kappa > 0.0))
        throw DomainError("theta: kappa must be positive");
    if (xi < 0.0)
        throw DomainError("theta: xi must be nonnegative");
    const double n = nu(t, hp);
    return xi * xi * n * n / (4.0 * kappa);
}

} // namespace adoheston
