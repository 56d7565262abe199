#include "adoheston/charfn.hpp"

#include "adoheston/error.hpp"

#include <cmath>

namespace adoheston {

namespace {

constexpr cplx I1{0.0, 1.0};
constexpr double kOverflowGuard = 1e12;

bool finite(double x) { return std::isfinite(x); }

// A(u; 0, Tbar) for either closed form. Vanilla and forward share this
// whenever the form does not distinguish them, so s = 0 reproduces the
// vanilla value bit for bit.
cplx a_integrated(cplx u, double Tb, const ModelParams& mp)
{
    const double H = mp.hp.H;
    const cplx w = u * u + 0.25;
    const cplx g = mp.xi * mp.rho * (1.0 + 2.0 * I1 * u);
    const double c1 = std::pow(Tb, H + 1.0) / (2.0 * H * (H + 1.0));
    const double c2 = mp.hp.B_H * std::pow(Tb, 2.0 * H + 1.5) / (4.0 * H * (H + 1.0) * (H + 2.0));
    return -mp.zeta * w * (c1 + g * c2);
}

// Integral of the nu^2 series; coincides with the literal forward formula.
cplx a_printed_forward(cplx u, double Tb, const ModelParams& mp)
{
    const double H = mp.hp.H;
    const double B2 = mp.hp.B_H * mp.hp.B_H;
    const cplx w = u * u + 0.25;
    const cplx g = mp.xi * mp.rho * (1.0 + 2.0 * I1 * u);
    const double c1 = std::pow(Tb, H + 1.0) / (2.0 * H * (H + 1.0));
    const double c2 = B2 * std::pow(Tb, 3.0 * H + 1.0) / (4.0 * H * (H + 1.0) * (H + 2.0));
    return -mp.zeta * w * (c1 + g * c2);
}

cplx a_printed_vanilla(cplx u, double T, const ModelParams& mp)
{
    const double H = mp.hp.H;
    const double B2 = mp.hp.B_H * mp.hp.B_H;
    const cplx w = u * u + 0.25;
    const double TH1 = std::pow(T, H + 1.0);
    const double T3H = std::pow(T, 3.0 * H + 1.0);
    const cplx re = -(1.0 / 12.0) * mp.zeta * w * ((5.0 - 2.0 * H) * TH1 + 0.5 * B2 * mp.rho * mp.xi * u * T3H);
    const cplx im = -(1.0 / 12.0) * mp.zeta * B2 * mp.xi * mp.rho * u * w * T3H;
    return re + I1 * im;
}

void check_horizon(double t, double T)
{
    if (!(t <= T))
        throw DomainError("Riccati: t must not exceed T");
    if (t < 0.0)
        throw DomainError("Riccati: negative time");
}

} // namespace

void ModelParams::validate() const
{
    if (!(hp.H > 0.0 && hp.H < 1.0))
        throw DomainError("H must lie in (0,1)");
    if (!(kappa > 0.0))
        throw DomainError("kappa must be positive");
    if (!(xi >= 0.0) || !finite(xi))
        throw DomainError("xi must be nonnegative");
    if (!(std::abs(rho) <= 1.0))
        throw DomainError("rho must lie in [-1,1]");
    if (!finite(zeta))
        throw DomainError("zeta must be finite");
    if (!(I > 0.0) || !finite(I))
        throw DomainError("I must be positive");
    if (!(eps >= 0.0))
        throw DomainError("eps must be nonnegative");
    if (!(v0 >= 0.0) || !finite(v0))
        throw DomainError("v0 must be nonnegative");
    if (!finite(V0))
        throw DomainError("V0 must be finite");
    if (!(F0 > 0.0) || !finite(F0))
        throw DomainError("F0 must be positive");
    if (!finite(r) || !finite(delta))
        throw DomainError("rates must be finite");
}

RiccatiCoefficients shifted_coefficients(cplx u, const ModelParams& mp)
{
    return {0.5 * mp.xi * mp.rho * (1.0 + 2.0 * I1 * u), cplx(0.5 * mp.xi * mp.xi, 0.0),
            0.5 * (u * u + 0.25)};
}

RiccatiCoefficients unshifted_coefficients(cplx w, const ModelParams& mp)
{
    return {I1 * w * mp.xi * mp.rho, cplx(0.5 * mp.xi * mp.xi, 0.0), 0.5 * w * (I1 + w)};
}

cplx riccati_series(cplx u, double t, double T, const ModelParams& mp)
{
    check_horizon(t, T);
    if (t == T)
        return 0.0;
    const double d = t - T;
    const cplx w = u * u + 0.25;
    const cplx g = mp.xi * mp.rho * (1.0 + 2.0 * I1 * u);
    double n = nu(T, mp.hp);
    if (mp.form == ClosedForm::as_printed)
        n *= n;
    return 0.5 * w * d * (1.0 - 0.25 * g * n * d);
}

cplx riccati_ode(const RiccatiCoefficients& c, double t, double T, const HurstParams& hp, int n_steps)
{
    check_horizon(t, T);
    if (n_steps < 16)
        throw DomainError("Riccati ODE: need at least 16 steps");
    if (t == T)
        return 0.0;
    if (t <= 0.0 && hp.H < 0.5)
        throw DomainError("Riccati ODE: t must be positive for H < 1/2");

    // tau = T - s runs forward from 0; dB/dtau = lin nu B + quad nu^2 B^2 - src.
    auto f = [&](double tau, cplx B) {
        const double n = nu(T - tau, hp);
        return c.lin * n * B + c.quad * n * n * B * B - c.src;
    };
    const double h = (T - t) / n_steps;
    cplx B = 0.0;
    for (int k = 0; k < n_steps; ++k) {
        const double tau = k * h;
        const double tau_end = (k + 1 == n_steps) ? T - t : tau + h;
        const cplx k1 = f(tau, B);
        const cplx k2 = f(tau + 0.5 * h, B + 0.5 * h * k1);
        const cplx k3 = f(tau + 0.5 * h, B + 0.5 * h * k2);
        const cplx k4 = f(tau_end, B + h * k3);
        B += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!(std::abs(B) < kOverflowGuard))
            throw NumericalError("Riccati ODE: solution left the overflow guard", std::abs(B));
    }
    return B;
}

cplx riccati_ode(double u, double t, double T, const ModelParams& mp, int n_steps)
{
    return riccati_ode(shifted_coefficients(cplx(u, 0.0), mp), t, T, mp.hp, n_steps);
}

cplx exponent_A_vanilla(cplx u, double T, const ModelParams& mp)
{
    if (!(T > 0.0))
        throw DomainError("exponent A: T must be positive");
    if (mp.form == ClosedForm::as_printed)
        return a_printed_vanilla(u, T, mp);
    return a_integrated(u, T, mp);
}

cplx exponent_A_forward(cplx u, double s, double T, const ModelParams& mp)
{
    if (!(s >= 0.0) || !(s < T))
        throw DomainError("forward exponent A: need 0 <= s < T");
    const double Tb = T - s;
    if (mp.form == ClosedForm::as_printed)
        return a_printed_forward(u, Tb, mp);
    return a_integrated(u, Tb, mp);
}

CFExponents cf_exponents(double u, double T, const ModelParams& mp)
{
    const cplx A = exponent_A_vanilla(u, T, mp);
    const cplx B = riccati_series(u, 0.0, T, mp);
    return {A.real(), A.imag(), B.real(), B.imag()};
}

CFExponents cf_exponents_forward(double u, double s, double T, const ModelParams& mp)
{
    const cplx A = exponent_A_forward(u, s, T, mp);
    const cplx B = riccati_series(u, 0.0, T - s, mp);
    return {A.real(), A.imag(), B.real(), B.imag()};
}

double market_price_m(double t, const ModelParams& mp)
{
    if (!(t >= 0.0))
        throw DomainError("market price: negative time");
    if (mp.zeta == 0.0)
        return 0.0;
    if (mp.xi == 0.0)
        throw DomainError("market price: xi = 0 with nonzero zeta");
    if (!(t > mp.eps))
        return 0.0;
    return -mp.zeta / (mp.xi * std::pow(t, 1.0 - mp.hp.H));
}

double phi_im_shifted(double u, double T, const ModelParams& mp)
{
    const CFExponents e = cf_exponents(u, T, mp);
    return std::exp(e.A_re + mp.skew_variance() * e.B_re) * std::sin(e.A_im);
}

cplx bs_cf(cplx u, double tau, double r, double delta, double sigma)
{
    const double s2 = sigma * sigma;
    return std::exp(I1 * u * (r - delta - 0.5 * s2) * tau - 0.5 * u * u * s2 * tau);
}

CFPair ado_cf_exponents(cplx w, double Tbar, const ModelParams& mp)
{
    if (!(Tbar > 0.0))
        throw DomainError("ADO CF: horizon must be positive");
    const cplx u = w + 0.5 * I1;
    return {exponent_A_forward(u, 0.0, Tbar, mp), riccati_series(u, 0.0, Tbar, mp)};
}

cplx ado_cf(cplx w, double Tbar, double variance, const ModelParams& mp)
{
    const CFPair e = ado_cf_exponents(w, Tbar, mp);
    return std::exp(e.A + variance * e.B);
}

} // namespace adoheston
