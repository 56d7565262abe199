#include "adoheston/skew.hpp"

#include "adoheston/error.hpp"
#include "adoheston/quadrature.hpp"
#include "parallel.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace adoheston {

namespace {

constexpr double kUMaxCap = 1e4;

// -e^{I^2 Tb/8} sqrt(2/pi) Tb^{-1/2} int_0^umax u Im phi(u - i/2) / (u^2 + 1/4) du
template <class Exponents>
double skew_integral(double Tb, const ModelParams& mp, const QuadratureConfig& q, Exponents&& ex)
{
    q.validate();
    const double v = mp.skew_variance();
    auto f = [&](double u) {
        const CFExponents e = ex(u);
        return u * std::exp(e.A_re + v * e.B_re) * std::sin(e.A_im) / (u * u + 0.25);
    };
    const double u_max = q.u_max ? *q.u_max : default_u_max(Tb, mp);
    const QuadResult r = integrate_gk15(f, 0.0, u_max, q.rel_tol, 0.0, q.max_subdivisions);
    if (!r.converged || !std::isfinite(r.value))
        throw NumericalError("skew quadrature did not converge (estimated error "
                                 + std::to_string(r.abs_error) + ")",
                             r.abs_error);
    const double pref = std::exp(mp.I * mp.I * Tb / 8.0) * std::sqrt(2.0 / std::numbers::pi)
                        / std::sqrt(Tb);
    return -pref * r.value;
}

} // namespace

void QuadratureConfig::validate() const
{
    if (u_max && !(*u_max > 0.0))
        throw DomainError("u_max must be positive");
    if (!(rel_tol > 0.0 && rel_tol <= 1e-2))
        throw DomainError("rel_tol must lie in (0, 1e-2]");
    if (max_subdivisions < 1)
        throw DomainError("max_subdivisions must be positive");
}

double gaussian_rate(double Tb, const ModelParams& mp)
{
    if (!(Tb > 0.0))
        throw DomainError("maturity must be positive");
    const double H = mp.hp.H;
    const double v = mp.skew_variance();
    if (mp.form == ClosedForm::as_printed) {
        const double B2 = mp.hp.B_H * mp.hp.B_H;
        return mp.zeta / 12.0
                   * ((5.0 - 2.0 * H) * std::pow(Tb, H + 1.0)
                      + 0.5 * B2 * mp.rho * mp.xi * std::pow(Tb, 3.0 * H + 1.0))
               + 0.5 * v * Tb;
    }
    const double a = std::pow(Tb, H + 1.0) / (2.0 * H * (H + 1.0))
                     + mp.xi * mp.rho * mp.hp.B_H * std::pow(Tb, 2.0 * H + 1.5)
                           / (4.0 * H * (H + 1.0) * (H + 2.0));
    return mp.zeta * a + 0.5 * v * Tb * (1.0 + 0.25 * mp.xi * mp.rho * nu(Tb, mp.hp) * Tb);
}

double default_u_max(double Tb, const ModelParams& mp)
{
    const double p = gaussian_rate(Tb, mp);
    if (!(p > 0.0))
        return kUMaxCap;
    return std::min(std::sqrt(30.0 / p), kUMaxCap);
}

double atm_skew(double T, const ModelParams& mp, const QuadratureConfig& q)
{
    if (!(T > 0.0))
        throw DomainError("atm_skew: T must be positive");
    return skew_integral(T, mp, q, [&](double u) { return cf_exponents(u, T, mp); });
}

double atm_skew_forward(double s, double T, const ModelParams& mp, const QuadratureConfig& q)
{
    if (!(s >= 0.0) || !(s < T))
        throw DomainError("atm_skew_forward: need 0 <= s < T");
    return skew_integral(T - s, mp, q, [&](double u) { return cf_exponents_forward(u, s, T, mp); });
}

double atm_skew_upper_bound(double T, const ModelParams& mp)
{
    if (!(T > 0.0))
        throw DomainError("upper bound: T must be positive");
    const double p = gaussian_rate(T, mp);
    if (!(p > 0.0))
        throw DomainError("upper bound: nonpositive Gaussian rate p = " + std::to_string(p));
    // int_0^inf u e^{-p(u^2+1/4)} / (u^2+1/4) du = E1(p/4) / 2
    const double e1 = mp.form == ClosedForm::as_printed ? exp_integral_e1(p)
                                                        : exp_integral_e1(p / 4.0);
    return std::exp(mp.I * mp.I * T / 8.0) / std::sqrt(2.0 * std::numbers::pi * T) * e1;
}

SkewCurve skew_curve(std::span<const double> T_grid, const ModelParams& mp,
                     const QuadratureConfig& q, unsigned threads)
{
    if (T_grid.empty())
        throw DomainError("skew_curve: empty maturity grid");
    for (std::size_t i = 0; i < T_grid.size(); ++i) {
        if (!(T_grid[i] > 0.0) || (i > 0 && !(T_grid[i] > T_grid[i - 1])))
            throw DomainError("skew_curve: maturities must be positive and strictly increasing");
    }
    q.validate();
    SkewCurve c;
    c.H = mp.hp.H;
    c.points.resize(T_grid.size());
    detail::parallel_for(T_grid.size(), threads, [&](std::size_t i) {
        c.points[i] = {T_grid[i], atm_skew(T_grid[i], mp, q)};
    });
    return c;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n)
{
    if (n == 0)
        throw DomainError("log_spaced: need at least one point");
    if (!(lo > 0.0) || !(hi >= lo))
        throw DomainError("log_spaced: need 0 < lo <= hi");
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    const double a = std::log(lo);
    const double step = (std::log(hi) - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::exp(a + step * static_cast<double>(i));
    out.front() = lo;
    out.back() = hi;
    return out;
}

} // namespace adoheston
