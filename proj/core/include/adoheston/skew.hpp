#pragma once

#include "adoheston/charfn.hpp"
#include "adoheston/special.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace adoheston {

struct QuadratureConfig {
    std::optional<double> u_max;  // unset: from the Gaussian decay of the integrand
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;

    void validate() const;
};

struct SkewPoint {
    double T;
    double skew;
};

struct SkewCurve {
    double H = 0.5;
    std::vector<SkewPoint> points;  // T strictly increasing
};

// ATM implied skew for maturity T.
double atm_skew(double T, const ModelParams& mp, const QuadratureConfig& q = {});

// Closed-form bound from replacing sin(A_im) by -1. Throws DomainError when
// the Gaussian rate of the integrand is not positive.
double atm_skew_upper_bound(double T, const ModelParams& mp);

// Forward-start ATM skew: the vanilla integral over the horizon T - s.
double atm_skew_forward(double s, double T, const ModelParams& mp, const QuadratureConfig& q = {});

// Rate p in |exp(A + vB)| <= exp(-p (u^2 + 1/4)) at horizon Tbar, evaluated
// for the configured closed form.
double gaussian_rate(double Tbar, const ModelParams& mp);

// sqrt(30 / p) capped at 1e4, so the integrand tail is below e^-30.
double default_u_max(double Tbar, const ModelParams& mp);

SkewCurve skew_curve(std::span<const double> T_grid, const ModelParams& mp,
                     const QuadratureConfig& q = {}, unsigned threads = 1);

// n points from lo to hi, equally spaced in log.
std::vector<double> log_spaced(double lo, double hi, std::size_t n);

} // namespace adoheston
