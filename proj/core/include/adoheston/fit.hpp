#pragma once

#include "adoheston/skew.hpp"

#include <optional>
#include <span>
#include <vector>

namespace adoheston {

// log S = log a + slope log T, with slope = b_scaled (H - 1/2).
struct PowerLawFit {
    double H = 0.5;
    double a = 0.0;
    double slope = 0.0;
    std::optional<double> b_scaled;  // undefined at H = 1/2
    double rss = 0.0;                // residual sum of squares in log space
};

// log a = c0 + c1 H
struct ExpFit {
    double c0 = 0.0;
    double c1 = 0.0;
};

struct SharedExponentFit {
    double b = 0.0;
    std::vector<PowerLawFit> per_curve;  // intercepts refit with b held fixed
};

// OLS in log space. Needs >= 5 points with positive skew and some spread in T.
PowerLawFit fit_power_law(const SkewCurve& curve);

// Needs >= 3 distinct H values and positive a.
ExpFit fit_a_of_H(std::span<const PowerLawFit> fits);

// Per-curve slopes pooled into b with weights 1/rss, then intercepts refit.
// Needs >= 2 curves, none at H = 1/2.
SharedExponentFit fit_shared_exponent(std::span<const SkewCurve> curves);

} // namespace adoheston
