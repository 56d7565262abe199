#include "adoheston/special.hpp"

#include "adoheston/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace adoheston {

double exp_integral_e1(double x)
{
    if (!(x > 0.0))
        throw DomainError("E1: argument must be positive");
    if (std::isinf(x))
        return 0.0;

    if (x <= 1.0) {
        // -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
        double sum = 0.0;
        double term = 1.0;
        for (int k = 1; k < 100; ++k) {
            term *= -x / k;
            const double add = term / k;
            sum += add;
            if (std::abs(add) < 1e-17 * std::abs(sum))
                break;
        }
        return -std::numbers::egamma - std::log(x) - sum;
    }

    // Continued fraction, modified Lentz.
    const double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16)
            return h * std::exp(-x);
    }
    throw NumericalError("E1: continued fraction did not converge");
}

double normal_cdf(double x)
{
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

} // namespace adoheston
