#include "adoheston/fit.hpp"

#include "adoheston/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace adoheston {

namespace {

struct Line {
    double intercept;
    double slope;
    double rss;
};

Line ols(std::span<const double> x, std::span<const double> y)
{
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (!(sxx > 0.0) || *lo == *hi)
        throw DataError("regression is singular: regressor has no spread");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - intercept - slope * x[i];
        rss += e * e;
    }
    return {intercept, slope, rss};
}

void log_data(const SkewCurve& c, std::vector<double>& x, std::vector<double>& y)
{
    if (c.points.size() < 5)
        throw DataError("power-law fit needs at least 5 points");
    x.clear();
    y.clear();
    for (const SkewPoint& p : c.points) {
        if (!(p.skew > 0.0) || !std::isfinite(p.skew))
            throw DataError("power-law fit needs strictly positive skew values");
        if (!(p.T > 0.0))
            throw DataError("power-law fit needs positive maturities");
        x.push_back(std::log(p.T));
        y.push_back(std::log(p.skew));
    }
}

} // namespace

PowerLawFit fit_power_law(const SkewCurve& curve)
{
    std::vector<double> x, y;
    log_data(curve, x, y);
    const Line l = ols(x, y);
    PowerLawFit f;
    f.H = curve.H;
    f.a = std::exp(l.intercept);
    f.slope = l.slope;
    if (curve.H != 0.5)
        f.b_scaled = l.slope / (curve.H - 0.5);
    f.rss = l.rss;
    return f;
}

ExpFit fit_a_of_H(std::span<const PowerLawFit> fits)
{
    std::set<double> distinct;
    std::vector<double> x, y;
    for (const PowerLawFit& f : fits) {
        if (!(f.a > 0.0))
            throw DataError("a(H) fit needs positive a");
        distinct.insert(f.H);
        x.push_back(f.H);
        y.push_back(std::log(f.a));
    }
    if (distinct.size() < 3)
        throw DataError("a(H) fit is singular: need at least 3 distinct H");
    const Line l = ols(x, y);
    return {l.intercept, l.slope};
}

SharedExponentFit fit_shared_exponent(std::span<const SkewCurve> curves)
{
    if (curves.size() < 2)
        throw DataError("shared-exponent fit needs at least 2 curves");
    std::vector<PowerLawFit> fits;
    for (const SkewCurve& c : curves) {
        if (c.H == 0.5)
            throw DataError("shared-exponent fit excludes H = 1/2");
        fits.push_back(fit_power_law(c));
    }

    // Exact curves have rss = 0 and would take infinite weight; average those alone.
    const bool any_exact = std::any_of(fits.begin(), fits.end(),
                                       [](const PowerLawFit& f) { return f.rss == 0.0; });
    double num = 0.0, den = 0.0;
    for (const PowerLawFit& f : fits) {
        double w;
        if (any_exact)
            w = f.rss == 0.0 ? 1.0 : 0.0;
        else
            w = 1.0 / f.rss;
        num += w * *f.b_scaled;
        den += w;
    }
    SharedExponentFit out;
    out.b = num / den;

    std::vector<double> x, y;
    for (std::size_t k = 0; k < curves.size(); ++k) {
        log_data(curves[k], x, y);
        const double slope = out.b * (curves[k].H - 0.5);
        double icpt = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            icpt += y[i] - slope * x[i];
        icpt /= static_cast<double>(x.size());
        double rss = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double e = y[i] - icpt - slope * x[i];
            rss += e * e;
        }
        out.per_curve.push_back({curves[k].H, std::exp(icpt), slope, out.b, rss});
    }
    return out;
}

} // namespace adoheston
