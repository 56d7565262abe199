#include "adoheston/error.hpp"
#include "adoheston/fit.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace adoheston;

namespace {

SkewCurve synthetic(double H, double a, double b, std::size_t n = 50)
{
    SkewCurve c;
    c.H = H;
    for (double T : log_spaced(1e-3, 0.3, n))
        c.points.push_back({T, a * std::pow(T, b * (H - 0.5))});
    return c;
}

} // namespace

TEST(PowerLaw, ExactData)
{
    const SkewCurve c = synthetic(0.1, 0.02, 2.25);
    const PowerLawFit f = fit_power_law(c);
    EXPECT_NEAR(f.a, 0.02, 1e-12);
    ASSERT_TRUE(f.b_scaled.has_value());
    EXPECT_NEAR(*f.b_scaled, 2.25, 1e-12);
    EXPECT_NEAR(f.slope, -0.9, 1e-12);
    EXPECT_LT(f.rss, 1e-20);
    EXPECT_EQ(f.H, 0.1);
}

TEST(PowerLaw, HalfHasNoScaledExponent)
{
    SkewCurve c = synthetic(0.5, 0.01, 1.0);
    for (auto& p : c.points)
        p.skew = 0.01 * std::pow(p.T, -0.05);
    const PowerLawFit f = fit_power_law(c);
    EXPECT_FALSE(f.b_scaled.has_value());
    EXPECT_NEAR(f.slope, -0.05, 1e-12);
}

TEST(PowerLaw, ScaleConsistency)
{
    SkewCurve c = synthetic(0.2, 0.01, 2.0);
    for (std::size_t i = 0; i < c.points.size(); ++i)
        c.points[i].skew *= 1.0 + 0.05 * std::sin(3.0 * i);
    const PowerLawFit f = fit_power_law(c);
    SkewCurve s = c;
    for (auto& p : s.points)
        p.skew *= 7.5;
    const PowerLawFit g = fit_power_law(s);
    EXPECT_NEAR(g.a / f.a, 7.5, 1e-12);
    EXPECT_NEAR(*g.b_scaled, *f.b_scaled, 1e-12);
}

TEST(PowerLaw, Idempotent)
{
    SkewCurve c = synthetic(0.3, 0.003, 2.3);
    for (std::size_t i = 0; i < c.points.size(); ++i)
        c.points[i].skew *= 1.0 + 0.1 * std::cos(1.7 * i);
    const PowerLawFit f = fit_power_law(c);
    SkewCurve model = c;
    for (auto& p : model.points)
        p.skew = f.a * std::pow(p.T, f.slope);
    const PowerLawFit g = fit_power_law(model);
    EXPECT_NEAR(g.a / f.a, 1.0, 1e-12);
    EXPECT_NEAR(g.slope, f.slope, 1e-12);
}

TEST(PowerLaw, Errors)
{
    SkewCurve c = synthetic(0.2, 0.01, 2.0, 4);
    EXPECT_THROW(fit_power_law(c), DataError);
    c = synthetic(0.2, 0.01, 2.0);
    c.points[3].skew = 0.0;
    EXPECT_THROW(fit_power_law(c), DataError);
    c = synthetic(0.2, 0.01, 2.0);
    c.points[3].skew = -1.0;
    EXPECT_THROW(fit_power_law(c), DataError);
    c = synthetic(0.2, 0.01, 2.0);
    for (auto& p : c.points)
        p.T = 0.1;
    EXPECT_THROW(fit_power_law(c), DataError);
}

TEST(AOfH, ExactRoundTrip)
{
    std::vector<PowerLawFit> fits;
    for (double H : {0.1, 0.2, 0.3, 0.4, 0.47, 0.5}) {
        PowerLawFit f;
        f.H = H;
        f.a = std::exp(-12.5927 * H - 2.42651);
        fits.push_back(f);
    }
    const ExpFit e = fit_a_of_H(fits);
    EXPECT_NEAR(e.c0, -2.42651, 1e-12);
    EXPECT_NEAR(e.c1, -12.5927, 1e-12);
}

TEST(AOfH, ReferenceValues)
{
    const double tab[][2] = {{0.1, 0.02498}, {0.2, 0.00778}, {0.3, 0.00098},
                             {0.4, 0.00030}, {0.47, 0.00020}, {0.5, 0.00019}};
    std::vector<PowerLawFit> fits;
    for (const auto& r : tab) {
        PowerLawFit f;
        f.H = r[0];
        f.a = r[1];
        fits.push_back(f);
    }
    const ExpFit e = fit_a_of_H(fits);
    EXPECT_GE(e.c1, -15.0);
    EXPECT_LE(e.c1, -10.0);
}

TEST(AOfH, NeedsThreeDistinctH)
{
    PowerLawFit f;
    f.H = 0.2;
    f.a = 0.01;
    std::vector<PowerLawFit> fits{f, f};
    EXPECT_THROW(fit_a_of_H(fits), DataError);
    PowerLawFit g = f;
    g.H = 0.3;
    fits = {f, f, g};
    EXPECT_THROW(fit_a_of_H(fits), DataError);
}

TEST(SharedExponent, ExactRecovery)
{
    std::vector<SkewCurve> curves;
    for (double H : {0.1, 0.2, 0.3, 0.4, 0.47})
        curves.push_back(synthetic(H, std::exp(-12.5927 * H - 2.42651), 2.3));
    const SharedExponentFit f = fit_shared_exponent(curves);
    EXPECT_NEAR(f.b, 2.3, 1e-10);
    ASSERT_EQ(f.per_curve.size(), curves.size());
    for (std::size_t i = 0; i < curves.size(); ++i)
        EXPECT_NEAR(f.per_curve[i].a / std::exp(-12.5927 * curves[i].H - 2.42651), 1.0, 1e-10);
}

TEST(SharedExponent, WeightsByResidual)
{
    SkewCurve a = synthetic(0.1, 0.02, 2.0);
    SkewCurve b = synthetic(0.3, 0.002, 3.0);
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        a.points[i].skew *= 1.0 + 0.01 * std::sin(5.0 * i);
        b.points[i].skew *= 1.0 + 0.10 * std::sin(5.0 * i);
    }
    const std::vector<SkewCurve> curves{a, b};
    const SharedExponentFit f = fit_shared_exponent(curves);
    const PowerLawFit fa = fit_power_law(a), fb = fit_power_law(b);
    const double ref = (*fa.b_scaled / fa.rss + *fb.b_scaled / fb.rss) / (1.0 / fa.rss + 1.0 / fb.rss);
    EXPECT_NEAR(f.b, ref, 1e-12);
    EXPECT_LT(std::abs(f.b - 2.0), std::abs(f.b - 3.0));
}

TEST(SharedExponent, Errors)
{
    const std::vector<SkewCurve> one{synthetic(0.1, 0.02, 2.3)};
    EXPECT_THROW(fit_shared_exponent(one), DataError);
    const std::vector<SkewCurve> half{synthetic(0.1, 0.02, 2.3), synthetic(0.5, 0.001, 2.3)};
    EXPECT_THROW(fit_shared_exponent(half), DataError);
}
