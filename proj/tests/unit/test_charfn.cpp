#include "adoheston/charfn.hpp"
#include "adoheston/error.hpp"

#include "oracles.hpp"
#include "params.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace adoheston;
using adoheston::oracle::skew_params;

namespace {

constexpr cplx I1{0.0, 1.0};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST(Riccati, TerminalCondition)
{
    const ModelParams mp = skew_params(0.1);
    for (double u : {-3.0, 0.0, 0.7, 5.0}) {
        EXPECT_EQ(riccati_series(u, 0.2, 0.2, mp), cplx(0.0));
        EXPECT_EQ(riccati_ode(u, 0.2, 0.2, mp), cplx(0.0));
    }
    EXPECT_LT(std::abs(exponent_A_vanilla(1.0, 1e-15, mp)), 1e-12);
    EXPECT_LT(std::abs(exponent_A_forward(1.0, 0.3, 0.3 + 1e-15, mp)), 1e-12);
}

TEST(Riccati, SlopeAtMaturity)
{
    const ModelParams mp = skew_params(0.3);
    const double T = 0.1, h = 1e-7;
    for (double u : {0.0, 1.0, 2.5}) {
        const cplx d = (riccati_series(u, T, T, mp) - riccati_series(u, T - h, T, mp)) / h;
        EXPECT_NEAR(d.real(), 0.5 * (u * u + 0.25), 1e-5);
        EXPECT_NEAR(d.imag(), 0.0, 1e-5);
    }
}

TEST(Riccati, RejectsReversedTimes)
{
    const ModelParams mp = skew_params(0.3);
    EXPECT_THROW(riccati_series(1.0, 0.3, 0.2, mp), DomainError);
    EXPECT_THROW(riccati_ode(1.0, 0.3, 0.2, mp), DomainError);
    EXPECT_THROW(riccati_ode(1.0, 0.0, 0.2, mp), DomainError);
    EXPECT_THROW(riccati_ode(1.0, 0.1, 0.2, mp, 8), DomainError);
}

TEST(Riccati, ZeroCorrelationIsReal)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-5.0, 5.0), Tt(0.01, 0.3), frac(0.05, 0.95);
    for (double H : {0.1, 0.3, 0.5}) {
        ModelParams mp = skew_params(H);
        mp.rho = 0.0;
        for (int k = 0; k < 20; ++k) {
            const double u = U(rng), T = Tt(rng), t = frac(rng) * T;
            EXPECT_LT(std::abs(riccati_series(u, t, T, mp).imag()), 1e-14);
            EXPECT_LT(std::abs(riccati_ode(u, t, T, mp).imag()), 1e-14);
            EXPECT_LT(std::abs(exponent_A_vanilla(u, T, mp).imag()), 1e-14);
            EXPECT_LT(std::abs(exponent_A_forward(u, t, T, mp).imag()), 1e-14);
        }
    }
}

TEST(Riccati, SeriesParityInFrequency)
{
    const ModelParams mp = skew_params(0.2);
    for (double u : {0.3, 1.0, 4.0}) {
        const cplx p = riccati_series(u, 0.02, 0.1, mp);
        const cplx m = riccati_series(-u, 0.02, 0.1, mp);
        EXPECT_DOUBLE_EQ(p.real(), m.real());
        EXPECT_DOUBLE_EQ(p.imag(), -m.imag());
    }
}

TEST(Riccati, OdeConjugateSymmetry)
{
    const ModelParams mp = skew_params(0.3);
    const cplx p = riccati_ode(1.3, 0.05, 0.1, mp);
    const cplx m = riccati_ode(-1.3, 0.05, 0.1, mp);
    EXPECT_NEAR(p.real(), m.real(), 1e-15);
    EXPECT_NEAR(p.imag(), -m.imag(), 1e-15);
}

TEST(Riccati, UnshiftedCoefficientsAgreeAtShiftedFrequency)
{
    const ModelParams mp = skew_params(0.3);
    const double u = 0.8;
    const cplx a = riccati_ode(shifted_coefficients(u, mp), 0.05, 0.1, mp.hp);
    const cplx b = riccati_ode(unshifted_coefficients(cplx(u, -0.5), mp), 0.05, 0.1, mp.hp);
    EXPECT_LT(std::abs(a - b), 1e-15);
}

TEST(Riccati, SeriesAgreesWithOde)
{
    const ModelParams mp = skew_params(0.3);
    const double T = 0.1;
    const cplx ode = riccati_ode(1.0, T - 0.05, T, mp);
    EXPECT_LT(rel(riccati_series(1.0, T - 0.05, T, mp), ode), 1e-2);
}

TEST(Riccati, SeriesRemainderIsCubic)
{
    for (double H : {0.1, 0.3}) {
        const ModelParams mp = skew_params(H);
        const double T = 0.1;
        const double e1 = std::abs(riccati_series(1.0, T - 0.05, T, mp) - riccati_ode(1.0, T - 0.05, T, mp));
        const double e2 = std::abs(riccati_series(1.0, T - 0.025, T, mp) - riccati_ode(1.0, T - 0.025, T, mp));
        EXPECT_GE(e1 / e2, 6.0) << H;
        EXPECT_LE(e1 / e2, 10.0) << H;
    }
}

TEST(Riccati, OverflowGuard)
{
    const RiccatiCoefficients c{0.0, 1e6, -1e6};
    EXPECT_THROW(riccati_ode(c, 0.5, 1.0, hurst_constants(0.5), 16), NumericalError);
}

TEST(Riccati, RealPartNonPositiveBeforeMaturity)
{
    for (double H : {0.1, 0.3, 0.5}) {
        const ModelParams mp = skew_params(H);
        for (double u : {0.0, 1.0, 10.0})
            for (double d : {0.001, 0.05, 0.3})
                EXPECT_LE(riccati_series(u, 0.0, d, mp).real(), 0.0);
    }
}

TEST(ExponentA, VanillaMatchesQuadrature)
{
    const ModelParams mp = skew_params(0.1);
    const cplx q = oracle::a_quadrature(1.0, 0.1, mp);
    EXPECT_LT(rel(exponent_A_vanilla(1.0, 0.1, mp), q), 5e-2);
}

TEST(ExponentA, ForwardMatchesQuadrature)
{
    const ModelParams mp = skew_params(0.2);
    const cplx q = oracle::a_quadrature(1.0, 0.05, mp);
    EXPECT_LT(rel(exponent_A_forward(1.0, 0.5, 0.55, mp), q), 5e-2);
}

TEST(ExponentA, ForwardAtZeroIsVanilla)
{
    const ModelParams mp = skew_params(0.2);
    for (double u : {0.0, 0.5, 3.0})
        EXPECT_EQ(exponent_A_forward(u, 0.0, 0.07, mp), exponent_A_vanilla(u, 0.07, mp));
}

TEST(ExponentA, LiteralVanillaWithoutCorrelation)
{
    ModelParams mp = skew_params(0.3);
    mp.form = ClosedForm::as_printed;
    mp.rho = 0.0;
    const double u = 1.2, T = 0.08;
    const cplx A = exponent_A_vanilla(u, T, mp);
    EXPECT_EQ(A.imag(), 0.0);
    EXPECT_NEAR(A.real(), -mp.zeta / 12.0 * (u * u + 0.25) * (5.0 - 0.6) * std::pow(T, 1.3), 1e-13);
}

TEST(ExponentA, LiteralForwardIsIntegralOfLiteralSeries)
{
    ModelParams mp = skew_params(0.2);
    mp.form = ClosedForm::as_printed;
    const cplx q = oracle::a_quadrature(1.0, 0.05, mp);
    EXPECT_LT(rel(exponent_A_forward(1.0, 0.5, 0.55, mp), q), 1e-8);
}

TEST(ExponentA, ZeroMarketPrice)
{
    ModelParams mp = skew_params(0.2);
    mp.zeta = 0.0;
    EXPECT_EQ(exponent_A_vanilla(1.0, 0.1, mp), cplx(0.0));
    EXPECT_EQ(exponent_A_forward(1.0, 0.2, 0.3, mp), cplx(0.0));
    mp.form = ClosedForm::as_printed;
    EXPECT_EQ(std::abs(exponent_A_vanilla(1.0, 0.1, mp)), 0.0);
    EXPECT_EQ(std::abs(exponent_A_forward(1.0, 0.2, 0.3, mp)), 0.0);
}

TEST(ExponentA, DomainChecks)
{
    const ModelParams mp = skew_params(0.2);
    EXPECT_THROW(exponent_A_vanilla(1.0, 0.0, mp), DomainError);
    EXPECT_THROW(exponent_A_forward(1.0, 0.3, 0.3, mp), DomainError);
}

TEST(MarketPrice, Values)
{
    ModelParams mp = skew_params(0.1);
    EXPECT_NEAR(market_price_m(1.0, mp), -10000.0, 1e-9);
    mp.eps = 0.01;
    EXPECT_EQ(market_price_m(0.01, mp), 0.0);
    EXPECT_EQ(market_price_m(0.005, mp), 0.0);
    EXPECT_EQ(market_price_m(0.0, skew_params(0.1)), 0.0);
    mp.zeta = 0.0;
    EXPECT_EQ(market_price_m(0.5, mp), 0.0);
    mp.zeta = 1.0;
    mp.xi = 0.0;
    EXPECT_THROW(market_price_m(0.5, mp), DomainError);
}

TEST(PhiIm, SignAndZeros)
{
    ModelParams mp = skew_params(0.1);
    EXPECT_LT(cf_exponents(1.0, 0.1, mp).A_im, 0.0);
    EXPECT_LT(phi_im_shifted(1.0, 0.05, mp), 0.0);
    ModelParams printed = mp;
    printed.form = ClosedForm::as_printed;
    EXPECT_LT(phi_im_shifted(1.0, 0.1, printed), 0.0);
    EXPECT_EQ(phi_im_shifted(0.0, 0.1, mp), 0.0);
    mp.rho = 0.0;
    for (double u : {0.1, 1.0, 7.0})
        EXPECT_EQ(phi_im_shifted(u, 0.1, mp), 0.0);
}

TEST(CharacteristicFunction, BlackScholes)
{
    EXPECT_EQ(bs_cf(0.0, 0.7, 0.03, 0.01, 0.4), cplx(1.0));
    EXPECT_EQ(bs_cf(cplx(2.0, 1.0), 0.0, 0.03, 0.01, 0.4), cplx(1.0));
    const cplx m = bs_cf(-I1, 0.7, 0.03, 0.01, 0.4);
    EXPECT_NEAR(m.real(), std::exp(0.02 * 0.7), 1e-15);
    EXPECT_NEAR(m.imag(), 0.0, 1e-15);
}

TEST(CharacteristicFunction, AdoNormalisedAndMartingale)
{
    for (ClosedForm f : {ClosedForm::integrated, ClosedForm::as_printed}) {
        ModelParams mp = skew_params(0.2);
        mp.form = f;
        EXPECT_LT(std::abs(ado_cf(0.0, 0.25, 0.3, mp) - 1.0), 1e-15);
        EXPECT_LT(std::abs(ado_cf(-I1, 0.25, 0.3, mp) - 1.0), 1e-15);
    }
}

TEST(ModelParams, Validation)
{
    ModelParams mp = skew_params(0.3);
    EXPECT_NO_THROW(mp.validate());
    mp.rho = 1.2;
    EXPECT_THROW(mp.validate(), DomainError);
    mp = skew_params(0.3);
    mp.I = 0.0;
    EXPECT_THROW(mp.validate(), DomainError);
    mp = skew_params(0.3);
    mp.kappa = 0.0;
    EXPECT_THROW(mp.validate(), DomainError);
    mp = skew_params(0.3);
    mp.F0 = -1.0;
    EXPECT_THROW(mp.validate(), DomainError);
}
