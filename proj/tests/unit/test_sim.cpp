#include "adoheston/error.hpp"
#include "adoheston/sim.hpp"
#include "adoheston/skew.hpp"

#include "params.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace adoheston;
using adoheston::oracle::dynamics_params;

namespace {

std::vector<double> drift_grid()
{
    return log_spaced(1e-8, 1.0, 2000);
}

std::size_t argmax(const std::vector<double>& x)
{
    return static_cast<std::size_t>(std::max_element(x.begin(), x.end()) - x.begin());
}

std::size_t argmin(const std::vector<double>& x)
{
    return static_cast<std::size_t>(std::min_element(x.begin(), x.end()) - x.begin());
}

// Constant-zeta set-up with v bounded away from zero.
ModelParams h_params()
{
    ModelParams mp = dynamics_params(0.3);
    mp.zeta = 1.0;
    return mp;
}

SimConfig h_config(std::size_t n_steps)
{
    SimConfig c;
    c.n_paths = 500;
    c.n_steps = n_steps;
    c.T = 1.0;
    c.seed = 11;
    c.eps = 0.05;
    return c;
}

} // namespace

TEST(DriftPath, InteriorExtrema)
{
    const DriftPath p = drift_ode_path(dynamics_params(), 0.1, drift_grid());
    const std::size_t iv = argmax(p.v), iV = argmin(p.V);
    EXPECT_GT(iv, 0u);
    EXPECT_LT(iv, p.v.size() - 1);
    EXPECT_GT(iV, 0u);
    EXPECT_LT(iV, p.V.size() - 1);
    EXPECT_GT(p.t[iV], p.t[iv]);
}

TEST(DriftPath, NoDriftKeepsVariance)
{
    const ModelParams mp = dynamics_params();
    const DriftPath p = drift_ode_path(mp, 0.0, drift_grid());
    for (double v : p.v)
        EXPECT_EQ(v, mp.v0);
}

TEST(DriftPath, Guards)
{
    const ModelParams mp = dynamics_params();
    const std::vector<double> from_zero{0.0, 0.5, 1.0};
    EXPECT_THROW(drift_ode_path(mp, 0.1, from_zero), DomainError);
    ModelParams bad = mp;
    bad.V0 = -1e4;  // h very negative drives v to zero
    EXPECT_THROW(drift_ode_path(bad, 5.0, drift_grid()), NumericalError);
}

TEST(Simulation, DegenerateModelIsGeometricBrownianMotion)
{
    ModelParams mp = dynamics_params(0.3);
    mp.xi = 0.0;
    mp.v0 = 0.04;
    SimConfig c;
    c.n_paths = 10000;
    c.n_steps = 16;
    c.seed = 3;
    const PathSet ps = simulate_q(mp, c);
    for (std::size_t i = 0; i < 20; ++i)
        for (std::size_t j = 0; j < ps.v.cols; ++j)
            EXPECT_EQ(ps.v(i, j), 0.04);
    const MartingaleStat m = mc_martingale_stat(ps);
    EXPECT_LT(std::abs(m.mean - 1.0), 3.0 * m.std_error);
    // log F_T is exactly normal here: variance v T.
    double s = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < ps.n_paths(); ++i) {
        const double x = std::log(ps.F(i, ps.F.cols - 1));
        s += x;
        s2 += x * x;
    }
    const double n = static_cast<double>(ps.n_paths());
    EXPECT_NEAR(s2 / n - (s / n) * (s / n), 0.04, 0.003);
}

TEST(Simulation, Reproducible)
{
    SimConfig c = h_config(64);
    c.n_paths = 50;
    const PathSet a = simulate_q(h_params(), c);
    c.threads = 4;
    const PathSet b = simulate_q(h_params(), c);
    EXPECT_EQ(a.F.data, b.F.data);
    EXPECT_EQ(a.V.data, b.V.data);
    EXPECT_EQ(mc_martingale_stat(a).mean, mc_martingale_stat(b).mean);
}

TEST(Simulation, PathIndependentOfEnsembleSize)
{
    SimConfig c = h_config(32);
    c.n_paths = 10;
    const PathSet a = simulate_q(h_params(), c);
    c.n_paths = 3;
    const PathSet b = simulate_q(h_params(), c);
    for (std::size_t j = 0; j < a.F.cols; ++j)
        EXPECT_EQ(a.F(2, j), b.F(2, j));
}

TEST(Simulation, StoredStateInvariants)
{
    ModelParams mp = dynamics_params(0.1);
    mp.zeta = 0.0;
    mp.v0 = 0.01;  // hits zero often
    SimConfig c;
    c.n_paths = 200;
    c.n_steps = 100;
    c.seed = 5;
    const PathSet ps = simulate_q(mp, c);
    bool touched = false;
    for (std::size_t k = 0; k < ps.v.data.size(); ++k) {
        EXPECT_GE(ps.v.data[k], 0.0);
        EXPECT_GT(ps.F.data[k], 0.0);
        touched = touched || ps.v.data[k] == 0.0;
    }
    EXPECT_TRUE(touched);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < ps.h.cols; ++j)
            EXPECT_DOUBLE_EQ(ps.h(i, j), mp.xi * ps.V(i, j) - 2.0 * std::sqrt(ps.v(i, j))
                                             + mp.kappa * (c.T - ps.times[j]));
}

TEST(Simulation, RecordStrideKeepsEndpoints)
{
    SimConfig c = h_config(30);
    c.n_paths = 4;
    c.record_stride = 7;
    const PathSet ps = simulate_q(h_params(), c);
    const std::vector<double> expect{0.0, 7.0 / 30, 14.0 / 30, 21.0 / 30, 28.0 / 30, 1.0};
    ASSERT_EQ(ps.times.size(), expect.size());
    for (std::size_t j = 0; j < expect.size(); ++j)
        EXPECT_NEAR(ps.times[j], expect[j], 1e-15);
    c.record_stride = 1;
    const PathSet full = simulate_q(h_params(), c);
    EXPECT_EQ(ps.F(2, 5), full.F(2, 30));
    EXPECT_EQ(ps.F(2, 2), full.F(2, 14));
}

TEST(Simulation, Validation)
{
    SimConfig c = h_config(4);
    EXPECT_THROW(simulate_q(h_params(), c), DomainError);
    c = h_config(16);
    c.T = 0.0;
    EXPECT_THROW(simulate_q(h_params(), c), DomainError);
    c = h_config(16);
    ModelParams mp = h_params();
    mp.rho = -1.5;
    EXPECT_THROW(simulate_q(mp, c), DomainError);
    mp = h_params();
    mp.xi = 0.0;
    EXPECT_THROW(simulate_q(mp, c), DomainError);
}

TEST(HInvariant, ZeroNoiseIsExact)
{
    ModelParams mp = h_params();
    mp.zeta = 0.0;
    SimConfig c = h_config(64);
    c.n_paths = 20;
    c.diffusion = false;
    const PathSet ps = simulate_q(mp, c);
    EXPECT_LT(check_h_invariant(ps), 1e-12);
}

TEST(HInvariant, ConstantPaths)
{
    PathSet ps;
    ps.times = {0.0, 0.5, 1.0};
    ps.h.rows = 2;
    ps.h.cols = 3;
    ps.h.data.assign(6, 1.25);
    EXPECT_EQ(check_h_invariant(ps), 0.0);
}

TEST(HInvariant, FirstOrderInStep)
{
    const double d1 = check_h_invariant(simulate_q(h_params(), h_config(200)));
    const double d2 = check_h_invariant(simulate_q(h_params(), h_config(400)));
    EXPECT_GE(d1 / d2, 1.5);
    EXPECT_LE(d1 / d2, 3.0);
}

TEST(Martingale, SingleConstantPath)
{
    PathSet ps;
    ps.times = {0.0, 1.0};
    ps.F.rows = 1;
    ps.F.cols = 2;
    ps.F.data = {2.0, 2.0};
    const MartingaleStat m = mc_martingale_stat(ps);
    EXPECT_EQ(m.mean, 1.0);
    EXPECT_EQ(m.std_error, 0.0);
    EXPECT_THROW(mc_martingale_stat(PathSet{}), DomainError);
}
