#include "adoheston/sim.hpp"

#include "adoheston/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace adoheston {

namespace {

constexpr double kBlowUp = 1e9;
// Lower bound on sqrt(v) in the 1/sqrt(v) drift terms once v is truncated at 0.
constexpr double kSqrtFloor = 1e-8;

double beta(DriftForm form, double kappa, double xi, double nu2, double drift, double sv)
{
    if (form == DriftForm::as_printed)
        return kappa - xi / (4.0 * sv) * (xi * nu2 + 4.0 * drift);
    return kappa + (drift - 0.25 * xi * xi * nu2) / sv;
}

std::mt19937_64 path_rng(std::uint64_t seed, std::uint64_t path)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(path), static_cast<std::uint32_t>(path >> 32)};
    return std::mt19937_64(seq);
}

} // namespace

DriftPath drift_ode_path(const ModelParams& mp, double alpha, std::span<const double> t_grid,
                         const DriftPathOptions& opt)
{
    mp.validate();
    if (!(mp.xi > 0.0))
        throw DomainError("drift path: xi must be positive");
    if (!std::isfinite(alpha))
        throw DomainError("drift path: alpha must be finite");
    if (t_grid.size() < 2)
        throw DomainError("drift path: need at least two grid times");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw DomainError("drift path: grid must be strictly increasing");
    if (!(t_grid[0] >= 0.0) || (t_grid[0] == 0.0 && mp.hp.H < 0.5))
        throw DomainError("drift path: grid must start at t0 > 0 for H < 1/2");
    if (opt.substeps < 1)
        throw DomainError("drift path: substeps must be positive");
    if (!(mp.v0 > 0.0))
        throw DomainError("drift path: v0 must be positive");

    const double H = mp.hp.H;
    const double T = t_grid.back();
    auto rhs = [&](double t, double v, double V, double& dv, double& dV) {
        if (!(v > 0.0))
            throw NumericalError("drift path: v reached zero");
        const double sv = std::sqrt(v);
        double h = mp.xi * V - 2.0 * sv;
        if (opt.horizon_term)
            h += mp.kappa * (T - t);
        const double drift = t > mp.eps ? alpha * h * std::pow(t, H - 1.0) : 0.0;
        const double n = nu(t, mp.hp);
        dv = drift;
        dV = beta(opt.drift, mp.kappa, mp.xi, n * n, drift, sv) / mp.xi;
    };

    DriftPath out;
    out.t.assign(t_grid.begin(), t_grid.end());
    out.v.reserve(t_grid.size());
    out.V.reserve(t_grid.size());
    double v = mp.v0, V = mp.V0;
    out.v.push_back(v);
    out.V.push_back(V);
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const double h = (t_grid[i] - t_grid[i - 1]) / opt.substeps;
        for (int s = 0; s < opt.substeps; ++s) {
            const double t = t_grid[i - 1] + s * h;
            double a1, b1, a2, b2, a3, b3, a4, b4;
            rhs(t, v, V, a1, b1);
            rhs(t + 0.5 * h, v + 0.5 * h * a1, V + 0.5 * h * b1, a2, b2);
            rhs(t + 0.5 * h, v + 0.5 * h * a2, V + 0.5 * h * b2, a3, b3);
            rhs(t + h, v + h * a3, V + h * b3, a4, b4);
            v += h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
            V += h / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4);
            if (!(v > 0.0) || !(std::abs(V) <= kBlowUp))
                throw NumericalError("drift path: blow-up guard tripped");
        }
        out.v.push_back(v);
        out.V.push_back(V);
    }
    return out;
}

void SimConfig::validate() const
{
    if (n_paths < 1)
        throw DomainError("simulation: need at least one path");
    if (n_steps < 8)
        throw DomainError("simulation: need at least 8 steps");
    if (!(T > 0.0) || !std::isfinite(T))
        throw DomainError("simulation: T must be positive");
    if (eps && !(*eps >= 0.0))
        throw DomainError("simulation: eps must be nonnegative");
    if (record_stride < 1)
        throw DomainError("simulation: record stride must be positive");
    if (!std::isfinite(alpha))
        throw DomainError("simulation: alpha must be finite");
}

PathSet simulate_q(const ModelParams& mp, const SimConfig& cfg)
{
    mp.validate();
    cfg.validate();
    const bool zeta_zero = cfg.zeta_mode == ZetaMode::constant ? mp.zeta == 0.0 : cfg.alpha == 0.0;
    if (mp.xi == 0.0 && !zeta_zero)
        throw DomainError("simulation: xi = 0 requires zeta = 0");

    const std::size_t n = cfg.n_steps;
    const double T = cfg.T;
    const double dt = T / static_cast<double>(n);
    const double sqdt = std::sqrt(dt);
    const double H = mp.hp.H;
    const double rho = mp.rho;
    const double rho_perp = std::sqrt(std::max(0.0, 1.0 - rho * rho));

    PathSet ps;
    ps.seed = cfg.seed;
    ps.dt = dt;
    ps.eps = cfg.eps.value_or(dt);

    auto tk = [&](std::size_t k) { return k == n ? T : static_cast<double>(k) * dt; };

    // Per-step coefficients. nu^2 is averaged over the step, which is the exact
    // variance of int nu dW and stays finite on the first step where nu(0) blows up.
    std::vector<double> nu2(n), drift_t(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double a = tk(k), b = tk(k + 1);
        if (cfg.diffusion) {
            nu2[k] = mp.hp.B_H * mp.hp.B_H * (std::pow(b, 2.0 * H) - std::pow(a, 2.0 * H))
                     / (2.0 * H * dt);
        } else {
            nu2[k] = 0.0;
        }
        drift_t[k] = a > ps.eps ? std::pow(a, H - 1.0) : 0.0;
    }

    std::vector<std::size_t> stored;
    for (std::size_t k = 0; k <= n; k += cfg.record_stride)
        stored.push_back(k);
    if (stored.back() != n)
        stored.push_back(n);
    for (std::size_t k : stored)
        ps.times.push_back(tk(k));

    const std::size_t cols = stored.size();
    for (PathMatrix* m : {&ps.F, &ps.v, &ps.V, &ps.h}) {
        m->rows = cfg.n_paths;
        m->cols = cols;
        m->data.assign(cfg.n_paths * cols, 0.0);
    }

    detail::parallel_for(cfg.n_paths, std::max(1u, cfg.threads), [&](std::size_t i) {
        std::mt19937_64 rng = path_rng(cfg.seed, i);
        std::normal_distribution<double> normal;
        double logF = std::log(mp.F0);
        double v = mp.v0;
        double V = mp.V0;
        std::size_t col = 0;
        auto record = [&](std::size_t k) {
            const double vp = std::max(v, 0.0);
            ps.F(i, col) = std::exp(logF);
            ps.v(i, col) = vp;
            ps.V(i, col) = V;
            ps.h(i, col) = mp.xi * V - 2.0 * std::sqrt(vp) + mp.kappa * (T - tk(k));
            ++col;
        };
        record(0);
        for (std::size_t k = 0; k < n; ++k) {
            const double vp = std::max(v, 0.0);
            const double sv = std::sqrt(vp);
            const double t = tk(k);
            double zeta = mp.zeta;
            if (cfg.zeta_mode == ZetaMode::linear)
                zeta = cfg.alpha * (mp.xi * V - 2.0 * sv + mp.kappa * (T - t));
            const double drift = zeta * drift_t[k];
            const double z2 = normal(rng);
            const double z1 = normal(rng);
            const double dW2 = sqdt * z2;
            const double dW1 = rho * dW2 + rho_perp * sqdt * z1;
            const double nu_k = std::sqrt(nu2[k]);

            const double v_next = v + drift * dt + mp.xi * nu_k * sv * dW2;
            if (mp.xi > 0.0) {
                const double b = beta(cfg.drift, mp.kappa, mp.xi, nu2[k], drift,
                                      std::max(sv, kSqrtFloor));
                V += b / mp.xi * dt + nu_k * dW2;
            }
            logF += -0.5 * vp * dt + sv * dW1;
            v = v_next;
            if (!std::isfinite(v) || !std::isfinite(V) || !std::isfinite(logF))
                throw NumericalError("simulation: non-finite state");
            if (col < cols && stored[col] == k + 1)
                record(k + 1);
        }
    });
    return ps;
}

double check_h_invariant(const PathSet& ps)
{
    std::size_t ref = 0;
    while (ref < ps.times.size() && ps.times[ref] < ps.eps * (1.0 - 1e-12))
        ++ref;
    double dev = 0.0;
    for (std::size_t i = 0; i < ps.h.rows; ++i)
        for (std::size_t j = ref + 1; j < ps.h.cols; ++j)
            dev = std::max(dev, std::abs(ps.h(i, j) - ps.h(i, ref)));
    return dev;
}

MartingaleStat mc_martingale_stat(const PathSet& ps)
{
    const std::size_t n = ps.F.rows;
    if (n == 0 || ps.F.cols == 0)
        throw DomainError("martingale statistic: empty path set");
    const std::size_t last = ps.F.cols - 1;
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        mean += ps.F(i, last) / ps.F(i, 0);
    mean /= static_cast<double>(n);
    if (n == 1)
        return {mean, 0.0};
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = ps.F(i, last) / ps.F(i, 0) - mean;
        ss += d * d;
    }
    const double var = ss / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

} // namespace adoheston
