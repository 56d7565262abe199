#include "adoheston/pricing.hpp"

#include "adoheston/error.hpp"
#include "adoheston/special.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>

namespace adoheston {

namespace {

constexpr cplx I1{0.0, 1.0};

// The FFTW planner is not reentrant.
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

void fft_forward(std::vector<cplx>& x)
{
    auto* data = reinterpret_cast<fftw_complex*>(x.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(x.size()), data, data, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    if (!plan)
        throw NumericalError("FFT planning failed");
    fftw_execute(plan);
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
}

double call_at(const FwdStartSpec& spec, double K, const ForwardCF& cf, const FftGrid& g)
{
    const std::size_t n = g.n;
    const double eta = g.eta;
    const double a = g.alpha;
    const double lambda = 2.0 * std::numbers::pi / (static_cast<double>(n) * eta);
    const double k0 = std::log(K);
    // k_m = k0 + (m - n/2) lambda, so the target strike sits on node n/2.
    const double b = static_cast<double>(n / 2) * lambda - k0;

    std::vector<cplx> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double v = eta * static_cast<double>(j);
        const cplx phi = cf(cplx(v, -(a + 1.0)));
        const cplx psi = phi / ((a + I1 * v) * (a + 1.0 + I1 * v));
        double w;
        if (g.weights == QuadratureWeights::simpson)
            w = (j == 0) ? 1.0 / 3.0 : ((j % 2 == 0) ? 2.0 / 3.0 : 4.0 / 3.0);
        else
            w = (j == 0) ? 0.5 : 1.0;
        x[j] = std::exp(I1 * b * v) * psi * eta * w;
        if (!std::isfinite(x[j].real()) || !std::isfinite(x[j].imag()))
            throw NumericalError("Carr-Madan: characteristic function overflow at v = "
                                 + std::to_string(v));
    }
    fft_forward(x);

    auto price = [&](std::size_t m) {
        const double km = k0 + (static_cast<double>(m) - static_cast<double>(n / 2)) * lambda;
        return std::exp(-spec.r * spec.T) * std::exp(-a * km) / std::numbers::pi * x[m].real();
    };
    // Linear interpolation in k; with the node-aligned grid the weight on the
    // right neighbour is zero.
    double pos = (k0 + b) / lambda;
    if (std::abs(pos - std::round(pos)) < 1e-9)
        pos = std::round(pos);
    const std::size_t m = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - static_cast<double>(m);
    const double c = frac == 0.0 ? price(m) : (1.0 - frac) * price(m) + frac * price(m + 1);
    if (!std::isfinite(c))
        throw NumericalError("Carr-Madan: non-finite price");
    return c;
}

} // namespace

void FwdStartSpec::validate() const
{
    if (!(s >= 0.0) || !(T > s) || !std::isfinite(T))
        throw DomainError("forward start: need 0 <= s < T");
    if (!(K > 0.0) || !std::isfinite(K))
        throw DomainError("forward start: strike must be positive");
    if (!std::isfinite(r) || !std::isfinite(delta))
        throw DomainError("forward start: rates must be finite");
}

void FftGrid::validate() const
{
    if (n < 256 || (n & (n - 1)) != 0)
        throw DomainError("FFT grid: n must be a power of two >= 256");
    if (!(eta > 0.0))
        throw DomainError("FFT grid: eta must be positive");
    if (!(alpha > 0.0))
        throw DomainError("FFT grid: alpha must be positive");
}

double bs_call(double K, double S, double tau, double sigma, double r, double delta)
{
    if (!(K > 0.0) || !(S > 0.0))
        throw DomainError("bs_call: S and K must be positive");
    if (!(tau >= 0.0) || !(sigma >= 0.0))
        throw DomainError("bs_call: tau and sigma must be nonnegative");
    const double df = std::exp(-r * tau);
    const double fwd = S * std::exp((r - delta) * tau);
    const double sd = sigma * std::sqrt(tau);
    if (sd == 0.0)
        return df * std::max(fwd - K, 0.0);
    const double d1 = (std::log(fwd / K) + 0.5 * sd * sd) / sd;
    const double d2 = d1 - sd;
    return df * (fwd * normal_cdf(d1) - K * normal_cdf(d2));
}

double bs_forward_start(const FwdStartSpec& spec, double I)
{
    spec.validate();
    if (!(I > 0.0))
        throw DomainError("forward start: I must be positive");
    return std::exp(-spec.r * spec.s) * bs_call(spec.K, 1.0, spec.T - spec.s, I, spec.r, spec.delta);
}

double carr_madan_forward_call(const FwdStartSpec& spec, const ForwardCF& cf, const FftGrid& grid)
{
    spec.validate();
    grid.validate();
    return call_at(spec, spec.K, cf, grid);
}

std::vector<double> carr_madan_forward_calls(const FwdStartSpec& spec, std::span<const double> K,
                                             const ForwardCF& cf, const FftGrid& grid)
{
    grid.validate();
    std::vector<double> out;
    out.reserve(K.size());
    for (double k : K) {
        FwdStartSpec one = spec;
        one.K = k;
        one.validate();
        out.push_back(call_at(one, k, cf, grid));
    }
    return out;
}

ForwardCF bs_forward_cf(const FwdStartSpec& spec, double I)
{
    spec.validate();
    const double tau = spec.T - spec.s;
    const double r = spec.r, d = spec.delta;
    return [=](cplx u) { return bs_cf(u, tau, r, d, I); };
}

ForwardCF ado_forward_cf(const FwdStartSpec& spec, const ModelParams& mp)
{
    spec.validate();
    mp.validate();
    if (spec.s != 0.0)
        throw DomainError("ADO forward CF: s > 0 needs simulated paths");
    const double Tb = spec.T;
    return [mp, Tb](cplx u) { return ado_cf(u, Tb, mp.v0, mp); };
}

ForwardCF ado_forward_cf_mc(const FwdStartSpec& spec, const ModelParams& mp, const PathSet& paths,
                            ZetaMode mode, double alpha)
{
    spec.validate();
    mp.validate();
    if (paths.times.empty() || paths.v.rows == 0)
        throw DomainError("ADO forward CF: empty path set");
    if (std::abs(paths.times.back() - spec.s) > 1e-12 * std::max(1.0, spec.s))
        throw DomainError("ADO forward CF: paths must end at the determination date");

    const std::size_t last = paths.v.cols - 1;
    auto vs = std::make_shared<std::vector<double>>(paths.v.rows);
    auto zs = std::make_shared<std::vector<double>>(paths.v.rows);
    for (std::size_t i = 0; i < paths.v.rows; ++i) {
        (*vs)[i] = paths.v(i, last);
        (*zs)[i] = mode == ZetaMode::linear ? alpha * paths.h(i, last) : mp.zeta;
    }
    ModelParams unit = mp;
    unit.zeta = 1.0;
    const double Tb = spec.T - spec.s;
    return [unit, Tb, vs, zs](cplx u) {
        const CFPair e = ado_cf_exponents(u, Tb, unit);
        cplx sum = 0.0;
        for (std::size_t i = 0; i < vs->size(); ++i)
            sum += std::exp((*zs)[i] * e.A + (*vs)[i] * e.B);
        return sum / static_cast<double>(vs->size());
    };
}

} // namespace adoheston
