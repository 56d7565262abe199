#include "cli/app.hpp"

#include "cli/commands.hpp"
#include "cli/config.hpp"

#include "adoheston/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace adoheston::cli {

namespace {

// A flag that, when present on the command line, overwrites a config field
// after the TOML file has been applied.
struct Overrides {
    std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> items;

    template <class T, class Apply>
    CLI::Option* add(CLI::App* app, const std::string& name, const std::string& help, Apply apply)
    {
        auto value = std::make_shared<T>();
        CLI::Option* o = app->add_option(name, *value, help);
        items.emplace_back(o, [value, apply](RunConfig& c) { apply(c, *value); });
        return o;
    }

    void apply(RunConfig& c) const
    {
        for (const auto& [o, f] : items)
            if (o->count() > 0)
                f(c);
    }
};

void model_flags(CLI::App* sub, Overrides& ov)
{
    ov.add<double>(sub, "--H", "Hurst exponent of the model", [](RunConfig& c, double x) { c.H = x; });
    ov.add<double>(sub, "--kappa", "mean reversion", [](RunConfig& c, double x) { c.model.kappa = x; });
    ov.add<double>(sub, "--xi", "vol-of-vol", [](RunConfig& c, double x) { c.model.xi = x; });
    ov.add<double>(sub, "--rho", "correlation", [](RunConfig& c, double x) { c.model.rho = x; });
    ov.add<double>(sub, "--zeta", "market-price level zeta", [](RunConfig& c, double x) { c.model.zeta = x; });
    ov.add<double>(sub, "--I", "implied-vol level", [](RunConfig& c, double x) { c.model.I = x; });
    ov.add<double>(sub, "--eps", "indicator cutoff of the market price", [](RunConfig& c, double x) { c.model.eps = x; });
    ov.add<double>(sub, "--v0", "initial variance", [](RunConfig& c, double x) { c.model.v0 = x; });
    ov.add<double>(sub, "--V0", "initial ADO factor", [](RunConfig& c, double x) { c.model.V0 = x; });
    ov.add<double>(sub, "--r", "interest rate", [](RunConfig& c, double x) { c.model.r = x; });
    ov.add<double>(sub, "--delta", "dividend yield", [](RunConfig& c, double x) { c.model.delta = x; });
    ov.add<std::string>(sub, "--form", "closed forms: integrated | as_printed",
                        [](RunConfig& c, const std::string& s) { c.model.form = parse_form(s); });
}

void grid_flags(CLI::App* sub, Overrides& ov)
{
    ov.add<std::vector<double>>(sub, "--H-grid", "Hurst exponents of the curves (comma separated)",
                                [](RunConfig& c, const std::vector<double>& x) { c.H_grid = x; })
        ->delimiter(',');
    ov.add<double>(sub, "--T-min", "smallest maturity", [](RunConfig& c, double x) { c.T_min = x; });
    ov.add<double>(sub, "--T-max", "largest maturity", [](RunConfig& c, double x) { c.T_max = x; });
    ov.add<std::size_t>(sub, "--n-T", "number of log-spaced maturities", [](RunConfig& c, std::size_t x) { c.n_T = x; });
    ov.add<double>(sub, "--u-max", "truncation of the frequency integral", [](RunConfig& c, double x) { c.quad.u_max = x; });
    ov.add<double>(sub, "--rel-tol", "quadrature relative tolerance", [](RunConfig& c, double x) { c.quad.rel_tol = x; });
}

void sim_flags(CLI::App* sub, Overrides& ov)
{
    ov.add<std::string>(sub, "--zeta-mode", "constant | linear",
                        [](RunConfig& c, const std::string& s) { c.sim.zeta_mode = parse_zeta_mode(s); });
    ov.add<double>(sub, "--alpha", "zeta = alpha h in linear mode", [](RunConfig& c, double x) { c.sim.alpha = x; });
    ov.add<std::size_t>(sub, "--paths", "number of paths", [](RunConfig& c, std::size_t x) { c.sim.n_paths = x; });
    ov.add<std::size_t>(sub, "--steps", "number of time steps", [](RunConfig& c, std::size_t x) { c.sim.n_steps = x; });
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"ADO-Heston numerics: skews, fits, simulation and forward-start pricing"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool reference = false;
    bool no_diffusion = false;
    Overrides ov;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "TOML parameter file")->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "output file (default: stdout)");
        ov.items.emplace_back(sub->add_option("--seed", seed, "random seed"),
                              [&seed](RunConfig& c) { c.sim.seed = seed; });
        ov.items.emplace_back(sub->add_option("--threads", threads, "worker threads"),
                              [&threads](RunConfig& c) { c.threads = threads; });
        model_flags(sub, ov);
    };

    CLI::App* skew = app.add_subcommand("skew-curve", "ATM skew and its upper bound over (H, T) grids");
    common(skew);
    grid_flags(skew, ov);

    CLI::App* bound = app.add_subcommand("skew-bound", "upper bound of the ATM skew over (H, T) grids");
    common(bound);
    grid_flags(bound, ov);

    CLI::App* fit = app.add_subcommand("fit", "power-law and a(H) regressions of skew curves");
    common(fit);
    grid_flags(fit, ov);
    ov.add<std::string>(fit, "--curves", "CSV with columns H,T,skew (default: compute from the grid)",
                        [](RunConfig& c, const std::string& s) { c.curves_path = s; });

    CLI::App* fwd = app.add_subcommand("fwd-skew", "forward-start ATM skew over horizons T - s");
    common(fwd);
    grid_flags(fwd, ov);
    ov.add<double>(fwd, "--s", "determination date", [](RunConfig& c, double x) { c.fwd_s = x; });
    ov.add<double>(fwd, "--Tbar-min", "smallest horizon", [](RunConfig& c, double x) { c.Tbar_min = x; });
    ov.add<double>(fwd, "--Tbar-max", "largest horizon", [](RunConfig& c, double x) { c.Tbar_max = x; });
    ov.add<std::size_t>(fwd, "--n-Tbar", "number of log-spaced horizons", [](RunConfig& c, std::size_t x) { c.n_Tbar = x; });

    CLI::App* drift = app.add_subcommand("drift-path", "deterministic v and V paths with zeta = alpha h");
    common(drift);
    ov.add<double>(drift, "--alpha", "zeta = alpha h", [](RunConfig& c, double x) { c.drift_alpha = x; });
    ov.add<double>(drift, "--t0", "first grid time", [](RunConfig& c, double x) { c.drift_t0 = x; });
    ov.add<double>(drift, "--t-end", "last grid time", [](RunConfig& c, double x) { c.drift_t_end = x; });
    ov.add<std::size_t>(drift, "--n", "number of log-spaced grid times", [](RunConfig& c, std::size_t x) { c.drift_n = x; });
    ov.add<std::string>(drift, "--drift", "as_printed | ito_consistent",
                        [](RunConfig& c, const std::string& s) { c.drift.drift = parse_drift(s); });
    ov.add<bool>(drift, "--horizon-term", "include kappa (T - t) in h",
                 [](RunConfig& c, bool b) { c.drift.horizon_term = b; });

    CLI::App* sim = app.add_subcommand("simulate", "Euler Monte Carlo of the risk-neutral dynamics");
    common(sim);
    sim_flags(sim, ov);
    ov.add<double>(sim, "--T", "horizon", [](RunConfig& c, double x) { c.sim.T = x; });
    ov.add<double>(sim, "--sim-eps", "indicator cutoff (default: first grid time)",
                   [](RunConfig& c, double x) { c.sim.eps = x; });
    ov.add<std::size_t>(sim, "--record-stride", "store every k-th step",
                        [](RunConfig& c, std::size_t x) { c.sim.record_stride = x; });
    ov.add<std::string>(sim, "--drift", "as_printed | ito_consistent",
                        [](RunConfig& c, const std::string& s) { c.sim.drift = parse_drift(s); });
    ov.items.emplace_back(sim->add_flag("--no-diffusion", no_diffusion, "drop the nu dW terms of v and V"),
                          [&no_diffusion](RunConfig& c) { c.sim.diffusion = !no_diffusion; });

    CLI::App* price = app.add_subcommand("price-fwd", "Carr-Madan prices of forward-start calls");
    common(price);
    sim_flags(price, ov);
    ov.add<double>(price, "--s", "determination date", [](RunConfig& c, double x) { c.price_s = x; });
    ov.add<double>(price, "--T", "maturity", [](RunConfig& c, double x) { c.price_T = x; });
    ov.add<double>(price, "--K-min", "smallest strike", [](RunConfig& c, double x) { c.K_min = x; });
    ov.add<double>(price, "--K-max", "largest strike", [](RunConfig& c, double x) { c.K_max = x; });
    ov.add<std::size_t>(price, "--n-K", "number of strikes", [](RunConfig& c, std::size_t x) { c.n_K = x; });
    ov.add<std::string>(price, "--cf", "bs | ado | ado-mc", [](RunConfig& c, const std::string& s) { c.cf = s; });
    ov.add<std::size_t>(price, "--n", "FFT size", [](RunConfig& c, std::size_t x) { c.fft.n = x; });
    ov.add<double>(price, "--eta", "frequency spacing", [](RunConfig& c, double x) { c.fft.eta = x; });
    ov.add<double>(price, "--damping", "Carr-Madan damping alpha", [](RunConfig& c, double x) { c.fft.alpha = x; });
    ov.add<std::string>(price, "--weights", "trapezoid | simpson",
                        [](RunConfig& c, const std::string& s) { c.fft.weights = parse_weights(s); });
    price->add_flag("--reference", reference, "add the Black-Scholes closed-form column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return ExitCode::validation;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty())
            load_toml(config_path, cfg);
        ov.apply(cfg);
        cfg.finalize();

        std::ostringstream buf;
        if (skew->parsed())
            cmd_skew_curve(cfg, buf);
        else if (bound->parsed())
            cmd_skew_bound(cfg, buf);
        else if (fit->parsed())
            cmd_fit(cfg, buf);
        else if (fwd->parsed())
            cmd_fwd_skew(cfg, buf);
        else if (drift->parsed())
            cmd_drift_path(cfg, buf);
        else if (sim->parsed())
            cmd_simulate(cfg, buf);
        else if (price->parsed())
            cmd_price_fwd(cfg, buf, reference);

        if (out_path.empty()) {
            out << buf.str();
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f)
                throw DomainError("cannot write " + out_path);
            f << buf.str();
            if (!f)
                throw DomainError("failed writing " + out_path);
        }
        return ExitCode::ok;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return ExitCode::numerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::validation;
    }
}

} // namespace adoheston::cli
