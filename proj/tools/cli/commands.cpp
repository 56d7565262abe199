#include "cli/commands.hpp"

#include "adoheston/error.hpp"
#include "adoheston/fit.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace adoheston::cli {

namespace {

ModelParams with_H(const RunConfig& cfg, double H)
{
    ModelParams mp = cfg.model;
    mp.hp = hurst_constants(H);
    return mp;
}

std::vector<SkewCurve> compute_curves(const RunConfig& cfg)
{
    const std::vector<double> grid = cfg.T_grid();
    std::vector<SkewCurve> curves;
    for (double H : cfg.H_grid)
        curves.push_back(skew_curve(grid, with_H(cfg, H), cfg.quad, cfg.threads));
    return curves;
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        f.push_back(cell);
    return f;
}

double parse_double(const std::string& s, std::size_t line)
{
    double x = 0.0;
    const char* b = s.data();
    const char* e = b + s.size();
    auto r = std::from_chars(b, e, x);
    if (r.ec != std::errc() || r.ptr != e)
        throw DataError("curves: bad number '" + s + "' on line " + std::to_string(line));
    return x;
}

nlohmann::json opt(const std::optional<double>& x)
{
    return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

} // namespace

std::string num(double x)
{
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

void cmd_skew_curve(const RunConfig& cfg, std::ostream& out)
{
    const std::vector<SkewCurve> curves = compute_curves(cfg);
    out << "H,T,skew,upper_bound\n";
    for (const SkewCurve& c : curves) {
        const ModelParams mp = with_H(cfg, c.H);
        for (const SkewPoint& p : c.points)
            out << num(c.H) << ',' << num(p.T) << ',' << num(p.skew) << ','
                << num(atm_skew_upper_bound(p.T, mp)) << '\n';
    }
}

void cmd_skew_bound(const RunConfig& cfg, std::ostream& out)
{
    const std::vector<double> grid = cfg.T_grid();
    out << "H,T,upper_bound\n";
    for (double H : cfg.H_grid) {
        const ModelParams mp = with_H(cfg, H);
        for (double T : grid)
            out << num(H) << ',' << num(T) << ',' << num(atm_skew_upper_bound(T, mp)) << '\n';
    }
}

std::vector<SkewCurve> read_curves(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw DataError("curves: empty input");
    const std::vector<std::string> head = split(line);
    int iH = -1, iT = -1, iS = -1;
    for (std::size_t k = 0; k < head.size(); ++k) {
        if (head[k] == "H")
            iH = static_cast<int>(k);
        else if (head[k] == "T")
            iT = static_cast<int>(k);
        else if (head[k] == "skew")
            iS = static_cast<int>(k);
    }
    if (iH < 0 || iT < 0 || iS < 0)
        throw DataError("curves: header must contain H, T and skew");

    std::vector<SkewCurve> curves;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        const std::vector<std::string> f = split(line);
        if (f.size() != head.size())
            throw DataError("curves: wrong field count on line " + std::to_string(lineno));
        const double H = parse_double(f[iH], lineno);
        const double T = parse_double(f[iT], lineno);
        const double S = parse_double(f[iS], lineno);
        if (curves.empty() || curves.back().H != H) {
            for (const SkewCurve& c : curves)
                if (c.H == H)
                    throw DataError("curves: rows for H = " + num(H) + " are not contiguous");
            curves.push_back({H, {}});
        }
        curves.back().points.push_back({T, S});
    }
    if (curves.empty())
        throw DataError("curves: no data rows");
    return curves;
}

void cmd_fit(const RunConfig& cfg, std::ostream& out)
{
    std::vector<SkewCurve> curves;
    if (!cfg.curves_path.empty()) {
        std::ifstream in(cfg.curves_path);
        if (!in)
            throw DataError("cannot open curves file " + cfg.curves_path);
        curves = read_curves(in);
    } else {
        curves = compute_curves(cfg);
    }

    nlohmann::json j;
    j["per_H"] = nlohmann::json::array();
    std::vector<PowerLawFit> fits;
    std::vector<SkewCurve> pooled;
    for (const SkewCurve& c : curves) {
        const PowerLawFit f = fit_power_law(c);
        fits.push_back(f);
        j["per_H"].push_back({{"H", f.H}, {"a", f.a}, {"b_scaled", opt(f.b_scaled)}, {"rss", f.rss}});
        if (c.H != 0.5)
            pooled.push_back(c);
    }
    j["pooled_b"] = fit_shared_exponent(pooled).b;
    const ExpFit e = fit_a_of_H(fits);
    j["aH_fit"] = {{"c0", e.c0}, {"c1", e.c1}};
    out << j.dump(2) << '\n';
}

void cmd_fwd_skew(const RunConfig& cfg, std::ostream& out)
{
    const std::vector<double> grid = cfg.fwd_s == 0.0 ? cfg.T_grid() : cfg.Tbar_grid();
    out << "H,s,Tbar,skew\n";
    for (double H : cfg.H_grid) {
        const ModelParams mp = with_H(cfg, H);
        for (double Tb : grid)
            out << num(H) << ',' << num(cfg.fwd_s) << ',' << num(Tb) << ','
                << num(atm_skew_forward(cfg.fwd_s, cfg.fwd_s + Tb, mp, cfg.quad)) << '\n';
    }
}

void cmd_drift_path(const RunConfig& cfg, std::ostream& out)
{
    const std::vector<double> grid = log_spaced(cfg.drift_t0, cfg.drift_t_end, cfg.drift_n);
    const DriftPath p = drift_ode_path(cfg.model, cfg.drift_alpha, grid, cfg.drift);
    out << "t,v,V\n";
    for (std::size_t i = 0; i < p.t.size(); ++i)
        out << num(p.t[i]) << ',' << num(p.v[i]) << ',' << num(p.V[i]) << '\n';
}

void cmd_simulate(const RunConfig& cfg, std::ostream& out)
{
    SimConfig sc = cfg.sim;
    sc.threads = cfg.threads;
    const PathSet ps = simulate_q(cfg.model, sc);
    out << "path,t,F,v,V,h\n";
    for (std::size_t i = 0; i < ps.n_paths(); ++i)
        for (std::size_t j = 0; j < ps.times.size(); ++j)
            out << i << ',' << num(ps.times[j]) << ',' << num(ps.F(i, j)) << ',' << num(ps.v(i, j)) << ','
                << num(ps.V(i, j)) << ',' << num(ps.h(i, j)) << '\n';
}

void cmd_price_fwd(const RunConfig& cfg, std::ostream& out, bool reference)
{
    FwdStartSpec spec{cfg.price_s, cfg.price_T, 1.0, cfg.model.r, cfg.model.delta};
    spec.validate();
    const std::vector<double> K = cfg.strikes();

    ForwardCF cf;
    if (cfg.cf == "bs") {
        cf = bs_forward_cf(spec, cfg.model.I);
    } else if (cfg.cf == "ado" || spec.s == 0.0) {
        cf = ado_forward_cf(spec, cfg.model);
    } else {
        SimConfig sc = cfg.sim;
        sc.T = spec.s;
        sc.record_stride = sc.n_steps;
        sc.threads = cfg.threads;
        const PathSet ps = simulate_q(cfg.model, sc);
        cf = ado_forward_cf_mc(spec, cfg.model, ps, sc.zeta_mode, sc.alpha);
    }
    const std::vector<double> p = carr_madan_forward_calls(spec, K, cf, cfg.fft);

    out << (reference ? "K,price,bs_closed_form\n" : "K,price\n");
    for (std::size_t i = 0; i < K.size(); ++i) {
        out << num(K[i]) << ',' << num(p[i]);
        if (reference) {
            FwdStartSpec one = spec;
            one.K = K[i];
            out << ',' << num(bs_forward_start(one, cfg.model.I));
        }
        out << '\n';
    }
}

} // namespace adoheston::cli
