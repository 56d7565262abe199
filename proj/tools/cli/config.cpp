#include "cli/config.hpp"

#include "adoheston/error.hpp"

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

#include <functional>
#include <map>

namespace adoheston::cli {

namespace {

using Setter = std::function<void(const toml::node&, RunConfig&)>;
using Section = std::map<std::string, Setter>;

std::string where(const toml::node& n)
{
    const auto& src = n.source();
    return " (line " + std::to_string(src.begin.line) + ")";
}

double as_double(const toml::node& n)
{
    if (auto v = n.value<double>())
        return *v;
    throw DomainError("expected a number" + where(n));
}

std::size_t as_count(const toml::node& n)
{
    auto v = n.value<std::int64_t>();
    if (!v || *v < 0)
        throw DomainError("expected a nonnegative integer" + where(n));
    return static_cast<std::size_t>(*v);
}

bool as_bool(const toml::node& n)
{
    if (auto v = n.value<bool>())
        return *v;
    throw DomainError("expected true or false" + where(n));
}

std::string as_string(const toml::node& n)
{
    if (auto v = n.value<std::string>())
        return *v;
    throw DomainError("expected a string" + where(n));
}

std::vector<double> as_list(const toml::node& n)
{
    const toml::array* a = n.as_array();
    if (!a)
        throw DomainError("expected an array of numbers" + where(n));
    std::vector<double> out;
    for (const toml::node& e : *a)
        out.push_back(as_double(e));
    return out;
}

#define NUM(field) [](const toml::node& n, RunConfig& c) { c.field = as_double(n); }
#define CNT(field) [](const toml::node& n, RunConfig& c) { c.field = as_count(n); }
#define FLAG(field) [](const toml::node& n, RunConfig& c) { c.field = as_bool(n); }
#define LIST(field) [](const toml::node& n, RunConfig& c) { c.field = as_list(n); }

const std::map<std::string, Section>& schema()
{
    static const std::map<std::string, Section> s = {
        {"model",
         {{"H", NUM(H)},
          {"kappa", NUM(model.kappa)},
          {"xi", NUM(model.xi)},
          {"rho", NUM(model.rho)},
          {"zeta", NUM(model.zeta)},
          {"I", NUM(model.I)},
          {"eps", NUM(model.eps)},
          {"v0", NUM(model.v0)},
          {"V0", NUM(model.V0)},
          {"F0", NUM(model.F0)},
          {"r", NUM(model.r)},
          {"delta", NUM(model.delta)},
          {"form", [](const toml::node& n, RunConfig& c) { c.model.form = parse_form(as_string(n)); }},
          {"couple_variance", FLAG(model.couple_variance)}}},
        {"grid",
         {{"H", LIST(H_grid)}, {"T_min", NUM(T_min)}, {"T_max", NUM(T_max)}, {"n_T", CNT(n_T)}, {"T", LIST(T_list)}}},
        {"quadrature",
         {{"u_max", [](const toml::node& n, RunConfig& c) { c.quad.u_max = as_double(n); }},
          {"rel_tol", NUM(quad.rel_tol)},
          {"max_subdivisions",
           [](const toml::node& n, RunConfig& c) { c.quad.max_subdivisions = static_cast<int>(as_count(n)); }}}},
        {"forward", {{"s", NUM(fwd_s)}, {"Tbar_min", NUM(Tbar_min)}, {"Tbar_max", NUM(Tbar_max)}, {"n_Tbar", CNT(n_Tbar)}}},
        {"drift",
         {{"alpha", NUM(drift_alpha)},
          {"t0", NUM(drift_t0)},
          {"t_end", NUM(drift_t_end)},
          {"n", CNT(drift_n)},
          {"form", [](const toml::node& n, RunConfig& c) { c.drift.drift = parse_drift(as_string(n)); }},
          {"horizon_term", FLAG(drift.horizon_term)},
          {"substeps", [](const toml::node& n, RunConfig& c) { c.drift.substeps = static_cast<int>(as_count(n)); }}}},
        {"simulate",
         {{"zeta_mode", [](const toml::node& n, RunConfig& c) { c.sim.zeta_mode = parse_zeta_mode(as_string(n)); }},
          {"alpha", NUM(sim.alpha)},
          {"paths", CNT(sim.n_paths)},
          {"steps", CNT(sim.n_steps)},
          {"T", NUM(sim.T)},
          {"seed", [](const toml::node& n, RunConfig& c) { c.sim.seed = as_count(n); }},
          {"eps", [](const toml::node& n, RunConfig& c) { c.sim.eps = as_double(n); }},
          {"form", [](const toml::node& n, RunConfig& c) { c.sim.drift = parse_drift(as_string(n)); }},
          {"diffusion", FLAG(sim.diffusion)},
          {"record_stride", CNT(sim.record_stride)}}},
        {"pricing",
         {{"s", NUM(price_s)},
          {"T", NUM(price_T)},
          {"K", LIST(K_list)},
          {"K_min", NUM(K_min)},
          {"K_max", NUM(K_max)},
          {"n_K", CNT(n_K)},
          {"n", CNT(fft.n)},
          {"eta", NUM(fft.eta)},
          {"alpha", NUM(fft.alpha)},
          {"weights", [](const toml::node& n, RunConfig& c) { c.fft.weights = parse_weights(as_string(n)); }},
          {"cf", [](const toml::node& n, RunConfig& c) { c.cf = as_string(n); }}}},
        {"fit", {{"curves", [](const toml::node& n, RunConfig& c) { c.curves_path = as_string(n); }}}},
        {"run", {{"threads", [](const toml::node& n, RunConfig& c) { c.threads = static_cast<unsigned>(as_count(n)); }}}},
    };
    return s;
}

#undef NUM
#undef CNT
#undef FLAG
#undef LIST

} // namespace

RunConfig::RunConfig()
{
    model.kappa = 1.0;
    model.xi = 0.01;
    model.rho = 0.7;
    model.zeta = 100.0;
    model.I = 0.5;
    model.v0 = 0.5;
    model.V0 = 200.0;
    sim.n_paths = 100;
    sim.n_steps = 200;
    sim.zeta_mode = ZetaMode::constant;
}

void RunConfig::finalize()
{
    model.hp = hurst_constants(H);
    model.validate();
    quad.validate();
    for (double h : H_grid)
        hurst_constants(h);
    if (cf != "bs" && cf != "ado" && cf != "ado-mc")
        throw DomainError("pricing cf must be one of bs, ado, ado-mc");
}

std::vector<double> RunConfig::T_grid() const
{
    if (!T_list.empty())
        return T_list;
    return log_spaced(T_min, T_max, n_T);
}

std::vector<double> RunConfig::Tbar_grid() const
{
    return log_spaced(Tbar_min, Tbar_max, n_Tbar);
}

std::vector<double> RunConfig::strikes() const
{
    if (!K_list.empty())
        return K_list;
    if (n_K == 0 || !(K_min > 0.0) || !(K_max >= K_min))
        throw DomainError("strike grid: need n_K >= 1 and 0 < K_min <= K_max");
    std::vector<double> K(n_K);
    for (std::size_t i = 0; i < n_K; ++i)
        K[i] = n_K == 1 ? K_min : K_min + (K_max - K_min) * static_cast<double>(i) / static_cast<double>(n_K - 1);
    return K;
}

void load_toml(const std::string& path, RunConfig& cfg)
{
    toml::table root;
    try {
        root = toml::parse_file(path);
    } catch (const toml::parse_error& e) {
        throw DomainError("config " + path + ": " + std::string(e.description()) + " (line "
                          + std::to_string(e.source().begin.line) + ")");
    }
    const auto& sch = schema();
    for (auto&& [key, node] : root) {
        const std::string section(key.str());
        auto it = sch.find(section);
        if (it == sch.end())
            throw DomainError("config " + path + ": unknown section [" + section + "]");
        const toml::table* t = node.as_table();
        if (!t)
            throw DomainError("config " + path + ": [" + section + "] must be a table");
        for (auto&& [k, v] : *t) {
            const std::string name(k.str());
            auto s = it->second.find(name);
            if (s == it->second.end())
                throw DomainError("config " + path + ": unknown key " + section + "." + name);
            s->second(v, cfg);
        }
    }
}

ClosedForm parse_form(const std::string& s)
{
    if (s == "integrated")
        return ClosedForm::integrated;
    if (s == "as_printed")
        return ClosedForm::as_printed;
    throw DomainError("form must be integrated or as_printed");
}

DriftForm parse_drift(const std::string& s)
{
    if (s == "as_printed")
        return DriftForm::as_printed;
    if (s == "ito_consistent")
        return DriftForm::ito_consistent;
    throw DomainError("drift form must be as_printed or ito_consistent");
}

ZetaMode parse_zeta_mode(const std::string& s)
{
    if (s == "constant")
        return ZetaMode::constant;
    if (s == "linear")
        return ZetaMode::linear;
    throw DomainError("zeta_mode must be constant or linear");
}

QuadratureWeights parse_weights(const std::string& s)
{
    if (s == "trapezoid")
        return QuadratureWeights::trapezoid;
    if (s == "simpson")
        return QuadratureWeights::simpson;
    throw DomainError("weights must be trapezoid or simpson");
}

} // namespace adoheston::cli
