#pragma once

#include "adoheston/charfn.hpp"
#include "adoheston/pricing.hpp"
#include "adoheston/sim.hpp"
#include "adoheston/skew.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace adoheston::cli {

// Every parameter a subcommand can read. Defaults reproduce the skew
// experiment (model, grid) and the mean-reversion experiment (drift, sim).
struct RunConfig {
    double H = 0.1;
    ModelParams model;  // model.hp is filled from H by finalize()

    std::vector<double> H_grid{0.1, 0.2, 0.3, 0.4, 0.47, 0.5};
    double T_min = 1e-3;
    double T_max = 0.3;
    std::size_t n_T = 50;
    std::vector<double> T_list;  // overrides the log-spaced grid when set

    QuadratureConfig quad;

    double fwd_s = 0.5;
    double Tbar_min = 5e-3;
    double Tbar_max = 0.3;
    std::size_t n_Tbar = 50;

    double drift_alpha = 0.1;
    double drift_t0 = 1e-8;
    double drift_t_end = 1.0;
    std::size_t drift_n = 2000;
    DriftPathOptions drift;

    SimConfig sim;

    double price_s = 0.5;
    double price_T = 0.75;
    std::vector<double> K_list;
    double K_min = 0.5;
    double K_max = 2.0;
    std::size_t n_K = 21;
    FftGrid fft;
    std::string cf = "bs";  // bs | ado | ado-mc

    std::string curves_path;  // fit: read curves from CSV instead of computing
    unsigned threads = 1;

    RunConfig();
    void finalize();  // derive hurst constants, validate
    std::vector<double> T_grid() const;
    std::vector<double> Tbar_grid() const;
    std::vector<double> strikes() const;
};

// Reads a TOML file over the defaults. Unknown keys are errors.
void load_toml(const std::string& path, RunConfig& cfg);

ClosedForm parse_form(const std::string& s);
DriftForm parse_drift(const std::string& s);
ZetaMode parse_zeta_mode(const std::string& s);
QuadratureWeights parse_weights(const std::string& s);

} // namespace adoheston::cli
