#pragma once

#include "adoheston/charfn.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace adoheston {

// Drift of the ADO factor, beta in dV = (beta / xi) dt + nu dW2.
//   as_printed:     kappa - xi/(4 sqrt v) [xi nu^2 + 4 zeta t^(H-1) 1{t>eps}]
//   ito_consistent: kappa - xi^2 nu^2/(4 sqrt v) + zeta t^(H-1) 1{t>eps} / sqrt v,
//                   the form under which h = xi V - 2 sqrt v + kappa (T-t) has dh = 0.
enum class DriftForm { as_printed, ito_consistent };

enum class ZetaMode {
    constant,  // zeta = mp.zeta
    linear,    // zeta = alpha h_t
};

struct DriftPathOptions {
    DriftForm drift = DriftForm::as_printed;
    bool horizon_term = false;  // include kappa (T - t) in h, T = last grid time
    int substeps = 4;           // RK4 steps per grid interval
};

struct DriftPath {
    std::vector<double> t;
    std::vector<double> v;
    std::vector<double> V;
};

// Deterministic (noise-free) v and V with zeta = alpha h.
DriftPath drift_ode_path(const ModelParams& mp, double alpha, std::span<const double> t_grid,
                         const DriftPathOptions& opt = {});

struct SimConfig {
    ZetaMode zeta_mode = ZetaMode::constant;
    double alpha = 0.0;
    std::size_t n_paths = 1000;
    std::size_t n_steps = 100;
    double T = 1.0;
    std::uint64_t seed = 0;
    std::optional<double> eps;  // unset: the first positive grid time
    DriftForm drift = DriftForm::ito_consistent;
    bool diffusion = true;      // false drops nu from v and V (F keeps its noise)
    std::size_t record_stride = 1;  // store every k-th step; the last step is always stored
    unsigned threads = 1;

    void validate() const;
};

// Row-major paths x samples.
struct PathMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
};

struct PathSet {
    std::vector<double> times;
    PathMatrix F;
    PathMatrix v;
    PathMatrix V;
    PathMatrix h;  // xi V - 2 sqrt v + kappa (T - t)
    std::uint64_t seed = 0;
    double dt = 0.0;
    double eps = 0.0;

    std::size_t n_paths() const { return F.rows; }
};

PathSet simulate_q(const ModelParams& mp, const SimConfig& cfg);

// max over paths and stored times t >= eps of |h_t - h_eps|.
double check_h_invariant(const PathSet& ps);

struct MartingaleStat {
    double mean = 0.0;
    double std_error = 0.0;
};

// Sample mean and standard error of F_T / F_0.
MartingaleStat mc_martingale_stat(const PathSet& ps);

} // namespace adoheston
