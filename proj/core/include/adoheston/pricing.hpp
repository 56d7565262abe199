#pragma once

#include "adoheston/charfn.hpp"
#include "adoheston/sim.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace adoheston {

// Forward-start call paying (S_T / S_s - K)^+ at T.
struct FwdStartSpec {
    double s = 0.0;  // determination date
    double T = 1.0;  // maturity
    double K = 1.0;  // strike on the return S_T / S_s
    double r = 0.0;
    double delta = 0.0;

    void validate() const;
};

enum class QuadratureWeights { trapezoid, simpson };

struct FftGrid {
    std::size_t n = 4096;  // power of two, >= 256
    double eta = 0.25;     // frequency spacing
    double alpha = 1.5;    // damping
    QuadratureWeights weights = QuadratureWeights::trapezoid;

    void validate() const;
};

// CF of log(S_T / S_s) as a function of the (complex) frequency.
using ForwardCF = std::function<cplx(cplx)>;

double bs_call(double K, double S, double tau, double sigma, double r, double delta);

// e^{-rs} bs_call(K, 1, T - s, I, r, delta)
double bs_forward_start(const FwdStartSpec& spec, double I);

// Carr-Madan: the log-strike grid is shifted so that log K is a node.
double carr_madan_forward_call(const FwdStartSpec& spec, const ForwardCF& cf,
                               const FftGrid& grid = {});

// Same for several strikes sharing (s, T, r, delta); spec.K is ignored.
std::vector<double> carr_madan_forward_calls(const FwdStartSpec& spec, std::span<const double> K,
                                             const ForwardCF& cf, const FftGrid& grid = {});

ForwardCF bs_forward_cf(const FwdStartSpec& spec, double I);

// ADO-Heston forward CF. For s = 0 the variance is v0 and the closed form is
// used directly. For s > 0 the outer expectation over (v_s, h_s) is the
// average over `paths`, which must end at s; in linear zeta mode each path
// carries zeta = alpha h_s.
ForwardCF ado_forward_cf(const FwdStartSpec& spec, const ModelParams& mp);
ForwardCF ado_forward_cf_mc(const FwdStartSpec& spec, const ModelParams& mp, const PathSet& paths,
                            ZetaMode mode = ZetaMode::constant, double alpha = 0.0);

} // namespace adoheston
