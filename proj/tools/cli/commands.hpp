#pragma once

#include "cli/config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace adoheston::cli {

void cmd_skew_curve(const RunConfig& cfg, std::ostream& out);   // H,T,skew,upper_bound
void cmd_skew_bound(const RunConfig& cfg, std::ostream& out);   // H,T,upper_bound
void cmd_fit(const RunConfig& cfg, std::ostream& out);          // JSON
void cmd_fwd_skew(const RunConfig& cfg, std::ostream& out);     // H,s,Tbar,skew
void cmd_drift_path(const RunConfig& cfg, std::ostream& out);   // t,v,V
void cmd_simulate(const RunConfig& cfg, std::ostream& out);     // path,t,F,v,V,h
void cmd_price_fwd(const RunConfig& cfg, std::ostream& out, bool reference);  // K,price[,bs_closed_form]

// Curves from a CSV with at least the columns H, T, skew; rows of one H
// must be contiguous.
std::vector<SkewCurve> read_curves(std::istream& in);

// Shortest form with 17 significant digits.
std::string num(double x);

} // namespace adoheston::cli
