#pragma once

#include "gdplab/economy.hpp"

namespace gdplab {

// Long-run aggregates linking saving, labor share and the rate of return to
// the sustainable measured growth rate.
struct StylizedFacts {
    double labor_share       = 2.0 / 3.0; // LS in (0,1)
    double saving_rate       = 0.0606;    // S in (0,1)
    double rate_of_return    = 0.055;     // R_c
    double mean_depreciation = 0.055;     // delta-bar
    double tech_growth       = 0.03;      // G >= 0
};

void validate(const StylizedFacts& facts); // throws std::domain_error

// (1 - LS) / (R_c + delta-bar), in years.
double capital_output_ratio(const StylizedFacts& facts);

// G * (1 - LS) / (S * (R_c + delta-bar)): years of saving needed to fund the
// capital required by one technology step of size G.
double investment_interval(const StylizedFacts& facts);

// S * (R_c + delta-bar) / (1 - LS). Equals G / investment_interval for any
// G > 0, so the measured rate is independent of how fast technology grows.
double sustainable_growth(const StylizedFacts& facts);

// Money-value-capital weighted mean depreciation over an equilibrium:
// sum_a N_a P_a delta_a / sum_a N_a P_a.
double capital_weighted_depreciation(const EconomyConfig& config, const EquilibriumState& state);

} // namespace gdplab
