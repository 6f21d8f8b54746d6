#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gdplab/economy.hpp"
#include "gdplab/measurement.hpp"

namespace gdplab {

// Per-sector technology trajectory: the multiplier applied to T at each step.
struct TechSchedule {
    enum class Kind { ConstantRate, RampDown, RampUp, Table };

    Kind kind   = Kind::ConstantRate;
    double rate = 0.0;  // ConstantRate: per-year growth
    double peak = 0.06; // Ramp*: largest per-year growth
    double span = 99.0; // Ramp*: ramp length scale
    std::vector<double> multipliers; // Table: multiplier for step i at [i-1]

    static TechSchedule constant_rate(double rate);
    static TechSchedule ramp_down(double peak = 0.06, double span = 99.0);
    static TechSchedule ramp_up(double peak = 0.06, double span = 99.0);
    static TechSchedule table(std::vector<double> multipliers);

    // Growth factor applied at step i (1-based). RampDown follows
    // 1 + peak*(span+1-i)/span, RampUp the mirrored 1 + peak*(i+1)/span.
    double multiplier(int step) const;
};

// Product of per-year multipliers: the fold increase of T after `years` steps.
double cumulative_tech_factor(const TechSchedule& schedule, int years);

// A simulated economy: year-0 equilibrium plus one re-solved equilibrium per
// step. Capital jumps to its FOC level each year; there is no accumulation.
struct SimulationRun {
    EconomyConfig initial;
    std::vector<TechSchedule> schedules;
    double wage_growth = 0.0;
    int start_year     = 1900;

    std::vector<std::vector<double>> tech; // [year index][sector]
    std::vector<EquilibriumState> states;  // per year, index 0 = start_year
    RunSeries series;                      // measurement view of the same years
};

// Advance T per schedule and W by wage_growth each year, solving the
// closed-form equilibrium at every step. `years` is the number of steps, so
// the run holds years+1 records. Throws InfeasibleSubsistence (tagged with
// the offending year) if any year cannot satisfy subsistence.
SimulationRun simulate(const EconomyConfig& config, std::span<const TechSchedule> schedules,
                       int years, double wage_growth, int start_year = 1900);

// Discretized deflator line integral
//   sum_i [sum_a Y_a^{i-1} (P_a^i - P_a^{i-1})] / [sum_a Y_a^{i-1} P_a^{i-1}].
double deflator_path_integral(const RunSeries& series);
double deflator_path_integral(const SimulationRun& run);

// Log-form variant: sum_i ln(GDP_i^i / GDP_i^{i-1}); closes the nominal-GDP
// decomposition exactly at finite step.
double log_deflator_sum(const RunSeries& series);

// ln(GDP_T/GDP_0) - [sum ln(1+g_chained) + log-form deflator sum]. Vanishes to
// rounding for any series.
double decomposition_check(const RunSeries& series);
double decomposition_check(const SimulationRun& run);

// Central finite-difference estimate of d/dT_d[F_c] - d/dT_c[F_d] where
//   F_c(T) = -L_c W / (lambda_c T_c) / (sum_b Y_b P_b)
// at the equilibrium for tech vector T with the config's wage held constant.
// Nonzero asymmetry means the measured-growth line integral is path dependent.
// Rejects steps larger than 10% of the smaller perturbed tech level.
double curl_asymmetry(const EconomyConfig& config, std::span<const double> tech_point,
                      std::size_t sector_c, std::size_t sector_d, double step);

} // namespace gdplab
