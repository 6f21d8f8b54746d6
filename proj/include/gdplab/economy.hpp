#pragma once

#include <span>
#include <string>
#include <vector>

#include "gdplab/errors.hpp"

namespace gdplab {

// Technology, production and preference parameters of one sector.
// Production is Cobb-Douglas in effective labor and own-good capital,
//   Y = (T*L)^lambda * N^(1-lambda),
// and utility weights the sector's per-capita consumption above the
// subsistence minimum with exponent omega.
struct SectorSpec {
    std::string name;
    double lambda      = 2.0 / 3.0; // labor exponent, in (0,1)
    double delta       = 0.055;     // depreciation rate per year, >= 0
    double subsistence = 0.0;       // per-capita minimum quantity, >= 0
    double omega       = 1.0;       // utility exponent, > 0
    double tech        = 1.0;       // productivity level T, > 0
};

struct EconomyConfig {
    std::vector<SectorSpec> sectors;
    double total_labor    = 100000.0;
    double rate_of_return = 0.055; // R_c per year
    double wage           = 200.0; // nominal wage per labor-year
};

// Competitive equilibrium of one year, all vectors in sector order.
struct EquilibriumState {
    std::vector<double> labor;         // L_a, sums to total_labor
    std::vector<double> capital_units; // N_a, physical units of the sector's own good
    std::vector<double> output;        // Y_a
    std::vector<double> price;         // P_a, long-run price
    double wage        = 0.0;
    double nominal_gdp = 0.0; // sum of P_a * Y_a
};

struct UtilityValue {
    double value = 0.0;
    // True when some subsistence sector consumes at or below its minimum;
    // the value is still reported (negative magnitude) for search diagnostics.
    bool negative_domain = false;
};

// Throw std::domain_error on parameter violations.
void validate(const SectorSpec& sector, double rate_of_return);
void validate(const EconomyConfig& config);

// Raw production function Y = (T*L)^lambda * N^(1-lambda).
double cobb_douglas_output(double tech, double labor, double capital_units, double lambda);

// c = ((1-lambda)/(R+delta))^((1-lambda)/lambda), so Y = T*L*c at equilibrium.
double output_per_effective_labor(double lambda, double delta, double rate_of_return);

// n = ((1-lambda)/(R+delta))^(1/lambda); N = T*L*n satisfies the capital FOC.
double capital_per_effective_labor(double lambda, double delta, double rate_of_return);

// P = W / (lambda * T * c); satisfies the labor FOC P*lambda*Y/L = W.
double long_run_price(double wage, double lambda, double tech, double delta, double rate_of_return);

// s_a = N0_a / (T_a * c_a): the labor share a sector needs just to cover subsistence.
double subsistence_labor_share(const SectorSpec& sector, double rate_of_return);

// Utility-maximizing labor allocation with capital pinned by the capital FOC:
//   L_a = L_t * [ s_a + lambda_a*omega_a*(1 - sum_b s_b) / sum_b(lambda_b*omega_b) ].
// Throws InfeasibleSubsistence when sum_b s_b >= 1.
std::vector<double> allocate_labor(const EconomyConfig& config);

// Full closed-form equilibrium: allocation, capital, output, prices, nominal GDP.
EquilibriumState solve_equilibrium(const EconomyConfig& config);

// Batch solve; independent configurations are evaluated in parallel when
// OpenMP is enabled. Results are deterministic and order-preserving.
std::vector<EquilibriumState> solve_equilibria(std::span<const EconomyConfig> configs);

// Generalized Stone-Geary utility prod_a (x_a - N0_a)^omega_a over per-capita
// consumption. Never throws; below-subsistence points are flagged and reported
// with negative magnitude.
UtilityValue utility_value(std::span<const double> per_capita_consumption,
                           std::span<const SectorSpec> sectors);

} // namespace gdplab
