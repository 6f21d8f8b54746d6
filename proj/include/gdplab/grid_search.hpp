#pragma once

#include "gdplab/economy.hpp"

namespace gdplab {

// Exhaustive cross-check of the closed-form labor allocation for bi-sector
// economies. Deliberately re-derives everything from the raw production
// function: capital comes from solving the capital FOC in log space, output
// from cobb_douglas_output, and the objective is the log of the subsistence
// utility. It never calls allocate_labor or the per-effective-labor closed
// forms, so agreement between the two routes is a real check.
//
// Scope: the market allocation coincides with the grid argmax only when both
// sectors share one labor exponent. With sector-specific exponents the wage
// wedge W/lambda_a drives nominal GDP apart from the utility optimum, so the
// two answers legitimately differ and the cross-check does not apply.

struct GridSearchResult {
    double labor_a     = 0.0; // best L_A on the integer grid {0, 1, ..., L_t}
    double log_utility = 0.0; // sum_a omega_a * ln(x_a - N0_a) at the optimum
};

// Log utility of the grid point L_A (capital at its FOC level in both
// sectors); -inf when some sector is at or below subsistence.
double grid_log_utility(const EconomyConfig& config, double labor_a);

// Scan every integer grid point. The parallel kernel splits the grid across
// OpenMP threads and reduces deterministically (ties resolve to the smallest
// L_A regardless of thread count); the serial kernel is the reference.
GridSearchResult best_bisector_allocation_serial(const EconomyConfig& config);
GridSearchResult best_bisector_allocation_parallel(const EconomyConfig& config);

// Parallel when OpenMP is enabled, serial otherwise.
GridSearchResult best_bisector_allocation(const EconomyConfig& config);

} // namespace gdplab
