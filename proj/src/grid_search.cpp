#include "gdplab/grid_search.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gdplab {

namespace {

// Capital FOC (1-lambda)*Y/N = R+delta solved for N in log space:
//   ln N = [ln(1-lambda) + lambda*ln(T*L) - ln(R+delta)] / lambda.
double foc_capital(double tech, double labor, double lambda, double delta,
                   double rate_of_return) {
    return std::exp((std::log(1.0 - lambda) + lambda * std::log(tech * labor) -
                     std::log(rate_of_return + delta)) /
                    lambda);
}

} // namespace

double grid_log_utility(const EconomyConfig& config, double labor_a) {
    if (config.sectors.size() != 2)
        throw std::invalid_argument("grid search covers bi-sector economies only");
    const double labor_b = config.total_labor - labor_a;

    double log_utility = 0.0;
    const double labor[2] = {labor_a, labor_b};
    for (std::size_t a = 0; a < 2; ++a) {
        const auto& sector = config.sectors[a];
        double output = 0.0;
        if (labor[a] > 0.0) {
            const double capital = foc_capital(sector.tech, labor[a], sector.lambda, sector.delta,
                                               config.rate_of_return);
            output = cobb_douglas_output(sector.tech, labor[a], capital, sector.lambda);
        }
        const double excess = output / config.total_labor - sector.subsistence;
        if (excess <= 0.0) return -std::numeric_limits<double>::infinity();
        log_utility += sector.omega * std::log(excess);
    }
    return log_utility;
}

GridSearchResult best_bisector_allocation_serial(const EconomyConfig& config) {
    const auto grid_max = static_cast<long long>(config.total_labor);
    GridSearchResult best{0.0, -std::numeric_limits<double>::infinity()};
    for (long long point = 0; point <= grid_max; ++point) {
        const double value = grid_log_utility(config, static_cast<double>(point));
        if (value > best.log_utility) {
            best.log_utility = value;
            best.labor_a = static_cast<double>(point);
        }
    }
    return best;
}

GridSearchResult best_bisector_allocation_parallel(const EconomyConfig& config) {
    const auto grid_max = static_cast<long long>(config.total_labor);
    GridSearchResult best{0.0, -std::numeric_limits<double>::infinity()};
#ifdef _OPENMP
#pragma omp parallel
    {
        GridSearchResult local{0.0, -std::numeric_limits<double>::infinity()};
#pragma omp for schedule(static) nowait
        for (long long point = 0; point <= grid_max; ++point) {
            const double value = grid_log_utility(config, static_cast<double>(point));
            if (value > local.log_utility) {
                local.log_utility = value;
                local.labor_a = static_cast<double>(point);
            }
        }
        // Ties resolve to the smallest labor_a so thread count never changes the answer.
#pragma omp critical(gdplab_grid_reduce)
        {
            if (local.log_utility > best.log_utility ||
                (local.log_utility == best.log_utility && local.labor_a < best.labor_a))
                best = local;
        }
    }
    return best;
#else
    return best_bisector_allocation_serial(config);
#endif
}

GridSearchResult best_bisector_allocation(const EconomyConfig& config) {
#ifdef _OPENMP
    return best_bisector_allocation_parallel(config);
#else
    return best_bisector_allocation_serial(config);
#endif
}

} // namespace gdplab
