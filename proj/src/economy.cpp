#include "gdplab/economy.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace gdplab {

void validate(const SectorSpec& sector, double rate_of_return) {
    if (!(sector.lambda > 0.0) || !(sector.lambda < 1.0))
        throw std::domain_error("sector " + sector.name + ": lambda must lie in (0,1)");
    if (!(sector.delta >= 0.0))
        throw std::domain_error("sector " + sector.name + ": delta must be >= 0");
    if (!(rate_of_return + sector.delta > 0.0))
        throw std::domain_error("sector " + sector.name + ": rate_of_return + delta must be > 0");
    if (!(sector.subsistence >= 0.0))
        throw std::domain_error("sector " + sector.name + ": subsistence must be >= 0");
    if (!(sector.omega > 0.0))
        throw std::domain_error("sector " + sector.name + ": omega must be > 0");
    if (!(sector.tech > 0.0))
        throw std::domain_error("sector " + sector.name + ": tech must be > 0");
}

void validate(const EconomyConfig& config) {
    if (config.sectors.empty())
        throw std::domain_error("economy needs at least one sector");
    if (!(config.total_labor > 0.0))
        throw std::domain_error("total_labor must be > 0");
    if (!(config.wage > 0.0))
        throw std::domain_error("wage must be > 0");
    for (const auto& sector : config.sectors) validate(sector, config.rate_of_return);
}

double cobb_douglas_output(double tech, double labor, double capital_units, double lambda) {
    return std::pow(tech * labor, lambda) * std::pow(capital_units, 1.0 - lambda);
}

double output_per_effective_labor(double lambda, double delta, double rate_of_return) {
    return std::pow((1.0 - lambda) / (rate_of_return + delta), (1.0 - lambda) / lambda);
}

double capital_per_effective_labor(double lambda, double delta, double rate_of_return) {
    return std::pow((1.0 - lambda) / (rate_of_return + delta), 1.0 / lambda);
}

double long_run_price(double wage, double lambda, double tech, double delta,
                      double rate_of_return) {
    return wage / (lambda * tech * output_per_effective_labor(lambda, delta, rate_of_return));
}

double subsistence_labor_share(const SectorSpec& sector, double rate_of_return) {
    const double c = output_per_effective_labor(sector.lambda, sector.delta, rate_of_return);
    return sector.subsistence / (sector.tech * c);
}

std::vector<double> allocate_labor(const EconomyConfig& config) {
    validate(config);

    double share_sum = 0.0;
    double weight_sum = 0.0;
    for (const auto& sector : config.sectors) {
        share_sum += subsistence_labor_share(sector, config.rate_of_return);
        weight_sum += sector.lambda * sector.omega;
    }
    if (share_sum >= 1.0) throw InfeasibleSubsistence(share_sum);

    std::vector<double> labor(config.sectors.size());
    const double discretionary = (1.0 - share_sum) / weight_sum;
    for (std::size_t a = 0; a < config.sectors.size(); ++a) {
        const auto& sector = config.sectors[a];
        const double s = subsistence_labor_share(sector, config.rate_of_return);
        labor[a] = config.total_labor * (s + sector.lambda * sector.omega * discretionary);
    }
    return labor;
}

EquilibriumState solve_equilibrium(const EconomyConfig& config) {
    EquilibriumState state;
    state.labor = allocate_labor(config);
    state.wage = config.wage;

    const std::size_t n = config.sectors.size();
    state.capital_units.resize(n);
    state.output.resize(n);
    state.price.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto& sector = config.sectors[a];
        const double effective = sector.tech * state.labor[a];
        state.capital_units[a] = effective * capital_per_effective_labor(sector.lambda, sector.delta,
                                                                         config.rate_of_return);
        state.output[a] = effective * output_per_effective_labor(sector.lambda, sector.delta,
                                                                 config.rate_of_return);
        state.price[a] = long_run_price(config.wage, sector.lambda, sector.tech, sector.delta,
                                        config.rate_of_return);
        state.nominal_gdp += state.price[a] * state.output[a];
    }
    return state;
}

std::vector<EquilibriumState> solve_equilibria(std::span<const EconomyConfig> configs) {
    std::vector<EquilibriumState> states(configs.size());
    // Configurations are independent; any iteration order gives the same result.
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(configs.size()); ++i)
        states[static_cast<std::size_t>(i)] = solve_equilibrium(configs[static_cast<std::size_t>(i)]);
    return states;
}

UtilityValue utility_value(std::span<const double> per_capita_consumption,
                           std::span<const SectorSpec> sectors) {
    if (per_capita_consumption.size() != sectors.size())
        throw SectorMismatch("utility_value: consumption and sector counts differ");

    UtilityValue result{1.0, false};
    for (std::size_t a = 0; a < sectors.size(); ++a) {
        const double excess = per_capita_consumption[a] - sectors[a].subsistence;
        if (excess <= 0.0) {
            result.negative_domain = true;
            result.value *= -std::pow(-excess, sectors[a].omega);
        } else {
            result.value *= std::pow(excess, sectors[a].omega);
        }
    }
    if (result.negative_domain && result.value > 0.0) result.value = -result.value;
    return result;
}

} // namespace gdplab
