#include "gdplab/paths.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace gdplab {

TechSchedule TechSchedule::constant_rate(double rate) {
    TechSchedule schedule;
    schedule.kind = Kind::ConstantRate;
    schedule.rate = rate;
    return schedule;
}

TechSchedule TechSchedule::ramp_down(double peak, double span) {
    TechSchedule schedule;
    schedule.kind = Kind::RampDown;
    schedule.peak = peak;
    schedule.span = span;
    return schedule;
}

TechSchedule TechSchedule::ramp_up(double peak, double span) {
    TechSchedule schedule;
    schedule.kind = Kind::RampUp;
    schedule.peak = peak;
    schedule.span = span;
    return schedule;
}

TechSchedule TechSchedule::table(std::vector<double> multipliers) {
    TechSchedule schedule;
    schedule.kind = Kind::Table;
    schedule.multipliers = std::move(multipliers);
    return schedule;
}

double TechSchedule::multiplier(int step) const {
    if (step < 1) throw std::out_of_range("schedule step must be >= 1");
    switch (kind) {
        case Kind::ConstantRate:
            return 1.0 + rate;
        case Kind::RampDown:
            return 1.0 + peak * (span + 1.0 - static_cast<double>(step)) / span;
        case Kind::RampUp:
            return 1.0 + peak * (static_cast<double>(step) + 1.0) / span;
        case Kind::Table: {
            const auto index = static_cast<std::size_t>(step - 1);
            if (index >= multipliers.size())
                throw std::out_of_range("schedule table ends before step " + std::to_string(step));
            return multipliers[index];
        }
    }
    throw std::logic_error("unreachable schedule kind");
}

double cumulative_tech_factor(const TechSchedule& schedule, int years) {
    double factor = 1.0;
    for (int step = 1; step <= years; ++step) factor *= schedule.multiplier(step);
    return factor;
}

SimulationRun simulate(const EconomyConfig& config, std::span<const TechSchedule> schedules,
                       int years, double wage_growth, int start_year) {
    validate(config);
    if (schedules.size() != config.sectors.size())
        throw SectorMismatch("one schedule per sector required");
    if (years < 0) throw std::domain_error("years must be >= 0");

    SimulationRun run;
    run.initial = config;
    run.schedules.assign(schedules.begin(), schedules.end());
    run.wage_growth = wage_growth;
    run.start_year = start_year;

    run.series.sectors.reserve(config.sectors.size());
    for (const auto& sector : config.sectors) run.series.sectors.push_back(sector.name);

    EconomyConfig current = config;
    for (int step = 0; step <= years; ++step) {
        const int year = start_year + step;
        if (step > 0) {
            for (std::size_t a = 0; a < current.sectors.size(); ++a)
                current.sectors[a].tech *= schedules[a].multiplier(step);
            current.wage *= 1.0 + wage_growth;
        }

        std::vector<double> tech_levels;
        tech_levels.reserve(current.sectors.size());
        for (const auto& sector : current.sectors) tech_levels.push_back(sector.tech);

        EquilibriumState state;
        try {
            state = solve_equilibrium(current);
        } catch (const InfeasibleSubsistence& fail) {
            throw InfeasibleSubsistence(fail.share_sum(), year);
        }

        YearRecord record;
        record.year = year;
        record.quantities = state.output;
        record.prices = state.price;
        record.wage = state.wage;
        record.nominal_gdp = state.nominal_gdp;

        run.tech.push_back(std::move(tech_levels));
        run.states.push_back(std::move(state));
        run.series.records.push_back(std::move(record));
    }
    return run;
}

double deflator_path_integral(const RunSeries& series) {
    double total = 0.0;
    for (std::size_t i = 1; i < series.records.size(); ++i) {
        const YearRecord& previous = series.records[i - 1];
        const YearRecord& current = series.records[i];
        double numerator = 0.0;
        for (std::size_t a = 0; a < previous.quantities.size(); ++a)
            numerator += previous.quantities[a] * (current.prices[a] - previous.prices[a]);
        total += numerator / gdp_value(previous.quantities, previous.prices);
    }
    return total;
}

double deflator_path_integral(const SimulationRun& run) {
    return deflator_path_integral(run.series);
}

double log_deflator_sum(const RunSeries& series) {
    double total = 0.0;
    for (std::size_t i = 1; i < series.records.size(); ++i) {
        const YearRecord& previous = series.records[i - 1];
        const YearRecord& current = series.records[i];
        // One-period Paasche deflator: current quantities at current vs prior prices.
        total += std::log(gdp_value(current.quantities, current.prices) /
                          gdp_value(current.quantities, previous.prices));
    }
    return total;
}

double decomposition_check(const RunSeries& series) {
    if (series.records.size() < 2)
        throw std::logic_error("decomposition needs at least two years");
    double chained_log = 0.0;
    for (std::size_t i = 1; i < series.records.size(); ++i) {
        const YearRecord& previous = series.records[i - 1];
        const YearRecord& current = series.records[i];
        chained_log += std::log(gdp_value(current.quantities, previous.prices) /
                                gdp_value(previous.quantities, previous.prices));
    }
    const double nominal_log = std::log(series.records.back().nominal_gdp /
                                        series.records.front().nominal_gdp);
    return nominal_log - chained_log - log_deflator_sum(series);
}

double decomposition_check(const SimulationRun& run) {
    return decomposition_check(run.series);
}

namespace {

// -L_c W / (lambda_c T_c) / nominal GDP evaluated at the tech vector's equilibrium.
double growth_field_component(EconomyConfig config, std::span<const double> tech_point,
                              std::size_t component) {
    for (std::size_t a = 0; a < config.sectors.size(); ++a)
        config.sectors[a].tech = tech_point[a];
    const EquilibriumState state = solve_equilibrium(config);
    const auto& sector = config.sectors[component];
    return -state.labor[component] * config.wage / (sector.lambda * sector.tech) /
           state.nominal_gdp;
}

} // namespace

double curl_asymmetry(const EconomyConfig& config, std::span<const double> tech_point,
                      std::size_t sector_c, std::size_t sector_d, double step) {
    if (tech_point.size() != config.sectors.size())
        throw SectorMismatch("tech point and sector counts differ");
    if (sector_c >= config.sectors.size() || sector_d >= config.sectors.size())
        throw std::out_of_range("sector index out of range");
    if (sector_c == sector_d) throw std::invalid_argument("need two distinct sectors");
    if (!(step > 0.0)) throw std::domain_error("step must be > 0");
    const double smaller = std::min(tech_point[sector_c], tech_point[sector_d]) - step;
    if (!(step <= 0.1 * smaller))
        throw std::domain_error("step too large for central differences at this tech point");

    std::vector<double> point(tech_point.begin(), tech_point.end());
    auto bump = [&](std::size_t axis, double amount, std::size_t component) {
        point[axis] += amount;
        const double value = growth_field_component(config, point, component);
        point[axis] -= amount;
        return value;
    };

    const double dfc_dtd =
        (bump(sector_d, step, sector_c) - bump(sector_d, -step, sector_c)) / (2.0 * step);
    const double dfd_dtc =
        (bump(sector_c, step, sector_d) - bump(sector_c, -step, sector_d)) / (2.0 * step);
    return dfc_dtd - dfd_dtc;
}

} // namespace gdplab
