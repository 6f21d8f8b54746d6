#include "gdplab/kaldor.hpp"

#include <stdexcept>

namespace gdplab {

void validate(const StylizedFacts& facts) {
    if (!(facts.labor_share > 0.0) || !(facts.labor_share < 1.0))
        throw std::domain_error("labor_share must lie in (0,1)");
    if (!(facts.saving_rate > 0.0) || !(facts.saving_rate < 1.0))
        throw std::domain_error("saving_rate must lie in (0,1)");
    if (!(facts.rate_of_return + facts.mean_depreciation > 0.0))
        throw std::domain_error("rate_of_return + mean_depreciation must be > 0");
    if (!(facts.tech_growth >= 0.0))
        throw std::domain_error("tech_growth must be >= 0");
}

double capital_output_ratio(const StylizedFacts& facts) {
    validate(facts);
    return (1.0 - facts.labor_share) / (facts.rate_of_return + facts.mean_depreciation);
}

double investment_interval(const StylizedFacts& facts) {
    validate(facts);
    return facts.tech_growth * (1.0 - facts.labor_share) /
           (facts.saving_rate * (facts.rate_of_return + facts.mean_depreciation));
}

double sustainable_growth(const StylizedFacts& facts) {
    validate(facts);
    return facts.saving_rate * (facts.rate_of_return + facts.mean_depreciation) /
           (1.0 - facts.labor_share);
}

double capital_weighted_depreciation(const EconomyConfig& config, const EquilibriumState& state) {
    if (state.capital_units.size() != config.sectors.size() ||
        state.price.size() != config.sectors.size())
        throw SectorMismatch("state and config sector counts differ");
    double value = 0.0;
    double weighted = 0.0;
    for (std::size_t a = 0; a < config.sectors.size(); ++a) {
        const double money_capital = state.capital_units[a] * state.price[a];
        value += money_capital;
        weighted += money_capital * config.sectors[a].delta;
    }
    if (!(value > 0.0)) throw std::domain_error("no capital in equilibrium");
    return weighted / value;
}

} // namespace gdplab
