#include "gdplab/measurement.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace gdplab {

namespace {

const YearRecord* find_year(const RunSeries& series, int year) {
    // Records are kept in increasing year order by every producer.
    auto it = std::lower_bound(series.records.begin(), series.records.end(), year,
                               [](const YearRecord& r, int y) { return r.year < y; });
    if (it == series.records.end() || it->year != year) return nullptr;
    return &*it;
}

} // namespace

bool RunSeries::has_year(int year) const { return find_year(*this, year) != nullptr; }

const YearRecord& RunSeries::at_year(int year) const {
    const YearRecord* record = find_year(*this, year);
    if (!record) throw MissingYear(year);
    return *record;
}

std::size_t RunSeries::sector_index(std::string_view name) const {
    for (std::size_t a = 0; a < sectors.size(); ++a)
        if (sectors[a] == name) return a;
    throw SectorMismatch("sector not in series: " + std::string(name));
}

int RunSeries::first_year() const {
    if (records.empty()) throw std::logic_error("empty series has no first year");
    return records.front().year;
}

int RunSeries::last_year() const {
    if (records.empty()) throw std::logic_error("empty series has no last year");
    return records.back().year;
}

BasePolicy BasePolicy::lagged_base(int lag) {
    if (lag < 1) throw std::invalid_argument("lagged base needs lag >= 1");
    return {Kind::LaggedBase, lag};
}

int BasePolicy::base_year_for(int year) const {
    switch (kind) {
        case Kind::Chained: return year - 1;
        case Kind::FixedBase: return param;
        case Kind::LaggedBase: return year - param;
    }
    throw std::logic_error("unreachable base policy kind");
}

std::string BasePolicy::label() const {
    switch (kind) {
        case Kind::Chained: return "chained";
        case Kind::FixedBase: return "fixed:" + std::to_string(param);
        case Kind::LaggedBase: return "lagged:" + std::to_string(param);
    }
    throw std::logic_error("unreachable base policy kind");
}

BasePolicy BasePolicy::parse(std::string_view text) {
    if (text == "chained") return chained();

    auto parse_tail = [&](std::string_view prefix) -> std::optional<int> {
        if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
        std::string_view digits = text.substr(prefix.size());
        int value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size())
            throw std::invalid_argument("bad base policy: " + std::string(text));
        return value;
    };

    if (auto year = parse_tail("fixed:")) return fixed_base(*year);
    if (auto lag = parse_tail("lagged:")) return lagged_base(*lag);
    throw std::invalid_argument("bad base policy: " + std::string(text) +
                                " (expected chained, fixed:YEAR or lagged:LAG)");
}

double gdp_value(std::span<const double> quantities, std::span<const double> prices) {
    if (quantities.size() != prices.size())
        throw SectorMismatch("gdp_value: quantity and price counts differ");
    double total = 0.0;
    for (std::size_t a = 0; a < quantities.size(); ++a) total += quantities[a] * prices[a];
    return total;
}

double nominal_gdp(const YearRecord& record) {
    return gdp_value(record.quantities, record.prices);
}

double gdp_at_base(const RunSeries& series, int year_i, int year_j) {
    const YearRecord& quantities = series.at_year(year_i);
    const YearRecord* base = find_year(series, year_j);
    if (!base) throw MissingBaseYear(year_j);
    return gdp_value(quantities.quantities, base->prices);
}

double growth_rate(const RunSeries& series, int year, const BasePolicy& policy) {
    const int base = policy.base_year_for(year);
    return gdp_at_base(series, year, base) / gdp_at_base(series, year - 1, base) - 1.0;
}

GrowthSeries growth_series(const RunSeries& series, const BasePolicy& policy) {
    GrowthSeries result{policy, {}};
    for (const YearRecord& record : series.records) {
        const int year = record.year;
        if (!series.has_year(year - 1)) continue;
        if (!series.has_year(policy.base_year_for(year))) continue;
        result.entries.push_back({year, growth_rate(series, year, policy)});
    }
    return result;
}

double geometric_mean_growth(const GrowthSeries& series) {
    if (series.entries.empty()) throw std::logic_error("geometric mean of empty growth series");
    double log_sum = 0.0;
    for (const GrowthEntry& entry : series.entries) log_sum += std::log1p(entry.rate);
    return std::expm1(log_sum / static_cast<double>(series.entries.size()));
}

double cumulative_factor(const GrowthSeries& series) {
    double factor = 1.0;
    for (const GrowthEntry& entry : series.entries) factor *= 1.0 + entry.rate;
    return factor;
}

double expected_log_growth(double scale, double years) {
    if (!(scale > 0.0) || !(years > 0.0))
        throw std::domain_error("expected_log_growth needs scale > 0 and years > 0");
    return std::log(scale) / years;
}

double sector_inflation(const RunSeries& series, std::size_t sector, int year) {
    const YearRecord& current = series.at_year(year);
    const YearRecord& previous = series.at_year(year - 1);
    if (sector >= series.sectors.size())
        throw SectorMismatch("sector index out of range: " + std::to_string(sector));
    return current.prices[sector] / previous.prices[sector] - 1.0;
}

double sector_inflation(const RunSeries& series, std::string_view sector, int year) {
    return sector_inflation(series, series.sector_index(sector), year);
}

double gdp_deflator(const RunSeries& series, int year_i, int year_j) {
    return series.at_year(year_i).nominal_gdp / gdp_at_base(series, year_i, year_j);
}

double laspeyres_quantity(const YearRecord& previous, const YearRecord& current) {
    return gdp_value(current.quantities, previous.prices) /
           gdp_value(previous.quantities, previous.prices);
}

double paasche_quantity(const YearRecord& previous, const YearRecord& current) {
    return gdp_value(current.quantities, current.prices) /
           gdp_value(previous.quantities, current.prices);
}

double fisher_quantity(const YearRecord& previous, const YearRecord& current) {
    return std::sqrt(laspeyres_quantity(previous, current) * paasche_quantity(previous, current));
}

namespace {

std::vector<double> reference_for(const RunSeries& series,
                                  std::span<const std::string> reference_sectors,
                                  std::span<const double> reference_prices) {
    if (reference_sectors.size() != reference_prices.size())
        throw SectorMismatch("reference sector and price counts differ");
    std::vector<double> prices(series.sectors.size());
    for (std::size_t a = 0; a < series.sectors.size(); ++a) {
        auto it = std::find(reference_sectors.begin(), reference_sectors.end(), series.sectors[a]);
        if (it == reference_sectors.end())
            throw SectorMismatch("no reference price for sector " + series.sectors[a]);
        prices[a] = reference_prices[static_cast<std::size_t>(it - reference_sectors.begin())];
    }
    return prices;
}

} // namespace

CommonPriceComparison common_price_comparison(const RunSeries& left, const RunSeries& right,
                                              std::span<const std::string> reference_sectors,
                                              std::span<const double> reference_prices,
                                              std::optional<int> anchor_year) {
    const std::vector<double> left_prices = reference_for(left, reference_sectors, reference_prices);
    const std::vector<double> right_prices =
        reference_for(right, reference_sectors, reference_prices);

    std::vector<int> years;
    for (const YearRecord& record : left.records)
        if (right.has_year(record.year)) years.push_back(record.year);
    if (years.empty()) throw std::logic_error("series share no years");

    const int anchor = anchor_year.value_or(years.front());
    if (std::find(years.begin(), years.end(), anchor) == years.end())
        throw MissingYear(anchor, "anchor year not present in both series");

    CommonPriceComparison result;
    result.anchor_year = anchor;
    result.entries.reserve(years.size());

    const BasePolicy chained = BasePolicy::chained();
    std::unordered_map<int, double> extrapolated;
    auto measured_ratio = [&](int year) {
        return gdp_value(left.at_year(year).quantities, left_prices) /
               gdp_value(right.at_year(year).quantities, right_prices);
    };
    extrapolated[anchor] = measured_ratio(anchor);

    // Walk outward from the anchor so each year's value scales its neighbor's
    // by the two economies' own chained growth between them.
    auto anchor_pos = std::find(years.begin(), years.end(), anchor);
    for (auto it = std::next(anchor_pos); it != years.end(); ++it) {
        const double step = (1.0 + growth_rate(left, *it, chained)) /
                            (1.0 + growth_rate(right, *it, chained));
        extrapolated[*it] = extrapolated[*std::prev(it)] * step;
    }
    for (auto it = anchor_pos; it != years.begin();) {
        const int upper = *it;
        --it;
        const double step = (1.0 + growth_rate(left, upper, chained)) /
                            (1.0 + growth_rate(right, upper, chained));
        extrapolated[*it] = extrapolated[upper] / step;
    }

    for (int year : years) {
        CommonPriceEntry entry;
        entry.year = year;
        entry.gdp_left = gdp_value(left.at_year(year).quantities, left_prices);
        entry.gdp_right = gdp_value(right.at_year(year).quantities, right_prices);
        entry.ratio = entry.gdp_left / entry.gdp_right;
        entry.extrapolated = extrapolated.at(year);
        entry.gap = entry.extrapolated / entry.ratio - 1.0;
        result.entries.push_back(entry);
    }
    return result;
}

} // namespace gdplab
