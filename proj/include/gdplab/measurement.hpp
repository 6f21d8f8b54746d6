#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gdplab/errors.hpp"

namespace gdplab {

// Quantities and prices observed in one year. Vectors are aligned with the
// sector list of the owning RunSeries.
struct YearRecord {
    int year = 0;
    std::vector<double> quantities;
    std::vector<double> prices;
    double wage        = 0.0;
    double nominal_gdp = 0.0;
};

// A yearly panel with a fixed sector set.
struct RunSeries {
    std::vector<std::string> sectors;
    std::vector<YearRecord> records;

    bool has_year(int year) const;
    const YearRecord& at_year(int year) const; // throws MissingYear
    std::size_t sector_index(std::string_view name) const; // throws SectorMismatch
    int first_year() const;
    int last_year() const;
};

// How the base year for real-growth measurement is chosen.
struct BasePolicy {
    enum class Kind { Chained, FixedBase, LaggedBase };

    Kind kind = Kind::Chained;
    int param = 0; // FixedBase: the base year; LaggedBase: the lag (>= 1)

    static BasePolicy chained() { return {Kind::Chained, 0}; }
    static BasePolicy fixed_base(int year) { return {Kind::FixedBase, year}; }
    static BasePolicy lagged_base(int lag);

    // Base year used when measuring the growth of `year`.
    int base_year_for(int year) const;

    // "chained", "fixed:1900", "lagged:15"; parse() accepts the same forms.
    std::string label() const;
    static BasePolicy parse(std::string_view text);

    friend bool operator==(const BasePolicy&, const BasePolicy&) = default;
};

struct GrowthEntry {
    int year    = 0;
    double rate = 0.0;
};

struct GrowthSeries {
    BasePolicy policy;
    std::vector<GrowthEntry> entries; // years strictly increasing
};

// sum_a Y_a * P_a over two aligned vectors; throws SectorMismatch on length mismatch.
double gdp_value(std::span<const double> quantities, std::span<const double> prices);

double nominal_gdp(const YearRecord& record);

// GDP of year i valued at year j prices.
double gdp_at_base(const RunSeries& series, int year_i, int year_j);

// g_i^j = GDP_i^j / GDP_{i-1}^j - 1 with j resolved by the policy.
// Throws MissingBaseYear when the policy resolves outside the series and
// MissingYear when i or i-1 is absent.
double growth_rate(const RunSeries& series, int year, const BasePolicy& policy);

// growth_rate mapped over every year of the series for which both the year
// before and the policy's base year resolve.
GrowthSeries growth_series(const RunSeries& series, const BasePolicy& policy);

// (prod (1+g_i))^(1/n) - 1.
double geometric_mean_growth(const GrowthSeries& series);

// prod (1+g_i).
double cumulative_factor(const GrowthSeries& series);

// ln(scale)/years: the growth rate implied by multiplying productivity by
// `scale` over `years` years.
double expected_log_growth(double scale, double years);

// P_a^year / P_a^{year-1} - 1.
double sector_inflation(const RunSeries& series, std::size_t sector, int year);
double sector_inflation(const RunSeries& series, std::string_view sector, int year);

// nominal GDP of year i divided by GDP of year i at year-j prices.
double gdp_deflator(const RunSeries& series, int year_i, int year_j);

// Standard quantity indices between two consecutive records.
double laspeyres_quantity(const YearRecord& previous, const YearRecord& current);
double paasche_quantity(const YearRecord& previous, const YearRecord& current);
double fisher_quantity(const YearRecord& previous, const YearRecord& current);

// External-observer comparison: both economies valued at one fixed reference
// price vector, against the ratio extrapolated from their own chained growth.
struct CommonPriceEntry {
    int year            = 0;
    double gdp_left     = 0.0; // left economy at reference prices
    double gdp_right    = 0.0;
    double ratio        = 0.0; // gdp_left / gdp_right
    double extrapolated = 0.0; // ratio at anchor scaled by own chained growth
    double gap          = 0.0; // extrapolated / ratio - 1
};

struct CommonPriceComparison {
    int anchor_year = 0;
    std::vector<CommonPriceEntry> entries;
};

// Reference prices are given per sector name; every sector of both series must
// be priced (SectorMismatch otherwise). The extrapolated ratio is pinned to
// the measured ratio at `anchor_year` (default: first common year) and evolved
// in both directions by the two economies' own chained growth rates.
CommonPriceComparison common_price_comparison(const RunSeries& left, const RunSeries& right,
                                              std::span<const std::string> reference_sectors,
                                              std::span<const double> reference_prices,
                                              std::optional<int> anchor_year = std::nullopt);

} // namespace gdplab
