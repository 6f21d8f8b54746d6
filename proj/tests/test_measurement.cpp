#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "gdplab/measurement.hpp"

using namespace gdplab;

namespace {

// Small fabricated panel: quantities grow geometrically, prices drift apart.
RunSeries synthetic_series(int years = 12) {
    RunSeries series;
    series.sectors = {"A", "B"};
    for (int i = 0; i <= years; ++i) {
        YearRecord record;
        record.year = 2000 + i;
        record.quantities = {100.0 * std::pow(1.04, i), 80.0 * std::pow(1.01, i)};
        record.prices = {10.0 * std::pow(1.02, i), 12.0 * std::pow(1.07, i)};
        record.wage = 5.0 * std::pow(1.05, i);
        record.nominal_gdp = nominal_gdp(record);
        series.records.push_back(record);
    }
    return series;
}

} // namespace

TEST_CASE("base policy labels round-trip through parse") {
    CHECK(BasePolicy::parse("chained") == BasePolicy::chained());
    CHECK(BasePolicy::parse("fixed:1900") == BasePolicy::fixed_base(1900));
    CHECK(BasePolicy::parse("lagged:15") == BasePolicy::lagged_base(15));
    for (const BasePolicy& policy :
         {BasePolicy::chained(), BasePolicy::fixed_base(1987), BasePolicy::lagged_base(3)})
        CHECK(BasePolicy::parse(policy.label()) == policy);

    CHECK_THROWS_AS(BasePolicy::parse("fixed:abc"), std::invalid_argument);
    CHECK_THROWS_AS(BasePolicy::parse("quarterly"), std::invalid_argument);
    CHECK_THROWS_AS(BasePolicy::lagged_base(0), std::invalid_argument);
}

TEST_CASE("base year resolution") {
    CHECK(BasePolicy::chained().base_year_for(1971) == 1970);
    CHECK(BasePolicy::fixed_base(1900).base_year_for(1971) == 1900);
    CHECK(BasePolicy::lagged_base(15).base_year_for(1971) == 1956);
}

TEST_CASE("gdp_value and record lookups") {
    const RunSeries series = synthetic_series();
    const std::vector<double> q{2.0, 3.0};
    const std::vector<double> p{5.0, 7.0};
    CHECK(gdp_value(q, p) == doctest::Approx(31.0).epsilon(1e-15));

    const std::vector<double> short_p{5.0};
    CHECK_THROWS_AS(gdp_value(q, short_p), SectorMismatch);

    CHECK(series.has_year(2005));
    CHECK_FALSE(series.has_year(1999));
    CHECK_THROWS_AS(series.at_year(1999), MissingYear);
    CHECK(series.sector_index("B") == 1);
    CHECK_THROWS_AS(series.sector_index("C"), SectorMismatch);
    CHECK(series.first_year() == 2000);
    CHECK(series.last_year() == 2012);
}

TEST_CASE("chained growth equals the Laspeyres quantity index") {
    const RunSeries series = synthetic_series();
    for (int year = 2001; year <= 2012; ++year) {
        const YearRecord& previous = series.at_year(year - 1);
        const YearRecord& current = series.at_year(year);
        // Same arithmetic, so the match is exact, not approximate.
        CHECK(growth_rate(series, year, BasePolicy::chained()) ==
              laspeyres_quantity(previous, current) - 1.0);
    }
}

TEST_CASE("fisher lies between laspeyres and paasche") {
    const RunSeries series = synthetic_series();
    const YearRecord& previous = series.at_year(2003);
    const YearRecord& current = series.at_year(2004);
    const double laspeyres = laspeyres_quantity(previous, current);
    const double paasche = paasche_quantity(previous, current);
    const double fisher = fisher_quantity(previous, current);
    CHECK(fisher == doctest::Approx(std::sqrt(laspeyres * paasche)).epsilon(1e-15));
    CHECK(fisher >= std::min(laspeyres, paasche));
    CHECK(fisher <= std::max(laspeyres, paasche));
}

TEST_CASE("missing base years raise instead of clamping") {
    const RunSeries series = synthetic_series();
    CHECK_THROWS_AS(growth_rate(series, 2005, BasePolicy::fixed_base(1995)), MissingBaseYear);
    CHECK_THROWS_AS(growth_rate(series, 2005, BasePolicy::lagged_base(10)), MissingBaseYear);
    // Chained growth of the first year needs the year before it.
    CHECK_THROWS_AS(growth_rate(series, 2000, BasePolicy::chained()), MissingYear);
}

TEST_CASE("growth_series trims to resolvable years") {
    const RunSeries series = synthetic_series();

    const GrowthSeries chained = growth_series(series, BasePolicy::chained());
    REQUIRE(chained.entries.size() == 12);
    CHECK(chained.entries.front().year == 2001);

    const GrowthSeries lagged = growth_series(series, BasePolicy::lagged_base(5));
    REQUIRE(lagged.entries.size() == 8);
    CHECK(lagged.entries.front().year == 2005);

    for (const GrowthEntry& entry : lagged.entries)
        CHECK(entry.rate == growth_rate(series, entry.year, BasePolicy::lagged_base(5)));
}

TEST_CASE("summary statistics of a growth series") {
    GrowthSeries series{BasePolicy::chained(), {{2001, 0.1}, {2002, 0.2}, {2003, -0.05}}};
    const double factor = 1.1 * 1.2 * 0.95;
    CHECK(cumulative_factor(series) == doctest::Approx(factor).epsilon(1e-15));
    CHECK(geometric_mean_growth(series) ==
          doctest::Approx(std::cbrt(factor) - 1.0).epsilon(1e-14));

    GrowthSeries empty{BasePolicy::chained(), {}};
    CHECK(cumulative_factor(empty) == 1.0);
    CHECK_THROWS_AS(geometric_mean_growth(empty), std::logic_error);

    CHECK(expected_log_growth(2.0, 10.0) ==
          doctest::Approx(0.06931471805599453).epsilon(1e-15));
    CHECK(expected_log_growth(18.93, 98.0) ==
          doctest::Approx(0.03000763229817583).epsilon(1e-14));
    CHECK_THROWS_AS(expected_log_growth(0.0, 10.0), std::domain_error);
}

TEST_CASE("sector inflation and the deflator identity") {
    const RunSeries series = synthetic_series();
    CHECK(sector_inflation(series, 0, 2005) == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(sector_inflation(series, "B", 2005) == doctest::Approx(0.07).epsilon(1e-12));
    CHECK(sector_inflation(series, std::size_t{0}, 2005) ==
          sector_inflation(series, "A", 2005));

    // Deflator times base-price GDP recovers nominal GDP by construction.
    for (int year : {2001, 2006, 2012}) {
        const double deflator = gdp_deflator(series, year, 2000);
        CHECK(deflator * gdp_at_base(series, year, 2000) ==
              doctest::Approx(series.at_year(year).nominal_gdp).epsilon(1e-13));
    }
    CHECK(gdp_deflator(series, 2000, 2000) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("uniform inflation makes the base year irrelevant") {
    std::mt19937 rng(7351);
    std::uniform_real_distribution<double> quantity_dist(5.0, 500.0);
    std::uniform_real_distribution<double> price_dist(1.0, 30.0);
    std::uniform_real_distribution<double> inflation_dist(-0.05, 0.15);
    std::uniform_real_distribution<double> growth_dist(-0.04, 0.08);
    std::uniform_int_distribution<int> sector_dist(2, 5);

    for (int trial = 0; trial < 200; ++trial) {
        const int sectors = sector_dist(rng);
        const int years = 8;
        RunSeries series;
        for (int a = 0; a < sectors; ++a) series.sectors.push_back("s" + std::to_string(a));

        std::vector<double> quantity(sectors), price(sectors);
        for (int a = 0; a < sectors; ++a) {
            quantity[a] = quantity_dist(rng);
            price[a] = price_dist(rng);
        }
        for (int i = 0; i <= years; ++i) {
            if (i > 0) {
                const double inflation = inflation_dist(rng); // one factor for all sectors
                for (int a = 0; a < sectors; ++a) {
                    quantity[a] *= 1.0 + growth_dist(rng);
                    price[a] *= 1.0 + inflation;
                }
            }
            YearRecord record;
            record.year = 1990 + i;
            record.quantities = quantity;
            record.prices = price;
            record.nominal_gdp = gdp_value(quantity, price);
            series.records.push_back(record);
        }

        for (int year = 1991; year <= 1990 + years; ++year) {
            const double chained = growth_rate(series, year, BasePolicy::chained());
            for (int base = 1990; base <= 1990 + years; ++base)
                CHECK(growth_rate(series, year, BasePolicy::fixed_base(base)) ==
                      doctest::Approx(chained).epsilon(1e-12));
        }
    }
}

TEST_CASE("common-price comparison of identical economies is flat") {
    const RunSeries series = synthetic_series();
    const std::vector<std::string> sectors{"A", "B"};
    const std::vector<double> reference{9.0, 14.0};

    const CommonPriceComparison comparison =
        common_price_comparison(series, series, sectors, reference);
    CHECK(comparison.anchor_year == 2000);
    REQUIRE(comparison.entries.size() == 13);
    for (const CommonPriceEntry& entry : comparison.entries) {
        CHECK(entry.ratio == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(entry.extrapolated == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(entry.gap == doctest::Approx(0.0).epsilon(1e-13));
    }
}

TEST_CASE("common-price comparison anchors where asked") {
    RunSeries left = synthetic_series();
    RunSeries right = synthetic_series();
    // Make the right economy grow differently so extrapolation drifts.
    for (std::size_t i = 0; i < right.records.size(); ++i) {
        right.records[i].quantities[0] *= std::pow(1.03, static_cast<double>(i));
        right.records[i].nominal_gdp = nominal_gdp(right.records[i]);
    }
    const std::vector<std::string> sectors{"A", "B"};
    const std::vector<double> reference{9.0, 14.0};

    const CommonPriceComparison at_start =
        common_price_comparison(left, right, sectors, reference, 2000);
    CHECK(at_start.entries.front().gap == doctest::Approx(0.0).epsilon(1e-13));

    const CommonPriceComparison at_end =
        common_price_comparison(left, right, sectors, reference, 2012);
    CHECK(at_end.entries.back().gap == doctest::Approx(0.0).epsilon(1e-13));
    // Both anchors scale the same extrapolation path, so their gaps differ by
    // one constant factor: 1+gap_end(y) = (1+gap_start(y)) / (1+gap_start(last)).
    for (std::size_t i = 0; i < at_end.entries.size(); ++i)
        CHECK(1.0 + at_end.entries[i].gap ==
              doctest::Approx((1.0 + at_start.entries[i].gap) /
                              (1.0 + at_start.entries.back().gap))
                  .epsilon(1e-12));

    CHECK_THROWS_AS(common_price_comparison(left, right, sectors, reference, 1980), MissingYear);

    const std::vector<std::string> wrong{"A"};
    const std::vector<double> wrong_prices{9.0};
    CHECK_THROWS_AS(common_price_comparison(left, right, wrong, wrong_prices), SectorMismatch);
}
