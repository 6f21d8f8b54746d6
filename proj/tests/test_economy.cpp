#include <cmath>
#include <random>

#include <doctest.h>

#include "gdplab/economy.hpp"

using namespace gdplab;

namespace {

EconomyConfig two_islands(double subsistence_a, double omega_b) {
    EconomyConfig config;
    config.sectors = {
        SectorSpec{"A", 2.0 / 3.0, 0.055, subsistence_a, 1.0, 1.0},
        SectorSpec{"B", 2.0 / 3.0, 0.055, 0.0, omega_b, 1.0},
    };
    return config; // total_labor 100000, rate_of_return 0.055, wage 200
}

} // namespace

TEST_CASE("per-effective-labor closed forms") {
    const double c = output_per_effective_labor(2.0 / 3.0, 0.055, 0.055);
    const double n = capital_per_effective_labor(2.0 / 3.0, 0.055, 0.055);
    CHECK(c == doctest::Approx(1.7407765595569786).epsilon(1e-14));
    CHECK(n == doctest::Approx(5.275080483505996).epsilon(1e-14));
    // The pair must satisfy the capital FOC (1-lambda)*c/n = R + delta.
    CHECK((1.0 / 3.0) * c / n == doctest::Approx(0.11).epsilon(1e-13));

    CHECK(output_per_effective_labor(0.5, 0.05, 0.05) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(capital_per_effective_labor(0.5, 0.05, 0.05) == doctest::Approx(25.0).epsilon(1e-14));
}

TEST_CASE("long-run price pins the labor FOC") {
    CHECK(long_run_price(200.0, 2.0 / 3.0, 1.0, 0.055, 0.055) ==
          doctest::Approx(172.33687939614086).epsilon(1e-14));

    // Wage and productivity seventy years on, both compounded.
    const double wage_70 = 200.0 * std::pow(1.06, 70);
    const double tech_70 = std::pow(1.05, 70);
    CHECK(wage_70 == doctest::Approx(11815.186035791667).epsilon(1e-13));
    CHECK(long_run_price(wage_70, 2.0 / 3.0, tech_70, 0.055, 0.055) ==
          doctest::Approx(334.60918511715056).epsilon(1e-13));
    CHECK(long_run_price(wage_70, 2.0 / 3.0, 1.0, 0.055, 0.055) ==
          doctest::Approx(10180.96145446598).epsilon(1e-13));
}

TEST_CASE("cobb_douglas_output agrees with the per-effective-labor form") {
    const double c = output_per_effective_labor(2.0 / 3.0, 0.055, 0.055);
    const double n = capital_per_effective_labor(2.0 / 3.0, 0.055, 0.055);
    const double tech = 3.7, labor = 1234.0;
    CHECK(cobb_douglas_output(tech, labor, tech * labor * n, 2.0 / 3.0) ==
          doctest::Approx(tech * labor * c).epsilon(1e-13));
    CHECK(cobb_douglas_output(1.0, 2000.0, 2000.0 * n, 2.0 / 3.0) ==
          doctest::Approx(3481.553119113957).epsilon(1e-13));
}

TEST_CASE("labor allocation matches hand-computed shares") {
    SUBCASE("equal weights, subsistence in A") {
        const auto labor = allocate_labor(two_islands(1.6711, 1.0));
        CHECK(labor[0] == doctest::Approx(97998.69319314849).epsilon(1e-13));
        CHECK(labor[0] + labor[1] == doctest::Approx(100000.0).epsilon(1e-14));
    }
    SUBCASE("B weighted five-fold") {
        const auto labor = allocate_labor(two_islands(1.6990, 5.0));
        CHECK(labor[0] == doctest::Approx(98000.09947056758).epsilon(1e-13));
    }
    SUBCASE("symmetric economy splits evenly") {
        const auto labor = allocate_labor(two_islands(0.0, 1.0));
        CHECK(labor[0] == doctest::Approx(50000.0).epsilon(1e-14));
        CHECK(labor[1] == doctest::Approx(50000.0).epsilon(1e-14));
    }
    SUBCASE("high productivity frees labor for the weighted good") {
        EconomyConfig config = two_islands(1.6990, 5.0);
        config.sectors[0].tech = 18.93;
        config.sectors[1].tech = 18.93;
        const auto labor = allocate_labor(config);
        CHECK(labor[0] == doctest::Approx(20963.203000734335).epsilon(1e-12));
        CHECK(labor[1] == doctest::Approx(79036.79699926567).epsilon(1e-12));
    }
}

TEST_CASE("equilibrium reproduces the calibrated starting point") {
    const EquilibriumState state = solve_equilibrium(two_islands(1.6990, 5.0));
    CHECK(state.output[0] == doctest::Approx(170596.2759926163).epsilon(1e-12));
    CHECK(state.output[1] == doctest::Approx(3481.3799630815533).epsilon(1e-12));
    CHECK(state.price[0] == doctest::Approx(172.33687939614086).epsilon(1e-13));
    CHECK(state.nominal_gdp == doctest::Approx(30000000.0).epsilon(1e-12));
}

TEST_CASE("nominal GDP equals W * sum(L_a / lambda_a)") {
    EconomyConfig config = two_islands(1.6990, 5.0);
    config.sectors[0].lambda = 0.55;
    config.sectors[0].subsistence = 0.4;
    config.sectors[1].tech = 2.5;
    const EquilibriumState state = solve_equilibrium(config);
    const double predicted =
        config.wage * (state.labor[0] / config.sectors[0].lambda +
                       state.labor[1] / config.sectors[1].lambda);
    CHECK(state.nominal_gdp == doctest::Approx(predicted).epsilon(1e-13));
}

TEST_CASE("infeasible subsistence is rejected with the share sum") {
    EconomyConfig config = two_islands(2.0, 1.0);
    config.sectors[1].subsistence = 0.5;
    try {
        allocate_labor(config);
        FAIL("expected InfeasibleSubsistence");
    } catch (const InfeasibleSubsistence& error) {
        const double c = output_per_effective_labor(2.0 / 3.0, 0.055, 0.055);
        CHECK(error.share_sum() == doctest::Approx(2.5 / c).epsilon(1e-13));
        CHECK_FALSE(error.year().has_value());
    }
}

TEST_CASE("parameter validation") {
    EconomyConfig config = two_islands(0.0, 1.0);
    SUBCASE("lambda bounds") {
        config.sectors[0].lambda = 1.0;
        CHECK_THROWS_AS(validate(config), std::domain_error);
    }
    SUBCASE("negative subsistence") {
        config.sectors[1].subsistence = -0.1;
        CHECK_THROWS_AS(validate(config), std::domain_error);
    }
    SUBCASE("zero omega") {
        config.sectors[0].omega = 0.0;
        CHECK_THROWS_AS(validate(config), std::domain_error);
    }
    SUBCASE("no sectors") {
        config.sectors.clear();
        CHECK_THROWS_AS(validate(config), std::domain_error);
    }
    SUBCASE("negative total labor") {
        config.total_labor = -5.0;
        CHECK_THROWS_AS(validate(config), std::domain_error);
    }
}

TEST_CASE("equilibrium properties over randomized economies") {
    std::mt19937 rng(20240517);
    std::uniform_real_distribution<double> lambda_dist(0.25, 0.8);
    std::uniform_real_distribution<double> delta_dist(0.0, 0.15);
    std::uniform_real_distribution<double> rate_dist(0.01, 0.12);
    std::uniform_real_distribution<double> omega_dist(0.5, 5.0);
    std::uniform_real_distribution<double> tech_dist(0.5, 20.0);
    std::uniform_real_distribution<double> labor_dist(1e3, 2e5);
    std::uniform_real_distribution<double> share_dist(0.0, 0.4);
    std::uniform_int_distribution<int> count_dist(2, 5);

    for (int trial = 0; trial < 300; ++trial) {
        EconomyConfig config;
        config.total_labor = labor_dist(rng);
        config.rate_of_return = rate_dist(rng);
        config.wage = 50.0 + 400.0 * share_dist(rng);
        const int sectors = count_dist(rng);
        double share_budget = 0.9;
        for (int a = 0; a < sectors; ++a) {
            SectorSpec sector;
            sector.name = "s" + std::to_string(a);
            sector.lambda = lambda_dist(rng);
            sector.delta = delta_dist(rng);
            sector.omega = omega_dist(rng);
            sector.tech = tech_dist(rng);
            const double share = share_dist(rng) * share_budget / 0.4;
            share_budget -= share;
            const double c =
                output_per_effective_labor(sector.lambda, sector.delta, config.rate_of_return);
            sector.subsistence = share * sector.tech * c;
            config.sectors.push_back(sector);
        }

        const EquilibriumState state = solve_equilibrium(config);

        double labor_sum = 0.0;
        for (std::size_t a = 0; a < config.sectors.size(); ++a) {
            labor_sum += state.labor[a];
            CHECK(state.labor[a] > 0.0);
            const auto& sector = config.sectors[a];
            // Capital FOC: marginal product of capital covers R + delta.
            const double mpk = (1.0 - sector.lambda) * state.output[a] / state.capital_units[a];
            CHECK(mpk == doctest::Approx(config.rate_of_return + sector.delta).epsilon(1e-11));
            // Labor FOC: marginal revenue product of labor equals the wage.
            const double mrpl =
                state.price[a] * sector.lambda * state.output[a] / state.labor[a];
            CHECK(mrpl == doctest::Approx(config.wage).epsilon(1e-11));
        }
        CHECK(labor_sum == doctest::Approx(config.total_labor).epsilon(1e-12));
    }
}

TEST_CASE("batch solve matches the scalar path") {
    std::vector<EconomyConfig> configs;
    for (int i = 0; i < 16; ++i) {
        EconomyConfig config = two_islands(1.6990, 5.0);
        config.sectors[0].tech = 1.0 + 0.5 * i;
        config.sectors[1].tech = 1.0 + 0.25 * i;
        configs.push_back(config);
    }
    const auto states = solve_equilibria(configs);
    REQUIRE(states.size() == configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const EquilibriumState scalar = solve_equilibrium(configs[i]);
        CHECK(states[i].labor[0] == scalar.labor[0]);
        CHECK(states[i].nominal_gdp == scalar.nominal_gdp);
    }
}

TEST_CASE("utility value flags the subsistence boundary") {
    const std::vector<SectorSpec> sectors = two_islands(1.6990, 5.0).sectors;

    const std::vector<double> comfortable{2.0, 1.0};
    const UtilityValue good = utility_value(comfortable, sectors);
    CHECK_FALSE(good.negative_domain);
    CHECK(good.value == doctest::Approx((2.0 - 1.6990) * 1.0).epsilon(1e-13));

    const std::vector<double> starving{1.0, 1.0};
    const UtilityValue bad = utility_value(starving, sectors);
    CHECK(bad.negative_domain);
    CHECK(bad.value <= 0.0);

    const std::vector<double> wrong_size{1.0};
    CHECK_THROWS_AS(utility_value(wrong_size, sectors), SectorMismatch);
}
