#include "gdplab/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gdplab/csv.hpp"
#include "gdplab/kaldor.hpp"
#include "gdplab/svg.hpp"

namespace gdplab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& message) {
    throw std::runtime_error(origin + ": " + message);
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> known,
                         const std::string& origin, const std::string& where) {
    for (const auto& item : object.items()) {
        if (std::find_if(known.begin(), known.end(), [&](const char* key) {
                return item.key() == key;
            }) == known.end())
            fail(origin, where + ": unknown field '" + item.key() + "'");
    }
}

double number_or(const json& object, const char* key, double fallback,
                 const std::string& origin, const std::string& where) {
    if (!object.contains(key)) return fallback;
    if (!object.at(key).is_number()) fail(origin, where + "." + key + " must be a number");
    return object.at(key).get<double>();
}

int int_or(const json& object, const char* key, int fallback, const std::string& origin,
           const std::string& where) {
    if (!object.contains(key)) return fallback;
    if (!object.at(key).is_number_integer()) fail(origin, where + "." + key + " must be an integer");
    return object.at(key).get<int>();
}

SectorSpec parse_sector(const json& object, std::size_t index, const std::string& origin) {
    const std::string where = "economy.sectors[" + std::to_string(index) + "]";
    if (!object.is_object()) fail(origin, where + " must be an object");
    reject_unknown_keys(object, {"name", "lambda", "delta", "subsistence", "omega", "tech"},
                        origin, where);
    if (!object.contains("name") || !object.at("name").is_string())
        fail(origin, where + " needs a string 'name'");

    SectorSpec sector;
    sector.name = object.at("name").get<std::string>();
    sector.lambda = number_or(object, "lambda", sector.lambda, origin, where);
    sector.delta = number_or(object, "delta", sector.delta, origin, where);
    sector.subsistence = number_or(object, "subsistence", sector.subsistence, origin, where);
    sector.omega = number_or(object, "omega", sector.omega, origin, where);
    sector.tech = number_or(object, "tech", sector.tech, origin, where);
    return sector;
}

TechSchedule parse_schedule(const json& object, std::size_t index, const std::string& origin) {
    const std::string where = "schedules[" + std::to_string(index) + "]";
    if (!object.is_object()) fail(origin, where + " must be an object");
    if (!object.contains("kind") || !object.at("kind").is_string())
        fail(origin, where + " needs a string 'kind'");
    const std::string kind = object.at("kind").get<std::string>();

    if (kind == "constant_rate") {
        reject_unknown_keys(object, {"kind", "rate"}, origin, where);
        if (!object.contains("rate")) fail(origin, where + ": constant_rate needs 'rate'");
        return TechSchedule::constant_rate(number_or(object, "rate", 0.0, origin, where));
    }
    if (kind == "ramp_down" || kind == "ramp_up") {
        reject_unknown_keys(object, {"kind", "peak", "span"}, origin, where);
        const double peak = number_or(object, "peak", 0.06, origin, where);
        const double span = number_or(object, "span", 99.0, origin, where);
        return kind == "ramp_down" ? TechSchedule::ramp_down(peak, span)
                                   : TechSchedule::ramp_up(peak, span);
    }
    if (kind == "table") {
        reject_unknown_keys(object, {"kind", "multipliers"}, origin, where);
        if (!object.contains("multipliers") || !object.at("multipliers").is_array())
            fail(origin, where + ": table needs an array 'multipliers'");
        std::vector<double> multipliers;
        for (const auto& value : object.at("multipliers")) {
            if (!value.is_number()) fail(origin, where + ".multipliers must hold numbers");
            multipliers.push_back(value.get<double>());
        }
        return TechSchedule::table(std::move(multipliers));
    }
    fail(origin, where + ": unknown kind '" + kind +
                     "' (expected constant_rate, ramp_down, ramp_up or table)");
}

std::string sanitized_name(const std::string& name) {
    if (name.empty()) return "scenario";
    std::string safe = name;
    for (char& c : safe)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')) c = '_';
    return safe;
}

std::string format_fixed(double value, int digits = 6) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
    return buffer;
}

std::string format_compact(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

} // namespace

ScenarioConfig parse_scenario(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& error) {
        fail(origin, error.what());
    }
    if (!root.is_object()) fail(origin, "top level must be an object");
    reject_unknown_keys(root,
                        {"name", "summary", "economy", "schedules", "years", "wage_growth",
                         "start_year", "policies", "outputs"},
                        origin, "scenario");

    ScenarioConfig config;
    if (root.contains("name")) {
        if (!root.at("name").is_string()) fail(origin, "name must be a string");
        config.name = root.at("name").get<std::string>();
    }
    if (root.contains("summary")) {
        if (!root.at("summary").is_string()) fail(origin, "summary must be a string");
        config.summary = root.at("summary").get<std::string>();
    }

    if (!root.contains("economy") || !root.at("economy").is_object())
        fail(origin, "scenario needs an 'economy' object");
    const json& economy = root.at("economy");
    reject_unknown_keys(economy, {"sectors", "total_labor", "rate_of_return", "wage"}, origin,
                        "economy");
    if (!economy.contains("sectors") || !economy.at("sectors").is_array() ||
        economy.at("sectors").empty())
        fail(origin, "economy needs a non-empty 'sectors' array");
    for (std::size_t a = 0; a < economy.at("sectors").size(); ++a)
        config.economy.sectors.push_back(parse_sector(economy.at("sectors")[a], a, origin));
    config.economy.total_labor =
        number_or(economy, "total_labor", config.economy.total_labor, origin, "economy");
    config.economy.rate_of_return =
        number_or(economy, "rate_of_return", config.economy.rate_of_return, origin, "economy");
    config.economy.wage = number_or(economy, "wage", config.economy.wage, origin, "economy");

    if (!root.contains("schedules") || !root.at("schedules").is_array())
        fail(origin, "scenario needs a 'schedules' array (one per sector)");
    for (std::size_t i = 0; i < root.at("schedules").size(); ++i)
        config.schedules.push_back(parse_schedule(root.at("schedules")[i], i, origin));
    if (config.schedules.size() != config.economy.sectors.size())
        fail(origin, "schedules count (" + std::to_string(config.schedules.size()) +
                         ") must match sector count (" +
                         std::to_string(config.economy.sectors.size()) + ")");

    config.years = int_or(root, "years", config.years, origin, "scenario");
    if (config.years < 1) fail(origin, "years must be >= 1");
    config.wage_growth = number_or(root, "wage_growth", 0.06, origin, "scenario");
    config.start_year = int_or(root, "start_year", config.start_year, origin, "scenario");

    config.policies.clear();
    if (root.contains("policies")) {
        if (!root.at("policies").is_array()) fail(origin, "policies must be an array of strings");
        for (const auto& value : root.at("policies")) {
            if (!value.is_string()) fail(origin, "policies must be an array of strings");
            try {
                config.policies.push_back(BasePolicy::parse(value.get<std::string>()));
            } catch (const std::invalid_argument& error) {
                fail(origin, error.what());
            }
        }
    }

    if (root.contains("outputs")) {
        if (!root.at("outputs").is_array()) fail(origin, "outputs must be an array of strings");
        config.outputs.clear();
        for (const auto& value : root.at("outputs")) {
            if (!value.is_string()) fail(origin, "outputs must be an array of strings");
            const std::string output = value.get<std::string>();
            if (output != "records" && output != "growth")
                fail(origin, "unknown output '" + output + "' (expected records or growth)");
            config.outputs.push_back(output);
        }
    }

    try {
        validate(config.economy);
    } catch (const std::domain_error& error) {
        fail(origin, error.what());
    }
    return config;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open scenario file");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str(), path);
}

namespace {

// Two-sector island template shared by all simulation builtins.
ScenarioConfig island_base(double subsistence_a, double omega_b) {
    ScenarioConfig config;
    config.economy.sectors = {
        SectorSpec{"A", 2.0 / 3.0, 0.055, subsistence_a, 1.0, 1.0},
        SectorSpec{"B", 2.0 / 3.0, 0.055, 0.0, omega_b, 1.0},
    };
    config.economy.total_labor = 100000.0;
    config.economy.rate_of_return = 0.055;
    config.economy.wage = 200.0;
    config.years = 98;
    config.wage_growth = 0.06;
    config.start_year = 1900;
    config.policies = {BasePolicy::chained(), BasePolicy::fixed_base(1900)};
    return config;
}

} // namespace

std::vector<std::string> list_builtins() {
    return {"exp1-north", "exp1-south", "exp2-north", "exp2-middle",
            "exp2-south", "kaldor-demo", "curl-demo", "ppp-demo"};
}

bool is_builtin(const std::string& name) {
    const auto names = list_builtins();
    return std::find(names.begin(), names.end(), name) != names.end();
}

ScenarioConfig builtin_scenario(const std::string& name) {
    if (name == "exp1-north") {
        ScenarioConfig config = island_base(1.6711, 1.0);
        config.name = name;
        config.summary = "steady 5%/yr progress in A only; subsistence demand for A";
        config.schedules = {TechSchedule::constant_rate(0.05), TechSchedule::constant_rate(0.0)};
        return config;
    }
    if (name == "exp1-south") {
        ScenarioConfig config = island_base(1.6990, 5.0);
        config.name = name;
        config.summary = "same tech path as exp1-north, demand tilted to the stagnant good";
        config.schedules = {TechSchedule::constant_rate(0.05), TechSchedule::constant_rate(0.0)};
        config.policies.push_back(BasePolicy::lagged_base(15));
        return config;
    }
    if (name == "exp2-north") {
        ScenarioConfig config = island_base(1.6990, 5.0);
        config.name = name;
        config.summary = "A progresses early then slows, B mirrors it; same endpoints as exp2-south";
        config.schedules = {TechSchedule::ramp_down(), TechSchedule::ramp_up()};
        return config;
    }
    if (name == "exp2-middle") {
        ScenarioConfig config = island_base(1.6990, 5.0);
        config.name = name;
        config.summary = "both sectors grow at a constant 3.05%/yr";
        config.schedules = {TechSchedule::constant_rate(0.0305), TechSchedule::constant_rate(0.0305)};
        return config;
    }
    if (name == "exp2-south") {
        ScenarioConfig config = island_base(1.6990, 5.0);
        config.name = name;
        config.summary = "mirror of exp2-north: A slow first, fast late";
        config.schedules = {TechSchedule::ramp_up(), TechSchedule::ramp_down()};
        return config;
    }
    if (is_builtin(name))
        throw std::invalid_argument(name + " is a procedural demo, not a scenario config");
    throw std::invalid_argument("unknown builtin '" + name + "'");
}

namespace {

std::string write_text_artifact(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    return path.string();
}

void write_scenario_charts(const ScenarioConfig& config, const ScenarioOutcome& outcome,
                           const std::filesystem::path& dir, const std::string& stem,
                           std::vector<std::string>& artifacts) {
    if (!outcome.growth.empty()) {
        std::vector<ChartSeries> chart;
        for (const GrowthSeries& series : outcome.growth) {
            ChartSeries one;
            one.label = series.policy.label();
            for (const GrowthEntry& entry : series.entries) {
                one.x.push_back(entry.year);
                one.y.push_back(entry.rate);
            }
            chart.push_back(std::move(one));
        }
        std::ostringstream svg;
        write_line_chart(svg, stem + ": measured real growth", "year", "growth rate", chart);
        artifacts.push_back(write_text_artifact(dir / (stem + "-growth.svg"), svg.str()));
    }

    std::vector<ChartSeries> shares(config.economy.sectors.size());
    for (std::size_t a = 0; a < config.economy.sectors.size(); ++a)
        shares[a].label = config.economy.sectors[a].name;
    for (std::size_t i = 0; i < outcome.run.states.size(); ++i) {
        const int year = outcome.run.start_year + static_cast<int>(i);
        for (std::size_t a = 0; a < shares.size(); ++a) {
            shares[a].x.push_back(year);
            shares[a].y.push_back(outcome.run.states[i].labor[a] / config.economy.total_labor);
        }
    }
    std::ostringstream svg;
    write_line_chart(svg, stem + ": labor shares", "year", "share of total labor", shares);
    artifacts.push_back(write_text_artifact(dir / (stem + "-labor.svg"), svg.str()));
}

} // namespace

ScenarioOutcome run_scenario(const ScenarioConfig& config, const RunOptions& options,
                             std::ostream& log) {
    if (config.years < 1) throw std::domain_error("scenario needs years >= 1");
    if (config.schedules.size() != config.economy.sectors.size())
        throw SectorMismatch("one schedule per sector required");

    ScenarioOutcome outcome;
    outcome.run = simulate(config.economy, config.schedules, config.years, config.wage_growth,
                           config.start_year);

    const std::vector<BasePolicy>& policies =
        options.policy_override ? *options.policy_override : config.policies;
    for (const BasePolicy& policy : policies)
        outcome.growth.push_back(growth_series(outcome.run.series, policy));

    const std::string stem = sanitized_name(config.name);
    log << "scenario " << (config.name.empty() ? stem : config.name) << ": "
        << config.economy.sectors.size() << " sectors, years " << config.start_year << ".."
        << (config.start_year + config.years) << '\n';
    if (!config.summary.empty()) log << "  " << config.summary << '\n';

    for (const GrowthSeries& series : outcome.growth) {
        if (series.entries.empty()) {
            log << "  policy " << series.policy.label() << ": no measurable years\n";
            continue;
        }
        log << "  policy " << series.policy.label() << ": mean growth "
            << format_fixed(geometric_mean_growth(series)) << ", cumulative factor "
            << format_fixed(cumulative_factor(series)) << ", final-year growth "
            << format_fixed(series.entries.back().rate) << '\n';
    }

    const EquilibriumState& last = outcome.run.states.back();
    log << "  final labor shares:";
    for (std::size_t a = 0; a < config.economy.sectors.size(); ++a)
        log << ' ' << config.economy.sectors[a].name << '='
            << format_fixed(last.labor[a] / config.economy.total_labor, 4);
    log << '\n';
    log << "  nominal GDP " << format_compact(outcome.run.series.records.front().nominal_gdp)
        << " -> " << format_compact(outcome.run.series.records.back().nominal_gdp)
        << ", decomposition residual " << format_compact(decomposition_check(outcome.run)) << '\n';

    if (!options.out_dir.empty()) {
        const std::filesystem::path dir(options.out_dir);
        std::filesystem::create_directories(dir);

        auto wants = [&](const char* kind) {
            return std::find(config.outputs.begin(), config.outputs.end(), kind) !=
                   config.outputs.end();
        };

        if (wants("records")) {
            std::ostringstream csv;
            write_records_csv(csv, outcome.run);
            outcome.artifacts.push_back(
                write_text_artifact(dir / (stem + "-records.csv"), csv.str()));
        }
        if (wants("growth") && !outcome.growth.empty()) {
            std::ostringstream csv;
            write_growth_csv(csv, outcome.growth);
            outcome.artifacts.push_back(
                write_text_artifact(dir / (stem + "-growth.csv"), csv.str()));
        }
        if (options.svg) write_scenario_charts(config, outcome, dir, stem, outcome.artifacts);

        for (const std::string& artifact : outcome.artifacts) log << "  wrote " << artifact << '\n';
    }
    return outcome;
}

void run_kaldor_demo(std::ostream& log) {
    StylizedFacts facts;
    log << "long-run aggregates for labor_share=" << format_fixed(facts.labor_share, 4)
        << ", rate_of_return=" << format_compact(facts.rate_of_return)
        << ", mean_depreciation=" << format_compact(facts.mean_depreciation) << '\n';
    log << "  capital/output ratio: " << format_fixed(capital_output_ratio(facts), 4) << '\n';
    log << "  saving_rate  sustainable_growth  investment_interval  growth*interval (tech_growth="
        << format_compact(facts.tech_growth) << ")\n";
    for (double saving : {0.0606, 0.0909, 0.1212}) {
        StylizedFacts row = facts;
        row.saving_rate = saving;
        const double growth = sustainable_growth(row);
        const double interval = investment_interval(row);
        log << "  " << format_fixed(saving, 4) << "       " << format_fixed(growth) << "            "
            << format_fixed(interval) << "             " << format_fixed(growth * interval) << '\n';
    }
    log << "  identity: sustainable_growth * investment_interval = tech_growth for any saving rate\n";
}

void run_curl_demo(std::ostream& log) {
    const ScenarioConfig scenario = builtin_scenario("exp2-north");
    const EconomyConfig& economy = scenario.economy;
    const std::vector<double> point{2.0, 5.0};

    // Equal-exponent closed form of the asymmetry at this tech point; the
    // subsistence share rescales as 1/T_A away from the calibration point.
    const double share_a =
        subsistence_labor_share(economy.sectors[0], economy.rate_of_return) / point[0];
    const double analytic = 5.0 * share_a / (6.0 * point[0] * point[1]);

    log << "growth-field asymmetry on the exp2 economy at T=(2,5)\n";
    log << "  analytic value: " << format_compact(analytic) << '\n';
    double previous_error = 0.0;
    for (double step : {0.02, 0.01, 0.005}) {
        const double estimate = curl_asymmetry(economy, point, 0, 1, step);
        const double error = std::fabs(estimate - analytic);
        log << "  h=" << format_compact(step) << ": estimate " << format_compact(estimate)
            << ", abs error " << format_compact(error);
        if (previous_error > 0.0)
            log << ", error ratio " << format_fixed(previous_error / error, 2);
        log << '\n';
        previous_error = error;
    }

    EconomyConfig symmetric = economy;
    symmetric.sectors[0].subsistence = 0.0;
    symmetric.sectors[1].omega = 1.0;
    log << "  symmetric economy (no subsistence, equal weights): "
        << format_compact(curl_asymmetry(symmetric, point, 0, 1, 0.01))
        << " (exactly zero up to rounding)\n";
}

void run_ppp_demo(const RunOptions& options, std::ostream& log) {
    const ScenarioConfig north_cfg = builtin_scenario("exp2-north");
    const ScenarioConfig middle_cfg = builtin_scenario("exp2-middle");
    const ScenarioConfig south_cfg = builtin_scenario("exp2-south");

    const SimulationRun north = simulate(north_cfg.economy, north_cfg.schedules, north_cfg.years,
                                         north_cfg.wage_growth, north_cfg.start_year);
    const SimulationRun middle = simulate(middle_cfg.economy, middle_cfg.schedules,
                                          middle_cfg.years, middle_cfg.wage_growth,
                                          middle_cfg.start_year);
    const SimulationRun south = simulate(south_cfg.economy, south_cfg.schedules, south_cfg.years,
                                         south_cfg.wage_growth, south_cfg.start_year);

    // One observer prices both economies with the middle island's final-year prices.
    const std::vector<std::string>& sectors = middle.series.sectors;
    const std::vector<double>& reference = middle.series.records.back().prices;
    const int first = north.series.first_year();
    const int last = north.series.last_year();

    const CommonPriceComparison from_start =
        common_price_comparison(north.series, south.series, sectors, reference, first);
    const CommonPriceComparison from_end =
        common_price_comparison(north.series, south.series, sectors, reference, last);

    log << "north vs south GDP at the middle island's final-year prices\n";
    log << "  measured ratio: " << format_fixed(from_start.entries.front().ratio, 4) << " in "
        << first << ", " << format_fixed(from_start.entries.back().ratio, 4) << " in " << last
        << '\n';
    log << "  chained extrapolation anchored in " << first << ": predicts "
        << format_fixed(from_start.entries.back().extrapolated, 4) << " by " << last << " (gap "
        << format_fixed(from_start.entries.back().gap, 4) << ")\n";
    log << "  chained extrapolation anchored in " << last << ": predicts "
        << format_fixed(from_end.entries.front().extrapolated, 4) << " back in " << first
        << " (gap " << format_fixed(from_end.entries.front().gap, 4) << ")\n";
    log << "  the two price paths share endpoints, so the drift is pure measurement\n";

    if (!options.out_dir.empty()) {
        const std::filesystem::path dir(options.out_dir);
        std::filesystem::create_directories(dir);
        std::ostringstream csv;
        csv << "year,gdp_north,gdp_south,ratio,extrap_from_start,gap_from_start,extrap_from_end,"
               "gap_from_end\n";
        for (std::size_t i = 0; i < from_start.entries.size(); ++i) {
            const CommonPriceEntry& fs = from_start.entries[i];
            const CommonPriceEntry& fe = from_end.entries[i];
            csv << fs.year << ',' << format_double(fs.gdp_left) << ','
                << format_double(fs.gdp_right) << ',' << format_double(fs.ratio) << ','
                << format_double(fs.extrapolated) << ',' << format_double(fs.gap) << ','
                << format_double(fe.extrapolated) << ',' << format_double(fe.gap) << '\n';
        }
        const std::string path = write_text_artifact(dir / "ppp-demo.csv", csv.str());
        log << "  wrote " << path << '\n';

        if (options.svg) {
            ChartSeries measured{"measured ratio", {}, {}};
            ChartSeries forward{"extrapolated from " + std::to_string(first), {}, {}};
            ChartSeries backward{"extrapolated from " + std::to_string(last), {}, {}};
            for (std::size_t i = 0; i < from_start.entries.size(); ++i) {
                measured.x.push_back(from_start.entries[i].year);
                measured.y.push_back(from_start.entries[i].ratio);
                forward.x.push_back(from_start.entries[i].year);
                forward.y.push_back(from_start.entries[i].extrapolated);
                backward.x.push_back(from_end.entries[i].year);
                backward.y.push_back(from_end.entries[i].extrapolated);
            }
            const std::vector<ChartSeries> chart{measured, forward, backward};
            std::ostringstream svg;
            write_line_chart(svg, "ppp-demo: cross-economy GDP ratio", "year", "north/south ratio",
                             chart);
            const std::string svg_path = write_text_artifact(dir / "ppp-demo.svg", svg.str());
            log << "  wrote " << svg_path << '\n';
        }
    }
}

void run_builtin(const std::string& name, const RunOptions& options, std::ostream& log) {
    if (name == "kaldor-demo") {
        run_kaldor_demo(log);
        return;
    }
    if (name == "curl-demo") {
        run_curl_demo(log);
        return;
    }
    if (name == "ppp-demo") {
        run_ppp_demo(options, log);
        return;
    }
    run_scenario(builtin_scenario(name), options, log);
}

} // namespace gdplab
