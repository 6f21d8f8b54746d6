#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gdplab/measurement.hpp"
#include "gdplab/scenario.hpp"

namespace {

std::optional<std::vector<gdplab::BasePolicy>> parse_policies(
    const std::vector<std::string>& labels) {
    if (labels.empty()) return std::nullopt;
    std::vector<gdplab::BasePolicy> policies;
    for (const std::string& label : labels)
        policies.push_back(gdplab::BasePolicy::parse(label));
    return policies;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toy-economy scenario runner and GDP measurement lab"};
    app.require_subcommand(1);

    std::string out_dir;
    bool svg = false;
    std::vector<std::string> policy_labels;

    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_dir, "directory for CSV/SVG artifacts");
        cmd->add_flag("--svg", svg, "also write SVG charts (needs --out)");
        cmd->add_option("--policies", policy_labels,
                        "override measurement policies (chained, fixed:YEAR, lagged:LAG)")
            ->delimiter(',');
    };

    std::string config_path;
    CLI::App* run = app.add_subcommand("run", "run a scenario from a JSON config file");
    run->add_option("config", config_path, "path to scenario JSON")->required();
    add_output_flags(run);

    std::string builtin_name;
    CLI::App* builtin = app.add_subcommand("builtin", "run a named built-in experiment");
    builtin->add_option("name", builtin_name, "builtin name (see 'list')")->required();
    add_output_flags(builtin);

    CLI::App* list = app.add_subcommand("list", "list built-in experiments");

    CLI11_PARSE(app, argc, argv);

    try {
        gdplab::RunOptions options;
        options.out_dir = out_dir;
        options.svg = svg;
        options.policy_override = parse_policies(policy_labels);

        if (list->parsed()) {
            for (const std::string& name : gdplab::list_builtins()) std::cout << name << '\n';
            return 0;
        }
        if (run->parsed()) {
            gdplab::run_scenario(gdplab::load_scenario(config_path), options, std::cout);
            return 0;
        }
        gdplab::run_builtin(builtin_name, options, std::cout);
        return 0;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    }
}
