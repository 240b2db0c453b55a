// Command-line front end: analyze / simulate / table.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "sqwalk/app.hpp"
#include "sqwalk/errors.hpp"

namespace {

struct GroupChoice {
    std::string group;
    std::string generators;
};

sqwalk::ZooSpec resolve_spec(const GroupChoice& choice) {
    if (!choice.generators.empty()) {
        if (!choice.group.empty())
            throw sqwalk::Error(sqwalk::ErrorKind::Usage,
                                "pass either --group or --generators, not both");
        return sqwalk::custom_spec(choice.generators);
    }
    if (choice.group.empty())
        throw sqwalk::Error(sqwalk::ErrorKind::Usage, "one of --group or --generators is required");
    return sqwalk::parse_group_spec(choice.group);
}

void add_group_options(CLI::App* cmd, GroupChoice& choice) {
    cmd->add_option("-g,--group", choice.group,
                    "group family, e.g. S3, C7, D4, A5, Q8, C2xC4, dihedral:5");
    cmd->add_option("--generators", choice.generators,
                    "custom generators in cycle notation, e.g. \"(0 1)(2 3), (0 1 2)\"");
}

void add_output_options(CLI::App* cmd, std::string& format, bool& fixed_decimal) {
    cmd->add_option("--format", format, "output format: json, csv or text")
        ->capture_default_str();
    cmd->add_flag("--fixed", fixed_decimal, "plain decimal output in csv/text (no exponents)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App cli{"exact and simulated mixing analysis of the repeated-square random walk "
                 "on finite permutation groups"};
    cli.require_subcommand(1);

    std::string format = "text";
    bool fixed_decimal = false;

    GroupChoice analyze_group, simulate_group, table_group;

    auto* analyze = cli.add_subcommand("analyze", "character table, mixing profile, convergence");
    add_group_options(analyze, analyze_group);
    add_output_options(analyze, format, fixed_decimal);
    int n_max = 20;
    bool with_oracle = false;
    int analyze_max_order = sqwalk::kDefaultMaxOrder;
    uint64_t analyze_seed = sqwalk::CharacterOptions{}.seed;
    analyze->add_option("--n-max,--n", n_max, "largest step count in the profile")
        ->capture_default_str();
    analyze->add_flag("--oracle", with_oracle, "add a brute-force convolution column");
    analyze->add_option("--max-order", analyze_max_order, "group order cap")
        ->capture_default_str();
    analyze->add_option("--seed", analyze_seed, "character solver seed")->capture_default_str();

    auto* simulate = cli.add_subcommand("simulate", "Monte Carlo walk with exact references");
    add_group_options(simulate, simulate_group);
    add_output_options(simulate, format, fixed_decimal);
    int sim_n = 10;
    uint64_t chains = 100000;
    uint64_t sim_seed = 0;
    int sim_max_order = sqwalk::kDefaultMaxOrder;
    simulate->add_option("--n", sim_n, "walk length")->capture_default_str();
    simulate->add_option("--chains", chains, "number of independent chains")
        ->capture_default_str();
    simulate->add_option("--seed", sim_seed, "sampler seed")->capture_default_str();
    simulate->add_option("--max-order", sim_max_order, "group order cap")->capture_default_str();

    auto* table = cli.add_subcommand("table", "character table with indicator classification");
    add_group_options(table, table_group);
    add_output_options(table, format, fixed_decimal);
    int table_max_order = sqwalk::kDefaultMaxOrder;
    uint64_t table_seed = sqwalk::CharacterOptions{}.seed;
    table->add_option("--max-order", table_max_order, "group order cap")->capture_default_str();
    table->add_option("--seed", table_seed, "character solver seed")->capture_default_str();

    try {
        cli.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return cli.exit(e);
    } catch (const CLI::ParseError& e) {
        cli.exit(e);
        return 2;
    }

    try {
        sqwalk::app::Format fmt = sqwalk::app::parse_format(format);
        nlohmann::ordered_json doc;
        sqwalk::app::ReportKind kind;
        if (analyze->parsed()) {
            sqwalk::app::AnalyzeOptions options;
            options.spec = resolve_spec(analyze_group);
            options.n_max = n_max;
            options.with_oracle = with_oracle;
            options.max_order = analyze_max_order;
            options.seed = analyze_seed;
            doc = sqwalk::app::run_analyze(options);
            kind = sqwalk::app::ReportKind::Analyze;
        } else if (simulate->parsed()) {
            sqwalk::app::SimulateOptions options;
            options.spec = resolve_spec(simulate_group);
            options.n = sim_n;
            options.chains = chains;
            options.seed = sim_seed;
            options.max_order = sim_max_order;
            doc = sqwalk::app::run_simulate(options);
            kind = sqwalk::app::ReportKind::Simulate;
        } else {
            sqwalk::app::TableOptions options;
            options.spec = resolve_spec(table_group);
            options.max_order = table_max_order;
            options.seed = table_seed;
            doc = sqwalk::app::run_table(options);
            kind = sqwalk::app::ReportKind::Table;
        }
        std::cout << sqwalk::app::render(doc, kind, fmt, fixed_decimal);
        return 0;
    } catch (const sqwalk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
