#pragma once

#include <cstdint>
#include <string>

#include "sqwalk/character.hpp"
#include "sqwalk/oracle.hpp"
#include "sqwalk/walk.hpp"
#include "sqwalk/zoo.hpp"

#include "json.hpp"

// Report-producing pipelines behind the CLI subcommands. Each run_* returns
// the JSON document; render() turns a document into the requested format.

namespace sqwalk::app {

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& name); // throws Error(Usage)

// Everything the analysis pipeline derives from one group.
struct Analysis {
    BuiltGroup group;
    ClassPartition classes;
    SquaringProfile profile;
    CharacterTable table;
    ClassProbability step;
    WalkSpectrum spectrum;
    AsymptoticRate rate;
    ConvergenceReport convergence;
    G1Report g1;
};

Analysis analyze_group(const ZooSpec& spec, int max_order = kDefaultMaxOrder,
                       const CharacterOptions& copts = {});

struct AnalyzeOptions {
    ZooSpec spec;
    int n_max = 20;
    bool with_oracle = false;
    int max_order = kDefaultMaxOrder;
    uint64_t seed = CharacterOptions{}.seed;
};

struct SimulateOptions {
    ZooSpec spec;
    int n = 10;
    uint64_t chains = 100000;
    uint64_t seed = 0;
    int max_order = kDefaultMaxOrder;
};

struct TableOptions {
    ZooSpec spec;
    int max_order = kDefaultMaxOrder;
    uint64_t seed = CharacterOptions{}.seed;
};

nlohmann::ordered_json run_analyze(const AnalyzeOptions& options);
nlohmann::ordered_json run_simulate(const SimulateOptions& options);
nlohmann::ordered_json run_table(const TableOptions& options);

enum class ReportKind { Analyze, Simulate, Table };

// fixed_decimal switches CSV/text numbers from %.15g to plain decimals.
std::string render(const nlohmann::ordered_json& doc, ReportKind kind, Format format,
                   bool fixed_decimal = false);

} // namespace sqwalk::app
