#include "sqwalk/app.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "sqwalk/errors.hpp"
#include "sqwalk/kernels.hpp"

namespace sqwalk::app {

using nlohmann::ordered_json;

Format parse_format(const std::string& name) {
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    if (name == "text")
        return Format::Text;
    throw Error(ErrorKind::Usage, "unknown format '" + name + "' (expected json, csv or text)");
}

Analysis analyze_group(const ZooSpec& spec, int max_order, const CharacterOptions& copts) {
    Analysis a;
    a.group = build_group(spec, max_order);
    a.classes = conjugacy_classes(a.group.table);
    a.profile = squaring_profile(a.group.table);
    a.table = character_table(a.group.table, a.classes, copts);
    a.step = square_walk_probability(a.profile, a.classes);
    a.spectrum = square_walk_spectrum(a.profile, a.classes, a.table);
    a.rate = asymptotic_rate(a.table);
    a.convergence = convergence_report(a.group.table, a.classes, a.table, a.profile);
    a.g1 = converges_on_g1(a.group.table, a.profile);
    return a;
}

namespace {

ordered_json group_json(const Analysis& a) {
    ordered_json g;
    g["name"] = a.group.name;
    g["order"] = a.group.table.order;
    g["degree"] = a.group.table.degree();
    g["num_classes"] = a.classes.num_classes;
    g["class_sizes"] = a.classes.class_sizes;
    auto reps = ordered_json::array();
    for (int c = 0; c < a.classes.num_classes; ++c)
        reps.push_back(a.group.table.elements[a.classes.representatives[c]].cycle_string());
    g["class_representatives"] = std::move(reps);
    auto gens = ordered_json::array();
    for (int idx : a.group.table.generator_indices)
        gens.push_back(a.group.table.elements[idx].cycle_string());
    g["generators"] = std::move(gens);
    return g;
}

ordered_json summary_json(const Analysis& a) {
    ordered_json s;
    s["converges"] = !a.convergence.predicate_a;
    s["exactly_uniform"] = a.rate.exactly_uniform;
    if (a.convergence.min_real_degree) {
        s["d"] = *a.convergence.min_real_degree;
        s["t"] = a.convergence.multiplicity;
    } else {
        s["d"] = nullptr;
        s["t"] = nullptr;
    }
    ordered_json lr;
    if (a.rate.exactly_uniform) {
        lr["kind"] = "exactly_uniform";
    } else if (!a.rate.converges) {
        lr["kind"] = "limit";
        lr["value"] = a.rate.limit;
    } else {
        lr["kind"] = "rate";
        lr["leading_coefficient"] = a.rate.leading_coefficient;
        lr["base"] = a.rate.base;
    }
    s["limit_or_rate"] = std::move(lr);
    s["g1_order"] = a.convergence.g1_order;
    s["predicates"] = {{"a", a.convergence.predicate_a},
                       {"b", a.convergence.predicate_b},
                       {"c", a.convergence.predicate_c},
                       {"d", a.convergence.predicate_d}};
    return s;
}

} // namespace

ordered_json run_analyze(const AnalyzeOptions& options) {
    if (options.n_max < 1)
        throw Error(ErrorKind::Usage, "--n-max must be at least 1");
    CharacterOptions copts;
    copts.seed = options.seed;
    Analysis a = analyze_group(options.spec, options.max_order, copts);

    ordered_json doc;
    doc["command"] = "analyze";
    doc["group"] = group_json(a);
    doc["character_summary"] = {{"degrees", a.table.degrees},
                                {"fs_indicators", a.table.fs_indicators},
                                {"real_nonprincipal", real_nonprincipal(a.table).size()},
                                {"linear_real", linear_real(a.table).size()}};
    doc["walk"] = {{"support_size", a.profile.support.size()},
                   {"step_per_class", a.step.per_class},
                   {"identity_in_support", a.g1.identity_in_support},
                   {"converges_on_g1", a.g1.converges},
                   {"g1_order", a.g1.g1_order}};

    auto profile = ordered_json::array();
    oracle::DenseProbability step_dense, power;
    if (options.with_oracle) {
        step_dense = oracle::dense_from_class(a.step, a.classes);
        power = step_dense;
    }
    for (int n = 1; n <= options.n_max; ++n) {
        ordered_json row;
        row["n"] = n;
        row["exact_distance"] = exact_l2_distance(a.spectrum, a.group.table.order, n);
        row["theorem1_distance"] = theorem1_distance(a.table, n);
        if (options.with_oracle) {
            row["oracle_distance"] = oracle::l2_distance_to_uniform(power);
            if (n < options.n_max)
                power = oracle::convolve(power, step_dense, a.group.table);
        }
        profile.push_back(std::move(row));
    }
    doc["profile"] = std::move(profile);
    doc["summary"] = summary_json(a);
    return doc;
}

ordered_json run_simulate(const SimulateOptions& options) {
    if (options.n < 1)
        throw Error(ErrorKind::Usage, "--n must be at least 1");
    if (options.chains < 1)
        throw Error(ErrorKind::Usage, "--chains must be at least 1");
    Analysis a = analyze_group(options.spec, options.max_order);

    oracle::DenseProbability step = oracle::dense_from_class(a.step, a.classes);
    auto counts = oracle::sample_walk_counts(step, a.group.table, options.n, options.chains,
                                             options.seed);

    double exact = theorem1_distance(a.table, options.n);
    auto stats = oracle::empirical_l2_to_uniform(counts, options.chains, exact);

    oracle::DenseProbability empirical;
    empirical.p.resize(a.group.table.order);
    for (int e = 0; e < a.group.table.order; ++e)
        empirical.p[e] = static_cast<double>(counts[e]) / static_cast<double>(options.chains);

    ordered_json doc;
    doc["command"] = "simulate";
    doc["group"] = group_json(a);
    doc["n"] = options.n;
    doc["chains"] = options.chains;
    doc["seed"] = options.seed;
    doc["rng"] = kernels::kWalkRngId;
    doc["kernel_backend"] = kernels::name(kernels::active());
    doc["empirical"] = {{"l2_distance", stats.plug_in},
                        {"l2_distance_debiased", stats.debiased},
                        {"tv_distance", oracle::tv_distance_to_uniform(empirical)},
                        {"std_error", stats.std_error}};
    ordered_json exact_block;
    exact_block["l2_distance"] = exact;
    exact_block["exactly_uniform"] = a.rate.exactly_uniform;
    if (!a.rate.exactly_uniform && !a.rate.converges)
        exact_block["limit"] = a.rate.limit;
    else
        exact_block["limit"] = nullptr;
    doc["exact"] = std::move(exact_block);
    doc["endpoint_counts"] = counts;
    doc["empirical_distribution"] = empirical.p;
    return doc;
}

ordered_json run_table(const TableOptions& options) {
    CharacterOptions copts;
    copts.seed = options.seed;
    Analysis a = analyze_group(options.spec, options.max_order, copts);

    ordered_json doc;
    doc["command"] = "table";
    doc["group"] = group_json(a);
    doc["character_table"] = character_table_json(a.table, a.classes, a.group.table);
    doc["real_nonprincipal"] = real_nonprincipal(a.table);
    doc["linear_real"] = linear_real(a.table);
    return doc;
}

namespace {

std::string fmt_number(double v, bool fixed) {
    char buf[64];
    if (fixed)
        std::snprintf(buf, sizeof buf, "%.18f", v);
    else
        std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string fmt_json_number(const ordered_json& v, bool fixed) {
    if (v.is_null())
        return "";
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    if (v.is_number_unsigned())
        return std::to_string(v.get<unsigned long long>());
    if (v.is_number_float())
        return fmt_number(v.get<double>(), fixed);
    return v.dump();
}

std::string csv_analyze(const ordered_json& doc, bool fixed) {
    std::ostringstream out;
    bool with_oracle = !doc["profile"].empty() && doc["profile"][0].contains("oracle_distance");
    out << "n,exact_distance,theorem1_distance";
    if (with_oracle)
        out << ",oracle_distance";
    out << "\n";
    for (const auto& row : doc["profile"]) {
        out << row["n"].get<int>() << ',' << fmt_json_number(row["exact_distance"], fixed) << ','
            << fmt_json_number(row["theorem1_distance"], fixed);
        if (with_oracle)
            out << ',' << fmt_json_number(row["oracle_distance"], fixed);
        out << "\n";
    }
    const auto& s = doc["summary"];
    out << "# group = " << doc["group"]["name"].get<std::string>() << "\n";
    out << "# converges = " << fmt_json_number(s["converges"], fixed) << "\n";
    out << "# exactly_uniform = " << fmt_json_number(s["exactly_uniform"], fixed) << "\n";
    out << "# d = " << fmt_json_number(s["d"], fixed) << "\n";
    out << "# t = " << fmt_json_number(s["t"], fixed) << "\n";
    const auto& lr = s["limit_or_rate"];
    out << "# limit_or_rate_kind = " << lr["kind"].get<std::string>() << "\n";
    if (lr.contains("value"))
        out << "# limit = " << fmt_json_number(lr["value"], fixed) << "\n";
    if (lr.contains("leading_coefficient")) {
        out << "# leading_coefficient = " << fmt_json_number(lr["leading_coefficient"], fixed)
            << "\n";
        out << "# base = " << fmt_json_number(lr["base"], fixed) << "\n";
    }
    out << "# g1_order = " << fmt_json_number(s["g1_order"], fixed) << "\n";
    out << "# predicates = a:" << fmt_json_number(s["predicates"]["a"], fixed)
        << " b:" << fmt_json_number(s["predicates"]["b"], fixed)
        << " c:" << fmt_json_number(s["predicates"]["c"], fixed)
        << " d:" << fmt_json_number(s["predicates"]["d"], fixed) << "\n";
    return out.str();
}

std::string text_analyze(const ordered_json& doc, bool fixed) {
    std::ostringstream out;
    const auto& g = doc["group"];
    out << "group       : " << g["name"].get<std::string>() << " (order " << g["order"]
        << ", degree " << g["degree"] << ")\n";
    out << "classes     : " << g["num_classes"] << " with sizes [";
    for (std::size_t i = 0; i < g["class_sizes"].size(); ++i)
        out << (i ? ", " : "") << g["class_sizes"][i];
    out << "]\n";
    const auto& cs = doc["character_summary"];
    out << "characters  : degrees [";
    for (std::size_t i = 0; i < cs["degrees"].size(); ++i)
        out << (i ? ", " : "") << cs["degrees"][i];
    out << "], indicators [";
    for (std::size_t i = 0; i < cs["fs_indicators"].size(); ++i)
        out << (i ? ", " : "") << cs["fs_indicators"][i];
    out << "]\n";
    const auto& w = doc["walk"];
    out << "walk        : support size " << w["support_size"] << ", g1 order " << w["g1_order"]
        << ", converges on g1 = " << fmt_json_number(w["converges_on_g1"], fixed) << "\n\n";

    bool with_oracle = !doc["profile"].empty() && doc["profile"][0].contains("oracle_distance");
    out << std::left << std::setw(5) << "n" << std::setw(24) << "exact_distance" << std::setw(24)
        << "theorem1_distance";
    if (with_oracle)
        out << std::setw(24) << "oracle_distance";
    out << "\n";
    for (const auto& row : doc["profile"]) {
        out << std::left << std::setw(5) << row["n"].get<int>() << std::setw(24)
            << fmt_json_number(row["exact_distance"], fixed) << std::setw(24)
            << fmt_json_number(row["theorem1_distance"], fixed);
        if (with_oracle)
            out << std::setw(24) << fmt_json_number(row["oracle_distance"], fixed);
        out << "\n";
    }

    const auto& s = doc["summary"];
    out << "\nsummary:\n";
    out << "  converges        = " << fmt_json_number(s["converges"], fixed) << "\n";
    out << "  exactly_uniform  = " << fmt_json_number(s["exactly_uniform"], fixed) << "\n";
    out << "  d, t             = " << fmt_json_number(s["d"], fixed) << ", "
        << fmt_json_number(s["t"], fixed) << "\n";
    const auto& lr = s["limit_or_rate"];
    if (lr.contains("value"))
        out << "  limit            = " << fmt_json_number(lr["value"], fixed) << "\n";
    if (lr.contains("leading_coefficient"))
        out << "  rate             = " << fmt_json_number(lr["leading_coefficient"], fixed)
            << " * " << fmt_json_number(lr["base"], fixed) << "^n\n";
    out << "  g1_order         = " << fmt_json_number(s["g1_order"], fixed) << "\n";
    out << "  predicates       = a:" << fmt_json_number(s["predicates"]["a"], fixed)
        << " b:" << fmt_json_number(s["predicates"]["b"], fixed)
        << " c:" << fmt_json_number(s["predicates"]["c"], fixed)
        << " d:" << fmt_json_number(s["predicates"]["d"], fixed) << "\n";
    return out.str();
}

std::string csv_simulate(const ordered_json& doc, bool fixed) {
    std::ostringstream out;
    out << "metric,value\n";
    out << "group," << doc["group"]["name"].get<std::string>() << "\n";
    out << "n," << doc["n"] << "\n";
    out << "chains," << doc["chains"] << "\n";
    out << "seed," << doc["seed"] << "\n";
    out << "empirical_l2," << fmt_json_number(doc["empirical"]["l2_distance"], fixed) << "\n";
    out << "empirical_l2_debiased,"
        << fmt_json_number(doc["empirical"]["l2_distance_debiased"], fixed) << "\n";
    out << "empirical_tv," << fmt_json_number(doc["empirical"]["tv_distance"], fixed) << "\n";
    out << "std_error," << fmt_json_number(doc["empirical"]["std_error"], fixed) << "\n";
    out << "exact_l2," << fmt_json_number(doc["exact"]["l2_distance"], fixed) << "\n";
    out << "exact_limit," << fmt_json_number(doc["exact"]["limit"], fixed) << "\n";
    return out.str();
}

std::string text_simulate(const ordered_json& doc, bool fixed) {
    std::ostringstream out;
    const auto& g = doc["group"];
    out << "group    : " << g["name"].get<std::string>() << " (order " << g["order"] << ")\n";
    out << "walk     : n = " << doc["n"] << ", chains = " << doc["chains"] << ", seed = "
        << doc["seed"] << "\n";
    out << "rng      : " << doc["rng"].get<std::string>() << "\n";
    out << "backend  : " << doc["kernel_backend"].get<std::string>() << "\n\n";
    out << "empirical l2          = " << fmt_json_number(doc["empirical"]["l2_distance"], fixed)
        << "\n";
    out << "empirical l2 debiased = "
        << fmt_json_number(doc["empirical"]["l2_distance_debiased"], fixed) << "\n";
    out << "empirical tv          = " << fmt_json_number(doc["empirical"]["tv_distance"], fixed)
        << "\n";
    out << "std error             = " << fmt_json_number(doc["empirical"]["std_error"], fixed)
        << "\n";
    out << "exact l2              = " << fmt_json_number(doc["exact"]["l2_distance"], fixed)
        << "\n";
    if (!doc["exact"]["limit"].is_null())
        out << "exact limit           = " << fmt_json_number(doc["exact"]["limit"], fixed) << "\n";
    return out.str();
}

std::string csv_table(const ordered_json& doc, bool fixed) {
    std::ostringstream out;
    const auto& tbl = doc["character_table"];
    out << "# classes:";
    for (const auto& cls : tbl["classes"])
        out << " size=" << cls["size"] << " rep=" << cls["representative"].get<std::string>()
            << ";";
    out << "\n";
    int s = tbl["num_classes"].get<int>();
    out << "character,degree,fs_indicator";
    for (int c = 0; c < s; ++c)
        out << ",re" << c << ",im" << c;
    out << "\n";
    for (int a = 0; a < s; ++a) {
        out << a << ',' << tbl["degrees"][a] << ',' << tbl["fs_indicators"][a];
        for (int c = 0; c < s; ++c) {
            out << ',' << fmt_json_number(tbl["rows"][a][c][0], fixed) << ','
                << fmt_json_number(tbl["rows"][a][c][1], fixed);
        }
        out << "\n";
    }
    return out.str();
}

std::string format_complex(double re, double im, bool fixed) {
    if (im == 0.0)
        return fmt_number(re, fixed);
    std::string s = fmt_number(re, fixed);
    s += im < 0 ? " - " : " + ";
    s += fmt_number(std::abs(im), fixed);
    s += "i";
    return s;
}

std::string text_table(const ordered_json& doc, bool fixed) {
    std::ostringstream out;
    const auto& g = doc["group"];
    const auto& tbl = doc["character_table"];
    out << "group  : " << g["name"].get<std::string>() << " (order " << g["order"] << ")\n";
    out << "classes:";
    for (const auto& cls : tbl["classes"])
        out << "  " << cls["representative"].get<std::string>() << " (size " << cls["size"]
            << ")";
    out << "\n\n";
    int s = tbl["num_classes"].get<int>();
    for (int a = 0; a < s; ++a) {
        out << "chi_" << a << " (degree " << tbl["degrees"][a] << ", indicator "
            << tbl["fs_indicators"][a] << "):";
        for (int c = 0; c < s; ++c) {
            double re = tbl["rows"][a][c][0].get<double>();
            double im = tbl["rows"][a][c][1].get<double>();
            out << "  " << format_complex(re, im, fixed);
        }
        out << "\n";
    }
    out << "\nreal nonprincipal rows: [";
    for (std::size_t i = 0; i < doc["real_nonprincipal"].size(); ++i)
        out << (i ? ", " : "") << doc["real_nonprincipal"][i];
    out << "]\nlinear real rows      : [";
    for (std::size_t i = 0; i < doc["linear_real"].size(); ++i)
        out << (i ? ", " : "") << doc["linear_real"][i];
    out << "]\n";
    return out.str();
}

} // namespace

std::string render(const ordered_json& doc, ReportKind kind, Format format, bool fixed_decimal) {
    if (format == Format::Json)
        return doc.dump(2) + "\n";
    switch (kind) {
    case ReportKind::Analyze:
        return format == Format::Csv ? csv_analyze(doc, fixed_decimal)
                                     : text_analyze(doc, fixed_decimal);
    case ReportKind::Simulate:
        return format == Format::Csv ? csv_simulate(doc, fixed_decimal)
                                     : text_simulate(doc, fixed_decimal);
    case ReportKind::Table:
        return format == Format::Csv ? csv_table(doc, fixed_decimal)
                                     : text_table(doc, fixed_decimal);
    }
    throw Error(ErrorKind::Usage, "unknown report kind");
}

} // namespace sqwalk::app
