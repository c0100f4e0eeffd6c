#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "alex3/census.hpp"
#include "alex3/decomposition.hpp"
#include "alex3/equivalence.hpp"
#include "alex3/errors.hpp"
#include "alex3/homology/models.hpp"
#include "alex3/invariants.hpp"

namespace {

// positional tuples, or one per line on stdin for batch use
std::vector<std::string> gather_inputs(const std::vector<std::string>& args) {
    if (!args.empty())
        return args;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line))
        if (!line.empty())
            lines.push_back(line);
    return lines;
}

int run_validate(const std::vector<std::string>& args, bool json) {
    bool all_ok = true;
    for (const std::string& raw : gather_inputs(args)) {
        alex3::InvariantTuple t = alex3::parse_tuple(raw);
        alex3::ValidationReport report = alex3::validate(t);
        all_ok = all_ok && report.ok;
        if (json) {
            std::cout << alex3::report_to_json(report).dump() << "\n";
        } else if (report.ok) {
            std::cout << "ok\n";
        } else {
            std::string line = "invalid:";
            for (const alex3::Violation& v : report.violations)
                line += " [" + v.rule + "] " + v.message + ";";
            line.pop_back();
            std::cout << line << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

int run_canon(const std::vector<std::string>& args, const alex3::EquivalenceOptions& opts,
              bool json) {
    for (const std::string& raw : gather_inputs(args)) {
        alex3::CanonicalTuple canon = alex3::canonical_form(alex3::parse_tuple(raw), opts);
        if (json)
            std::cout << alex3::tuple_to_json(canon.inner).dump() << "\n";
        else
            std::cout << alex3::serialize_tuple(canon.inner) << "\n";
    }
    return 0;
}

int run_eq(const std::string& a, const std::string& b, const alex3::EquivalenceOptions& opts,
           bool json) {
    bool eq = alex3::are_equivalent(alex3::parse_tuple(a), alex3::parse_tuple(b), opts);
    if (json)
        std::cout << nlohmann::json{{"equivalent", eq}}.dump() << "\n";
    else
        std::cout << (eq ? "equivalent" : "inequivalent") << "\n";
    return eq ? 0 : 1;
}

int run_decompose(const std::vector<std::string>& args, const alex3::EquivalenceOptions& opts) {
    for (const std::string& raw : gather_inputs(args)) {
        alex3::Decomposition d = alex3::decompose(alex3::parse_tuple(raw));
        std::cout << alex3::decomposition_to_json(d, opts).dump() << "\n";
    }
    return 0;
}

int run_count(std::int64_t r, std::int64_t s) {
    std::cout << alex3::count_report_to_json(alex3::compare_counts(r, s)).dump() << "\n";
    return 0;
}

int run_census(const alex3::ComplexityBound& bound, const alex3::EquivalenceOptions& opts,
               bool json) {
    for (const alex3::CanonicalTuple& canon : alex3::enumerate_census(bound, opts)) {
        if (json) {
            nlohmann::json line = alex3::tuple_to_json(canon.inner);
            line["canonical"] = true;
            std::cout << line.dump() << "\n";
        } else {
            std::cout << alex3::serialize_tuple(canon.inner) << "\n";
        }
    }
    return 0;
}

int run_homology(const std::string& expr) {
    std::optional<alex3::SimplicialComplex> model = alex3::model_by_name(expr);
    if (!model) {
        std::cerr << "unknown model: " << expr << "\n";
        return 2;
    }
    nlohmann::json out;
    out["H"] = nlohmann::json::array();
    for (const alex3::AbelianGroupDecomp& g : alex3::homology(*model))
        out["H"].push_back({{"rank", g.rank}, {"torsion", g.torsion}});
    out["singular_vertices"] = model->dimension == 3
                                   ? nlohmann::json(alex3::singular_vertex_count(*model))
                                   : nlohmann::json(nullptr);
    std::cout << out.dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant calculus for circle actions on closed 3d Alexandrov spaces"};
    app.require_subcommand(1);

    bool oriented = false;
    bool json = false;
    app.add_flag("--oriented", oriented, "fix the orientation (disables the reversal move)");
    app.add_flag("--json", json, "JSON output where text is the default");

    std::vector<std::string> validate_args;
    CLI::App* cmd_validate = app.add_subcommand("validate", "check tuples against the legality rules");
    cmd_validate->add_option("tuple", validate_args, "tuples; stdin (one per line) when omitted");

    std::vector<std::string> canon_args;
    CLI::App* cmd_canon = app.add_subcommand("canon", "print the canonical form of each tuple");
    cmd_canon->add_option("tuple", canon_args, "tuples; stdin (one per line) when omitted");

    std::string eq_a;
    std::string eq_b;
    CLI::App* cmd_eq = app.add_subcommand("eq", "decide equivalence of two tuples");
    cmd_eq->add_option("a", eq_a, "first tuple")->required();
    cmd_eq->add_option("b", eq_b, "second tuple")->required();

    std::vector<std::string> dec_args;
    CLI::App* cmd_decompose =
        app.add_subcommand("decompose", "split off suspension summands (JSON per tuple)");
    cmd_decompose->add_option("tuple", dec_args, "tuples; stdin (one per line) when omitted");

    std::int64_t count_r = 0;
    std::int64_t count_s = 0;
    CLI::App* cmd_count = app.add_subcommand("count", "compare the two counts of inequivalent actions");
    cmd_count->add_option("--r", count_r, "number of suspension summands")->required();
    cmd_count->add_option("--s", count_s, "number of mixed boundary circles")->required();

    alex3::ComplexityBound bound;
    CLI::App* cmd_census = app.add_subcommand("census", "list canonical tuples within bounds");
    cmd_census->add_option("--max-genus", bound.max_genus, "genus bound (default 0)");
    cmd_census->add_option("--max-f", bound.max_f, "fixed-circle bound (default 0)");
    cmd_census->add_option("--max-t", bound.max_t, "SE-circle bound (default 0)");
    cmd_census->add_option("--max-s", bound.max_s, "mixed-circle bound (default 0)");
    cmd_census->add_option("--max-alpha", bound.max_alpha, "Seifert alpha bound (default 0)");
    cmd_census->add_option("--max-pairs", bound.max_pairs, "Seifert pair-count bound (default 0)");
    cmd_census->add_option("--max-b", bound.max_b_abs, "|b| bound for closed tuples (default 0)");
    cmd_census->add_option("--max-r", bound.max_r, "suspension-count bound (default 0)");

    std::string model_expr;
    CLI::App* cmd_homology = app.add_subcommand("homology", "integer homology of a curated model");
    cmd_homology->add_option("--model", model_expr, "rp2 | sus_rp2 | sus_rp2^k | s3 | s2xs1")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    alex3::EquivalenceOptions opts;
    opts.oriented = oriented;

    try {
        if (*cmd_validate)
            return run_validate(validate_args, json);
        if (*cmd_canon)
            return run_canon(canon_args, opts, json);
        if (*cmd_eq)
            return run_eq(eq_a, eq_b, opts, json);
        if (*cmd_decompose)
            return run_decompose(dec_args, opts);
        if (*cmd_count)
            return run_count(count_r, count_s);
        if (*cmd_census)
            return run_census(bound, opts, json);
        if (*cmd_homology)
            return run_homology(model_expr);
    } catch (const alex3::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const alex3::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
