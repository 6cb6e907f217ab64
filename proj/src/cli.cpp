#include "ontolint/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ontolint/lint.hpp"
#include "ontolint/onto_format.hpp"
#include "ontolint/refactor.hpp"
#include "ontolint/report.hpp"

namespace ontolint {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<RefactorPlan> collect_suggestions(const Taxonomy& taxonomy) {
    std::vector<RefactorPlan> plans;
    for (const auto& [name, node] : taxonomy.nodes()) {
        try {
            plans.push_back(suggest_level_split(taxonomy, name));
        } catch (const NotSplittable&) {
        }
        if (node.kind() != PropertyKind::attribution) continue;
        try {
            plans.push_back(suggest_attribute_demotion(taxonomy, name));
        } catch (const NotApplicable&) {
        }
    }
    return plans;
}

int severity_to_exit(const DiagnosticReport& report) {
    if (report.count(Severity::error) > 0) return 2;
    if (report.count(Severity::warning) > 0) return 1;
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"taxonomy linter for meta-property annotated ontologies", "ontolint"};
    app.require_subcommand(1);

    auto* lint_cmd = app.add_subcommand("lint", "lint an ontology file");
    std::string file, format_name = "text", disable_csv, edges_path, sidecar_path;
    bool backbone = false, hide_roles = false, suggest = false;
    lint_cmd->add_option("file", file, "input .onto file");
    lint_cmd->add_option("--format", format_name, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    lint_cmd->add_flag("--backbone", backbone, "print the taxonomy backbone instead of a report");
    lint_cmd->add_flag("--hide-roles", hide_roles, "drop roles from the backbone");
    lint_cmd->add_flag("--suggest", suggest, "include refactoring suggestions");
    lint_cmd->add_option("--disable", disable_csv, "comma-separated diagnostic codes to drop");
    lint_cmd->add_option("--import-edges", edges_path, "edge dump (child<TAB>parent per line)");
    lint_cmd->add_option("--sidecar", sidecar_path, "meta profiles for the edge dump");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 3;
    }

    if (file.empty() == edges_path.empty()) {
        err << "error: give either an input file or --import-edges\n";
        return 3;
    }
    if (!sidecar_path.empty() && edges_path.empty()) {
        err << "error: --sidecar only makes sense with --import-edges\n";
        return 3;
    }

    LintConfig config;
    if (!disable_csv.empty()) {
        std::istringstream list(disable_csv);
        std::string item;
        while (std::getline(list, item, ',')) {
            auto code = code_from_name(item);
            if (!code) {
                err << "error: unknown diagnostic code '" << item << "'\n";
                return 3;
            }
            config.disabled.insert(*code);
        }
    }

    OntoDocument doc;
    try {
        if (!edges_path.empty()) {
            std::string sidecar = sidecar_path.empty() ? std::string() : read_file(sidecar_path);
            doc = import_edges(read_file(edges_path), sidecar, edges_path, sidecar_path);
        } else {
            doc = parse_onto(read_file(file), file);
        }
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 3;
    }

    std::vector<Diagnostic> findings;
    for (auto rule : {rule_rigidity, rule_identity_tree, rule_levels, rule_countability,
                      rule_attributions, rule_roles, rule_overgeneralization, rule_profiles}) {
        auto part = rule(doc.taxonomy);
        findings.insert(findings.end(), part.begin(), part.end());
    }
    for (const auto& section : doc.models) {
        auto part = cross_validate(doc.taxonomy, section.model, section.bindings);
        findings.insert(findings.end(), part.begin(), part.end());
    }
    DiagnosticReport report = finish_report(doc.taxonomy, std::move(findings), config);
    for (auto& d : report.diagnostics) d.spans = doc.spans_for(d);
    if (suggest) report.suggestions = collect_suggestions(doc.taxonomy);

    for (const auto& note : doc.notes) err << "note: " << note << '\n';
    for (const auto& note : doc.taxonomy.notes()) err << "note: " << note << '\n';

    if (backbone)
        out << emit_onto(extract_backbone(doc.taxonomy, hide_roles));
    else
        out << emit_report(report, format_name == "json" ? ReportFormat::json : ReportFormat::text);
    return severity_to_exit(report);
}

} // namespace ontolint
