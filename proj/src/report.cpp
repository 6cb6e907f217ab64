#include "ontolint/report.hpp"

#include <nlohmann/json.hpp>

namespace ontolint {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string emit_text(const DiagnosticReport& report) {
    std::string out;
    for (const auto& d : report.diagnostics) {
        out += severity_name(d.severity);
        out += ' ';
        out += code_name(d.code);
        out += ' ';
        for (std::size_t i = 0; i < d.nodes.size(); ++i) {
            if (i) out += '>';
            out += d.nodes[i];
        }
        out += ": ";
        out += d.message;
        if (!d.patterns.empty()) {
            out += " [";
            bool first = true;
            for (Pattern p : d.patterns) {
                if (!first) out += ", ";
                first = false;
                out += pattern_name(p);
            }
            out += ']';
        }
        out += '\n';
    }
    for (const auto& plan : report.suggestions) {
        out += "suggestion ";
        out += plan_kind_name(plan.kind);
        out += ' ';
        out += plan.target;
        out += '\n';
        for (const auto& piece : plan.new_nodes) {
            out += "  new " + piece.name + " meta=" + meta_tag(piece.meta);
            if (piece.level) out += " level=" + std::string(level_name(*piece.level));
            out += '\n';
        }
        for (const auto& link : plan.removed_links)
            out += "  del " + std::string(link_kind_name(link.kind)) + " " + link.source + " " +
                   link.target + '\n';
        for (const auto& link : plan.added_links)
            out += "  add " + std::string(link_kind_name(link.kind)) + " " + link.source + " " +
                   link.target + '\n';
        out += "  note " + plan.notes + '\n';
    }
    return out;
}

ordered_json link_json(const Link& link) {
    return {{"kind", link_kind_name(link.kind)}, {"source", link.source}, {"target", link.target}};
}

std::string emit_json(const DiagnosticReport& report) {
    ordered_json doc;
    doc["version"] = 1;
    doc["diagnostics"] = ordered_json::array();
    for (const auto& d : report.diagnostics) {
        ordered_json j;
        j["code"] = code_name(d.code);
        j["severity"] = severity_name(d.severity);
        j["nodes"] = d.nodes;
        j["link"] = d.link ? link_json(*d.link) : ordered_json(nullptr);
        j["message"] = d.message;
        auto patterns = ordered_json::array();
        for (Pattern p : d.patterns) patterns.push_back(pattern_name(p));
        j["patterns"] = std::move(patterns);
        auto spans = ordered_json::array();
        for (const auto& s : d.spans)
            spans.push_back({{"file", s.file},
                             {"line", s.line},
                             {"col_begin", s.col_begin},
                             {"col_end", s.col_end}});
        j["spans"] = std::move(spans);
        doc["diagnostics"].push_back(std::move(j));
    }
    doc["counts"] = {{"errors", report.count(Severity::error)},
                     {"warnings", report.count(Severity::warning)},
                     {"infos", report.count(Severity::info)},
                     {"by_code", report.counts_by_code},
                     {"by_pattern", report.counts_by_pattern}};
    doc["suggestions"] = ordered_json::array();
    for (const auto& plan : report.suggestions) {
        ordered_json j;
        j["kind"] = plan_kind_name(plan.kind);
        j["target"] = plan.target;
        auto pieces = ordered_json::array();
        for (const auto& piece : plan.new_nodes) {
            ordered_json p;
            p["name"] = piece.name;
            p["meta"] = meta_tag(piece.meta);
            p["level"] = piece.level ? ordered_json(level_name(*piece.level)) : ordered_json(nullptr);
            pieces.push_back(std::move(p));
        }
        j["new_nodes"] = std::move(pieces);
        auto removed = ordered_json::array();
        for (const auto& link : plan.removed_links) removed.push_back(link_json(link));
        j["removed_links"] = std::move(removed);
        auto added = ordered_json::array();
        for (const auto& link : plan.added_links) added.push_back(link_json(link));
        j["added_links"] = std::move(added);
        j["notes"] = plan.notes;
        doc["suggestions"].push_back(std::move(j));
    }
    return doc.dump(2) + '\n';
}

} // namespace

std::string emit_report(const DiagnosticReport& report, ReportFormat format) {
    return format == ReportFormat::text ? emit_text(report) : emit_json(report);
}

} // namespace ontolint
