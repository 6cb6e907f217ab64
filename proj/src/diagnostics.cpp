#include "ontolint/diagnostics.hpp"

#include <algorithm>
#include <tuple>

namespace ontolint {

Diagnostic make_diagnostic(Code code, std::vector<std::string> nodes,
                           std::optional<Link> link, std::string message) {
    Diagnostic d;
    d.code = code;
    d.severity = severity_of(code);
    d.nodes = std::move(nodes);
    d.link = std::move(link);
    d.message = std::move(message);
    return d;
}

bool diagnostic_less(const Diagnostic& a, const Diagnostic& b) {
    if (a.severity != b.severity) return a.severity < b.severity;
    if (a.code != b.code) return a.code < b.code;
    if (a.nodes != b.nodes) return a.nodes < b.nodes;
    Link la = a.link ? *a.link : Link{}, lb = b.link ? *b.link : Link{};
    if (la != lb) return la < lb;
    return a.message < b.message;
}

int DiagnosticReport::count(Severity s) const {
    int n = 0;
    for (const auto& d : diagnostics)
        if (d.severity == s) ++n;
    return n;
}

std::optional<Severity> DiagnosticReport::max_severity() const {
    std::optional<Severity> worst;
    for (const auto& d : diagnostics)
        if (!worst || d.severity < *worst) worst = d.severity;
    return worst;
}

DiagnosticReport build_report(std::vector<Diagnostic> findings) {
    std::stable_sort(findings.begin(), findings.end(), diagnostic_less);
    DiagnosticReport report;
    report.diagnostics = std::move(findings);
    for (const auto& d : report.diagnostics) {
        ++report.counts_by_code[std::string(code_name(d.code))];
        for (Pattern p : d.patterns)
            ++report.counts_by_pattern[std::string(pattern_name(p))];
    }
    return report;
}

} // namespace ontolint
