#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontolint/codes.hpp"
#include "ontolint/refactor.hpp"
#include "ontolint/taxonomy.hpp"

namespace ontolint {

// Half-open column range on one line of one input file.
struct SourceSpan {
    std::string file;
    int line = 0;
    int col_begin = 0;
    int col_end = 0;

    bool operator==(const SourceSpan&) const = default;
};

struct Diagnostic {
    Code code = Code::I301;
    Severity severity = Severity::info;
    std::vector<std::string> nodes; // subject first, then other involved nodes
    std::optional<Link> link;
    std::string message;
    std::set<Pattern> patterns;
    std::vector<SourceSpan> spans;

    bool operator==(const Diagnostic&) const = default;
};

Diagnostic make_diagnostic(Code code, std::vector<std::string> nodes,
                           std::optional<Link> link, std::string message);

// Total order used for report output: errors first, then by code, then by
// the involved nodes, the link and the message so equal-severity findings
// land in one stable sequence.
bool diagnostic_less(const Diagnostic& a, const Diagnostic& b);

struct DiagnosticReport {
    std::vector<Diagnostic> diagnostics;
    std::map<std::string, int> counts_by_code;
    std::map<std::string, int> counts_by_pattern;
    // Filled by the caller when refactoring proposals are requested.
    std::vector<RefactorPlan> suggestions;

    int count(Severity s) const;
    std::optional<Severity> max_severity() const;
};

// Sorts, recounts, and drops nothing: the report is a pure function of
// the finding multiset.
DiagnosticReport build_report(std::vector<Diagnostic> findings);

} // namespace ontolint
