#pragma once

#include <string>

#include "ontolint/diagnostics.hpp"

namespace ontolint {

enum class ReportFormat : std::uint8_t { text, json };

// Renders a report byte-deterministically.  Text yields one line per
// diagnostic; json yields a versioned object with a fixed key order.
std::string emit_report(const DiagnosticReport& report, ReportFormat format);

} // namespace ontolint
