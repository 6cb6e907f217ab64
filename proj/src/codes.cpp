#include "ontolint/codes.hpp"

#include <array>

namespace ontolint {

std::string_view severity_name(Severity s) {
    switch (s) {
    case Severity::error: return "error";
    case Severity::warning: return "warning";
    case Severity::info: return "info";
    }
    return "?";
}

namespace {

constexpr std::array<std::string_view, 15> code_names = {
    "E101", "E102", "E103", "E104", "E105", "E106", "E107",
    "W201", "W202", "W203", "W204", "W205", "W206", "W207",
    "I301",
};

} // namespace

std::string_view code_name(Code c) {
    return code_names[static_cast<std::size_t>(c)];
}

std::optional<Code> code_from_name(std::string_view name) {
    for (std::size_t i = 0; i < code_names.size(); ++i)
        if (code_names[i] == name) return static_cast<Code>(i);
    return std::nullopt;
}

Severity severity_of(Code c) {
    switch (code_name(c)[0]) {
    case 'E': return Severity::error;
    case 'W': return Severity::warning;
    default: return Severity::info;
    }
}

std::string_view pattern_name(Pattern p) {
    switch (p) {
    case Pattern::confusion_of_senses: return "confusion_of_senses";
    case Pattern::reduction_of_sense: return "reduction_of_sense";
    case Pattern::overgeneralization: return "overgeneralization";
    case Pattern::type_to_role: return "type_to_role";
    case Pattern::organizational_confusion: return "organizational_confusion";
    }
    return "?";
}

} // namespace ontolint
