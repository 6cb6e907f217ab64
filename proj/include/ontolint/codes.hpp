#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace ontolint {

enum class Severity : std::uint8_t { error = 0, warning = 1, info = 2 };

std::string_view severity_name(Severity s);

// Stable diagnostic catalog.  Exit codes and report ordering key off the
// severity class, so codes never move between classes once published.
enum class Code : std::uint16_t {
    E101, // anti-rigid node subsumes a rigid node
    E102, // category below an identity-carrying type
    E103, // type with several incomparable identity sources
    E104, // isa link crossing ontological levels
    E105, // dependence link that does not descend
    E106, // anti-rigid node marked independent
    E107, // countability clash across an isa link
    W201, // attribution used as a taxon
    W202, // children of one node spread over several levels
    W203, // material role with no identity to inherit
    W204, // formal role below an identity carrier
    W205, // meta profile matching no known kind
    W206, // category with several category parents
    W207, // declared profile contradicts a micro model
    I301, // level rule skipped for lack of a level
};

std::string_view code_name(Code c);
std::optional<Code> code_from_name(std::string_view name);
Severity severity_of(Code c);

// Names for the recurring ways a single isa link ends up overloaded.
enum class Pattern : std::uint8_t {
    confusion_of_senses,
    reduction_of_sense,
    overgeneralization,
    type_to_role,
    organizational_confusion,
};

std::string_view pattern_name(Pattern p);

} // namespace ontolint
