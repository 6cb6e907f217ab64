#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ontolint {

// The three annotation axes carried by every property node.
enum class Identity : std::uint8_t { carries, lacks };

// anti_rigid is strictly stronger than non_rigid; the two are stored
// distinctly even though ~R implies -R.
enum class Rigidity : std::uint8_t { rigid, non_rigid, anti_rigid };

enum class Dependence : std::uint8_t { dependent, independent };

struct MetaProfile {
    Identity identity = Identity::lacks;
    Rigidity rigidity = Rigidity::rigid;
    Dependence dependence = Dependence::independent;

    bool operator==(const MetaProfile&) const = default;
};

// Renders a profile as its six character tag, e.g. "+I~R-D".
std::string meta_tag(const MetaProfile& meta);

// Stratification of properties by the granularity of what individuates
// their instances.  The order is total; comparisons use the numeric rank.
enum class Level : std::uint8_t {
    atomic = 0,
    static_ = 1,
    mereological = 2,
    topological = 3,   // physical sublayer: self-connected wholes
    morphological = 4, // physical sublayer: shaped regions
    functional = 5,
    biological = 6,
    intentional = 7,
    social = 8,
};

inline constexpr std::array<Level, 9> all_levels = {
    Level::atomic,       Level::static_,    Level::mereological,
    Level::topological,  Level::morphological, Level::functional,
    Level::biological,   Level::intentional, Level::social,
};

constexpr int level_rank(Level l) { return static_cast<int>(l); }

constexpr bool is_physical_sublayer(Level l) {
    return l == Level::topological || l == Level::morphological;
}

std::string_view level_name(Level l);
std::optional<Level> level_from_name(std::string_view name);

// What makes an instance one instance at this level, and what it takes
// for it to persist as the same instance.
struct LevelConditions {
    std::string_view individuation;
    std::string_view persistence;
};

LevelConditions level_conditions(Level l);

} // namespace ontolint
