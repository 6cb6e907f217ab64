#include "ontolint/meta.hpp"

namespace ontolint {

std::string meta_tag(const MetaProfile& meta) {
    std::string out;
    out += meta.identity == Identity::carries ? "+I" : "-I";
    switch (meta.rigidity) {
    case Rigidity::rigid: out += "+R"; break;
    case Rigidity::non_rigid: out += "-R"; break;
    case Rigidity::anti_rigid: out += "~R"; break;
    }
    out += meta.dependence == Dependence::dependent ? "+D" : "-D";
    return out;
}

namespace {

struct LevelRow {
    Level level;
    std::string_view name;
    LevelConditions conditions;
};

constexpr LevelRow level_table[] = {
    {Level::atomic, "atomic", {"minimal connected chunks of matter", "spatio-temporal continuity"}},
    {Level::static_, "static", {"a fixed sum of atoms", "keeping exactly the same atoms"}},
    {Level::mereological, "mereological", {"an arbitrary sum of matter", "keeping the same parts"}},
    {Level::topological, "topological", {"a self-connected whole", "keeping the same topology"}},
    {Level::morphological, "morphological", {"a shape or pattern carried by matter", "keeping the same shape"}},
    {Level::functional, "functional", {"a unit serving a purpose", "keeping its functionality"}},
    {Level::biological, "biological", {"a living unit", "staying alive"}},
    {Level::intentional, "intentional", {"an agent with intentional behaviour", "keeping its intentionality"}},
    {Level::social, "social", {"a web of connections among agents", "keeping those connections"}},
};

} // namespace

std::string_view level_name(Level l) {
    return level_table[static_cast<std::size_t>(l)].name;
}

std::optional<Level> level_from_name(std::string_view name) {
    for (const auto& row : level_table)
        if (row.name == name) return row.level;
    return std::nullopt;
}

LevelConditions level_conditions(Level l) {
    return level_table[static_cast<std::size_t>(l)].conditions;
}

} // namespace ontolint
