#pragma once

#include <string_view>
#include <vector>

#include "ontolint/codes.hpp"
#include "ontolint/meta.hpp"

namespace ontolint {

// The kinds of universal a meta profile can express.  Profiles that fit
// none of the five patterns are kept but flagged as unclassifiable.
enum class PropertyKind : std::uint8_t {
    type,          // +I +R
    category,      // -I +R
    material_role, // +I ~R +D
    formal_role,   // -I ~R +D
    attribution,   // -I -R -D
    unclassifiable,
};

std::string_view kind_name(PropertyKind k);

PropertyKind classify_profile(const MetaProfile& meta);

constexpr bool is_role(PropertyKind k) {
    return k == PropertyKind::material_role || k == PropertyKind::formal_role;
}

// Per-node sanity checks that need no graph context: an anti-rigid
// property must depend on something (E106), and a profile outside the
// five known patterns is worth a look (W205).
std::vector<Code> check_profile(const MetaProfile& meta);

} // namespace ontolint
