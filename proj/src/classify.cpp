#include "ontolint/classify.hpp"

namespace ontolint {

std::string_view kind_name(PropertyKind k) {
    switch (k) {
    case PropertyKind::type: return "type";
    case PropertyKind::category: return "category";
    case PropertyKind::material_role: return "material_role";
    case PropertyKind::formal_role: return "formal_role";
    case PropertyKind::attribution: return "attribution";
    case PropertyKind::unclassifiable: return "unclassifiable";
    }
    return "?";
}

PropertyKind classify_profile(const MetaProfile& meta) {
    const bool carries = meta.identity == Identity::carries;
    switch (meta.rigidity) {
    case Rigidity::rigid:
        return carries ? PropertyKind::type : PropertyKind::category;
    case Rigidity::anti_rigid:
        if (meta.dependence != Dependence::dependent) break;
        return carries ? PropertyKind::material_role : PropertyKind::formal_role;
    case Rigidity::non_rigid:
        if (carries || meta.dependence == Dependence::dependent) break;
        return PropertyKind::attribution;
    }
    return PropertyKind::unclassifiable;
}

std::vector<Code> check_profile(const MetaProfile& meta) {
    std::vector<Code> findings;
    if (meta.rigidity == Rigidity::anti_rigid &&
        meta.dependence == Dependence::independent)
        findings.push_back(Code::E106);
    if (classify_profile(meta) == PropertyKind::unclassifiable)
        findings.push_back(Code::W205);
    return findings;
}

} // namespace ontolint
