#include "ontolint/refactor.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace ontolint {

std::string_view plan_kind_name(PlanKind k) {
    switch (k) {
    case PlanKind::level_split: return "level_split";
    case PlanKind::attribute_demotion: return "attribute_demotion";
    case PlanKind::role_tagging: return "role_tagging";
    }
    return "?";
}

namespace {

void hash_mix(std::uint64_t& h, std::string_view s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull; // FNV-1a
    }
    h ^= 0x1f;
    h *= 0x100000001b3ull;
}

std::string hash_note(const Taxonomy& t) {
    return "hash=" + taxonomy_content_hash(t);
}

std::string noted_hash(const RefactorPlan& plan) {
    std::string_view notes = plan.notes;
    if (notes.substr(0, 5) != "hash=") return {};
    std::size_t end = notes.find(';');
    return std::string(notes.substr(5, end == std::string_view::npos ? end : end - 5));
}

} // namespace

std::string taxonomy_content_hash(const Taxonomy& taxonomy) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& [name, node] : taxonomy.nodes()) {
        hash_mix(h, name);
        hash_mix(h, meta_tag(node.meta));
        hash_mix(h, node.level ? level_name(*node.level) : "");
        hash_mix(h, node.countable ? (*node.countable ? "yes" : "no") : "");
    }
    for (const auto& link : taxonomy.links()) {
        hash_mix(h, link_kind_name(link.kind));
        hash_mix(h, link.source);
        hash_mix(h, link.target);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Taxonomy extract_backbone(const Taxonomy& taxonomy, bool hide_roles) {
    TaxonomyBuilder builder;
    auto keep = [&](const std::string& name) {
        PropertyKind kind = taxonomy.node(name).kind();
        if (kind == PropertyKind::type || kind == PropertyKind::category) return true;
        return !hide_roles && is_role(kind);
    };
    for (const auto& [name, node] : taxonomy.nodes())
        if (keep(name)) builder.add_property(node);
    for (const auto& link : taxonomy.links())
        if (keep(link.source) && keep(link.target)) builder.add_link(link);
    return builder.take();
}

RefactorPlan suggest_level_split(const Taxonomy& taxonomy, const std::string& node) {
    const PropertyNode& subject = taxonomy.node(node);

    // Parents that carry a level, grouped by it; unleveled parents stay
    // attached to the original node.
    std::map<Level, std::vector<std::string>> by_level;
    for (const auto& link : taxonomy.links()) {
        if (link.kind != LinkKind::isa || link.source != node) continue;
        if (auto level = taxonomy.node(link.target).level) by_level[*level].push_back(link.target);
    }
    if (by_level.size() < 2)
        throw NotSplittable("node '" + node + "' has isa parents on " +
                            std::to_string(by_level.size()) + " distinct level(s), need 2");

    RefactorPlan plan;
    plan.kind = PlanKind::level_split;
    plan.target = node;

    for (auto it = by_level.rbegin(); it != by_level.rend(); ++it) {
        std::string name = node + "@" + std::string(level_name(it->first));
        while (taxonomy.contains(name)) name += "_2";
        NewNode piece{name, subject.meta, it->first};
        if (!plan.new_nodes.empty()) {
            plan.added_links.push_back(
                {LinkKind::dep, plan.new_nodes.back().name, piece.name});
        }
        plan.new_nodes.push_back(std::move(piece));
        for (const auto& parent : it->second)
            plan.added_links.push_back({LinkKind::isa, plan.new_nodes.back().name, parent});
    }
    for (const auto& link : taxonomy.links())
        if (link.kind == LinkKind::isa && link.source == node &&
            taxonomy.node(link.target).level)
            plan.removed_links.push_back(link);

    std::string colocated;
    for (const auto& piece : plan.new_nodes) {
        if (!colocated.empty()) colocated += ", ";
        colocated += piece.name;
    }
    plan.notes = hash_note(taxonomy) + "; alias " + node + " -> " + plan.new_nodes.front().name +
                 "; co-located pieces of one entity: " + colocated;
    return plan;
}

RefactorPlan suggest_attribute_demotion(const Taxonomy& taxonomy, const std::string& node) {
    if (taxonomy.node(node).kind() != PropertyKind::attribution)
        throw NotApplicable("node '" + node + "' is not an attribution");

    RefactorPlan plan;
    plan.kind = PlanKind::attribute_demotion;
    plan.target = node;
    for (const auto& link : taxonomy.links()) {
        if (link.kind != LinkKind::isa || link.target != node) continue;
        plan.removed_links.push_back(link);
        plan.added_links.push_back({LinkKind::attr, link.source, node});
    }
    if (plan.removed_links.empty())
        throw NotApplicable("attribution '" + node + "' has no isa children to demote");
    plan.notes = hash_note(taxonomy) + "; " + node + " becomes an attribute of its former children";
    return plan;
}

Taxonomy apply_plan(const Taxonomy& taxonomy, const RefactorPlan& plan) {
    if (noted_hash(plan) != taxonomy_content_hash(taxonomy))
        throw StalePlan("plan for '" + plan.target +
                        "' was suggested against a different taxonomy");

    TaxonomyBuilder builder;
    for (const auto& [name, node] : taxonomy.nodes()) builder.add_property(node);
    for (const auto& piece : plan.new_nodes)
        builder.add_property({piece.name, piece.meta, piece.level, std::nullopt});
    auto removed = [&](const Link& link) {
        return std::find(plan.removed_links.begin(), plan.removed_links.end(), link) !=
               plan.removed_links.end();
    };
    for (const auto& link : taxonomy.links())
        if (!removed(link)) builder.add_link(link);
    for (const auto& link : plan.added_links) builder.add_link(link);
    for (const auto& note : taxonomy.notes()) builder.add_note(note);
    builder.add_note("applied " + std::string(plan_kind_name(plan.kind)) + " on " + plan.target);
    return builder.take();
}

} // namespace ontolint
