#include "ontolint/lint.hpp"

#include <algorithm>

#include "ontolint/classify.hpp"

namespace ontolint {

namespace {

std::string quoted(const std::string& name) { return "'" + name + "'"; }

// Levels that actually appear among the given nodes.
std::set<Level> present_levels(const Taxonomy& t, const std::vector<std::string>& names) {
    std::set<Level> out;
    for (const auto& n : names)
        if (auto level = t.node(n).level) out.insert(*level);
    return out;
}

} // namespace

std::vector<Diagnostic> rule_rigidity(const Taxonomy& taxonomy) {
    std::vector<Diagnostic> out;
    for (const auto& link : taxonomy.links()) {
        if (link.kind != LinkKind::isa) continue;
        const auto& child = taxonomy.node(link.source);
        const auto& parent = taxonomy.node(link.target);
        if (child.meta.rigidity != Rigidity::rigid) continue;
        if (parent.meta.rigidity != Rigidity::anti_rigid) continue;
        out.push_back(make_diagnostic(
            Code::E101, {link.source, link.target}, link,
            "anti-rigid " + quoted(link.target) + " subsumes rigid " + quoted(link.source)));
    }
    return out;
}

std::vector<Diagnostic> rule_identity_tree(const Taxonomy& taxonomy) {
    std::vector<Diagnostic> out;
    for (const auto& link : taxonomy.links()) {
        if (link.kind != LinkKind::isa) continue;
        if (taxonomy.node(link.source).kind() != PropertyKind::category) continue;
        if (taxonomy.node(link.target).kind() != PropertyKind::type) continue;
        out.push_back(make_diagnostic(
            Code::E102, {link.source, link.target}, link,
            "category " + quoted(link.source) + " would inherit the identity criterion of type " +
                quoted(link.target)));
    }

    // Ancestor sets within the sub-graph spanned by types alone; a path
    // through a role or category does not count here.
    std::map<std::string, std::set<std::string>> type_ancestors;
    for (const auto& [name, node] : taxonomy.nodes()) {
        if (node.kind() != PropertyKind::type) continue;
        std::set<std::string>& acc = type_ancestors[name];
        std::vector<std::string> todo{name};
        while (!todo.empty()) {
            std::string n = todo.back();
            todo.pop_back();
            for (const auto& parent : taxonomy.isa_parents(n)) {
                if (taxonomy.node(parent).kind() != PropertyKind::type) continue;
                if (acc.insert(parent).second) todo.push_back(parent);
            }
        }
    }

    for (const auto& [name, ancestors] : type_ancestors) {
        std::vector<std::string> minimal;
        for (const auto& a : ancestors) {
            bool covered = false;
            for (const auto& b : ancestors)
                if (b != a && type_ancestors.at(b).count(a)) { covered = true; break; }
            if (!covered) minimal.push_back(a);
        }
        if (minimal.size() < 2) continue;
        bool incomparable = false;
        for (std::size_t i = 0; i < minimal.size() && !incomparable; ++i)
            for (std::size_t j = i + 1; j < minimal.size() && !incomparable; ++j)
                incomparable = !ICSet::comparable(taxonomy.ic_set(minimal[i]),
                                                  taxonomy.ic_set(minimal[j]));
        if (!incomparable) continue;
        std::string list;
        for (const auto& a : minimal) {
            if (!list.empty()) list += ", ";
            list += quoted(a);
        }
        std::vector<std::string> involved{name};
        involved.insert(involved.end(), minimal.begin(), minimal.end());
        out.push_back(make_diagnostic(
            Code::E103, std::move(involved), std::nullopt,
            "type " + quoted(name) +
                " has several minimal type ancestors with incomparable identity criteria: " + list));
    }
    return out;
}

std::vector<Diagnostic> rule_levels(const Taxonomy& taxonomy) {
    std::vector<Diagnostic> out;
    for (const auto& link : taxonomy.links()) {
        if (link.kind != LinkKind::isa && link.kind != LinkKind::dep) continue;
        auto source_level = taxonomy.node(link.source).level;
        auto target_level = taxonomy.node(link.target).level;
        if (!source_level && !target_level) continue; // levels not in use here
        if (!source_level || !target_level) {
            const std::string& unleveled = source_level ? link.target : link.source;
            out.push_back(make_diagnostic(
                Code::I301, {unleveled}, link,
                "level check skipped for " + std::string(link_kind_name(link.kind)) + " link " +
                    quoted(link.source) + " -> " + quoted(link.target) + ": " + quoted(unleveled) +
                    " has no level"));
            continue;
        }
        if (link.kind == LinkKind::isa && *source_level != *target_level) {
            out.push_back(make_diagnostic(
                Code::E104, {link.source, link.target}, link,
                "isa link crosses levels: " + quoted(link.source) + " (" +
                    std::string(level_name(*source_level)) + ") under " + quoted(link.target) +
                    " (" + std::string(level_name(*target_level)) + ")"));
        }
        if (link.kind == LinkKind::dep && level_rank(*source_level) <= level_rank(*target_level)) {
            out.push_back(make_diagnostic(
                Code::E105, {link.source, link.target}, link,
                "dependence does not descend: " + quoted(link.source) + " (" +
                    std::string(level_name(*source_level)) + ") depends on " + quoted(link.target) +
                    " (" + std::string(level_name(*target_level)) + ")"));
        }
    }
    return out;
}

std::vector<Diagnostic> rule_countability(const Taxonomy& taxonomy) {
    std::vector<Diagnostic> out;
    for (const auto& link : taxonomy.links()) {
        if (link.kind != LinkKind::isa) continue;
        auto child = taxonomy.node(link.source).countable;
        auto parent = taxonomy.node(link.target).countable;
        if (!child || !parent || *child == *parent) continue;
        auto yesno = [](bool b) { return b ? "yes" : "no"; };
        out.push_back(make_diagnostic(
            Code::E107, {link.source, link.target}, link,
            "countability clash: " + quoted(link.source) + " (countable=" + yesno(*child) +
                ") under " + quoted(link.target) + " (countable=" + yesno(*parent) + ")"));
    }
    return out;
}

std::vector<Diagnostic> rule_attributions(const Taxonomy& taxonomy) {
    std::vector<Diagnostic> out;
    for (const auto& [name, node] : taxonomy.nodes()) {
        if (node.kind() != PropertyKind::attribution) continue;
        auto children = taxonomy.isa_children(name);
        if (children.empty()) continue;
        out.push_back(make_diagnostic(
            Code::W201, {name}, std::nullopt,
            "attribution " + quoted(name) + " is used as a taxon (" +
                std::to_string(children.size()) + " isa " +
                (children.size() == 1 ? "child" : "children") + ")"));
    }
    return out;
}

std::vector<Diagnostic> rule_roles(const Taxonomy& taxonomy) {
    std::vector<Diagnostic> out;
    for (const auto& [name, node] : taxonomy.nodes()) {
        PropertyKind kind = node.kind();
        if (kind == PropertyKind::material_role) {
            bool has_type_ancestor = false;
            for (const auto& a : taxonomy.isa_ancestors(name))
                if (taxonomy.node(a).kind() == PropertyKind::type) {
                    has_type_ancestor = true;
                    break;
                }
            if (!has_type_ancestor)
                out.push_back(make_diagnostic(
                    Code::W203, {name}, std::nullopt,
                    "material role " + quoted(name) +
                        " has no type ancestor to inherit an identity criterion from"));
        } else if (kind == PropertyKind::formal_role) {
            for (const auto& a : taxonomy.isa_ancestors(name)) {
                if (taxonomy.ic_set(a).empty()) continue;
                out.push_back(make_diagnostic(
                    Code::W204, {name, a}, std::nullopt,
                    "formal role " + quoted(name) + " is subsumed by identity-carrying " + quoted(a)));
                break;
            }
        }
    }
    return out;
}

std::vector<Diagnostic> rule_overgeneralization(const Taxonomy& taxonomy) {
    std::vector<Diagnostic> out;
    for (const auto& [name, node] : taxonomy.nodes()) {
        auto spanned = present_levels(taxonomy, taxonomy.isa_children(name));
        if (spanned.size() >= 2) {
            std::string list;
            for (Level l : spanned) {
                if (!list.empty()) list += ", ";
                list += level_name(l);
            }
            out.push_back(make_diagnostic(
                Code::W202, {name}, std::nullopt,
                "children of " + quoted(name) + " span " + std::to_string(spanned.size()) +
                    " levels: " + list));
        }

        if (node.kind() != PropertyKind::category) continue;
        std::vector<std::string> category_parents;
        for (const auto& p : taxonomy.isa_parents(name))
            if (taxonomy.node(p).kind() == PropertyKind::category)
                category_parents.push_back(p);
        if (category_parents.size() < 2) continue;
        std::string list;
        for (const auto& p : category_parents) {
            if (!list.empty()) list += ", ";
            list += quoted(p);
        }
        std::vector<std::string> involved{name};
        involved.insert(involved.end(), category_parents.begin(), category_parents.end());
        out.push_back(make_diagnostic(
            Code::W206, std::move(involved), std::nullopt,
            "category " + quoted(name) + " has " + std::to_string(category_parents.size()) +
                " category parents: " + list));
    }
    return out;
}

std::vector<Diagnostic> rule_profiles(const Taxonomy& taxonomy) {
    std::vector<Diagnostic> out;
    for (const auto& [name, node] : taxonomy.nodes()) {
        for (Code code : check_profile(node.meta)) {
            std::string message =
                code == Code::E106
                    ? "anti-rigid " + quoted(name) + " is marked independent"
                    : "meta profile " + meta_tag(node.meta) + " of " + quoted(name) +
                          " matches no known kind of universal";
            out.push_back(make_diagnostic(code, {name}, std::nullopt, std::move(message)));
        }
    }
    return out;
}

std::set<Pattern> label_patterns(const Taxonomy& taxonomy, const Diagnostic& finding) {
    std::set<Pattern> out;
    switch (finding.code) {
    case Code::E101:
        out.insert(Pattern::type_to_role);
        break;
    case Code::W201:
        out.insert(Pattern::organizational_confusion);
        break;
    case Code::W202:
    case Code::E107:
        out.insert(Pattern::overgeneralization);
        break;
    case Code::E104: {
        auto child = taxonomy.node(finding.nodes[0]).level;
        auto parent = taxonomy.node(finding.nodes[1]).level;
        if (child && parent)
            out.insert(level_rank(*child) > level_rank(*parent) ? Pattern::reduction_of_sense
                                                                : Pattern::overgeneralization);
        break;
    }
    default:
        break;
    }
    if (finding.code == Code::E103 || finding.code == Code::E104) {
        // Several parents on several levels usually means one name is
        // carrying several senses at once.
        const std::string& subject = finding.nodes[0];
        if (present_levels(taxonomy, taxonomy.isa_parents(subject)).size() >= 2)
            out.insert(Pattern::confusion_of_senses);
    }
    return out;
}

DiagnosticReport finish_report(const Taxonomy& taxonomy,
                               std::vector<Diagnostic> findings,
                               const LintConfig& config) {
    std::vector<Diagnostic> kept;
    for (auto& d : findings) {
        if (!config.enabled(d.code)) continue;
        if (d.patterns.empty()) d.patterns = label_patterns(taxonomy, d);
        kept.push_back(std::move(d));
    }
    return build_report(std::move(kept));
}

DiagnosticReport lint(const Taxonomy& taxonomy, const LintConfig& config) {
    std::vector<Diagnostic> findings;
    for (auto rule : {rule_rigidity, rule_identity_tree, rule_levels, rule_countability,
                      rule_attributions, rule_roles, rule_overgeneralization, rule_profiles}) {
        auto part = rule(taxonomy);
        findings.insert(findings.end(), std::make_move_iterator(part.begin()),
                        std::make_move_iterator(part.end()));
    }
    return finish_report(taxonomy, std::move(findings), config);
}

} // namespace ontolint
