#include "ontolint/taxonomy.hpp"

#include <algorithm>
#include <deque>

namespace ontolint {

std::string_view link_kind_name(LinkKind k) {
    switch (k) {
    case LinkKind::isa: return "isa";
    case LinkKind::dep: return "dep";
    case LinkKind::antonym: return "antonym";
    case LinkKind::attr: return "attr";
    }
    return "?";
}

bool ICSet::subset_of(const ICSet& other) const {
    return std::includes(other.tokens.begin(), other.tokens.end(),
                         tokens.begin(), tokens.end());
}

bool ICSet::comparable(const ICSet& a, const ICSet& b) {
    return a.subset_of(b) || b.subset_of(a);
}

DuplicateName::DuplicateName(const std::string& n)
    : TaxonomyError("duplicate node '" + n + "'"), name(n) {}

UnknownNode::UnknownNode(const std::string& n)
    : TaxonomyError("unknown node '" + n + "'"), name(n) {}

namespace {

std::string cycle_message(const std::vector<std::string>& path) {
    std::string msg = "isa cycle: ";
    for (const auto& name : path) {
        msg += name;
        msg += " -> ";
    }
    msg += path.front();
    return msg;
}

} // namespace

IsaCycle::IsaCycle(std::vector<std::string> path)
    : TaxonomyError(cycle_message(path)), cycle(std::move(path)) {}

const PropertyNode& Taxonomy::node(const std::string& name) const {
    auto it = nodes_.find(name);
    if (it == nodes_.end()) throw UnknownNode(name);
    return it->second;
}

std::vector<std::string> Taxonomy::isa_parents(const std::string& name) const {
    std::vector<std::string> out;
    for (const auto& link : links_)
        if (link.kind == LinkKind::isa && link.source == name)
            out.push_back(link.target);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> Taxonomy::isa_children(const std::string& name) const {
    std::vector<std::string> out;
    for (const auto& link : links_)
        if (link.kind == LinkKind::isa && link.target == name)
            out.push_back(link.source);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> Taxonomy::isa_ancestors(const std::string& name) const {
    node(name);
    std::vector<std::string> order;
    std::set<std::string> seen{name};
    std::vector<std::string> layer{name};
    while (!layer.empty()) {
        std::set<std::string> next;
        for (const auto& n : layer)
            for (const auto& parent : isa_parents(n))
                if (seen.insert(parent).second) next.insert(parent);
        layer.assign(next.begin(), next.end());
        order.insert(order.end(), layer.begin(), layer.end());
    }
    return order;
}

ICSet Taxonomy::ic_set(const std::string& name) const {
    ICSet out;
    if (auto ic = node(name).own_ic()) out.tokens.insert(*ic);
    for (const auto& ancestor : isa_ancestors(name))
        if (auto ic = node(ancestor).own_ic()) out.tokens.insert(*ic);
    return out;
}

bool Taxonomy::isa_reaches(const std::string& from, const std::string& to,
                           std::vector<std::string>* path) const {
    std::map<std::string, std::string> came_from;
    std::deque<std::string> queue{from};
    std::set<std::string> seen{from};
    while (!queue.empty()) {
        std::string n = queue.front();
        queue.pop_front();
        if (n == to) {
            if (path) {
                std::vector<std::string> rev{n};
                while (rev.back() != from) rev.push_back(came_from[rev.back()]);
                path->assign(rev.rbegin(), rev.rend());
            }
            return true;
        }
        for (const auto& parent : isa_parents(n)) {
            if (!seen.insert(parent).second) continue;
            came_from[parent] = n;
            queue.push_back(parent);
        }
    }
    return false;
}

void Taxonomy::insert_node(PropertyNode node) {
    auto [it, inserted] = nodes_.emplace(node.name, node);
    (void)it;
    if (!inserted) throw DuplicateName(node.name);
}

void Taxonomy::insert_link(Link link) {
    if (!contains(link.source)) throw UnknownNode(link.source);
    if (!contains(link.target)) throw UnknownNode(link.target);
    if (std::find(links_.begin(), links_.end(), link) != links_.end()) {
        notes_.push_back("duplicate " + std::string(link_kind_name(link.kind)) +
                         " link " + link.source + " -> " + link.target + " ignored");
        return;
    }
    if (link.source == link.target &&
        (link.kind == LinkKind::isa || link.kind == LinkKind::dep)) {
        if (link.kind == LinkKind::isa) throw IsaCycle({link.source});
        throw InvalidLink("dep link from '" + link.source + "' to itself");
    }
    if (link.kind == LinkKind::isa) {
        std::vector<std::string> path;
        if (isa_reaches(link.target, link.source, &path)) throw IsaCycle(path);
    }
    links_.push_back(std::move(link));
}

Taxonomy add_property(Taxonomy taxonomy, PropertyNode node) {
    taxonomy.insert_node(std::move(node));
    return taxonomy;
}

Taxonomy add_link(Taxonomy taxonomy, Link link) {
    taxonomy.insert_link(std::move(link));
    return taxonomy;
}

} // namespace ontolint
