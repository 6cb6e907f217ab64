#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ontolint/classify.hpp"
#include "ontolint/meta.hpp"

namespace ontolint {

struct PropertyNode {
    std::string name;
    MetaProfile meta;
    std::optional<Level> level;
    std::optional<bool> countable;

    PropertyKind kind() const { return classify_profile(meta); }

    // Types mint their own identity criterion; everything else at most
    // inherits one through subsumption.
    std::optional<std::string> own_ic() const {
        if (kind() != PropertyKind::type) return std::nullopt;
        return "ic:" + name;
    }

    bool operator==(const PropertyNode&) const = default;
};

enum class LinkKind : std::uint8_t { isa, dep, antonym, attr };

std::string_view link_kind_name(LinkKind k);

struct Link {
    LinkKind kind = LinkKind::isa;
    std::string source;
    std::string target;

    bool operator==(const Link&) const = default;
    auto operator<=>(const Link&) const = default;
};

// Union of identity criteria a node can draw on, own plus inherited.
struct ICSet {
    std::set<std::string> tokens;

    bool empty() const { return tokens.empty(); }
    bool subset_of(const ICSet& other) const;
    // Comparable means one side's criteria subsume the other's.
    static bool comparable(const ICSet& a, const ICSet& b);

    bool operator==(const ICSet&) const = default;
};

struct TaxonomyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateName : TaxonomyError {
    explicit DuplicateName(const std::string& name);
    std::string name;
};

struct UnknownNode : TaxonomyError {
    explicit UnknownNode(const std::string& name);
    std::string name;
};

struct IsaCycle : TaxonomyError {
    explicit IsaCycle(std::vector<std::string> path);
    std::vector<std::string> cycle; // closes back on its first element
};

struct InvalidLink : TaxonomyError {
    using TaxonomyError::TaxonomyError;
};

// An annotated property graph.  Nodes are keyed by name; links are kept
// in insertion order.  The isa sub-graph is guaranteed acyclic.
class Taxonomy {
public:
    const std::map<std::string, PropertyNode>& nodes() const { return nodes_; }
    const std::vector<Link>& links() const { return links_; }
    const std::vector<std::string>& notes() const { return notes_; }

    bool contains(const std::string& name) const { return nodes_.count(name) != 0; }
    const PropertyNode& node(const std::string& name) const;

    std::vector<std::string> isa_parents(const std::string& name) const;
    std::vector<std::string> isa_children(const std::string& name) const;

    // All proper ancestors along isa links, breadth first, ties within a
    // layer broken lexicographically.
    std::vector<std::string> isa_ancestors(const std::string& name) const;

    ICSet ic_set(const std::string& name) const;

    bool operator==(const Taxonomy& other) const {
        return nodes_ == other.nodes_ && links_ == other.links_;
    }

private:
    friend class TaxonomyBuilder;
    friend Taxonomy add_property(Taxonomy taxonomy, PropertyNode node);
    friend Taxonomy add_link(Taxonomy taxonomy, Link link);

    void insert_node(PropertyNode node);
    void insert_link(Link link);
    bool isa_reaches(const std::string& from, const std::string& to,
                     std::vector<std::string>* path = nullptr) const;

    std::map<std::string, PropertyNode> nodes_;
    std::vector<Link> links_;
    std::vector<std::string> notes_;
};

// Value-style construction: both return an extended copy and leave the
// argument unchanged.
Taxonomy add_property(Taxonomy taxonomy, PropertyNode node);
Taxonomy add_link(Taxonomy taxonomy, Link link);

// In-place construction for parsers and importers.
class TaxonomyBuilder {
public:
    void add_property(PropertyNode node) { taxonomy_.insert_node(std::move(node)); }
    void add_link(Link link) { taxonomy_.insert_link(std::move(link)); }
    void add_note(std::string note) { taxonomy_.notes_.push_back(std::move(note)); }
    const Taxonomy& peek() const { return taxonomy_; }
    Taxonomy take() { return std::move(taxonomy_); }

private:
    Taxonomy taxonomy_;
};

} // namespace ontolint
