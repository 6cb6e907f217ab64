#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ontolint/taxonomy.hpp"

namespace ontolint {

enum class PlanKind : std::uint8_t { level_split, attribute_demotion, role_tagging };

std::string_view plan_kind_name(PlanKind k);

struct NewNode {
    std::string name;
    MetaProfile meta;
    std::optional<Level> level;

    bool operator==(const NewNode&) const = default;
};

// A mechanical edit proposal.  Plans are data: suggesting one changes
// nothing until it is applied, and it can be serialized as-is.
struct RefactorPlan {
    PlanKind kind = PlanKind::level_split;
    std::string target;
    std::vector<NewNode> new_nodes;
    std::vector<Link> removed_links;
    std::vector<Link> added_links;
    std::string notes; // carries the source hash plus human remarks

    bool operator==(const RefactorPlan&) const = default;
};

struct RefactorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSplittable : RefactorError {
    using RefactorError::RefactorError;
};

struct NotApplicable : RefactorError {
    using RefactorError::RefactorError;
};

struct StalePlan : RefactorError {
    using RefactorError::RefactorError;
};

// Fingerprint of nodes and links only; notes do not affect it.
std::string taxonomy_content_hash(const Taxonomy& taxonomy);

// The rigid skeleton: types and categories, plus roles unless hidden.
// Attributions never make it in.  Idempotent.
Taxonomy extract_backbone(const Taxonomy& taxonomy, bool hide_roles = true);

// Splits a node with parents on several levels into one node per level,
// stitched together by a descending dependence chain.  The original node
// keeps its name as an alias of the highest-level piece.
RefactorPlan suggest_level_split(const Taxonomy& taxonomy, const std::string& node);

// Turns the isa links under an attribution into attr links.
RefactorPlan suggest_attribute_demotion(const Taxonomy& taxonomy, const std::string& node);

// Replays a plan against the taxonomy it was suggested for.
Taxonomy apply_plan(const Taxonomy& taxonomy, const RefactorPlan& plan);

} // namespace ontolint
