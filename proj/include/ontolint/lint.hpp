#pragma once

#include <set>
#include <vector>

#include "ontolint/diagnostics.hpp"
#include "ontolint/taxonomy.hpp"

namespace ontolint {

struct LintConfig {
    std::set<Code> disabled; // findings with these codes are dropped

    bool enabled(Code c) const { return disabled.count(c) == 0; }
};

// Each rule is pure and independent: running them all and merging gives
// the same multiset as lint() produces before ordering.

// E101: a rigid node below an anti-rigid one smuggles a role into the
// backbone; the reverse direction is fine.
std::vector<Diagnostic> rule_rigidity(const Taxonomy& taxonomy);

// E102: a category under a type would inherit an identity criterion and
// stop being a mere category.  E103: a type with two or more minimal
// type ancestors whose identity criteria are incomparable cannot sit in
// a well-formed backbone tree.
std::vector<Diagnostic> rule_identity_tree(const Taxonomy& taxonomy);

// E104: isa must stay within one ontological level.  E105: dependence
// must point strictly downwards.  I301: a link whose one endpoint has no
// level gets a note instead of a verdict.
std::vector<Diagnostic> rule_levels(const Taxonomy& taxonomy);

// E107: a countability mismatch across an isa link means the two nodes
// individuate their instances differently.
std::vector<Diagnostic> rule_countability(const Taxonomy& taxonomy);

// W201: attributions are predicates to hang off nodes, not taxa.
std::vector<Diagnostic> rule_attributions(const Taxonomy& taxonomy);

// W203: a material role has to inherit its identity from some type.
// W204: a formal role must not have identity-carrying ancestors.
std::vector<Diagnostic> rule_roles(const Taxonomy& taxonomy);

// W202: a node whose direct children sit on different levels is usually
// a bundle of senses.  W206: categories should form a shallow tree.
std::vector<Diagnostic> rule_overgeneralization(const Taxonomy& taxonomy);

// E106 and W205 per node, lifted from check_profile.
std::vector<Diagnostic> rule_profiles(const Taxonomy& taxonomy);

// Names the overloading pattern(s) a finding is evidence of.
std::set<Pattern> label_patterns(const Taxonomy& taxonomy, const Diagnostic& finding);

// Runs every rule, labels the findings, filters disabled codes, and
// returns one deterministically ordered report.
DiagnosticReport lint(const Taxonomy& taxonomy, const LintConfig& config = {});

// Shared tail of lint(): label, filter, order, count.
DiagnosticReport finish_report(const Taxonomy& taxonomy,
                               std::vector<Diagnostic> findings,
                               const LintConfig& config);

} // namespace ontolint
