#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ontolint/diagnostics.hpp"
#include "ontolint/taxonomy.hpp"
#include "ontolint/worlds.hpp"

namespace ontolint {

struct ParseIssue {
    SourceSpan span;
    std::string message;
};

// Carries every issue found in one pass, already formatted in what().
struct ParseError : std::runtime_error {
    explicit ParseError(std::vector<ParseIssue> issues);
    std::vector<ParseIssue> issues;
};

// A micro model together with the node-to-property bindings declared in
// its block.
struct ModelSection {
    MicroModel model;
    std::map<std::string, std::string> bindings;
};

// A parsed input: the lowered taxonomy, any model blocks, and enough
// span bookkeeping to point every diagnostic back at a source line.
struct OntoDocument {
    std::string filename;
    Taxonomy taxonomy;
    std::vector<ModelSection> models;
    std::map<std::string, SourceSpan> node_spans;
    std::vector<std::pair<Link, SourceSpan>> link_spans;
    std::vector<std::string> notes;

    std::vector<SourceSpan> spans_for(const Diagnostic& diagnostic) const;
};

// Line-oriented, case-sensitive, ASCII-only.  '#' starts a comment.
//   prop <Name> meta=<I><R><D> [level=<level>] [countable=yes|no]
//   isa|dep|antonym|attr <A> <B>
//   model <id> ... world <id> exists=<list> [<Prop>=<list>]* ... bind <node> <Prop> ... end
OntoDocument parse_onto(const std::string& text, const std::string& filename = "<input>");

// Plain dumps: edge lines are "child<TAB>parent", the sidecar holds
// "name<TAB>meta[<TAB>level][<TAB>countable]".  Names missing from the
// sidecar get a bland placeholder profile and a note.
OntoDocument import_edges(const std::string& edges_text, const std::string& sidecar_text,
                          const std::string& edges_filename = "<edges>",
                          const std::string& sidecar_filename = "<sidecar>");

// Canonical serialization; parse_onto(emit_onto(t)) lowers back to t.
std::string emit_onto(const Taxonomy& taxonomy);

} // namespace ontolint
