#include "ontolint/onto_format.hpp"

#include <algorithm>
#include <sstream>

namespace ontolint {

namespace {

std::string format_issue(const ParseIssue& issue) {
    std::ostringstream out;
    out << issue.span.file << ':' << issue.span.line << ':' << issue.span.col_begin
        << ": error: " << issue.message;
    return out.str();
}

std::string format_issues(const std::vector<ParseIssue>& issues) {
    std::string out;
    for (const auto& issue : issues) {
        if (!out.empty()) out += '\n';
        out += format_issue(issue);
    }
    return out;
}

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
    auto tail = [&](char c) {
        return head(c) || (c >= '0' && c <= '9') || c == '@' || c == '-';
    };
    if (!head(s[0])) return false;
    for (char c : s.substr(1))
        if (!tail(c)) return false;
    return true;
}

struct Token {
    std::string text;
    int col = 0; // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') { ++i; continue; }
        if (line[i] == '#') break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

// Splits "a,b,c" (possibly empty) into names.
std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            if (start < text.size()) out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

struct MetaParse {
    MetaProfile meta;
    std::string error; // empty on success
};

MetaParse parse_meta_tag(const std::string& tag) {
    MetaParse out;
    if (tag.size() < 2) { out.error = "missing identity axis (+I or -I)"; return out; }
    if (tag[1] != 'I' || (tag[0] != '+' && tag[0] != '-')) {
        out.error = "identity axis must be +I or -I";
        return out;
    }
    out.meta.identity = tag[0] == '+' ? Identity::carries : Identity::lacks;
    if (tag.size() < 4) { out.error = "missing rigidity axis (+R, -R or ~R)"; return out; }
    if (tag[3] != 'R' || (tag[2] != '+' && tag[2] != '-' && tag[2] != '~')) {
        out.error = "rigidity axis must be +R, -R or ~R";
        return out;
    }
    out.meta.rigidity = tag[2] == '+'   ? Rigidity::rigid
                        : tag[2] == '-' ? Rigidity::non_rigid
                                        : Rigidity::anti_rigid;
    if (tag.size() < 6) { out.error = "missing dependence axis (+D or -D)"; return out; }
    if (tag[5] != 'D' || (tag[4] != '+' && tag[4] != '-')) {
        out.error = "dependence axis must be +D or -D";
        return out;
    }
    out.meta.dependence = tag[4] == '+' ? Dependence::dependent : Dependence::independent;
    if (tag.size() > 6) out.error = "trailing characters after dependence axis";
    return out;
}

struct Parser {
    std::string filename;
    std::vector<ParseIssue> issues;
    TaxonomyBuilder builder;
    std::vector<std::pair<Link, SourceSpan>> pending_links;
    std::map<std::string, SourceSpan> node_spans;

    struct PendingBind {
        std::size_t model_index;
        std::string node, property;
        SourceSpan span;
    };
    std::vector<ModelSection> models;
    std::vector<PendingBind> pending_binds;
    bool in_model = false;
    SourceSpan model_span;

    SourceSpan span(int line, const Token& token) const {
        return {filename, line, token.col, token.col + static_cast<int>(token.text.size())};
    }

    SourceSpan line_span(int line, const std::vector<Token>& tokens) const {
        const Token& first = tokens.front();
        const Token& last = tokens.back();
        return {filename, line, first.col, last.col + static_cast<int>(last.text.size())};
    }

    void fail(SourceSpan at, std::string message) {
        issues.push_back({std::move(at), std::move(message)});
    }

    bool check_name(int line, const Token& token) {
        if (valid_name(token.text)) return true;
        fail(span(line, token), "invalid name '" + token.text + "'");
        return false;
    }

    void handle_prop(int line, const std::vector<Token>& tokens) {
        if (tokens.size() < 2) {
            fail(line_span(line, tokens), "prop requires a name");
            return;
        }
        if (!check_name(line, tokens[1])) return;
        PropertyNode node;
        node.name = tokens[1].text;
        bool have_meta = false;
        for (std::size_t i = 2; i < tokens.size(); ++i) {
            const std::string& t = tokens[i].text;
            std::size_t eq = t.find('=');
            if (eq == std::string::npos) {
                fail(span(line, tokens[i]), "expected key=value, got '" + t + "'");
                return;
            }
            std::string key = t.substr(0, eq), value = t.substr(eq + 1);
            if (key == "meta") {
                MetaParse parsed = parse_meta_tag(value);
                if (!parsed.error.empty()) {
                    fail(span(line, tokens[i]), "malformed meta tag '" + value + "': " + parsed.error);
                    return;
                }
                node.meta = parsed.meta;
                have_meta = true;
            } else if (key == "level") {
                auto level = level_from_name(value);
                if (!level) {
                    fail(span(line, tokens[i]), "unknown level '" + value + "'");
                    return;
                }
                node.level = *level;
            } else if (key == "countable") {
                if (value != "yes" && value != "no") {
                    fail(span(line, tokens[i]), "countable must be yes or no");
                    return;
                }
                node.countable = value == "yes";
            } else {
                fail(span(line, tokens[i]), "unknown key '" + key + "'");
                return;
            }
        }
        if (!have_meta) {
            fail(line_span(line, tokens), "prop requires meta=<I><R><D>");
            return;
        }
        try {
            builder.add_property(node);
            node_spans.emplace(node.name, span(line, tokens[1]));
        } catch (const DuplicateName&) {
            fail(span(line, tokens[1]), "duplicate prop '" + node.name + "'");
        }
    }

    void handle_link(int line, const std::vector<Token>& tokens, LinkKind kind) {
        if (tokens.size() != 3) {
            fail(line_span(line, tokens),
                 std::string(link_kind_name(kind)) + " requires two node names");
            return;
        }
        if (!check_name(line, tokens[1]) || !check_name(line, tokens[2])) return;
        pending_links.push_back(
            {{kind, tokens[1].text, tokens[2].text}, line_span(line, tokens)});
    }

    void handle_model(int line, const std::vector<Token>& tokens) {
        if (in_model) {
            fail(line_span(line, tokens), "model '" + models.back().model.id +
                                              "' not closed before a new model");
            return;
        }
        if (tokens.size() != 2 || !check_name(line, tokens[1])) {
            if (tokens.size() != 2) fail(line_span(line, tokens), "model requires an id");
            return;
        }
        for (const auto& section : models)
            if (section.model.id == tokens[1].text) {
                fail(span(line, tokens[1]), "duplicate model '" + tokens[1].text + "'");
                return;
            }
        models.push_back({});
        models.back().model.id = tokens[1].text;
        in_model = true;
        model_span = line_span(line, tokens);
    }

    void handle_world(int line, const std::vector<Token>& tokens) {
        if (!in_model) {
            fail(line_span(line, tokens), "world line outside model block");
            return;
        }
        if (tokens.size() < 2 || !check_name(line, tokens[1])) {
            if (tokens.size() < 2) fail(line_span(line, tokens), "world requires an id");
            return;
        }
        MicroModel& model = models.back().model;
        for (const auto& w : model.worlds)
            if (w.id == tokens[1].text) {
                fail(span(line, tokens[1]),
                     "duplicate world '" + tokens[1].text + "' in model '" + model.id + "'");
                return;
            }
        World world;
        world.id = tokens[1].text;
        bool have_exists = false;
        for (std::size_t i = 2; i < tokens.size(); ++i) {
            const std::string& t = tokens[i].text;
            std::size_t eq = t.find('=');
            if (eq == std::string::npos) {
                fail(span(line, tokens[i]), "expected key=value, got '" + t + "'");
                return;
            }
            std::string key = t.substr(0, eq), value = t.substr(eq + 1);
            std::vector<std::string> names = split_list(value);
            for (const auto& n : names)
                if (!valid_name(n)) {
                    fail(span(line, tokens[i]), "invalid name '" + n + "'");
                    return;
                }
            if (key == "exists") {
                if (have_exists) {
                    fail(span(line, tokens[i]), "duplicate exists list");
                    return;
                }
                have_exists = true;
                world.exists.insert(names.begin(), names.end());
            } else {
                if (!valid_name(key)) {
                    fail(span(line, tokens[i]), "invalid name '" + key + "'");
                    return;
                }
                if (world.extensions.count(key)) {
                    fail(span(line, tokens[i]), "duplicate extension for '" + key + "'");
                    return;
                }
                world.extensions[key].insert(names.begin(), names.end());
                if (!model.has_property(key)) model.vocabulary.push_back(key);
            }
        }
        if (!have_exists) {
            fail(line_span(line, tokens), "world requires exists=<list>");
            return;
        }
        // A stray member invalidates only itself, not the whole world.
        for (auto& [property, extension] : world.extensions)
            for (auto it = extension.begin(); it != extension.end();)
                if (!world.exists.count(*it)) {
                    fail(line_span(line, tokens), "extension of '" + property + "' in world '" +
                                                      world.id + "' contains '" + *it +
                                                      "', which does not exist there");
                    it = extension.erase(it);
                } else {
                    ++it;
                }
        model.individuals.insert(world.exists.begin(), world.exists.end());
        model.worlds.push_back(std::move(world));
    }

    void handle_bind(int line, const std::vector<Token>& tokens) {
        if (!in_model) {
            fail(line_span(line, tokens), "bind line outside model block");
            return;
        }
        if (tokens.size() != 3) {
            fail(line_span(line, tokens), "bind requires a node and a property");
            return;
        }
        if (!check_name(line, tokens[1]) || !check_name(line, tokens[2])) return;
        pending_binds.push_back(
            {models.size() - 1, tokens[1].text, tokens[2].text, line_span(line, tokens)});
    }

    void handle_end(int line, const std::vector<Token>& tokens) {
        if (!in_model) {
            fail(line_span(line, tokens), "end outside model block");
            return;
        }
        if (models.back().model.worlds.empty())
            fail(model_span, "model '" + models.back().model.id + "' has no worlds");
        in_model = false;
    }

    void handle_line(int line_no, const std::string& line) {
        for (char c : line)
            if (static_cast<unsigned char>(c) > 127) {
                fail({filename, line_no, 1, static_cast<int>(line.size()) + 1},
                     "non-ASCII character");
                return;
            }
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) return;
        const std::string& head = tokens[0].text;
        if (head == "prop") handle_prop(line_no, tokens);
        else if (head == "isa") handle_link(line_no, tokens, LinkKind::isa);
        else if (head == "dep") handle_link(line_no, tokens, LinkKind::dep);
        else if (head == "antonym") handle_link(line_no, tokens, LinkKind::antonym);
        else if (head == "attr") handle_link(line_no, tokens, LinkKind::attr);
        else if (head == "model") handle_model(line_no, tokens);
        else if (head == "world") handle_world(line_no, tokens);
        else if (head == "bind") handle_bind(line_no, tokens);
        else if (head == "end") handle_end(line_no, tokens);
        else fail(span(line_no, tokens[0]), "unknown directive '" + head + "'");
    }

    OntoDocument finish() {
        if (in_model)
            fail(model_span, "model '" + models.back().model.id + "' not closed (missing end)");

        OntoDocument doc;
        doc.filename = filename;
        doc.node_spans = std::move(node_spans);
        for (auto& [link, span] : pending_links) {
            try {
                builder.add_link(link);
                doc.link_spans.emplace_back(link, span);
            } catch (const TaxonomyError& e) {
                fail(span, e.what());
            }
        }
        for (auto& bind : pending_binds) {
            ModelSection& section = models[bind.model_index];
            if (!builder.peek().contains(bind.node)) {
                fail(bind.span, "bind references unknown node '" + bind.node + "'");
                continue;
            }
            if (!section.model.has_property(bind.property)) {
                fail(bind.span, "bind references unknown property '" + bind.property +
                                    "' in model '" + section.model.id + "'");
                continue;
            }
            if (!section.bindings.emplace(bind.node, bind.property).second)
                fail(bind.span, "duplicate bind for '" + bind.node + "'");
        }
        if (!issues.empty()) throw ParseError(std::move(issues));
        doc.taxonomy = builder.take();
        doc.models = std::move(models);
        return doc;
    }
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    for (auto& line : lines)
        if (!line.empty() && line.back() == '\r') line.pop_back();
    return lines;
}

} // namespace

ParseError::ParseError(std::vector<ParseIssue> all)
    : std::runtime_error(format_issues(all)), issues(std::move(all)) {}

std::vector<SourceSpan> OntoDocument::spans_for(const Diagnostic& diagnostic) const {
    std::vector<SourceSpan> out;
    auto push = [&](const SourceSpan& s) {
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    if (diagnostic.link) {
        for (const auto& [link, span] : link_spans)
            if (link == *diagnostic.link) push(span);
    }
    for (const auto& name : diagnostic.nodes) {
        auto it = node_spans.find(name);
        if (it != node_spans.end()) push(it->second);
    }
    return out;
}

OntoDocument parse_onto(const std::string& text, const std::string& filename) {
    Parser parser;
    parser.filename = filename;
    int line_no = 0;
    for (const auto& line : split_lines(text)) parser.handle_line(++line_no, line);
    return parser.finish();
}

OntoDocument import_edges(const std::string& edges_text, const std::string& sidecar_text,
                          const std::string& edges_filename,
                          const std::string& sidecar_filename) {
    std::vector<ParseIssue> issues;
    auto fail = [&](SourceSpan span, std::string message) {
        issues.push_back({std::move(span), std::move(message)});
    };

    auto fields = [](const std::string& line) {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            if (tab == std::string::npos) {
                out.push_back(line.substr(start));
                break;
            }
            out.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        return out;
    };
    auto skippable = [](const std::string& line) {
        return line.empty() || line[0] == '#';
    };

    struct SidecarRow {
        PropertyNode node;
        SourceSpan span;
    };
    std::map<std::string, SidecarRow> sidecar;
    int line_no = 0;
    for (const auto& line : split_lines(sidecar_text)) {
        ++line_no;
        if (skippable(line)) continue;
        SourceSpan span{sidecar_filename, line_no, 1, static_cast<int>(line.size()) + 1};
        std::vector<std::string> cols = fields(line);
        if (cols.size() < 2) {
            fail(span, "sidecar line needs name<TAB>meta");
            continue;
        }
        if (!valid_name(cols[0])) {
            fail(span, "invalid name '" + cols[0] + "'");
            continue;
        }
        MetaParse parsed = parse_meta_tag(cols[1]);
        if (!parsed.error.empty()) {
            fail(span, "malformed meta tag '" + cols[1] + "': " + parsed.error);
            continue;
        }
        PropertyNode node;
        node.name = cols[0];
        node.meta = parsed.meta;
        bool bad = false;
        for (std::size_t i = 2; i < cols.size() && !bad; ++i) {
            if (auto level = level_from_name(cols[i])) {
                if (node.level) { fail(span, "duplicate level field"); bad = true; }
                node.level = *level;
            } else if (cols[i] == "yes" || cols[i] == "no") {
                if (node.countable) { fail(span, "duplicate countable field"); bad = true; }
                node.countable = cols[i] == "yes";
            } else {
                fail(span, "unrecognized field '" + cols[i] + "'");
                bad = true;
            }
        }
        if (bad) continue;
        if (!sidecar.emplace(node.name, SidecarRow{node, span}).second)
            fail(span, "duplicate sidecar entry '" + node.name + "'");
    }

    struct EdgeRow {
        Link link;
        SourceSpan span;
    };
    std::vector<EdgeRow> edges;
    std::map<std::string, SourceSpan> first_seen;
    line_no = 0;
    for (const auto& line : split_lines(edges_text)) {
        ++line_no;
        if (skippable(line)) continue;
        SourceSpan span{edges_filename, line_no, 1, static_cast<int>(line.size()) + 1};
        std::vector<std::string> cols = fields(line);
        if (cols.size() != 2 || !valid_name(cols[0]) || !valid_name(cols[1])) {
            fail(span, "edge line needs child<TAB>parent");
            continue;
        }
        edges.push_back({{LinkKind::isa, cols[0], cols[1]}, span});
        first_seen.emplace(cols[0], span);
        first_seen.emplace(cols[1], span);
    }

    OntoDocument doc;
    doc.filename = edges_filename;
    TaxonomyBuilder builder;
    for (const auto& [name, row] : sidecar) {
        builder.add_property(row.node);
        doc.node_spans.emplace(name, row.span);
    }
    for (const auto& [name, span] : first_seen) {
        if (sidecar.count(name)) continue;
        // Placeholder: rigid, identity-free, independent; bland enough to
        // classify but wrong often enough to deserve a note.
        builder.add_property({name, {Identity::lacks, Rigidity::rigid, Dependence::independent},
                              std::nullopt, std::nullopt});
        doc.node_spans.emplace(name, span);
        doc.notes.push_back("'" + name + "' missing from sidecar; assigned placeholder profile -I+R-D");
    }
    for (const auto& row : edges) {
        try {
            builder.add_link(row.link);
            doc.link_spans.emplace_back(row.link, row.span);
        } catch (const TaxonomyError& e) {
            fail(row.span, e.what());
        }
    }
    if (!issues.empty()) throw ParseError(std::move(issues));
    doc.taxonomy = builder.take();
    return doc;
}

std::string emit_onto(const Taxonomy& taxonomy) {
    std::string out;
    for (const auto& [name, node] : taxonomy.nodes()) {
        out += "prop " + name + " meta=" + meta_tag(node.meta);
        if (node.level) out += " level=" + std::string(level_name(*node.level));
        if (node.countable) out += std::string(" countable=") + (*node.countable ? "yes" : "no");
        out += '\n';
    }
    for (const auto& link : taxonomy.links())
        out += std::string(link_kind_name(link.kind)) + " " + link.source + " " + link.target + '\n';
    for (const auto& note : taxonomy.notes()) out += "# " + note + '\n';
    return out;
}

} // namespace ontolint
