#include "ontolint/worlds.hpp"

#include <algorithm>

namespace ontolint {

namespace {

const std::set<std::string> empty_set;

} // namespace

const std::set<std::string>& World::extension(const std::string& property) const {
    auto it = extensions.find(property);
    return it == extensions.end() ? empty_set : it->second;
}

bool MicroModel::has_property(const std::string& property) const {
    return std::find(vocabulary.begin(), vocabulary.end(), property) != vocabulary.end();
}

UnknownIndividual::UnknownIndividual(const std::string& name)
    : ModelError("unknown individual '" + name + "'") {}

UnknownProperty::UnknownProperty(const std::string& name)
    : ModelError("unknown property '" + name + "'") {}

namespace {

void require_property(const MicroModel& model, const std::string& property) {
    if (!model.has_property(property)) throw UnknownProperty(property);
}

void require_individual(const MicroModel& model, const std::string& name) {
    if (!model.individuals.count(name)) throw UnknownIndividual(name);
}

} // namespace

bool is_rigid(const MicroModel& model, const std::string& property) {
    require_property(model, property);
    for (const auto& x : model.individuals) {
        bool somewhere = false, everywhere = true;
        for (const auto& w : model.worlds) {
            if (w.extension(property).count(x))
                somewhere = true;
            else
                everywhere = false;
        }
        if (somewhere && !everywhere) return false;
    }
    return true;
}

bool is_anti_rigid(const MicroModel& model, const std::string& property) {
    require_property(model, property);
    bool any_instance = false;
    for (const auto& x : model.individuals) {
        bool somewhere = false, fails_somewhere = false;
        for (const auto& w : model.worlds) {
            if (w.extension(property).count(x))
                somewhere = true;
            else
                fails_somewhere = true;
        }
        if (!somewhere) continue;
        any_instance = true;
        if (!fails_somewhere) return false;
    }
    return any_instance;
}

bool is_degenerate(const MicroModel& model, const std::string& property) {
    require_property(model, property);
    for (const auto& w : model.worlds)
        if (!w.extension(property).empty()) return false;
    return true;
}

bool rigid_dependence(const MicroModel& model, const std::string& x, const std::string& y) {
    require_individual(model, x);
    require_individual(model, y);
    for (const auto& w : model.worlds)
        if (w.exists.count(x) && !w.exists.count(y)) return false;
    return true;
}

bool generic_dependence(const MicroModel& model, const std::string& x,
                        const std::string& property) {
    require_individual(model, x);
    require_property(model, property);
    for (const auto& w : model.worlds)
        if (w.exists.count(x) && w.extension(property).empty()) return false;
    return true;
}

bool class_dependence(const MicroModel& model, const std::string& p, const std::string& q) {
    require_property(model, p);
    require_property(model, q);
    for (const auto& w : model.worlds) {
        const auto& others = w.extension(q);
        for (const auto& x : w.extension(p)) {
            bool found = false;
            for (const auto& y : others)
                if (y != x) { found = true; break; }
            if (!found) return false;
        }
    }
    return true;
}

InferredProfile infer_profile(const MicroModel& model, const std::string& property) {
    require_property(model, property);
    InferredProfile out;
    if (is_rigid(model, property))
        out.rigidity = Rigidity::rigid;
    else if (is_anti_rigid(model, property))
        out.rigidity = Rigidity::anti_rigid;
    else
        out.rigidity = Rigidity::non_rigid;

    out.dependence = Dependence::independent;
    for (const auto& q : model.vocabulary) {
        if (q == property) continue;
        if (class_dependence(model, property, q)) {
            out.dependence = Dependence::dependent;
            break;
        }
    }
    return out;
}

std::vector<Diagnostic> cross_validate(const Taxonomy& taxonomy, const MicroModel& model,
                                       const std::map<std::string, std::string>& binding) {
    std::vector<Diagnostic> out;
    auto rigidity_tag = [](Rigidity r) {
        switch (r) {
        case Rigidity::rigid: return "+R";
        case Rigidity::non_rigid: return "-R";
        case Rigidity::anti_rigid: return "~R";
        }
        return "?";
    };
    for (const auto& [node_name, property] : binding) {
        const PropertyNode& node = taxonomy.node(node_name);
        require_property(model, property);
        InferredProfile observed = infer_profile(model, property);
        if (node.meta.rigidity != observed.rigidity) {
            out.push_back(make_diagnostic(
                Code::W207, {node_name}, std::nullopt,
                "declared rigidity (" + std::string(rigidity_tag(node.meta.rigidity)) + ") of '" +
                    node_name + "' contradicts model '" + model.id + "' (observed " +
                    rigidity_tag(observed.rigidity) + " via property '" + property + "')"));
        }
        if (node.meta.dependence != observed.dependence) {
            bool declared = node.meta.dependence == Dependence::dependent;
            out.push_back(make_diagnostic(
                Code::W207, {node_name}, std::nullopt,
                "declared dependence (" + std::string(declared ? "+D" : "-D") + ") of '" +
                    node_name + "' contradicts model '" + model.id + "' (observed " +
                    (declared ? "-D" : "+D") + " via property '" + property + "')"));
        }
    }
    return out;
}

} // namespace ontolint
