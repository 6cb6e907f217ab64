#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ontolint/diagnostics.hpp"
#include "ontolint/meta.hpp"
#include "ontolint/taxonomy.hpp"

namespace ontolint {

// One possible world: which individuals exist and which of them fall
// under each property.  Extensions never reach outside the existence
// set, so P(x) is simply false wherever x does not exist.
struct World {
    std::string id;
    std::set<std::string> exists;
    std::map<std::string, std::set<std::string>> extensions;

    const std::set<std::string>& extension(const std::string& property) const;

    bool operator==(const World&) const = default;
};

// A small hand-enumerable structure to test annotations against.
struct MicroModel {
    std::string id;
    std::set<std::string> individuals;
    std::vector<std::string> vocabulary; // declaration order
    std::vector<World> worlds;

    bool has_property(const std::string& property) const;

    bool operator==(const MicroModel&) const = default;
};

struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownIndividual : ModelError {
    explicit UnknownIndividual(const std::string& name);
};

struct UnknownProperty : ModelError {
    explicit UnknownProperty(const std::string& name);
};

// An instance anywhere is an instance everywhere.  A property with no
// instances at all passes vacuously; pair with is_degenerate to notice.
bool is_rigid(const MicroModel& model, const std::string& property);

// Every instance fails somewhere else, and there is at least one
// instance, so the empty property does not count as anti-rigid.
bool is_anti_rigid(const MicroModel& model, const std::string& property);

bool is_degenerate(const MicroModel& model, const std::string& property);

// x cannot exist without this specific y.
bool rigid_dependence(const MicroModel& model, const std::string& x, const std::string& y);

// x cannot exist without some instance of property.
bool generic_dependence(const MicroModel& model, const std::string& x,
                        const std::string& property);

// No instance of p without a distinct co-occurring instance of q.
bool class_dependence(const MicroModel& model, const std::string& p, const std::string& q);

// What the model alone can say about a property.  Identity is not
// observable from extensions, so only two axes come back.
struct InferredProfile {
    Rigidity rigidity = Rigidity::non_rigid;
    Dependence dependence = Dependence::independent;

    bool operator==(const InferredProfile&) const = default;
};

InferredProfile infer_profile(const MicroModel& model, const std::string& property);

// Checks each bound node's declared rigidity and dependence against the
// model; every disagreement becomes a W207 finding.
std::vector<Diagnostic> cross_validate(const Taxonomy& taxonomy, const MicroModel& model,
                                       const std::map<std::string, std::string>& binding);

} // namespace ontolint
