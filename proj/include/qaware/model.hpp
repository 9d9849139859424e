#pragma once

#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <unordered_set>
#include <vector>

#include "qaware/formula.hpp"

namespace qaware {

using StateSet = std::uint64_t;
constexpr int kMaxStates = 64;

// Raw structure as read from a file; may violate invariants (see validate).
struct AwarenessStructure {
    int agents = 1;
    std::vector<std::string> states;
    std::vector<std::string> vocab;
    std::map<std::string, std::vector<std::string>> pi;  // state -> true props
    std::map<int, std::vector<std::pair<std::string, std::string>>> rel;
    std::map<int, std::map<std::string, std::vector<Formula>>> aware;
};

struct ModelError : std::runtime_error {
    std::vector<std::string> diagnostics;
    explicit ModelError(std::vector<std::string> d);
};

// throws ModelError on shape errors or unparsable awareness entries
AwarenessStructure structure_from_json(const nlohmann::json& j);
AwarenessStructure load_structure(const std::string& path);
nlohmann::json structure_to_json(const AwarenessStructure& m);

std::vector<std::string> validate(const AwarenessStructure& m);

using FormulaSet = std::unordered_set<Formula, FormulaHash, FormulaEq>;

// Compiled, index-based view of a valid structure.
class Model {
public:
    explicit Model(const AwarenessStructure& m);  // throws ModelError if validate() is nonempty

    int n = 0;
    int agents = 1;
    StateSet all = 0;
    std::vector<std::string> names;
    std::vector<std::string> vocab;
    std::map<std::string, StateSet> truth;                // vocab prop -> states where true
    std::vector<std::vector<StateSet>> succ;              // [i-1][s]
    std::vector<std::vector<std::vector<Formula>>> aware; // [i-1][s], duplicate-free, file order
    std::vector<std::vector<FormulaSet>> aware_set;

    int state(const std::string& name) const;  // -1 if unknown
    StateSet prop(const std::string& p) const;
    StateSet box(int i, StateSet t) const;
    bool is_aware(int i, int s, const Formula& f) const;
    StateSet aware_states(int i, const Formula& f) const;
    // every formula in every aware set, first-occurrence order
    std::vector<Formula> all_aware() const;
    int max_aware_size() const;
    const AwarenessStructure& source() const { return src_; }

private:
    AwarenessStructure src_;
};

struct RelClass {
    bool r = false, t = false, e = false;
    std::string str() const;
    bool contains(const RelClass& c) const { return (!c.r || r) && (!c.t || t) && (!c.e || e); }
};
RelClass rel_class(const Model& m, int i);
RelClass rel_class(const AwarenessStructure& m, int i);
RelClass parse_rel_class(const std::string& s);  // "ret", "et", "e", "{r,t}" ...

enum class AwarenessProperty { Gpp, WeakGpp, ClosedExists, KnowsAware };
std::string property_name(AwarenessProperty p);

struct PropertyReport {
    bool holds = true;
    int bound = 0;
    int agent = 0;
    std::string state, state2;  // state2: the accessible state for knows_aware
    std::vector<Formula> formulas;  // witness formulas
    std::string clause;             // failing clause, human readable
    std::vector<std::string> notes;
    nlohmann::json to_json() const;
};

// bound <= 0 means the default: max AST size in the structure plus 2
PropertyReport check_awareness_property(const Model& m, AwarenessProperty which, int bound = 0);

// All sentences (closed formulas) with props from `props`, operators for agents 1..agents,
// quantifiers over `vars`, and node count <= bound; sorted by (size, print).
std::vector<Formula> bounded_sentences(const std::vector<std::string>& props, int agents,
                                       const std::vector<std::string>& vars, int bound);

// Existential abstractions of alpha: formulas exists x . phi with phi[x/psi] = alpha,
// psi a quantifier-free sentence. Non-vacuous first (larger psi replaced wholesale first),
// the vacuous abstraction last.
struct Abstraction {
    Formula result;   // exists x . phi
    Formula psi;      // nullptr for the vacuous abstraction
};
std::vector<Abstraction> existential_abstractions(const Formula& alpha, const std::vector<std::string>& vars,
                                                  int max_size);

}  // namespace qaware
