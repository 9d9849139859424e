#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qaware/bdd.hpp"
#include "qaware/formula.hpp"
#include "qaware/model.hpp"

namespace qaware {

using TruthProfile = StateSet;

// Awareness pattern of an instance psi for x in f: for each A/X-context chi of x
// (numbered in preorder) and state t, the tuples of bindings for the remaining
// pattern variables of chi under which chi[x/psi] is in the context agent's A(t).
// Encoded as sorted strings "ctx|t|bindings".
using AwarenessPattern = std::vector<std::string>;

struct SentenceClass {
    TruthProfile profile = 0;
    AwarenessPattern pattern;
    Formula representative;
};

enum class Verdict3 { True, False, Unknown };
std::string to_string(Verdict3 v);

struct OracleResult {
    Verdict3 value = Verdict3::Unknown;
    Formula witness;  // instance refuting a top-level forall / confirming a top-level exists
};

// An evaluation session over one structure; owns the memo tables and the BDD manager.
class Checker {
public:
    explicit Checker(const Model& m);

    const Model& model() const { return m_; }

    // quantifier-free sentences
    StateSet truth(const Formula& f);
    bool eval_base(int s, const Formula& f);

    // coarsest stable partition; realizable profiles are exactly the unions of types
    int num_types() const { return static_cast<int>(types_.size()); }
    const std::vector<StateSet>& types() const { return types_; }
    const std::vector<Formula>& type_formulas() const { return type_formula_; }
    int type_of(int s) const { return type_of_[s]; }
    std::vector<TruthProfile> realizable_profiles();       // unions of types, sorted
    std::vector<TruthProfile> realizable_profiles_closure();  // explicit fixpoint, sorted
    Formula realizer(TruthProfile p);   // some qf sentence with that profile
    Formula generic(TruthProfile p);    // realizer padded with double negations past every aware set
    Formula bottom() const { return bottom_; }  // fresh proposition, false everywhere

    // quantifier-free sentences psi such that some A/X-context of x in f can match an aware
    // member under x := psi; contexts with variables bound outside f are ignored
    std::vector<Formula> candidates(const Formula& f, const std::string& x);
    AwarenessPattern pattern_of(const Formula& f, const std::string& x, const Formula& psi);
    std::vector<SentenceClass> sentence_classes(const Formula& f, const std::string& x);

    // the full truth relation; free variables are resolved through V first
    bool eval_exact(int s, const Formula& f, const ValuationSyn& V = ValuationSyn());
    StateSet truth_exact(const Formula& sentence);
    bool valid(const Formula& sentence);
    // For f = forall x . phi false at s (or exists x . phi true at s): an instance showing it.
    std::optional<Formula> witness(int s, const Formula& sentence);
    // classes examined at the outermost quantifier of the last eval_exact/witness call
    std::size_t last_class_count() const { return last_classes_; }

    OracleResult eval_oracle(int s, const Formula& f, std::size_t budget,
                             const ValuationSyn& V = ValuationSyn());

private:
    const Model& m_;
    Formula bottom_;
    int pad_;
    std::vector<StateSet> types_;
    std::vector<Formula> type_formula_;
    std::vector<int> type_of_;
    std::unordered_map<Formula, StateSet, FormulaHash, FormulaEq> truth_memo_;
    std::vector<std::pair<int, Formula>> contexts_members_;  // (agent, member)

    // symbolic evaluation
    using Ref = BddManager::Ref;
    using Vec = std::vector<Ref>;
    struct Key {
        Formula f;
        std::vector<int> blocks;
        bool operator==(const Key& o) const { return blocks == o.blocks && same(f, o.f); }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = k.f->hash;
            for (int b : k.blocks) h = h * 31 + static_cast<std::size_t>(b) + 7;
            return h;
        }
    };
    std::unique_ptr<BddManager> bdd_;
    int depth_ = 1;
    std::unordered_map<Key, Vec, KeyHash> memo_;
    std::size_t last_classes_ = 0;

    void compute_types();
    void check_agents(const Formula& f) const;
    void begin_session(const Formula& f);
    Vec ev(const Formula& f, const std::map<std::string, int>& env);
    Vec ev_forall(const Formula& f, const std::map<std::string, int>& env, std::optional<int> witness_state,
                  std::optional<Formula>* witness_out);
    std::vector<int> block_vars(int d) const;
    Formula resolve(const Formula& f, const ValuationSyn& V) const;

    // oracle
    struct OracleState;
    Verdict3 oracle_rec(OracleState& st, int s, const Formula& f, Formula* witness);
    bool class_complete(OracleState& st, const Formula& body, const std::string& x);
};

// free-function forms
bool eval_base(const Model& m, int s, const Formula& f);
std::vector<TruthProfile> realizable_profiles(const Model& m);
std::vector<SentenceClass> sentence_classes(const Model& m, const Formula& f, const std::string& x);
bool eval_exact(const Model& m, int s, const ValuationSyn& V, const Formula& f);
OracleResult eval_oracle(const Model& m, int s, const ValuationSyn& V, const Formula& f, std::size_t budget);
bool valid_in_structure(const Model& m, const Formula& f);

// Syntactic matching used by candidate generation: does chi match alpha when the
// variables in `pvars` are pattern variables bound to quantifier-free sentences?
bool match_context(const Formula& chi, const Formula& alpha, const std::vector<std::string>& pvars,
                   std::map<std::string, Formula>& binding);

}  // namespace qaware
