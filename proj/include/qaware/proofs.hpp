#pragma once

#include <nlohmann/json.hpp>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qaware/formula.hpp"

namespace qaware {

// Hilbert-style proofs in K_n with quantifiers, plus optional T/4/5 and awareness axioms.

enum class Rule {
    Prop, K, T, Four, Five, A0, OneForall, KForall, NForall, Barcan,
    MP, GenK, GenForall, KA1, KA2, GPP, A1, A2, A3, A4, A5, A6, A7
};
std::string rule_name(Rule r);
Rule parse_rule(const std::string& s);  // throws std::invalid_argument

// system tags: T 4 5 KA GPP A1..A7, and noBarcan to drop the Barcan axiom
const std::set<std::string>& known_system_tags();
bool rule_enabled(Rule r, const std::set<std::string>& system);

struct ProofStep {
    Formula formula;
    Rule rule = Rule::Prop;
    std::vector<int> premises;
    Formula psi;        // optional instantiation for 1-forall / A7
    std::string note;
};

struct ProofScript {
    std::set<std::string> system;
    std::vector<ProofStep> steps;
};

ProofScript script_from_json(const nlohmann::json& j);  // throws std::invalid_argument / ParseError
ProofScript load_script(const std::string& path);
nlohmann::json script_to_json(const ProofScript& s);

// Propositional tautology after abstracting every maximal subformula not headed by !/& as an atom.
// Throws std::length_error past 20 atoms.
bool is_tautology(const Formula& f);

struct AxiomMatch {
    bool ok = false;
    std::string reason;      // why not, or a flag worth reporting
};
AxiomMatch match_axiom(Rule r, const Formula& f, const Formula& psi = nullptr);

struct ProofVerdict {
    bool accepted = false;
    Formula theorem;
    int failed_step = -1;
    std::string message;
    std::vector<std::string> notes;
    nlohmann::json to_json() const;
};
ProofVerdict check_proof(const ProofScript& s);

// A single-step corruption that the kernel must reject. The description says what changed.
ProofScript mutate_script(const ProofScript& s, std::mt19937_64& rng, std::string* description = nullptr);

}  // namespace qaware
