#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qaware/formula.hpp"
#include "qaware/model.hpp"

namespace qaware {

// closes each successor list under the properties in c (reflexive, transitive, Euclidean)
void close_relation(std::vector<StateSet>& succ, int n, const RelClass& c);

struct RandomStructureSpec {
    int max_states = 4;
    int props = 3;                 // vocab p0..p{props-1}
    int agents = 2;
    RelClass cls;                  // every agent's relation is closed under this
    bool awareness = true;         // random aware sets drawn from a small formula pool
    int max_aware = 4;             // per agent and state
    double edge_prob = 0.4;
};

AwarenessStructure random_structure(std::mt19937_64& rng, const RandomStructureSpec& spec);

// Awareness generated by primitive propositions, cut off at a size bound: each agent and state
// gets a random subset P of the vocabulary and every sentence over P (variable ?x) of size <= bound.
AwarenessStructure random_gpp_structure(std::mt19937_64& rng, const RandomStructureSpec& spec, int bound);

// Random formulas for cross-checks. Vars are drawn from {x, y}; free occurrences are left
// open only when allow_open is set.
struct RandomFormulaSpec {
    std::vector<std::string> props{"p0", "p1"};
    int agents = 1;
    int max_qdepth = 2;
    int max_size = 12;
    bool awareness = true;   // use A_i / X_i
    bool allow_open = false;
};
Formula random_formula(std::mt19937_64& rng, const RandomFormulaSpec& spec);

struct SearchConfig {
    int max_states = 4;
    RelClass cls;                 // required properties of every agent's relation
    int vocab_size = 0;           // extra marker propositions; 0 means one per state
    std::uint64_t seed = 0;
    std::size_t max_structures = 20000;
};

struct SearchResult {
    bool found = false;
    AwarenessStructure model;
    std::string state;
    std::size_t examined = 0;
};

// First structure (in a fixed enumeration, then seeded random sampling) with a state where f
// is false. For single-agent formulas without awareness operators the enumeration covers the
// Euclidean shapes: s0 seeing a cluster S, S seeing S plus a second set S'.
SearchResult search_countermodel(const Formula& f, const SearchConfig& cfg);

}  // namespace qaware
