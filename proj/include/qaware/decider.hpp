#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qaware/formula.hpp"

namespace qaware {

// Validity in the single-agent fragment L_1^{forall,K} (no awareness operators) over
// Euclidean structures, by quantifier elimination to (p,k)-atoms.

enum class Variant { Ret, Et, E };
std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);  // "ret" | "et" | "e"; throws std::invalid_argument

// N-bounded count of a point atom, N = 2^level.
struct CountToken {
    enum Kind : std::uint8_t { E, C, Inf };
    Kind kind = E;
    int l = 0;  // E: the exact count (< N); C: N

    static CountToken e(int l) { return {E, l}; }
    static CountToken c(int n) { return {C, n}; }
    static CountToken inf() { return {Inf, 0}; }
    bool zero() const { return kind == E && l == 0; }
    bool operator==(const CountToken& o) const { return kind == o.kind && l == o.l; }
    bool operator!=(const CountToken& o) const { return !(*this == o); }
    bool operator<(const CountToken& o) const { return kind != o.kind ? kind < o.kind : l < o.l; }
    std::string str() const;
};

// all 2^k-bounded tokens: E_0 .. E_{N-1}, C_N, E_inf
std::vector<CountToken> count_tokens(int k);
// M_{l,N}: E_l if l < N, C_N otherwise
CountToken bounded(int l, int N);
// counts of disjoint sets of worlds (N-bounded); E_inf absorbs into any describable count
CountToken add_counts(CountToken a, CountToken b, int N);
// re-bound a 2^k count at level j <= k
CountToken truncate_count(CountToken c, int j);

// Where the evaluation world s0 sits: indistinguishable from a world it considers possible
// (S), from a world of the second cluster only (New, variant e), or from neither (None).
enum class Position : std::uint8_t { S, New, None };

struct AtomDescriptor {
    Variant variant = Variant::Ret;
    int level = 0;
    unsigned point = 0;               // bit i set iff p_i holds
    std::vector<CountToken> counts;   // per point atom, worlds in K(s0)
    std::vector<CountToken> extra;    // variant e: worlds in K(K(s0)) of types not in K(s0); else all E_0
    Position pos = Position::S;

    bool indist() const { return pos == Position::S; }
    bool indist_kk() const { return pos != Position::None; }
    std::vector<CountToken> counts_kk() const;  // K K-counts: counts + extra
    bool operator==(const AtomDescriptor& o) const;
    bool operator<(const AtomDescriptor& o) const;
    std::string str(const std::vector<std::string>& p) const;
};

// atom invariants for the variant; empty string when fine
std::string atom_violation(const AtomDescriptor& a, std::size_t m);

std::vector<AtomDescriptor> atoms(const std::vector<std::string>& p, int k, Variant v);
std::size_t atoms_count(std::size_t m, int k, Variant v);

// A => !K!A2
bool possible(const AtomDescriptor& a, const AtomDescriptor& a2);
// K-successor atoms of A: the possible ones
std::vector<AtomDescriptor> successors(const AtomDescriptor& a, std::size_t m);

// c is 2^{k+1}-bounded, the parts 2^k-bounded. With literal = true an E_inf count only splits
// as (E_inf, E_inf); by default the splits with one empty side are admitted too.
bool x_partition(CountToken c, CountToken plus, CountToken minus, int k, bool literal = false);
std::vector<std::pair<CountToken, CountToken>> x_partitions(CountToken c, int k, bool literal = false);
// B over p.x (x is the last entry, bit m) at level k, A over p at level k+1
bool x_compatible(const AtomDescriptor& b, const AtomDescriptor& a, std::size_t m, bool literal = false);

struct AtSet {
    int level = 0;
    std::vector<std::string> p;
    std::vector<AtomDescriptor> atoms;  // sorted
};

struct DeciderOptions {
    bool literal_inf_split = false;
};

class Decider {
public:
    explicit Decider(Variant v, DeciderOptions opt = {});

    Variant variant() const { return v_; }
    // truth of f at (any world satisfying) atom a over p; f's free atoms must be in p
    bool eval(const Formula& f, const AtomDescriptor& a, const std::vector<std::string>& p);
    // the same through the dual recursion (evaluates !f by pushing the negation inward)
    bool eval_neg(const Formula& f, const AtomDescriptor& a, const std::vector<std::string>& p);

    AtSet at_set(const Formula& f, const std::vector<std::string>& p, int k);
    AtSet at_set_neg(const Formula& f, const std::vector<std::string>& p, int k);

    struct Report {
        bool valid = false;
        std::size_t atoms_total = 0;
        std::size_t atoms_satisfying = 0;
        int level = 0;
        std::vector<std::string> p;
        std::optional<AtomDescriptor> failing;
    };
    // open formulas are closed universally first
    Report decide(const Formula& f);
    std::size_t memo_size() const { return memo_.size(); }

private:
    Variant v_;
    DeciderOptions opt_;
    struct Key {
        const Node* f;
        bool neg;
        std::string atom;
        bool operator==(const Key& o) const { return f == o.f && neg == o.neg && atom == o.atom; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return std::hash<const void*>()(k.f) * 3 + k.neg + std::hash<std::string>()(k.atom) * 7;
        }
    };
    std::unordered_map<Key, bool, KeyHash> memo_;
    std::vector<Formula> keep_;  // keeps memo keys alive

    bool ev(const Formula& f, bool neg, const AtomDescriptor& a, const std::vector<std::string>& p);
};

bool decide_valid(const Formula& f, Variant v);
AtSet at_set(const Formula& f, const std::vector<std::string>& p, int k, Variant v);

// Raises unless f is in the decidable fragment (single agent, no A/X).
void check_fragment(const Formula& f);

// Abbreviations, expanded literally (for cross-checks with the model checker).
Formula build_describable(const Formula& f);
Formula build_count(CountToken c, const Formula& f);
Formula build_indist();
Formula build_point_atom(unsigned point, const std::vector<std::string>& p);
Formula expand_atom(const AtomDescriptor& a, const std::vector<std::string>& p);

}  // namespace qaware
