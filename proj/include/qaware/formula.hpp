#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qaware {

enum class Op : std::uint8_t { Prop, Var, Not, And, K, A, X, Forall };

struct Node;
using Formula = std::shared_ptr<const Node>;

// Immutable AST node. Sugar (|, ->, <->, exists) is desugared on construction.
struct Node {
    Op op;
    int agent = 0;            // K/A/X
    std::string name;         // Prop/Var name, or the bound variable of Forall
    Formula a, b;             // children
    std::size_t hash = 0;
    int size = 1;             // node count
    int qdepth = 0;
    std::vector<std::string> free;  // sorted free variables
    std::vector<std::string> props; // sorted propositions occurring anywhere
};

Formula prop(const std::string& name);
Formula var(const std::string& name);
Formula neg(Formula f);
Formula conj(Formula f, Formula g);
Formula K(int i, Formula f);
Formula A(int i, Formula f);
Formula X(int i, Formula f);
Formula forall(const std::string& x, Formula f);

Formula disj(Formula f, Formula g);
Formula implies(Formula f, Formula g);
Formula iff(Formula f, Formula g);
Formula exists(const std::string& x, Formula f);
Formula conj_all(const std::vector<Formula>& fs);  // left-nested; needs a nonempty list

bool same(const Formula& f, const Formula& g);
struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f->hash; }
};
struct FormulaEq {
    bool operator()(const Formula& f, const Formula& g) const { return same(f, g); }
};
// total order, used for deterministic containers
bool formula_less(const Formula& f, const Formula& g);

// sugar recognizers, mirroring the constructors above
bool as_implies(const Formula& f, Formula& lhs, Formula& rhs);
bool as_iff(const Formula& f, Formula& lhs, Formula& rhs);
bool as_or(const Formula& f, Formula& lhs, Formula& rhs);
bool as_exists(const Formula& f, std::string& x, Formula& body);

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int l, int c);
};

// n_agents == 0 leaves agent indices unchecked
Formula parse(const std::string& text, int n_agents = 0);
std::string print(const Formula& f);

inline bool is_sentence(const Formula& f) { return f->free.empty(); }
bool is_quantifier_free(const Formula& f);
inline int qdepth(const Formula& f) { return f->qdepth; }
const std::vector<std::string>& free_vars(const Formula& f);
bool occurs_free(const Formula& f, const std::string& x);
int max_agent(const Formula& f);
bool mentions_awareness(const Formula& f);  // any A_i or X_i
std::vector<std::string> all_vars(const Formula& f);  // free and bound

struct CaptureError : std::runtime_error {
    std::string captured;
    explicit CaptureError(const std::string& var);
};

bool substitutable(const Formula& f, const std::string& x, const Formula& g);
Formula substitute(const Formula& f, const std::string& x, const Formula& g);
// simultaneous substitution
Formula substitute(const Formula& f, const std::map<std::string, Formula>& sub);

// A variable name not occurring (free or bound) in any of the given formulas.
std::string fresh_var(const std::vector<Formula>& avoid, const std::string& base = "y");

// Canonical enumeration of quantifier-free sentences over vocab with agents 1..n_agents,
// ordered by node count, then by std::string comparison of print().
Formula enumerate_qf_sentences(const std::vector<std::string>& vocab, std::size_t index,
                               int n_agents = 1);
// Inverse of the above. nullopt if f is not in the enumerated set.
std::optional<std::size_t> enum_index(const std::vector<std::string>& vocab, const Formula& f,
                                      int n_agents = 1);
// number of sentences of exactly the given size
std::size_t enum_level_count(const std::vector<std::string>& vocab, int size, int n_agents = 1);

class ValuationSyn {
public:
    ValuationSyn();
    void set(const std::string& x, Formula f);  // throws unless f is a qf sentence
    Formula operator()(const std::string& x) const;
    const std::map<std::string, Formula>& overrides() const { return over_; }

private:
    std::map<std::string, Formula> over_;
    Formula dflt_;
};

}  // namespace qaware
