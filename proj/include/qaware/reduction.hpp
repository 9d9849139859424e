#pragma once

#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <random>
#include <string>
#include <vector>

#include "qaware/formula.hpp"
#include "qaware/model.hpp"

namespace qaware {

// First-order formulas over one binary predicate R (no equality, constants or functions).
enum class ROp : std::uint8_t { Atom, Not, And, Or, Forall, Exists };

struct RNode;
using RFormula = std::shared_ptr<const RNode>;
struct RNode {
    ROp op;
    std::string x, y;  // Atom: R(x,y); Forall/Exists: x is the bound variable
    RFormula a, b;
};

RFormula r_atom(const std::string& x, const std::string& y);
RFormula r_not(RFormula a);
RFormula r_and(RFormula a, RFormula b);
RFormula r_or(RFormula a, RFormula b);
RFormula r_forall(const std::string& x, RFormula a);
RFormula r_exists(const std::string& x, RFormula a);

RFormula parse_rformula(const std::string& text);  // throws ParseError
std::string print(const RFormula& f);
std::vector<std::string> r_free_vars(const RFormula& f);
int r_qdepth(const RFormula& f);
bool is_nnf(const RFormula& f);
RFormula nnf(const RFormula& f);

struct RModel {
    std::vector<std::string> domain;
    std::vector<std::pair<int, int>> rel;  // indices into domain
    bool holds(int a, int b) const;
};
RModel rmodel_from_json(const nlohmann::json& j);  // {domain: [...], rel: [[a,b],...]}
RModel load_rmodel(const std::string& path);
nlohmann::json rmodel_to_json(const RModel& n);

bool fo_eval(const RModel& n, const std::map<std::string, int>& V, const RFormula& f);

// ---- the awareness reduction

// The surjection from quantifier-free sentences onto the domain: the sentence with
// enumeration index i goes to domain[i mod |D|].
class LMap {
public:
    LMap(std::size_t domain_size, std::vector<std::string> vocab = {"p"});
    int class_of(const Formula& psi) const;     // throws std::domain_error outside the vocabulary
    Formula representative(int d) const;        // least-index sentence with class d
    std::size_t size() const { return n_; }

private:
    std::size_t n_;
    std::vector<std::string> vocab_;
};

struct MN51 {
    RModel n;
    LMap lmap;
    std::vector<std::pair<int, int>> states;  // (d1, d2)
    int state_of(int d1, int d2) const { return d1 * static_cast<int>(n.domain.size()) + d2; }
    // A((d1,d2)) membership
    bool aware(int s, const Formula& f) const;
    std::string state_name(int s) const;
};

Formula translate_t51(const RFormula& f);  // needs nnf
Formula sigma_t51();
MN51 build_MN_t51(const RModel& n);
// Evaluates quantifiers over the representatives only (one per L-class).
bool quotient_eval(const MN51& m, int s, const Formula& f, const std::map<std::string, Formula>& V = {});

// ---- the two-agent reduction (and its single-agent variant)

Formula atomic_t52(const std::string& x, int agents);
Formula translate_t52(const RFormula& f, int agents);  // needs nnf
Formula sigma1_t52(int agents);
Formula sigma2_t52(int agents);
Formula sigma_t52(int agents);
// vocab p, q, r and one marker proposition per domain element; no awareness
AwarenessStructure build_MN_t52(const RModel& n, int agents);
std::string pair_state(const RModel& n, int d1, int d2);

enum class Reduction { T51, T52, T52Single };
Reduction parse_reduction(const std::string& s);  // t51 | t52 | t52s
std::string reduction_name(Reduction r);

struct EquivReport {
    bool fo = false;
    bool modal = false;
    bool agree = false;
    bool sigma = false;          // sigma holds at the evaluation state
    bool homogeneous = true;     // t51: same truth value at every state
    std::string state;
    std::string translated;
    nlohmann::json to_json() const;
};
EquivReport check_equiv(const RModel& n, const RFormula& f, Reduction which);

RModel random_rmodel(std::mt19937_64& rng, int max_domain);
RFormula random_rsentence(std::mt19937_64& rng, int max_qdepth, int max_size);

}  // namespace qaware
