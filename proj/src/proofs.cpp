#include "qaware/proofs.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace qaware {

namespace {

const std::vector<std::pair<Rule, std::string>>& rule_table() {
    static const std::vector<std::pair<Rule, std::string>> t = {
        {Rule::Prop, "Prop"},       {Rule::K, "K"},           {Rule::T, "T"},
        {Rule::Four, "Four"},       {Rule::Five, "Five"},     {Rule::A0, "A0"},
        {Rule::OneForall, "OneForall"}, {Rule::KForall, "KForall"}, {Rule::NForall, "NForall"},
        {Rule::Barcan, "Barcan"},   {Rule::MP, "MP"},         {Rule::GenK, "GenK"},
        {Rule::GenForall, "GenForall"}, {Rule::KA1, "KA1"},   {Rule::KA2, "KA2"},
        {Rule::GPP, "GPP"},         {Rule::A1, "A1"},         {Rule::A2, "A2"},
        {Rule::A3, "A3"},           {Rule::A4, "A4"},         {Rule::A5, "A5"},
        {Rule::A6, "A6"},           {Rule::A7, "A7"},
    };
    return t;
}

// the tag a rule needs, empty for the base system
std::string required_tag(Rule r) {
    switch (r) {
    case Rule::T:
        return "T";
    case Rule::Four:
        return "4";
    case Rule::Five:
        return "5";
    case Rule::KA1:
    case Rule::KA2:
        return "KA";
    case Rule::GPP:
        return "GPP";
    case Rule::A1:
    case Rule::A2:
    case Rule::A3:
    case Rule::A4:
    case Rule::A5:
    case Rule::A6:
    case Rule::A7:
        return rule_name(r);
    default:
        return "";
    }
}

int premise_count(Rule r) {
    switch (r) {
    case Rule::MP:
        return 2;
    case Rule::GenK:
    case Rule::GenForall:
        return 1;
    default:
        return 0;
    }
}

}  // namespace

std::string rule_name(Rule r) {
    for (const auto& [k, v] : rule_table())
        if (k == r) return v;
    return "?";
}

Rule parse_rule(const std::string& s) {
    for (const auto& [k, v] : rule_table())
        if (v == s) return k;
    if (s == "4") return Rule::Four;
    if (s == "5") return Rule::Five;
    if (s == "1Forall") return Rule::OneForall;
    throw std::invalid_argument("unknown rule '" + s + "'");
}

const std::set<std::string>& known_system_tags() {
    static const std::set<std::string> t = {"T",  "4",  "5",  "KA", "GPP", "A1", "A2",
                                            "A3", "A4", "A5", "A6", "A7", "noBarcan"};
    return t;
}

bool rule_enabled(Rule r, const std::set<std::string>& system) {
    if (r == Rule::Barcan) return !system.count("noBarcan");
    std::string tag = required_tag(r);
    return tag.empty() || system.count(tag) > 0;
}

// ---------------------------------------------------------------- JSON

ProofScript script_from_json(const nlohmann::json& j) {
    ProofScript s;
    if (j.contains("system")) {
        for (const auto& t : j["system"]) {
            std::string tag = t.get<std::string>();
            if (!known_system_tags().count(tag)) throw std::invalid_argument("unknown system tag '" + tag + "'");
            s.system.insert(tag);
        }
    }
    if (!j.contains("steps") || !j["steps"].is_array()) throw std::invalid_argument("proof needs a steps array");
    for (const auto& js : j["steps"]) {
        ProofStep st;
        st.formula = parse(js.at("formula").get<std::string>());
        st.rule = parse_rule(js.at("rule").get<std::string>());
        if (js.contains("premises"))
            for (const auto& p : js["premises"]) st.premises.push_back(p.get<int>());
        if (js.contains("psi")) st.psi = parse(js["psi"].get<std::string>());
        if (js.contains("note")) st.note = js["note"].get<std::string>();
        s.steps.push_back(std::move(st));
    }
    return s;
}

ProofScript load_script(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return script_from_json(nlohmann::json::parse(in));
}

nlohmann::json script_to_json(const ProofScript& s) {
    nlohmann::json j;
    j["system"] = std::vector<std::string>(s.system.begin(), s.system.end());
    j["steps"] = nlohmann::json::array();
    for (const auto& st : s.steps) {
        nlohmann::json js{{"formula", print(st.formula)}, {"rule", rule_name(st.rule)}, {"premises", st.premises}};
        if (st.psi) js["psi"] = print(st.psi);
        if (!st.note.empty()) js["note"] = st.note;
        j["steps"].push_back(js);
    }
    return j;
}

// ---------------------------------------------------------------- tautologies

namespace {

void collect_atoms(const Formula& f, std::vector<Formula>& atoms,
                   std::unordered_map<Formula, int, FormulaHash, FormulaEq>& index) {
    if (f->op == Op::Not) return collect_atoms(f->a, atoms, index);
    if (f->op == Op::And) {
        collect_atoms(f->a, atoms, index);
        collect_atoms(f->b, atoms, index);
        return;
    }
    if (index.emplace(f, static_cast<int>(atoms.size())).second) atoms.push_back(f);
}

bool tv(const Formula& f, std::uint32_t assignment,
        const std::unordered_map<Formula, int, FormulaHash, FormulaEq>& index) {
    if (f->op == Op::Not) return !tv(f->a, assignment, index);
    if (f->op == Op::And) return tv(f->a, assignment, index) && tv(f->b, assignment, index);
    return (assignment >> index.at(f)) & 1u;
}

}  // namespace

bool is_tautology(const Formula& f) {
    std::vector<Formula> atoms;
    std::unordered_map<Formula, int, FormulaHash, FormulaEq> index;
    collect_atoms(f, atoms, index);
    if (atoms.size() > 20) throw std::length_error("more than 20 propositional atoms");
    std::uint32_t n = 1u << atoms.size();
    for (std::uint32_t a = 0; a < n; ++a)
        if (!tv(f, a, index)) return false;
    return true;
}

// ---------------------------------------------------------------- axioms

namespace {

AxiomMatch yes() { return {true, ""}; }
AxiomMatch no(std::string why) { return {false, std::move(why)}; }

bool as_not(const Formula& f, Formula& body) {
    if (f->op != Op::Not) return false;
    body = f->a;
    return true;
}

bool is_op(const Formula& f, Op op, int agent = 0) { return f->op == op && (agent == 0 || f->agent == agent); }

// Finds psi with phi[x/psi] == target. found stays false when x does not occur free in phi.
bool infer_instance(const Formula& phi, const std::string& x, const Formula& target, Formula& psi, bool& found) {
    if (!occurs_free(phi, x)) return same(phi, target);
    if (phi->op == Op::Var) {
        if (found) return same(psi, target);
        psi = target;
        found = true;
        return true;
    }
    if (phi->op != target->op || phi->agent != target->agent || phi->name != target->name) return false;
    if (phi->a && !infer_instance(phi->a, x, target->a, psi, found)) return false;
    if (phi->b && !infer_instance(phi->b, x, target->b, psi, found)) return false;
    return true;
}

// lhs[x/psi] == rhs, psi inferred unless given
AxiomMatch instance_of(const Formula& body, const std::string& x, const Formula& inst, const Formula& given,
                       Formula& psi) {
    if (given) {
        psi = given;
        if (!substitutable(body, x, psi)) return no("?" + x + " := " + print(psi) + " is not substitutable (capture)");
        if (!same(substitute(body, x, psi), inst)) return no("the instance is not the annotated substitution");
        return yes();
    }
    bool found = false;
    if (!infer_instance(body, x, inst, psi, found)) return no("the instance does not match the quantified body");
    if (!found) {
        psi = nullptr;
        return yes();
    }
    if (!substitutable(body, x, psi)) return no("?" + x + " := " + print(psi) + " is not substitutable (capture)");
    return yes();
}

void collect_conjuncts(const Formula& f, std::vector<Formula>& out) {
    if (f->op == Op::And) {
        collect_conjuncts(f->a, out);
        collect_conjuncts(f->b, out);
    } else {
        out.push_back(f);
    }
}

AxiomMatch match_k(const Formula& f) {
    Formula l, r;
    if (!as_implies(f, l, r)) return no("not an implication");
    // (K_i phi & K_i(phi -> psi)) -> K_i psi
    if (is_op(r, Op::K) && l->op == Op::And && is_op(l->a, Op::K, r->agent) && is_op(l->b, Op::K, r->agent)) {
        Formula p, q;
        if (as_implies(l->b->a, p, q) && same(p, l->a->a) && same(q, r->a)) return yes();
    }
    // K_i(phi -> psi) -> (K_i phi -> K_i psi), the usual textbook form
    Formula kp, kq;
    if (is_op(l, Op::K) && as_implies(r, kp, kq) && is_op(kp, Op::K, l->agent) && is_op(kq, Op::K, l->agent)) {
        Formula p, q;
        if (as_implies(l->a, p, q) && same(p, kp->a) && same(q, kq->a)) return yes();
    }
    return no("not of the form (K_i phi & K_i(phi -> psi)) -> K_i psi");
}

// A_i phi <-> A_i op phi
AxiomMatch match_a_collapse(const Formula& f, Op inner, const char* shape) {
    Formula l, r;
    if (!as_iff(f, l, r) || !is_op(l, Op::A) || !is_op(r, Op::A, l->agent)) return no(std::string("not ") + shape);
    Formula body = l->a;
    bool ok = false;
    if (inner == Op::Not) {
        Formula b;
        ok = as_not(body, b) && same(b, r->a);
    } else {
        ok = body->op == inner && same(body->a, r->a);
    }
    return ok ? yes() : no(std::string("not ") + shape);
}

}  // namespace

AxiomMatch match_axiom(Rule rule, const Formula& f, const Formula& given_psi) {
    Formula l, r;
    switch (rule) {
    case Rule::Prop:
        return is_tautology(f) ? yes() : no("not a propositional tautology");
    case Rule::K:
        return match_k(f);
    case Rule::T:
        if (as_implies(f, l, r) && is_op(l, Op::K) && same(l->a, r)) return yes();
        return no("not K_i phi -> phi");
    case Rule::Four:
        if (as_implies(f, l, r) && is_op(l, Op::K) && is_op(r, Op::K, l->agent) && is_op(r->a, Op::K, l->agent) &&
            same(r->a->a, l->a))
            return yes();
        return no("not K_i phi -> K_i K_i phi");
    case Rule::Five: {
        Formula kl, nk;
        if (as_implies(f, l, r) && as_not(l, kl) && is_op(kl, Op::K) && is_op(r, Op::K, kl->agent) &&
            as_not(r->a, nk) && same(nk, kl))
            return yes();
        return no("not !K_i phi -> K_i !K_i phi");
    }
    case Rule::A0:
        if (as_iff(f, l, r) && is_op(l, Op::X) && r->op == Op::And && is_op(r->a, Op::K, l->agent) &&
            is_op(r->b, Op::A, l->agent) && same(r->a->a, l->a) && same(r->b->a, l->a))
            return yes();
        return no("not X_i phi <-> K_i phi & A_i phi");
    case Rule::OneForall: {
        if (!as_implies(f, l, r) || l->op != Op::Forall) return no("not forall x . phi -> phi[x/psi]");
        Formula psi;
        AxiomMatch m = instance_of(l->a, l->name, r, given_psi, psi);
        if (!m.ok) return m;
        if (psi && !is_quantifier_free(psi)) return no("psi = " + print(psi) + " is not quantifier-free");
        return yes();
    }
    case Rule::KForall: {
        Formula p, q, lp, lq;
        if (as_implies(f, l, r) && l->op == Op::Forall && as_implies(l->a, p, q) && as_implies(r, lp, lq) &&
            lp->op == Op::Forall && lq->op == Op::Forall && lp->name == l->name && lq->name == l->name &&
            same(lp->a, p) && same(lq->a, q))
            return yes();
        return no("not forall x(phi -> psi) -> (forall x . phi -> forall x . psi)");
    }
    case Rule::NForall:
        if (!as_implies(f, l, r) || r->op != Op::Forall || !same(r->a, l)) return no("not phi -> forall x . phi");
        if (occurs_free(l, r->name)) return no("?" + r->name + " is free in phi");
        return yes();
    case Rule::Barcan:
        if (as_implies(f, l, r) && l->op == Op::Forall && is_op(l->a, Op::K) && is_op(r, Op::K, l->a->agent) &&
            r->a->op == Op::Forall && r->a->name == l->name && same(r->a->a, l->a->a))
            return yes();
        return no("not forall x . K_i phi -> K_i forall x . phi");
    case Rule::KA1:
        if (as_implies(f, l, r) && is_op(l, Op::A) && is_op(r, Op::K, l->agent) && same(r->a, l)) return yes();
        return no("not A_i phi -> K_i A_i phi");
    case Rule::KA2: {
        Formula al;
        if (as_implies(f, l, r) && as_not(l, al) && is_op(al, Op::A) && is_op(r, Op::K, al->agent) && same(r->a, l))
            return yes();
        return no("not !A_i phi -> K_i !A_i phi");
    }
    case Rule::GPP: {
        if (!as_iff(f, l, r) || !is_op(l, Op::A)) return no("not A_i phi <-> (conjunction of A_i p)");
        const auto& props = l->a->props;
        AxiomMatch ok = yes();
        if (!is_quantifier_free(l->a)) ok.reason = "quantified phi in a GPP instance";
        if (props.empty()) {
            if (mentions_awareness(r) || !is_tautology(r)) return no("no propositions occur: the right side must be verum");
            return ok;
        }
        std::vector<Formula> cs;
        collect_conjuncts(r, cs);
        std::set<std::string> seen;
        for (const auto& c : cs) {
            if (!is_op(c, Op::A, l->agent) || c->a->op != Op::Prop)
                return no("conjunct " + print(c) + " is not A_i p");
            seen.insert(c->a->name);
        }
        if (seen != std::set<std::string>(props.begin(), props.end()))
            return no("the conjunction does not range exactly over the propositions of phi");
        return ok;
    }
    case Rule::A1:
        if (as_iff(f, l, r) && is_op(l, Op::A) && l->a->op == Op::And && r->op == Op::And &&
            is_op(r->a, Op::A, l->agent) && is_op(r->b, Op::A, l->agent) && same(r->a->a, l->a->a) &&
            same(r->b->a, l->a->b))
            return yes();
        return no("not A_i(phi & psi) <-> A_i phi & A_i psi");
    case Rule::A2:
        return match_a_collapse(f, Op::Not, "A_i !phi <-> A_i phi");
    case Rule::A3:
        return match_a_collapse(f, Op::X, "A_i X_j phi <-> A_i phi");
    case Rule::A4:
        return match_a_collapse(f, Op::A, "A_i A_j phi <-> A_i phi");
    case Rule::A5:
        return match_a_collapse(f, Op::K, "A_i K_j phi <-> A_i phi");
    case Rule::A6:
        if (!as_implies(f, l, r) || !is_op(l, Op::A) || !is_op(r, Op::A, l->agent) || r->a->op != Op::Prop)
            return no("not A_i phi -> A_i p");
        if (!std::binary_search(l->a->props.begin(), l->a->props.end(), r->a->name))
            return no(r->a->name + " does not occur in phi");
        return yes();
    case Rule::A7: {
        std::string x;
        Formula body;
        if (!as_implies(f, l, r) || !is_op(l, Op::A) || !is_op(r, Op::A, l->agent) || !as_exists(r->a, x, body))
            return no("not A_i phi[x/psi] -> A_i exists x . phi");
        Formula psi;
        AxiomMatch m = instance_of(body, x, l->a, given_psi, psi);
        if (!m.ok) return m;
        if (psi && (!is_quantifier_free(psi) || !is_sentence(psi)))
            return no("psi = " + print(psi) + " is not a quantifier-free sentence");
        return yes();
    }
    case Rule::MP:
    case Rule::GenK:
    case Rule::GenForall:
        return no(rule_name(rule) + " is an inference rule, not an axiom");
    }
    return no("unknown rule");
}

// ---------------------------------------------------------------- proofs

nlohmann::json ProofVerdict::to_json() const {
    nlohmann::json j{{"accepted", accepted}, {"message", message}, {"notes", notes}};
    j["theorem"] = theorem ? nlohmann::json(print(theorem)) : nlohmann::json(nullptr);
    if (failed_step >= 0) j["failed_step"] = failed_step;
    return j;
}

ProofVerdict check_proof(const ProofScript& s) {
    ProofVerdict v;
    auto fail = [&](int i, const std::string& msg) {
        v.accepted = false;
        v.failed_step = i;
        v.message = "step " + std::to_string(i) + " (" + rule_name(s.steps[i].rule) + "): " + msg;
        return v;
    };
    if (s.steps.empty()) {
        v.message = "empty proof";
        return v;
    }
    for (int i = 0; i < static_cast<int>(s.steps.size()); ++i) {
        const ProofStep& st = s.steps[i];
        if (!rule_enabled(st.rule, s.system)) return fail(i, "rule not enabled in this system");
        if (static_cast<int>(st.premises.size()) != premise_count(st.rule))
            return fail(i, "expected " + std::to_string(premise_count(st.rule)) + " premises");
        for (int p : st.premises)
            if (p < 0 || p >= i) return fail(i, "premise " + std::to_string(p) + " does not precede the step");
        const Formula& f = st.formula;
        switch (st.rule) {
        case Rule::MP: {
            const Formula& a = s.steps[st.premises[0]].formula;
            const Formula& b = s.steps[st.premises[1]].formula;
            Formula l, r;
            bool ok = (as_implies(b, l, r) && same(l, a) && same(r, f)) ||
                      (as_implies(a, l, r) && same(l, b) && same(r, f));
            if (!ok) return fail(i, "premises are not phi and phi -> " + print(f));
            break;
        }
        case Rule::GenK: {
            const Formula& a = s.steps[st.premises[0]].formula;
            if (f->op != Op::K || !same(f->a, a)) return fail(i, "conclusion is not K_i of the premise");
            break;
        }
        case Rule::GenForall: {
            const Formula& a = s.steps[st.premises[0]].formula;
            if (f->op != Op::Forall || !same(f->a, a)) return fail(i, "conclusion is not forall x of the premise");
            break;
        }
        default: {
            AxiomMatch m;
            try {
                m = match_axiom(st.rule, f, st.psi);
            } catch (const std::exception& e) {
                return fail(i, e.what());
            }
            if (!m.ok) return fail(i, m.reason);
            if (!m.reason.empty()) v.notes.push_back("step " + std::to_string(i) + ": " + m.reason);
        }
        }
    }
    v.accepted = true;
    v.theorem = s.steps.back().formula;
    v.message = "accepted";
    return v;
}

// ---------------------------------------------------------------- mutations

ProofScript mutate_script(const ProofScript& s, std::mt19937_64& rng, std::string* description) {
    if (s.steps.empty()) throw std::invalid_argument("nothing to mutate");
    enum Kind { Negate, BadPremise, QuantifiedPsi, FreeInN, DropTag, OpenPsi };
    std::uniform_int_distribution<std::size_t> pick_step(0, s.steps.size() - 1);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::size_t i = pick_step(rng);
        const ProofStep& st = s.steps[i];
        std::vector<Kind> kinds{Negate};
        Formula l, r;
        if (!st.premises.empty()) kinds.push_back(BadPremise);
        if (st.rule == Rule::OneForall && as_implies(st.formula, l, r) && occurs_free(l->a, l->name))
            kinds.push_back(QuantifiedPsi);
        if (st.rule == Rule::NForall) kinds.push_back(FreeInN);
        if (!required_tag(st.rule).empty() || st.rule == Rule::Barcan) kinds.push_back(DropTag);
        std::string ax;
        Formula ab;
        if (st.rule == Rule::A7 && as_implies(st.formula, l, r) && as_exists(r->a, ax, ab) && occurs_free(ab, ax))
            kinds.push_back(OpenPsi);
        Kind k = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];

        ProofScript out = s;
        ProofStep& m = out.steps[i];
        std::string what;
        switch (k) {
        case Negate:
            m.formula = neg(st.formula);
            what = "negated the formula";
            break;
        case BadPremise:
            m.premises[0] = static_cast<int>(i);
            what = "premise points at the step itself";
            break;
        case QuantifiedPsi: {
            Formula body = l->a;
            Formula q = forall("z9", var("z9"));
            m.formula = implies(l, substitute(body, l->name, q));
            m.psi = nullptr;
            what = "instantiated with a quantified formula";
            break;
        }
        case FreeInN: {
            as_implies(st.formula, l, r);
            Formula b = conj(l, var(r->name));
            m.formula = implies(b, forall(r->name, b));
            what = "bound variable made free in phi";
            break;
        }
        case DropTag:
            if (st.rule == Rule::Barcan) {
                out.system.insert("noBarcan");
                what = "disabled Barcan";
            } else {
                out.system.erase(required_tag(st.rule));
                what = "removed tag " + required_tag(st.rule);
            }
            break;
        case OpenPsi: {
            Formula open = var(fresh_var({st.formula}, "w"));
            m.formula = implies(A(l->agent, substitute(ab, ax, open)), r);
            m.psi = nullptr;
            what = "instantiated with an open formula";
            break;
        }
        }
        if (description) *description = "step " + std::to_string(i) + ": " + what;
        return out;
    }
    throw std::runtime_error("no mutation found");
}

}  // namespace qaware
