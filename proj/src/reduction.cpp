#include "qaware/reduction.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <stdexcept>

#include "qaware/checker.hpp"

namespace qaware {

// ---------------------------------------------------------------- R-formulas

namespace {

RFormula mk(ROp op, std::string x, std::string y, RFormula a, RFormula b) {
    return std::make_shared<const RNode>(RNode{op, std::move(x), std::move(y), std::move(a), std::move(b)});
}

}  // namespace

RFormula r_atom(const std::string& x, const std::string& y) { return mk(ROp::Atom, x, y, nullptr, nullptr); }
RFormula r_not(RFormula a) { return mk(ROp::Not, "", "", std::move(a), nullptr); }
RFormula r_and(RFormula a, RFormula b) { return mk(ROp::And, "", "", std::move(a), std::move(b)); }
RFormula r_or(RFormula a, RFormula b) { return mk(ROp::Or, "", "", std::move(a), std::move(b)); }
RFormula r_forall(const std::string& x, RFormula a) { return mk(ROp::Forall, x, "", std::move(a), nullptr); }
RFormula r_exists(const std::string& x, RFormula a) { return mk(ROp::Exists, x, "", std::move(a), nullptr); }

namespace {

class RParser {
public:
    explicit RParser(const std::string& s) : s_(s) {}

    RFormula parse() {
        RFormula f = quant();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return f;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (std::size_t k = 0; k < i_ && k < s_.size(); ++k) {
            if (s_[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    std::string ident() {
        skip();
        std::size_t st = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        if (st == i_) fail("expected identifier");
        return s_.substr(st, i_ - st);
    }
    bool keyword(const std::string& kw) {
        skip();
        if (s_.compare(i_, kw.size(), kw) != 0) return false;
        std::size_t e = i_ + kw.size();
        if (e < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[e])) || s_[e] == '_')) return false;
        i_ = e;
        return true;
    }

    RFormula quant() {
        if (keyword("forall")) {
            std::string x = ident();
            expect('.');
            return r_forall(x, quant());
        }
        if (keyword("exists")) {
            std::string x = ident();
            expect('.');
            return r_exists(x, quant());
        }
        return disj();
    }
    RFormula disj() {
        RFormula f = conj();
        while (eat('|')) f = r_or(f, conj());
        return f;
    }
    RFormula conj() {
        RFormula f = unary();
        while (eat('&')) f = r_and(f, unary());
        return f;
    }
    RFormula unary() {
        if (eat('!')) return r_not(unary());
        skip();
        if (keyword("forall") || keyword("exists")) {
            // quantifier in operand position: scope extends as far as possible
            i_ -= 6;
            return quant();
        }
        if (eat('(')) {
            RFormula f = quant();
            expect(')');
            return f;
        }
        std::string name = ident();
        if (name != "R") fail("expected R(x,y), got '" + name + "'");
        expect('(');
        std::string x = ident();
        expect(',');
        std::string y = ident();
        expect(')');
        return r_atom(x, y);
    }
};

void emit(const RFormula& f, std::string& out, int prec) {
    // prec: 0 quantifier, 1 or, 2 and, 3 unary
    switch (f->op) {
    case ROp::Atom:
        out += "R(" + f->x + "," + f->y + ")";
        return;
    case ROp::Not:
        out += "!";
        emit(f->a, out, 3);
        return;
    case ROp::And:
    case ROp::Or: {
        int p = f->op == ROp::And ? 2 : 1;
        if (prec > p) out += "(";
        emit(f->a, out, p);
        out += f->op == ROp::And ? " & " : " | ";
        emit(f->b, out, p + 1);
        if (prec > p) out += ")";
        return;
    }
    case ROp::Forall:
    case ROp::Exists:
        if (prec > 0) out += "(";
        out += f->op == ROp::Forall ? "forall " : "exists ";
        out += f->x + " . ";
        emit(f->a, out, 0);
        if (prec > 0) out += ")";
        return;
    }
}

void free_rec(const RFormula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (f->op) {
    case ROp::Atom:
        if (!bound.count(f->x)) out.insert(f->x);
        if (!bound.count(f->y)) out.insert(f->y);
        return;
    case ROp::Not:
        free_rec(f->a, bound, out);
        return;
    case ROp::And:
    case ROp::Or:
        free_rec(f->a, bound, out);
        free_rec(f->b, bound, out);
        return;
    case ROp::Forall:
    case ROp::Exists: {
        bool had = bound.count(f->x) > 0;
        bound.insert(f->x);
        free_rec(f->a, bound, out);
        if (!had) bound.erase(f->x);
        return;
    }
    }
}

RFormula nnf_rec(const RFormula& f, bool negated) {
    switch (f->op) {
    case ROp::Atom:
        return negated ? r_not(f) : f;
    case ROp::Not:
        return nnf_rec(f->a, !negated);
    case ROp::And:
    case ROp::Or: {
        bool and_ = (f->op == ROp::And) != negated;
        RFormula a = nnf_rec(f->a, negated), b = nnf_rec(f->b, negated);
        return and_ ? r_and(a, b) : r_or(a, b);
    }
    case ROp::Forall:
    case ROp::Exists: {
        bool all = (f->op == ROp::Forall) != negated;
        RFormula a = nnf_rec(f->a, negated);
        return all ? r_forall(f->x, a) : r_exists(f->x, a);
    }
    }
    return f;
}

}  // namespace

RFormula parse_rformula(const std::string& text) { return RParser(text).parse(); }

std::string print(const RFormula& f) {
    std::string out;
    emit(f, out, 0);
    return out;
}

std::vector<std::string> r_free_vars(const RFormula& f) {
    std::set<std::string> bound, out;
    free_rec(f, bound, out);
    return {out.begin(), out.end()};
}

int r_qdepth(const RFormula& f) {
    switch (f->op) {
    case ROp::Atom:
        return 0;
    case ROp::Not:
        return r_qdepth(f->a);
    case ROp::And:
    case ROp::Or:
        return std::max(r_qdepth(f->a), r_qdepth(f->b));
    default:
        return 1 + r_qdepth(f->a);
    }
}

bool is_nnf(const RFormula& f) {
    switch (f->op) {
    case ROp::Atom:
        return true;
    case ROp::Not:
        return f->a->op == ROp::Atom;
    case ROp::And:
    case ROp::Or:
        return is_nnf(f->a) && is_nnf(f->b);
    default:
        return is_nnf(f->a);
    }
}

RFormula nnf(const RFormula& f) { return nnf_rec(f, false); }

// ---------------------------------------------------------------- R-models

bool RModel::holds(int a, int b) const {
    return std::find(rel.begin(), rel.end(), std::make_pair(a, b)) != rel.end();
}

RModel rmodel_from_json(const nlohmann::json& j) {
    RModel n;
    if (!j.contains("domain") || !j["domain"].is_array()) throw std::invalid_argument("R-model needs a domain array");
    for (const auto& d : j["domain"]) n.domain.push_back(d.get<std::string>());
    if (n.domain.empty()) throw std::invalid_argument("R-model domain is empty");
    std::set<std::string> seen(n.domain.begin(), n.domain.end());
    if (seen.size() != n.domain.size()) throw std::invalid_argument("duplicate domain element");
    auto idx = [&](const std::string& s) {
        auto it = std::find(n.domain.begin(), n.domain.end(), s);
        if (it == n.domain.end()) throw std::invalid_argument("unknown domain element '" + s + "'");
        return static_cast<int>(it - n.domain.begin());
    };
    if (j.contains("rel")) {
        for (const auto& pr : j["rel"]) {
            if (!pr.is_array() || pr.size() != 2) throw std::invalid_argument("rel entries are pairs");
            auto e = std::make_pair(idx(pr[0].get<std::string>()), idx(pr[1].get<std::string>()));
            if (!n.holds(e.first, e.second)) n.rel.push_back(e);
        }
    }
    return n;
}

RModel load_rmodel(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return rmodel_from_json(nlohmann::json::parse(in));
}

nlohmann::json rmodel_to_json(const RModel& n) {
    nlohmann::json j;
    j["domain"] = n.domain;
    j["rel"] = nlohmann::json::array();
    for (auto [a, b] : n.rel) j["rel"].push_back({n.domain[a], n.domain[b]});
    return j;
}

bool fo_eval(const RModel& n, const std::map<std::string, int>& V, const RFormula& f) {
    switch (f->op) {
    case ROp::Atom: {
        auto x = V.find(f->x), y = V.find(f->y);
        if (x == V.end() || y == V.end()) throw std::invalid_argument("unassigned variable in " + print(f));
        return n.holds(x->second, y->second);
    }
    case ROp::Not:
        return !fo_eval(n, V, f->a);
    case ROp::And:
        return fo_eval(n, V, f->a) && fo_eval(n, V, f->b);
    case ROp::Or:
        return fo_eval(n, V, f->a) || fo_eval(n, V, f->b);
    case ROp::Forall:
    case ROp::Exists: {
        bool all = f->op == ROp::Forall;
        auto W = V;
        for (int d = 0; d < static_cast<int>(n.domain.size()); ++d) {
            W[f->x] = d;
            if (fo_eval(n, W, f->a) != all) return !all;
        }
        return all;
    }
    }
    return false;
}

// ---------------------------------------------------------------- single-agent reduction

LMap::LMap(std::size_t domain_size, std::vector<std::string> vocab) : n_(domain_size), vocab_(std::move(vocab)) {
    if (n_ == 0) throw std::invalid_argument("LMap over an empty domain");
}

int LMap::class_of(const Formula& psi) const {
    auto i = enum_index(vocab_, psi, 1);
    if (!i) throw std::domain_error("not an enumerated sentence: " + print(psi));
    return static_cast<int>(*i % n_);
}

Formula LMap::representative(int d) const { return enumerate_qf_sentences(vocab_, static_cast<std::size_t>(d), 1); }

namespace {

Formula q1() { return prop("q1"); }
Formula q2() { return prop("q2"); }
Formula rr() { return prop("r"); }
Formula poss(int i, Formula f) { return neg(K(i, neg(std::move(f)))); }

Formula r51(const std::string& x, const std::string& y, bool positive) {
    return poss(1, conj_all({positive ? rr() : neg(rr()), A(1, conj(var(x), q1())), A(1, conj(var(y), q2()))}));
}

Formula t51_rec(const RFormula& f) {
    switch (f->op) {
    case ROp::Atom:
        return r51(f->x, f->y, true);
    case ROp::Not:
        return r51(f->a->x, f->a->y, false);
    case ROp::And:
        return conj(t51_rec(f->a), t51_rec(f->b));
    case ROp::Or:
        return disj(t51_rec(f->a), t51_rec(f->b));
    case ROp::Forall:
        return forall(f->x, t51_rec(f->a));
    case ROp::Exists:
        return exists(f->x, t51_rec(f->a));
    }
    return nullptr;
}

}  // namespace

Formula translate_t51(const RFormula& f) {
    if (!is_nnf(f)) throw std::invalid_argument("translation needs negation normal form");
    return t51_rec(f);
}

Formula sigma_t51() {
    Formula both = conj(A(1, conj(var("x1"), q1())), A(1, conj(var("x2"), q2())));
    Formula body = implies(poss(1, conj(both, rr())), K(1, implies(both, rr())));
    return forall("x1", forall("x2", body));
}

bool MN51::aware(int s, const Formula& f) const {
    if (f->op != Op::And || f->b->op != Op::Prop) return false;
    int slot;
    if (f->b->name == "q1") {
        slot = states[s].first;
    } else if (f->b->name == "q2") {
        slot = states[s].second;
    } else {
        return false;
    }
    if (!is_sentence(f->a)) return false;
    try {
        return lmap.class_of(f->a) == slot;
    } catch (const std::domain_error&) {
        return false;
    }
}

std::string MN51::state_name(int s) const { return n.domain[states[s].first] + "|" + n.domain[states[s].second]; }

MN51 build_MN_t51(const RModel& n) {
    MN51 m{n, LMap(n.domain.size()), {}};
    int d = static_cast<int>(n.domain.size());
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) m.states.emplace_back(a, b);
    return m;
}

bool quotient_eval(const MN51& m, int s, const Formula& f, const std::map<std::string, Formula>& V) {
    switch (f->op) {
    case Op::Prop:
        if (f->name == "r") return m.n.holds(m.states[s].first, m.states[s].second);
        return true;
    case Op::Var: {
        auto it = V.find(f->name);
        if (it == V.end()) throw std::invalid_argument("unassigned variable ?" + f->name);
        return quotient_eval(m, s, it->second, {});
    }
    case Op::Not:
        return !quotient_eval(m, s, f->a, V);
    case Op::And:
        return quotient_eval(m, s, f->a, V) && quotient_eval(m, s, f->b, V);
    case Op::K:
    case Op::A:
    case Op::X: {
        if (f->agent != 1) throw std::invalid_argument("this structure has one agent");
        bool aware = true, known = true;
        if (f->op != Op::K) aware = m.aware(s, V.empty() ? f->a : substitute(f->a, V));
        if (f->op != Op::A) {
            for (int t = 0; t < static_cast<int>(m.states.size()) && known; ++t)
                known = quotient_eval(m, t, f->a, V);
        }
        return aware && known;
    }
    case Op::Forall: {
        auto W = V;
        for (int d = 0; d < static_cast<int>(m.lmap.size()); ++d) {
            W[f->name] = m.lmap.representative(d);
            if (!quotient_eval(m, s, f->a, W)) return false;
        }
        return true;
    }
    }
    return false;
}

// ---------------------------------------------------------------- two-agent reduction

namespace {

Formula pp() { return prop("p"); }
Formula qq() { return prop("q"); }

// K1 K2 K1 reachability
Formula kkk(int agents, Formula f) {
    int two = agents == 2 ? 2 : 1;
    return K(1, K(two, K(1, std::move(f))));
}

Formula pair_formula(const std::string& x, const std::string& y, int agents) {
    int two = agents == 2 ? 2 : 1;
    Formula pq = conj(pp(), qq());
    Formula left = poss(two, conj_all({pp(), neg(qq()), poss(1, conj(pq, var(x)))}));
    Formula right = poss(two, conj_all({neg(pp()), qq(), poss(1, conj(pq, var(y)))}));
    return conj_all({neg(pp()), neg(qq()), left, right});
}

Formula r52(const std::string& x, const std::string& y, bool positive, int agents) {
    return conj_all({atomic_t52(x, agents), atomic_t52(y, agents),
                     poss(1, conj(positive ? rr() : neg(rr()), pair_formula(x, y, agents)))});
}

Formula t52_rec(const RFormula& f, int agents) {
    switch (f->op) {
    case ROp::Atom:
        return r52(f->x, f->y, true, agents);
    case ROp::Not:
        return r52(f->a->x, f->a->y, false, agents);
    case ROp::And:
        return conj(t52_rec(f->a, agents), t52_rec(f->b, agents));
    case ROp::Or:
        return disj(t52_rec(f->a, agents), t52_rec(f->b, agents));
    case ROp::Forall:
        return forall(f->x, implies(atomic_t52(f->x, agents), t52_rec(f->a, agents)));
    case ROp::Exists:
        return exists(f->x, conj(atomic_t52(f->x, agents), t52_rec(f->a, agents)));
    }
    return nullptr;
}

void check_agents_arg(int agents) {
    if (agents != 1 && agents != 2) throw std::invalid_argument("agents must be 1 or 2");
}

}  // namespace

Formula atomic_t52(const std::string& x, int agents) {
    check_agents_arg(agents);
    Formula vx = var(x);
    std::string y = fresh_var({vx}, "y");
    Formula vy = var(y);
    Formula reach = neg(kkk(agents, neg(conj_all({pp(), qq(), vx}))));
    Formula split = exists(y, conj(neg(kkk(agents, neg(conj(vx, vy)))), neg(kkk(agents, neg(conj(vx, neg(vy)))))));
    return conj(reach, neg(split));
}

Formula translate_t52(const RFormula& f, int agents) {
    check_agents_arg(agents);
    if (!is_nnf(f)) throw std::invalid_argument("translation needs negation normal form");
    return t52_rec(f, agents);
}

Formula sigma1_t52(int agents) { return exists("x", atomic_t52("x", agents)); }

Formula sigma2_t52(int agents) {
    Formula P = pair_formula("x", "y", agents);
    Formula lhs = conj_all({atomic_t52("x", agents), atomic_t52("y", agents), poss(1, conj(rr(), P))});
    return forall("x", forall("y", implies(lhs, K(1, implies(P, rr())))));
}

Formula sigma_t52(int agents) { return conj(sigma1_t52(agents), sigma2_t52(agents)); }

std::string pair_state(const RModel& n, int d1, int d2) { return n.domain[d1] + "|" + n.domain[d2]; }

AwarenessStructure build_MN_t52(const RModel& n, int agents) {
    check_agents_arg(agents);
    int d = static_cast<int>(n.domain.size());
    if (d + 3 * d * d > kMaxStates) throw std::invalid_argument("domain too large for the two-agent structure");
    AwarenessStructure m;
    m.agents = agents;
    m.vocab = {"p", "q", "r"};
    auto elem = [&](int a) { return "d:" + n.domain[a]; };
    auto pr = [&](int a, int b) { return pair_state(n, a, b); };
    auto tag = [&](int a, int b, int t) { return pair_state(n, a, b) + "|" + std::to_string(t); };
    for (int a = 0; a < d; ++a) {
        std::string mark = "dom" + std::to_string(a);
        m.vocab.push_back(mark);
        m.states.push_back(elem(a));
        m.pi[elem(a)] = {"p", "q", mark};
    }
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            m.states.push_back(pr(a, b));
            m.pi[pr(a, b)] = n.holds(a, b) ? std::vector<std::string>{"r"} : std::vector<std::string>{};
            m.states.push_back(tag(a, b, 1));
            m.pi[tag(a, b, 1)] = {"p"};
            m.states.push_back(tag(a, b, 2));
            m.pi[tag(a, b, 2)] = {"q"};
        }
    auto link_all = [](std::vector<std::pair<std::string, std::string>>& rel, const std::vector<std::string>& cls) {
        for (const auto& s : cls)
            for (const auto& t : cls) rel.emplace_back(s, t);
    };
    auto& k1 = m.rel[1];
    if (agents == 2) {
        std::vector<std::string> pairs;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) pairs.push_back(pr(a, b));
        link_all(k1, pairs);
        // element a with every tag-1 state whose first entry is a and every tag-2 state whose second is
        for (int a = 0; a < d; ++a) {
            std::vector<std::string> cls{elem(a)};
            for (int e = 0; e < d; ++e) {
                cls.push_back(tag(a, e, 1));
                cls.push_back(tag(e, a, 2));
            }
            link_all(k1, cls);
        }
        auto& k2 = m.rel[2];
        for (int a = 0; a < d; ++a) {
            link_all(k2, {elem(a)});
            for (int b = 0; b < d; ++b) link_all(k2, {pr(a, b), tag(a, b, 1), tag(a, b, 2)});
        }
    } else {
        for (int a = 0; a < d; ++a) {
            k1.emplace_back(elem(a), elem(a));
            for (int b = 0; b < d; ++b) {
                for (int a2 = 0; a2 < d; ++a2)
                    for (int b2 = 0; b2 < d; ++b2) k1.emplace_back(pr(a, b), pr(a2, b2));
                for (const auto& t : {tag(a, b, 1), tag(a, b, 2), elem(a), elem(b)}) k1.emplace_back(pr(a, b), t);
                k1.emplace_back(tag(a, b, 1), tag(a, b, 1));
                k1.emplace_back(tag(a, b, 1), elem(a));
                k1.emplace_back(tag(a, b, 2), tag(a, b, 2));
                k1.emplace_back(tag(a, b, 2), elem(b));
            }
        }
    }
    for (auto& [i, r] : m.rel) {
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
    }
    return m;
}

// ---------------------------------------------------------------- harness

Reduction parse_reduction(const std::string& s) {
    if (s == "t51") return Reduction::T51;
    if (s == "t52") return Reduction::T52;
    if (s == "t52s") return Reduction::T52Single;
    throw std::invalid_argument("unknown reduction '" + s + "' (t51, t52, t52s)");
}

std::string reduction_name(Reduction r) {
    switch (r) {
    case Reduction::T51:
        return "t51";
    case Reduction::T52:
        return "t52";
    case Reduction::T52Single:
        return "t52s";
    }
    return "";
}

nlohmann::json EquivReport::to_json() const {
    return {{"fo", fo},       {"modal", modal}, {"agree", agree},         {"sigma", sigma},
            {"homogeneous", homogeneous}, {"state", state}, {"translated", translated}};
}

EquivReport check_equiv(const RModel& n, const RFormula& f, Reduction which) {
    if (!r_free_vars(f).empty()) throw std::invalid_argument("check_equiv needs a sentence");
    RFormula g = nnf(f);
    EquivReport rep;
    rep.fo = fo_eval(n, {}, g);
    if (which == Reduction::T51) {
        Formula t = translate_t51(g);
        rep.translated = print(t);
        MN51 m = build_MN_t51(n);
        rep.state = m.state_name(0);
        rep.modal = quotient_eval(m, 0, t);
        for (int s = 1; s < static_cast<int>(m.states.size()); ++s)
            if (quotient_eval(m, s, t) != rep.modal) rep.homogeneous = false;
        rep.sigma = quotient_eval(m, 0, sigma_t51());
    } else {
        int agents = which == Reduction::T52 ? 2 : 1;
        Formula t = translate_t52(g, agents);
        rep.translated = print(t);
        Model m(build_MN_t52(n, agents));
        Checker c(m);
        rep.state = pair_state(n, 0, 0);
        int s = m.state(rep.state);
        rep.modal = c.eval_exact(s, t);
        rep.sigma = c.eval_exact(s, sigma_t52(agents));
    }
    rep.agree = rep.fo == rep.modal;
    return rep;
}

RModel random_rmodel(std::mt19937_64& rng, int max_domain) {
    std::uniform_int_distribution<int> size(1, std::max(1, max_domain));
    std::bernoulli_distribution coin(0.5);
    RModel n;
    int d = size(rng);
    for (int i = 0; i < d; ++i) n.domain.push_back(std::string(1, static_cast<char>('a' + i)));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (coin(rng)) n.rel.emplace_back(a, b);
    return n;
}

namespace {

RFormula rand_rec(std::mt19937_64& rng, std::vector<std::string>& bound, int qd, int& budget) {
    static const char* names[] = {"x", "y", "z"};
    std::uniform_int_distribution<int> pick(0, 5);
    int c = pick(rng);
    bool can_quant = qd > 0 && budget > 2;
    if (bound.empty() || (can_quant && c == 0)) {
        if (!can_quant && !bound.empty()) c = 5;
        else {
            std::string x = names[std::uniform_int_distribution<int>(0, 2)(rng)];
            bool all = std::bernoulli_distribution(0.5)(rng);
            bound.push_back(x);
            --budget;
            RFormula body = rand_rec(rng, bound, qd - 1, budget);
            bound.pop_back();
            return all ? r_forall(x, body) : r_exists(x, body);
        }
    }
    if (budget > 2 && (c == 1 || c == 2)) {
        --budget;
        RFormula a = rand_rec(rng, bound, qd, budget);
        RFormula b = rand_rec(rng, bound, qd, budget);
        return c == 1 ? r_and(a, b) : r_or(a, b);
    }
    if (budget > 1 && c == 3) {
        --budget;
        return r_not(rand_rec(rng, bound, qd, budget));
    }
    --budget;
    std::uniform_int_distribution<std::size_t> v(0, bound.size() - 1);
    return r_atom(bound[v(rng)], bound[v(rng)]);
}

}  // namespace

RFormula random_rsentence(std::mt19937_64& rng, int max_qdepth, int max_size) {
    if (max_qdepth < 1) throw std::invalid_argument("a sentence needs a quantifier");
    std::vector<std::string> bound;
    int budget = max_size;
    return rand_rec(rng, bound, max_qdepth, budget);
}

}  // namespace qaware
