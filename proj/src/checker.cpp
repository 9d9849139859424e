#include "qaware/checker.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qaware {

std::string to_string(Verdict3 v) {
    switch (v) {
    case Verdict3::True: return "true";
    case Verdict3::False: return "false";
    default: return "unknown";
    }
}

// ---------------------------------------------------------------- matching

namespace {

bool match_rec(const Formula& chi, const Formula& alpha, std::vector<std::string>& pv,
               std::map<std::string, Formula>& binding) {
    if (chi->op == Op::Var && std::find(pv.begin(), pv.end(), chi->name) != pv.end()) {
        auto it = binding.find(chi->name);
        if (it != binding.end()) return same(it->second, alpha);
        if (!is_sentence(alpha) || !is_quantifier_free(alpha)) return false;
        binding.emplace(chi->name, alpha);
        return true;
    }
    if (chi->op != alpha->op || chi->agent != alpha->agent || chi->name != alpha->name) return false;
    if (chi->size > alpha->size) return false;
    switch (chi->op) {
    case Op::Prop:
    case Op::Var:
        return true;
    case Op::And:
        return match_rec(chi->a, alpha->a, pv, binding) && match_rec(chi->b, alpha->b, pv, binding);
    case Op::Forall: {
        auto it = std::find(pv.begin(), pv.end(), chi->name);
        if (it == pv.end()) return match_rec(chi->a, alpha->a, pv, binding);
        std::vector<std::string> inner = pv;
        inner.erase(inner.begin() + (it - pv.begin()));
        return match_rec(chi->a, alpha->a, inner, binding);
    }
    default:
        return match_rec(chi->a, alpha->a, pv, binding);
    }
}

struct Context {
    int agent;
    Formula chi;
    std::vector<std::string> pvars;  // free variables of chi, all pattern variables
};

// A/X-contexts of x in f, preorder. Contexts with a free variable that is neither x nor
// bound inside f are dropped (those are outer symbolic variables).
void collect_contexts(const Formula& f, const std::string& x, std::vector<std::string>& bound,
                      std::vector<Context>& out) {
    if (!occurs_free(f, x)) return;
    if ((f->op == Op::A || f->op == Op::X)) {
        bool ok = true;
        for (const auto& v : f->a->free)
            if (v != x && std::find(bound.begin(), bound.end(), v) == bound.end()) ok = false;
        if (ok) out.push_back({f->agent, f->a, f->a->free});
    }
    switch (f->op) {
    case Op::And:
        collect_contexts(f->a, x, bound, out);
        collect_contexts(f->b, x, bound, out);
        break;
    case Op::Forall:
        if (f->name == x) break;
        bound.push_back(f->name);
        collect_contexts(f->a, x, bound, out);
        bound.pop_back();
        break;
    case Op::Not:
    case Op::K:
    case Op::A:
    case Op::X:
        collect_contexts(f->a, x, bound, out);
        break;
    default:
        break;
    }
}

std::vector<Context> contexts_of(const Formula& f, const std::string& x) {
    std::vector<std::string> bound;
    std::vector<Context> cs;
    collect_contexts(f, x, bound, cs);
    return cs;
}

bool size_then_print(const Formula& a, const Formula& b) {
    if (a->size != b->size) return a->size < b->size;
    return print(a) < print(b);
}

}  // namespace

bool match_context(const Formula& chi, const Formula& alpha, const std::vector<std::string>& pvars,
                   std::map<std::string, Formula>& binding) {
    std::vector<std::string> pv = pvars;
    return match_rec(chi, alpha, pv, binding);
}

// ---------------------------------------------------------------- session setup

Checker::Checker(const Model& m) : m_(m) {
    std::set<std::string> used(m.vocab.begin(), m.vocab.end());
    pad_ = 0;
    for (int i = 1; i <= m.agents; ++i) {
        std::vector<Formula> seen;
        FormulaSet dedup;
        for (int s = 0; s < m.n; ++s)
            for (const auto& f : m.aware[i - 1][s]) {
                pad_ = std::max(pad_, f->size);
                for (const auto& p : f->props) used.insert(p);
                if (dedup.insert(f).second) contexts_members_.emplace_back(i, f);
            }
    }
    std::string b = "fresh";
    for (int k = 0; used.count(b); ++k) b = "fresh" + std::to_string(k);
    bottom_ = prop(b);
    compute_types();
}

void Checker::check_agents(const Formula& f) const {
    if (max_agent(f) > m_.agents)
        throw std::invalid_argument("formula mentions agent " + std::to_string(max_agent(f)) +
                                    " but the structure has " + std::to_string(m_.agents));
}

StateSet Checker::truth(const Formula& f) {
    if (!is_sentence(f) || !is_quantifier_free(f))
        throw std::invalid_argument("eval_base needs a quantifier-free sentence: " + print(f));
    auto it = truth_memo_.find(f);
    if (it != truth_memo_.end()) return it->second;
    StateSet r = 0;
    switch (f->op) {
    case Op::Prop:
        r = m_.prop(f->name);
        break;
    case Op::Not:
        r = m_.all & ~truth(f->a);
        break;
    case Op::And:
        r = truth(f->a) & truth(f->b);
        break;
    case Op::K:
        check_agents(f);
        r = m_.box(f->agent, truth(f->a));
        break;
    case Op::A:
        check_agents(f);
        r = m_.aware_states(f->agent, f->a);
        break;
    case Op::X:
        check_agents(f);
        r = m_.box(f->agent, truth(f->a)) & m_.aware_states(f->agent, f->a);
        break;
    default:
        break;
    }
    truth_memo_.emplace(f, r);
    return r;
}

bool Checker::eval_base(int s, const Formula& f) { return (truth(f) >> s) & 1; }

void Checker::compute_types() {
    std::vector<std::pair<StateSet, Formula>> base;
    for (const auto& p : m_.vocab) base.emplace_back(m_.prop(p), prop(p));
    for (const auto& [i, alpha] : contexts_members_) {
        if (!is_quantifier_free(alpha)) continue;
        StateSet as = m_.aware_states(i, alpha);
        base.emplace_back(as, A(i, alpha));
        base.emplace_back(as & m_.box(i, truth(alpha)), X(i, alpha));
    }
    struct Block {
        StateSet states;
        Formula f;  // nullptr stands for "true"
    };
    std::vector<Block> blocks{{m_.all, nullptr}};
    auto with = [](const Formula& f, const Formula& g) { return f ? conj(f, g) : g; };
    for (const auto& [set, g] : base) {
        std::vector<Block> next;
        for (const auto& b : blocks) {
            StateSet in = b.states & set, out = b.states & ~set;
            if (in && out) {
                next.push_back({in, with(b.f, g)});
                next.push_back({out, with(b.f, neg(g))});
            } else {
                next.push_back(b);
            }
        }
        blocks = std::move(next);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= m_.agents && !changed; ++i) {
            std::vector<Block> next;
            for (const auto& b : blocks) {
                std::map<std::uint64_t, StateSet> by_sig;
                for (int s = 0; s < m_.n; ++s) {
                    if (!((b.states >> s) & 1)) continue;
                    std::uint64_t sig = 0;
                    for (std::size_t k = 0; k < blocks.size(); ++k)
                        if (m_.succ[i - 1][s] & blocks[k].states) sig |= std::uint64_t{1} << k;
                    by_sig[sig] |= StateSet{1} << s;
                }
                if (by_sig.size() == 1) {
                    next.push_back(b);
                    continue;
                }
                changed = true;
                for (const auto& [sig, states] : by_sig) {
                    std::vector<Formula> parts;
                    Formula some;
                    for (std::size_t k = 0; k < blocks.size(); ++k) {
                        if (!((sig >> k) & 1)) continue;
                        Formula fk = blocks[k].f ? blocks[k].f : neg(bottom_);
                        parts.push_back(neg(K(i, neg(fk))));
                        some = some ? disj(some, fk) : fk;
                    }
                    parts.push_back(K(i, some ? some : bottom_));
                    Formula g = conj_all(parts);
                    next.push_back({states, with(b.f, g)});
                }
            }
            if (changed) blocks = std::move(next);
        }
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        return (a.states & -a.states) < (b.states & -b.states);
    });
    type_of_.assign(m_.n, 0);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        types_.push_back(blocks[k].states);
        type_formula_.push_back(blocks[k].f ? blocks[k].f : neg(bottom_));
        for (int s = 0; s < m_.n; ++s)
            if ((blocks[k].states >> s) & 1) type_of_[s] = static_cast<int>(k);
    }
}

std::vector<TruthProfile> Checker::realizable_profiles() {
    if (num_types() > 20) throw std::length_error("too many types to list all profiles");
    std::vector<TruthProfile> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << num_types()); ++mask) {
        StateSet p = 0;
        for (int k = 0; k < num_types(); ++k)
            if ((mask >> k) & 1) p |= types_[k];
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TruthProfile> Checker::realizable_profiles_closure() {
    if (m_.n > 20) throw std::length_error("structure too large for the explicit profile closure");
    std::set<StateSet> seen;
    std::vector<StateSet> work;
    auto add = [&](StateSet s) {
        if (seen.insert(s).second) work.push_back(s);
    };
    add(0);
    for (const auto& p : m_.vocab) add(m_.prop(p));
    // members' own profiles come out of the closure; the awareness profiles are the extra generators
    for (const auto& [i, alpha] : contexts_members_) {
        if (!is_quantifier_free(alpha)) continue;
        StateSet as = m_.aware_states(i, alpha);
        add(as);
        add(as & m_.box(i, truth(alpha)));
    }
    while (!work.empty()) {
        StateSet s = work.back();
        work.pop_back();
        add(m_.all & ~s);
        for (int i = 1; i <= m_.agents; ++i) add(m_.box(i, s));
        std::vector<StateSet> snapshot(seen.begin(), seen.end());
        for (StateSet t : snapshot) add(s & t);
    }
    return {seen.begin(), seen.end()};
}

Formula Checker::realizer(TruthProfile p) {
    Formula out;
    for (int k = 0; k < num_types(); ++k) {
        if ((p & types_[k]) == 0) continue;
        if ((p & types_[k]) != types_[k]) throw std::invalid_argument("profile is not a union of types");
        out = out ? disj(out, type_formula_[k]) : type_formula_[k];
    }
    return out ? out : bottom_;
}

Formula Checker::generic(TruthProfile p) {
    Formula f = realizer(p);
    while (f->size <= pad_) f = neg(neg(f));
    return f;
}

std::vector<Formula> Checker::candidates(const Formula& f, const std::string& x) {
    std::vector<Formula> out;
    FormulaSet seen;
    for (const auto& c : contexts_of(f, x))
        for (const auto& [i, alpha] : contexts_members_) {
            if (i != c.agent) continue;
            std::map<std::string, Formula> b;
            if (match_context(c.chi, alpha, c.pvars, b)) {
                auto it = b.find(x);
                if (it != b.end() && seen.insert(it->second).second) out.push_back(it->second);
            }
        }
    std::sort(out.begin(), out.end(), size_then_print);
    return out;
}

AwarenessPattern Checker::pattern_of(const Formula& f, const std::string& x, const Formula& psi) {
    AwarenessPattern out;
    auto cs = contexts_of(f, x);
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const auto& c = cs[k];
        Formula chi = substitute(c.chi, x, psi);
        std::vector<std::string> pv;
        for (const auto& v : c.pvars)
            if (v != x) pv.push_back(v);
        for (int t = 0; t < m_.n; ++t)
            for (const auto& alpha : m_.aware[c.agent - 1][t]) {
                std::map<std::string, Formula> b;
                if (!match_context(chi, alpha, pv, b)) continue;
                std::string key = std::to_string(k) + "|" + std::to_string(t) + "|";
                for (const auto& [v, g] : b) key += v + "=" + print(g) + ";";
                out.push_back(key);
            }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<SentenceClass> Checker::sentence_classes(const Formula& f, const std::string& x) {
    for (const auto& v : f->free)
        if (v != x) throw std::invalid_argument("sentence_classes: ?" + v + " must be instantiated first");
    std::map<std::pair<TruthProfile, AwarenessPattern>, Formula> classes;
    for (const auto& psi : candidates(f, x)) {
        auto key = std::make_pair(truth(psi), pattern_of(f, x, psi));
        classes.emplace(key, psi);
    }
    for (TruthProfile p : realizable_profiles()) classes.emplace(std::make_pair(p, AwarenessPattern{}), generic(p));
    std::vector<SentenceClass> out;
    for (auto& [k, rep] : classes) out.push_back({k.first, k.second, rep});
    return out;
}

// ---------------------------------------------------------------- exact evaluation

std::vector<int> Checker::block_vars(int d) const {
    std::vector<int> vs;
    for (int t = 0; t < num_types(); ++t) vs.push_back(t * depth_ + d);
    return vs;
}

void Checker::begin_session(const Formula& f) {
    check_agents(f);
    int d = std::max(1, qdepth(f));
    if (!bdd_ || d > depth_) {
        // variable numbering depends on the depth, so a deeper formula needs a fresh manager
        bdd_ = std::make_unique<BddManager>();
        memo_.clear();
        depth_ = std::max(d, depth_);
    }
}

Formula Checker::resolve(const Formula& f, const ValuationSyn& V) const {
    if (is_sentence(f)) return f;
    std::map<std::string, Formula> sub;
    for (const auto& v : f->free) sub.emplace(v, V(v));
    return substitute(f, sub);
}

Checker::Vec Checker::ev(const Formula& f, const std::map<std::string, int>& env) {
    const int n = m_.n;
    if (f->free.empty() && is_quantifier_free(f)) {
        StateSet t = truth(f);
        Vec r(n);
        for (int s = 0; s < n; ++s) r[s] = ((t >> s) & 1) ? BddManager::True : BddManager::False;
        return r;
    }
    Key key{f, {}};
    for (const auto& v : f->free) key.blocks.push_back(env.at(v));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Vec r(n, BddManager::False);
    switch (f->op) {
    case Op::Var: {
        int d = env.at(f->name);
        for (int s = 0; s < n; ++s) r[s] = bdd_->var(type_of_[s] * depth_ + d);
        break;
    }
    case Op::Not: {
        Vec a = ev(f->a, env);
        for (int s = 0; s < n; ++s) r[s] = bdd_->neg(a[s]);
        break;
    }
    case Op::And: {
        Vec a = ev(f->a, env);
        Vec b = ev(f->b, env);
        for (int s = 0; s < n; ++s) r[s] = bdd_->conj(a[s], b[s]);
        break;
    }
    case Op::K: {
        Vec a = ev(f->a, env);
        for (int s = 0; s < n; ++s) {
            Ref acc = BddManager::True;
            for (int t = 0; t < n && acc != BddManager::False; ++t)
                if ((m_.succ[f->agent - 1][s] >> t) & 1) acc = bdd_->conj(acc, a[t]);
            r[s] = acc;
        }
        break;
    }
    case Op::A:
    case Op::X: {
        // a context still holding a generic value is in no aware set
        if (!f->a->free.empty()) break;
        StateSet as = m_.aware_states(f->agent, f->a);
        if (f->op == Op::A) {
            for (int s = 0; s < n; ++s) r[s] = ((as >> s) & 1) ? BddManager::True : BddManager::False;
        } else {
            Vec k = ev(K(f->agent, f->a), env);
            for (int s = 0; s < n; ++s) r[s] = ((as >> s) & 1) ? k[s] : BddManager::False;
        }
        break;
    }
    case Op::Forall:
        r = ev_forall(f, env, std::nullopt, nullptr);
        break;
    default:
        break;
    }
    memo_.emplace(std::move(key), r);
    return r;
}

Checker::Vec Checker::ev_forall(const Formula& f, const std::map<std::string, int>& env,
                                std::optional<int> witness_state, std::optional<Formula>* witness_out) {
    const int n = m_.n;
    const std::string& x = f->name;
    const Formula& body = f->a;
    if (!occurs_free(body, x)) return ev(body, env);
    Vec r(n, BddManager::True);
    auto cands = candidates(body, x);
    for (const auto& psi : cands) {
        Vec v = ev(substitute(body, x, psi), env);
        for (int s = 0; s < n; ++s) r[s] = bdd_->conj(r[s], v[s]);
        if (witness_state && witness_out && !*witness_out && v[*witness_state] == BddManager::False)
            *witness_out = psi;
    }
    int d = 0;
    for (const auto& [v, b] : env) d = std::max(d, b + 1);
    if (d >= depth_) throw std::logic_error("quantifier nesting deeper than the session depth");
    std::map<std::string, int> inner = env;
    inner[x] = d;
    Vec g = ev(body, inner);
    auto vars = block_vars(d);
    for (int s = 0; s < n; ++s) {
        Ref q = bdd_->forall(g[s], vars);
        if (witness_state && witness_out && !*witness_out && s == *witness_state && q == BddManager::False) {
            // outermost quantifier: g depends on block-0 variables only
            auto a = bdd_->sat_one(bdd_->neg(g[s]));
            TruthProfile p = 0;
            for (int t = 0; t < num_types(); ++t) {
                auto it = a.find(t * depth_ + d);
                if (it != a.end() && it->second) p |= types_[t];
            }
            *witness_out = generic(p);
        }
        r[s] = bdd_->conj(r[s], q);
    }
    if (witness_out) last_classes_ = cands.size() + (num_types() < 63 ? (std::size_t{1} << num_types()) : 0);
    return r;
}

StateSet Checker::truth_exact(const Formula& f) {
    if (!is_sentence(f)) throw std::invalid_argument("truth_exact needs a sentence: " + print(f));
    if (is_quantifier_free(f)) return truth(f);
    begin_session(f);
    Vec r = ev(f, {});
    StateSet out = 0;
    for (int s = 0; s < m_.n; ++s) {
        if (!bdd_->is_const(r[s])) throw std::logic_error("symbolic residue at top level");
        if (r[s] == BddManager::True) out |= StateSet{1} << s;
    }
    return out;
}

bool Checker::eval_exact(int s, const Formula& f, const ValuationSyn& V) {
    if (s < 0 || s >= m_.n) throw std::out_of_range("state index");
    Formula g = resolve(f, V);
    last_classes_ = 0;
    // count classes at the outermost quantifier for reporting
    const Formula* q = &g;
    while ((*q)->op == Op::Not) q = &(*q)->a;
    bool value = (truth_exact(g) >> s) & 1;
    if ((*q)->op == Op::Forall && occurs_free((*q)->a, (*q)->name)) {
        last_classes_ = candidates((*q)->a, (*q)->name).size() +
                        (num_types() < 63 ? (std::size_t{1} << num_types()) : 0);
    }
    return value;
}

bool Checker::valid(const Formula& f) { return truth_exact(f) == m_.all; }

std::optional<Formula> Checker::witness(int s, const Formula& f) {
    // strip negations down to the outermost quantifier; an even count means forall-false,
    // an odd count means the exists reading
    const Formula* q = &f;
    while ((*q)->op == Op::Not) q = &(*q)->a;
    if ((*q)->op != Op::Forall) return std::nullopt;
    begin_session(*q);
    bool holds = (truth_exact(*q) >> s) & 1;
    if (holds) return std::nullopt;
    std::optional<Formula> w;
    ev_forall(*q, {}, s, &w);
    return w;
}

// ---------------------------------------------------------------- free functions

bool eval_base(const Model& m, int s, const Formula& f) { return Checker(m).eval_base(s, f); }
std::vector<TruthProfile> realizable_profiles(const Model& m) { return Checker(m).realizable_profiles(); }
std::vector<SentenceClass> sentence_classes(const Model& m, const Formula& f, const std::string& x) {
    return Checker(m).sentence_classes(f, x);
}
bool eval_exact(const Model& m, int s, const ValuationSyn& V, const Formula& f) {
    return Checker(m).eval_exact(s, f, V);
}
OracleResult eval_oracle(const Model& m, int s, const ValuationSyn& V, const Formula& f, std::size_t budget) {
    return Checker(m).eval_oracle(s, f, budget, V);
}
bool valid_in_structure(const Model& m, const Formula& f) { return Checker(m).valid(f); }

}  // namespace qaware
