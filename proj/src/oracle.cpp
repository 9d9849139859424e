// Brute-force instantiation oracle. Shares only eval_base and the class listing with the
// exact evaluator; quantifiers are expanded over an explicit finite instance set.
#include <algorithm>
#include <set>

#include "qaware/checker.hpp"

namespace qaware {

struct Checker::OracleState {
    std::vector<Formula> inst;
    struct K2 {
        Formula f;
        int s;
        bool operator==(const K2& o) const { return s == o.s && same(f, o.f); }
    };
    struct K2Hash {
        std::size_t operator()(const K2& k) const { return k.f->hash * 131 + static_cast<std::size_t>(k.s); }
    };
    std::unordered_map<K2, std::pair<Verdict3, Formula>, K2Hash> memo;
    std::unordered_map<Formula, bool, FormulaHash, FormulaEq> complete;
};

bool Checker::class_complete(OracleState& st, const Formula& body, const std::string& x) {
    Formula key = forall(x, body);
    auto it = st.complete.find(key);
    if (it != st.complete.end()) return it->second;
    bool ok = true;
    if (num_types() > 20) {
        ok = false;
    } else {
        std::set<std::pair<TruthProfile, AwarenessPattern>> have;
        for (const auto& th : st.inst) have.emplace(truth(th), pattern_of(body, x, th));
        for (const auto& c : sentence_classes(body, x))
            if (!have.count({c.profile, c.pattern})) {
                ok = false;
                break;
            }
    }
    st.complete.emplace(key, ok);
    return ok;
}

Verdict3 Checker::oracle_rec(OracleState& st, int s, const Formula& f, Formula* witness) {
    if (is_quantifier_free(f)) return eval_base(s, f) ? Verdict3::True : Verdict3::False;
    OracleState::K2 key{f, s};
    auto it = st.memo.find(key);
    if (it != st.memo.end()) {
        if (witness && it->second.second) *witness = it->second.second;
        return it->second.first;
    }
    Verdict3 r = Verdict3::Unknown;
    Formula w;
    switch (f->op) {
    case Op::Not: {
        Verdict3 v = oracle_rec(st, s, f->a, &w);
        r = v == Verdict3::True ? Verdict3::False : v == Verdict3::False ? Verdict3::True : Verdict3::Unknown;
        break;
    }
    case Op::And: {
        Verdict3 a = oracle_rec(st, s, f->a, nullptr);
        if (a == Verdict3::False) {
            r = a;
            break;
        }
        Verdict3 b = oracle_rec(st, s, f->b, nullptr);
        r = b == Verdict3::False ? b : (a == Verdict3::True && b == Verdict3::True) ? Verdict3::True : Verdict3::Unknown;
        break;
    }
    case Op::K:
    case Op::X: {
        if (f->op == Op::X && !m_.is_aware(f->agent, s, f->a)) {
            r = Verdict3::False;
            break;
        }
        r = Verdict3::True;
        for (int t = 0; t < m_.n; ++t) {
            if (!((m_.succ[f->agent - 1][s] >> t) & 1)) continue;
            Verdict3 v = oracle_rec(st, t, f->a, nullptr);
            if (v == Verdict3::False) {
                r = v;
                break;
            }
            if (v == Verdict3::Unknown) r = v;
        }
        break;
    }
    case Op::A:
        r = m_.is_aware(f->agent, s, f->a) ? Verdict3::True : Verdict3::False;
        break;
    case Op::Forall: {
        if (!occurs_free(f->a, f->name)) {
            r = oracle_rec(st, s, f->a, nullptr);
            break;
        }
        bool unknown = false;
        r = Verdict3::True;
        for (const auto& th : st.inst) {
            Verdict3 v = oracle_rec(st, s, substitute(f->a, f->name, th), nullptr);
            if (v == Verdict3::False) {
                r = v;
                w = th;
                break;
            }
            if (v == Verdict3::Unknown) unknown = true;
        }
        if (r == Verdict3::True && (unknown || !class_complete(st, f->a, f->name))) r = Verdict3::Unknown;
        break;
    }
    default:
        break;
    }
    st.memo.emplace(key, std::make_pair(r, w));
    if (witness && w) *witness = w;
    return r;
}

OracleResult Checker::eval_oracle(int s, const Formula& f, std::size_t budget, const ValuationSyn& V) {
    if (s < 0 || s >= m_.n) throw std::out_of_range("state index");
    Formula g = resolve(f, V);
    check_agents(g);
    OracleState st;
    std::set<std::string> voc(m_.vocab.begin(), m_.vocab.end());
    for (const auto& [i, alpha] : contexts_members_)
        for (const auto& p : alpha->props) voc.insert(p);
    if (voc.empty()) voc.insert(bottom_->name);
    std::vector<std::string> vocab(voc.begin(), voc.end());
    FormulaSet seen;
    for (std::size_t j = 0; j < budget; ++j) {
        Formula th = enumerate_qf_sentences(vocab, j, m_.agents);
        if (seen.insert(th).second) st.inst.push_back(th);
    }
    for (const auto& [i, alpha] : contexts_members_)
        if (is_quantifier_free(alpha) && seen.insert(alpha).second) st.inst.push_back(alpha);
    OracleResult out;
    Formula w;
    out.value = oracle_rec(st, s, g, &w);
    // a witness is meaningful for a top-level forall that failed or a top-level exists that held
    const Formula* q = &g;
    int negs = 0;
    while ((*q)->op == Op::Not) {
        q = &(*q)->a;
        ++negs;
    }
    if ((*q)->op == Op::Forall && w) {
        bool forall_false = (negs % 2 == 0) ? out.value == Verdict3::False : out.value == Verdict3::True;
        if (forall_false) out.witness = w;
    }
    return out;
}

}  // namespace qaware
