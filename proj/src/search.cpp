#include "qaware/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "qaware/checker.hpp"

namespace qaware {

void close_relation(std::vector<StateSet>& succ, int n, const RelClass& c) {
    if (c.r)
        for (int s = 0; s < n; ++s) succ[s] |= StateSet{1} << s;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < n; ++s) {
            StateSet add = 0;
            for (int t = 0; t < n; ++t) {
                if (!((succ[s] >> t) & 1)) continue;
                if (c.t) add |= succ[t];
            }
            if (c.e)
                for (int t = 0; t < n; ++t)
                    if ((succ[s] >> t) & 1 && (succ[t] | succ[s]) != succ[t]) {
                        succ[t] |= succ[s];
                        changed = true;
                    }
            if ((succ[s] | add) != succ[s]) {
                succ[s] |= add;
                changed = true;
            }
        }
    }
}

namespace {

std::string sname(int i) { return "s" + std::to_string(i); }

void set_relation(AwarenessStructure& m, int agent, const std::vector<StateSet>& succ) {
    auto& pairs = m.rel[agent];
    pairs.clear();
    for (std::size_t s = 0; s < succ.size(); ++s)
        for (std::size_t t = 0; t < succ.size(); ++t)
            if ((succ[s] >> t) & 1) pairs.emplace_back(sname(static_cast<int>(s)), sname(static_cast<int>(t)));
}

std::vector<Formula> aware_pool(const std::vector<std::string>& vocab, int agents) {
    std::vector<Formula> pool;
    for (std::size_t j = 0; j < 24; ++j) pool.push_back(enumerate_qf_sentences(vocab, j, agents));
    Formula x = var("x");
    for (int i = 1; i <= agents; ++i)
        for (int j = 1; j <= agents; ++j) {
            pool.push_back(exists("x", conj(A(i, x), neg(A(j, x)))));
            pool.push_back(conj(A(i, prop(vocab.front())), neg(A(j, prop(vocab.back())))));
        }
    pool.push_back(exists("x", x));
    pool.push_back(forall("x", implies(x, prop(vocab.front()))));
    return pool;
}

}  // namespace

AwarenessStructure random_structure(std::mt19937_64& rng, const RandomStructureSpec& spec) {
    AwarenessStructure m;
    int n = std::uniform_int_distribution<int>(1, std::max(1, spec.max_states))(rng);
    m.agents = std::max(1, spec.agents);
    for (int s = 0; s < n; ++s) m.states.push_back(sname(s));
    for (int i = 0; i < std::max(1, spec.props); ++i) m.vocab.push_back("p" + std::to_string(i));
    std::bernoulli_distribution coin(0.5), edge(spec.edge_prob);
    for (int s = 0; s < n; ++s) {
        auto& v = m.pi[sname(s)];
        for (const auto& p : m.vocab)
            if (coin(rng)) v.push_back(p);
    }
    for (int i = 1; i <= m.agents; ++i) {
        std::vector<StateSet> succ(n, 0);
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                if (edge(rng)) succ[s] |= StateSet{1} << t;
        close_relation(succ, n, spec.cls);
        set_relation(m, i, succ);
    }
    if (spec.awareness) {
        auto pool = aware_pool(m.vocab, m.agents);
        std::uniform_int_distribution<int> count(0, spec.max_aware);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int i = 1; i <= m.agents; ++i)
            for (int s = 0; s < n; ++s) {
                auto& slot = m.aware[i][sname(s)];
                FormulaSet seen;
                int c = count(rng);
                for (int j = 0; j < c; ++j) {
                    Formula f = pool[pick(rng)];
                    if (seen.insert(f).second) slot.push_back(f);
                }
            }
    }
    return m;
}

AwarenessStructure random_gpp_structure(std::mt19937_64& rng, const RandomStructureSpec& spec, int bound) {
    RandomStructureSpec s = spec;
    s.awareness = false;
    AwarenessStructure m = random_structure(rng, s);
    std::map<unsigned, std::vector<Formula>> cache;
    std::uniform_int_distribution<unsigned> subset(0, (1u << m.vocab.size()) - 1);
    for (int i = 1; i <= m.agents; ++i)
        for (const auto& st : m.states) {
            unsigned mask = subset(rng);
            auto it = cache.find(mask);
            if (it == cache.end()) {
                std::vector<std::string> P;
                for (std::size_t k = 0; k < m.vocab.size(); ++k)
                    if ((mask >> k) & 1u) P.push_back(m.vocab[k]);
                it = cache.emplace(mask, bounded_sentences(P, m.agents, {"x"}, bound)).first;
            }
            m.aware[i][st] = it->second;
        }
    return m;
}

// ---------------------------------------------------------------- random formulas

namespace {

Formula gen(std::mt19937_64& rng, const RandomFormulaSpec& spec, int size, int qd, std::vector<std::string>& bound) {
    std::uniform_int_distribution<int> d100(0, 99);
    if (size <= 1) {
        if (!bound.empty() && d100(rng) < 45) {
            std::uniform_int_distribution<std::size_t> pick(0, bound.size() - 1);
            return var(bound[pick(rng)]);
        }
        std::uniform_int_distribution<std::size_t> pick(0, spec.props.size() - 1);
        return prop(spec.props[pick(rng)]);
    }
    int r = d100(rng);
    std::uniform_int_distribution<int> ag(1, std::max(1, spec.agents));
    if (qd > 0 && r < 22) {
        std::string x = bound.size() % 2 == 0 ? "x" : "y";
        if (std::find(bound.begin(), bound.end(), x) != bound.end()) x = x == "x" ? "y" : "x";
        bound.push_back(x);
        Formula body = gen(rng, spec, size - 1, qd - 1, bound);
        bound.pop_back();
        return d100(rng) < 50 ? forall(x, body) : exists(x, body);
    }
    if (r < 40) return neg(gen(rng, spec, size - 1, qd, bound));
    if (r < 62) {
        int ls = std::uniform_int_distribution<int>(1, std::max(1, size - 2))(rng);
        Formula a = gen(rng, spec, ls, qd, bound);
        Formula b = gen(rng, spec, std::max(1, size - 1 - ls), qd, bound);
        int c = d100(rng);
        return c < 50 ? conj(a, b) : c < 80 ? implies(a, b) : disj(a, b);
    }
    if (spec.awareness && r < 80) {
        Formula a = gen(rng, spec, size - 1, qd, bound);
        return d100(rng) < 50 ? A(ag(rng), a) : X(ag(rng), a);
    }
    return K(ag(rng), gen(rng, spec, size - 1, qd, bound));
}

}  // namespace

Formula random_formula(std::mt19937_64& rng, const RandomFormulaSpec& spec) {
    int size = std::uniform_int_distribution<int>(1, std::max(1, spec.max_size))(rng);
    std::vector<std::string> bound;
    if (spec.allow_open && std::bernoulli_distribution(0.3)(rng)) bound.push_back("z");
    Formula f = gen(rng, spec, size, spec.max_qdepth, bound);
    return f;
}

// ---------------------------------------------------------------- countermodel search

namespace {

struct Searcher {
    const Formula& f;
    const SearchConfig& cfg;
    int agents;
    std::vector<std::string> props;
    SearchResult res;
    std::set<std::string> seen;

    bool budget_left() const { return res.examined < cfg.max_structures; }

    // returns true when a countermodel has been found
    bool try_structure(const AwarenessStructure& m) {
        if (!budget_left() || res.found) return res.found;
        std::string key = structure_to_json(m).dump();
        if (!seen.insert(key).second) return false;
        ++res.examined;
        Model mm(m);
        Checker ch(mm);
        StateSet t = ch.truth_exact(f);
        if (t == mm.all) return false;
        for (int s = 0; s < mm.n; ++s)
            if (!((t >> s) & 1)) {
                res.found = true;
                res.model = m;
                res.state = mm.names[s];
                return true;
            }
        return false;
    }

    AwarenessStructure frame(int n, const std::vector<std::vector<StateSet>>& succ, bool markers) const {
        AwarenessStructure m;
        m.agents = agents;
        for (int s = 0; s < n; ++s) m.states.push_back(sname(s));
        m.vocab = props;
        if (markers) {
            int k = cfg.vocab_size > 0 ? cfg.vocab_size : n;
            for (int j = 0; j < k; ++j) m.vocab.push_back("mk" + std::to_string(j));
        }
        for (int s = 0; s < n; ++s) m.pi[sname(s)];
        for (int i = 1; i <= agents; ++i) set_relation(m, i, succ[i - 1]);
        return m;
    }

    // every valuation of the formula's propositions over the frame
    bool valuations(int n, const std::vector<std::vector<StateSet>>& succ) {
        std::size_t bits = props.size() * static_cast<std::size_t>(n);
        if (bits > 16) return false;
        for (int markers = 0; markers < 2; ++markers) {
            AwarenessStructure m = frame(n, succ, markers);
            if (markers) {
                int k = cfg.vocab_size > 0 ? cfg.vocab_size : n;
                for (int s = 0; s < n; ++s)
                    if (s < k) m.pi[sname(s)].push_back("mk" + std::to_string(s));
            }
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
                AwarenessStructure mv = m;
                for (int s = 0; s < n; ++s)
                    for (std::size_t j = 0; j < props.size(); ++j)
                        if ((v >> (s * props.size() + j)) & 1) mv.pi[sname(s)].push_back(props[j]);
                if (try_structure(mv)) return true;
                if (!budget_left()) return false;
            }
        }
        return false;
    }

    bool class_ok(const std::vector<StateSet>& succ, int n) const {
        auto c = succ;
        close_relation(c, n, cfg.cls);
        return c == succ;
    }

    // single agent, Euclidean-style shapes: s0 -> S, S u S' universal
    bool shapes() {
        for (int n = 1; n <= cfg.max_states; ++n) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; a + b < n; ++b) {
                    if (a == 0 && b > 0) continue;
                    if (1 + a + b != n) continue;
                    std::vector<StateSet> succ(n, 0);
                    StateSet S = 0, SS = 0;
                    for (int s = 1; s <= a; ++s) S |= StateSet{1} << s;
                    for (int s = a + 1; s <= a + b; ++s) SS |= StateSet{1} << s;
                    succ[0] = S;
                    for (int s = 1; s < n; ++s) succ[s] = S | SS;
                    if (class_ok(succ, n) && valuations(n, {succ})) return true;
                    if (!budget_left()) return false;
                }
            // s0 inside its own cluster
            std::vector<StateSet> uni(n, (StateSet{1} << n) - 1);
            if (class_ok(uni, n) && valuations(n, {uni})) return true;
        }
        return false;
    }

    // all frames on up to 3 states whose relations satisfy the class
    bool exhaustive() {
        for (int n = 1; n <= std::min(3, cfg.max_states); ++n) {
            int cells = n * n * agents;
            if (cells > 18) break;
            for (std::uint64_t r = 0; r < (std::uint64_t{1} << cells); ++r) {
                std::vector<std::vector<StateSet>> succ(agents, std::vector<StateSet>(n, 0));
                bool ok = true;
                for (int i = 0; i < agents && ok; ++i) {
                    for (int s = 0; s < n; ++s)
                        succ[i][s] = (r >> ((i * n + s) * n)) & ((StateSet{1} << n) - 1);
                    ok = class_ok(succ[i], n);
                }
                if (!ok) continue;
                if (valuations(n, succ)) return true;
                if (!budget_left()) return false;
            }
        }
        return false;
    }

    void random() {
        std::mt19937_64 rng(cfg.seed);
        RandomStructureSpec spec;
        spec.max_states = cfg.max_states;
        spec.agents = agents;
        spec.cls = cfg.cls;
        spec.awareness = mentions_awareness(f);
        std::vector<Formula> pool;
        if (spec.awareness) {
            // aware sets built from subformula instances of f matter most
            std::vector<std::string> voc = props;
            if (voc.empty()) voc.push_back("p0");
            for (std::size_t j = 0; j < 16; ++j) pool.push_back(enumerate_qf_sentences(voc, j, agents));
            std::function<void(const Formula&)> walk = [&](const Formula& g) {
                if ((g->op == Op::A || g->op == Op::X) && is_sentence(g->a)) pool.push_back(g->a);
                if (g->a) walk(g->a);
                if (g->b) walk(g->b);
            };
            walk(f);
        }
        // duplicates are not counted as examined, so cap the attempts too
        for (std::size_t attempt = 0; attempt < 4 * cfg.max_structures && budget_left() && !res.found; ++attempt) {
            AwarenessStructure m = random_structure(rng, spec);
            m.vocab = props;
            int n = static_cast<int>(m.states.size());
            std::bernoulli_distribution coin(0.5);
            m.pi.clear();
            for (int s = 0; s < n; ++s) {
                auto& v = m.pi[sname(s)];
                for (const auto& p : props)
                    if (coin(rng)) v.push_back(p);
                if (coin(rng)) {
                    m.vocab.push_back("mk" + std::to_string(s));
                    v.push_back("mk" + std::to_string(s));
                }
            }
            m.aware.clear();
            if (spec.awareness && !pool.empty()) {
                std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
                std::uniform_int_distribution<int> cnt(0, 4);
                for (int i = 1; i <= agents; ++i)
                    for (int s = 0; s < n; ++s) {
                        auto& slot = m.aware[i][sname(s)];
                        FormulaSet seen_f;
                        int c = cnt(rng);
                        for (int j = 0; j < c; ++j) {
                            Formula g = pool[pick(rng)];
                            for (const auto& p : g->props)
                                if (std::find(m.vocab.begin(), m.vocab.end(), p) == m.vocab.end()) m.vocab.push_back(p);
                            if (seen_f.insert(g).second) slot.push_back(g);
                        }
                    }
            }
            try_structure(m);
        }
    }
};

}  // namespace

SearchResult search_countermodel(const Formula& f0, const SearchConfig& cfg) {
    Formula f = f0;
    for (auto it = f0->free.rbegin(); it != f0->free.rend(); ++it) f = forall(*it, f);
    Searcher s{f, cfg, std::max(1, max_agent(f)), f->props, {}, {}};
    bool simple = s.agents == 1 && !mentions_awareness(f);
    if (simple && s.shapes()) return s.res;
    if (s.exhaustive()) return s.res;
    s.random();
    return s.res;
}

}  // namespace qaware
