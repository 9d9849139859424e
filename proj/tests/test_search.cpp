#include <gtest/gtest.h>

#include <random>

#include "qaware/checker.hpp"
#include "qaware/search.hpp"

using namespace qaware;

namespace {

// every r/t/e property that should hold after closing, checked directly on the bitsets
bool has(const std::vector<StateSet>& succ, int n, const RelClass& c) {
    for (int s = 0; s < n; ++s) {
        if (c.r && !((succ[s] >> s) & 1)) return false;
        for (int t = 0; t < n; ++t) {
            if (!((succ[s] >> t) & 1)) continue;
            if (c.t && (succ[t] & ~succ[s])) return false;
            if (c.e && (succ[s] & ~succ[t])) return false;
        }
    }
    return true;
}

}  // namespace

TEST(Search, CloseRelation) {
    std::mt19937_64 rng(9);
    std::bernoulli_distribution edge(0.3);
    for (const char* cls : {"r", "t", "e", "rt", "et", "ret"}) {
        RelClass c = parse_rel_class(cls);
        for (int k = 0; k < 40; ++k) {
            int n = 1 + k % 5;
            std::vector<StateSet> succ(n, 0);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t)
                    if (edge(rng)) succ[s] |= StateSet{1} << t;
            std::vector<StateSet> before = succ;
            close_relation(succ, n, c);
            EXPECT_TRUE(has(succ, n, c)) << cls;
            for (int s = 0; s < n; ++s) EXPECT_EQ(before[s] & ~succ[s], 0u);  // only adds edges
        }
    }
}

TEST(Search, RandomStructuresRespectTheClass) {
    std::mt19937_64 rng(5);
    RandomStructureSpec spec;
    spec.cls = parse_rel_class("et");
    for (int k = 0; k < 30; ++k) {
        AwarenessStructure m = random_structure(rng, spec);
        EXPECT_TRUE(validate(m).empty());
        EXPECT_LE(static_cast<int>(m.states.size()), spec.max_states);
        for (int i = 1; i <= spec.agents; ++i) EXPECT_TRUE(rel_class(m, i).contains(spec.cls));
    }
}

TEST(Search, RandomFormulasRespectTheirSettings) {
    std::mt19937_64 rng(7);
    RandomFormulaSpec spec;
    spec.agents = 2;
    spec.max_qdepth = 1;
    spec.max_size = 10;
    spec.awareness = false;
    for (int k = 0; k < 200; ++k) {
        Formula f = random_formula(rng, spec);
        EXPECT_TRUE(is_sentence(f)) << print(f);
        EXPECT_LE(qdepth(f), 1);
        EXPECT_LE(max_agent(f), 2);
        EXPECT_FALSE(mentions_awareness(f));
        for (const auto& p : f->props) EXPECT_TRUE(p == "p0" || p == "p1") << p;
    }
}

TEST(Search, FindsCountermodelForT) {
    SearchConfig cfg;
    cfg.cls = parse_rel_class("e");
    SearchResult r = search_countermodel(parse("K1 p -> p"), cfg);
    ASSERT_TRUE(r.found);
    Model m(r.model);
    EXPECT_FALSE(eval_exact(m, m.state(r.state), ValuationSyn(), parse("K1 p -> p")));
    EXPECT_TRUE(rel_class(m, 1).e);
}

TEST(Search, FindsCountermodelForFourInE) {
    SearchConfig cfg;
    cfg.cls = parse_rel_class("e");
    SearchResult r = search_countermodel(parse("K1 p -> K1 K1 p"), cfg);
    ASSERT_TRUE(r.found);
    Model m(r.model);
    EXPECT_FALSE(eval_exact(m, m.state(r.state), ValuationSyn(), parse("K1 p -> K1 K1 p")));
}

TEST(Search, NoCountermodelForValidities) {
    SearchConfig cfg;
    cfg.cls = parse_rel_class("ret");
    cfg.max_structures = 2000;
    for (const char* f : {"K1 p -> p", "(forall ?x . K1 ?x) -> K1 forall ?x . ?x", "!K1 p -> K1 !K1 p"}) {
        SearchResult r = search_countermodel(parse(f), cfg);
        EXPECT_FALSE(r.found) << f;
        EXPECT_GT(r.examined, 0u);
    }
}

TEST(Search, SatisfiabilityViaNegation) {
    // a model of f is a countermodel of !f
    SearchConfig cfg;
    cfg.cls = parse_rel_class("ret");
    Formula f = parse("p & !K1 p");
    SearchResult r = search_countermodel(neg(f), cfg);
    ASSERT_TRUE(r.found);
    Model m(r.model);
    EXPECT_TRUE(eval_exact(m, m.state(r.state), ValuationSyn(), f));
    EXPECT_FALSE(search_countermodel(neg(parse("!K1 p & K1 p")), cfg).found);
}
