#include <gtest/gtest.h>

#include <random>

#include "qaware/checker.hpp"
#include "qaware/search.hpp"

using namespace qaware;

namespace {

std::string data(const std::string& rel) { return std::string(QAWARE_DATA_DIR) + "/" + rel; }

// brute-force reference over a fixed instance pool; only trusted on quantifier-free input
bool naive(const Model& m, int s, const Formula& f) {
    switch (f->op) {
    case Op::Prop:
        return (m.prop(f->name) >> s) & 1;
    case Op::Not:
        return !naive(m, s, f->a);
    case Op::And:
        return naive(m, s, f->a) && naive(m, s, f->b);
    case Op::K:
    case Op::X: {
        if (f->op == Op::X && !m.is_aware(f->agent, s, f->a)) return false;
        for (int t = 0; t < m.n; ++t)
            if (((m.succ[f->agent - 1][s] >> t) & 1) && !naive(m, t, f->a)) return false;
        return true;
    }
    case Op::A:
        return m.is_aware(f->agent, s, f->a);
    default:
        throw std::logic_error("naive: quantifier");
    }
}

}  // namespace

TEST(Checker, TwoAgentExample) {
    Model m(load_structure(data("two_agents.json")));
    Checker c(m);
    EXPECT_TRUE(c.eval_exact(0, parse("X1 p & X2 p & X2 q & !X1 q & X2 (A2 q & !A1 q) & X1 (exists ?x . (A2 ?x & !A1 ?x))")));
    EXPECT_TRUE(c.eval_exact(0, parse("!X2 (exists ?x . (A2 ?x & !A1 ?x))")));
    EXPECT_TRUE(c.eval_exact(0, parse("exists ?x . X2 (A2 ?x & !A1 ?x)")));
    EXPECT_FALSE(c.eval_exact(0, parse("forall ?x . A1 ?x")));
}

TEST(Checker, WitnessRefutesTheInstance) {
    Model m(load_structure(data("two_agents.json")));
    Checker c(m);
    Formula f = parse("forall ?x . A1 ?x");
    auto w = c.witness(0, f);
    ASSERT_TRUE(w.has_value());
    EXPECT_FALSE(c.eval_exact(0, substitute(f->a, "x", *w)));
    OracleResult o = c.eval_oracle(0, f, 200);
    EXPECT_EQ(o.value, Verdict3::False);
    ASSERT_TRUE(o.witness);
    EXPECT_EQ(print(o.witness), "q");
}

TEST(Checker, QuantifierFreeMatchesNaive) {
    std::mt19937_64 rng(21);
    RandomStructureSpec sspec;
    RandomFormulaSpec fspec;
    fspec.props = {"p0", "p1", "p2"};
    fspec.agents = 2;
    fspec.max_qdepth = 0;
    for (int k = 0; k < 150; ++k) {
        Model m(random_structure(rng, sspec));
        Checker c(m);
        Formula f = random_formula(rng, fspec);
        for (int s = 0; s < m.n; ++s) {
            ASSERT_EQ(c.eval_exact(s, f), naive(m, s, f)) << print(f);
            ASSERT_EQ(c.eval_base(s, f), naive(m, s, f)) << print(f);
        }
    }
}

TEST(Checker, TypesPartitionTheStates) {
    std::mt19937_64 rng(4);
    RandomStructureSpec spec;
    for (int k = 0; k < 50; ++k) {
        Model m(random_structure(rng, spec));
        Checker c(m);
        StateSet seen = 0;
        for (StateSet t : c.types()) {
            EXPECT_EQ(seen & t, 0u);
            seen |= t;
        }
        EXPECT_EQ(seen, m.all);
        EXPECT_EQ(c.realizable_profiles(), c.realizable_profiles_closure());
        for (TruthProfile p : c.realizable_profiles()) EXPECT_EQ(c.truth(c.realizer(p)), p);
    }
}

TEST(Checker, AgreesWithOracle) {
    std::mt19937_64 rng(8);
    RandomStructureSpec sspec;
    sspec.max_states = 3;
    RandomFormulaSpec fspec;
    fspec.agents = 2;
    fspec.max_qdepth = 2;
    int conclusive = 0;
    for (int k = 0; k < 120; ++k) {
        Model m(random_structure(rng, sspec));
        Checker c(m);
        Formula f = random_formula(rng, fspec);
        for (int s = 0; s < m.n; ++s) {
            OracleResult o = c.eval_oracle(s, f, 300);
            if (o.value == Verdict3::Unknown) continue;
            ++conclusive;
            ASSERT_EQ(c.eval_exact(s, f), o.value == Verdict3::True) << print(f);
        }
    }
    EXPECT_GT(conclusive, 100);
}

TEST(Checker, ValidInStructure) {
    Model m(load_structure(data("two_agents.json")));
    EXPECT_TRUE(valid_in_structure(m, parse("forall ?x . (?x | !?x)")));
    EXPECT_FALSE(valid_in_structure(m, parse("forall ?x . ?x")));
}

TEST(Checker, MatchContext) {
    std::map<std::string, Formula> b;
    EXPECT_TRUE(match_context(parse("?x & !A1 ?x"), parse("q & !A1 q"), {"x"}, b));
    EXPECT_EQ(print(b.at("x")), "q");
    b.clear();
    EXPECT_FALSE(match_context(parse("?x & !A1 ?x"), parse("q & !A1 p"), {"x"}, b));
}
