#include <gtest/gtest.h>

#include <random>

#include "qaware/formula.hpp"
#include "qaware/search.hpp"

using namespace qaware;

TEST(Formula, ParsePrintRoundTrip) {
    for (const char* t : {"p", "!p", "p & q", "K1 p -> p", "forall ?x . (K1 ?x -> ?x)", "A2 q & !A1 q",
                          "exists ?x . (A2 ?x & !A1 ?x)", "X1 (p <-> q)", "p | q | !r"}) {
        Formula f = parse(t);
        EXPECT_TRUE(same(parse(print(f)), f)) << t << " printed as " << print(f);
    }
}

TEST(Formula, RandomRoundTrip) {
    std::mt19937_64 rng(11);
    RandomFormulaSpec spec;
    spec.agents = 2;
    spec.allow_open = true;
    for (int i = 0; i < 300; ++i) {
        Formula f = random_formula(rng, spec);
        EXPECT_TRUE(same(parse(print(f)), f)) << print(f);
    }
}

TEST(Formula, SugarIsDesugared) {
    Formula f = parse("p -> q");
    Formula l, r;
    ASSERT_TRUE(as_implies(f, l, r));
    EXPECT_EQ(print(l), "p");
    EXPECT_EQ(f->op, Op::Not);
    std::string x;
    Formula body;
    EXPECT_TRUE(as_exists(parse("exists ?y . ?y"), x, body));
    EXPECT_EQ(x, "y");
}

TEST(Formula, FreeVarsAndDepth) {
    Formula f = parse("forall ?x . (K1 ?x & ?y)");
    EXPECT_EQ(free_vars(f), std::vector<std::string>{"y"});
    EXPECT_EQ(qdepth(f), 1);
    EXPECT_EQ(qdepth(parse("forall ?x . exists ?y . (?x & ?y)")), 2);
    EXPECT_TRUE(is_sentence(parse("forall ?x . ?x")));
    EXPECT_FALSE(is_quantifier_free(parse("p & forall ?x . ?x")));
    EXPECT_EQ(max_agent(parse("K1 A3 p")), 3);
    EXPECT_TRUE(mentions_awareness(parse("K1 X2 p")));
    EXPECT_FALSE(mentions_awareness(parse("K1 K2 p")));
}

TEST(Formula, ParseErrors) {
    EXPECT_THROW(parse("p &"), ParseError);
    EXPECT_THROW(parse("forall x . x"), ParseError);
    EXPECT_THROW(parse("K3 p", 2), ParseError);
    try {
        parse("p & & q");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 1);
        EXPECT_GT(e.column, 1);
    }
}

TEST(Formula, Substitution) {
    Formula f = parse("forall ?y . K1 (?x & ?y)");
    EXPECT_TRUE(substitutable(f, "x", parse("p")));
    EXPECT_FALSE(substitutable(f, "x", parse("?y")));
    EXPECT_THROW(substitute(f, "x", parse("?y")), CaptureError);
    EXPECT_EQ(print(substitute(f, "x", parse("p"))), "forall ?y . K1 (p & ?y)");
    // bound occurrences are untouched
    EXPECT_TRUE(same(substitute(parse("forall ?x . ?x"), "x", parse("p")), parse("forall ?x . ?x")));
    // simultaneous
    Formula g = substitute(parse("?x & ?y"), {{"x", parse("?y")}, {"y", parse("?x")}});
    EXPECT_EQ(print(g), "?y & ?x");
}

TEST(Formula, FreshVar) {
    Formula f = parse("forall ?y . (?y & ?y1)");
    std::string v = fresh_var({f}, "y");
    EXPECT_NE(v, "y");
    EXPECT_NE(v, "y1");
}

TEST(Formula, EnumerationIsABijection) {
    std::vector<std::string> vocab{"p"};
    for (std::size_t i = 0; i < 400; ++i) {
        Formula f = enumerate_qf_sentences(vocab, i);
        EXPECT_TRUE(is_sentence(f) && is_quantifier_free(f));
        auto j = enum_index(vocab, f);
        ASSERT_TRUE(j.has_value()) << print(f);
        EXPECT_EQ(*j, i);
    }
    EXPECT_FALSE(enum_index(vocab, parse("q")).has_value());
    EXPECT_FALSE(enum_index(vocab, parse("forall ?x . ?x")).has_value());
}

TEST(Formula, EnumerationOrder) {
    std::vector<std::string> vocab{"p", "q"};
    Formula prev = enumerate_qf_sentences(vocab, 0);
    for (std::size_t i = 1; i < 200; ++i) {
        Formula f = enumerate_qf_sentences(vocab, i);
        EXPECT_TRUE(prev->size < f->size || (prev->size == f->size && print(prev) < print(f)));
        prev = f;
    }
}

TEST(Formula, ValuationDefaultsToASentence) {
    ValuationSyn V;
    EXPECT_TRUE(is_sentence(V("x")));
    V.set("x", parse("K1 p"));
    EXPECT_EQ(print(V("x")), "K1 p");
    EXPECT_THROW(V.set("x", parse("?y")), std::invalid_argument);
}
