#include <gtest/gtest.h>

#include <random>

#include "qaware/model.hpp"
#include "qaware/search.hpp"

using namespace qaware;

namespace {

std::string data(const std::string& rel) { return std::string(QAWARE_DATA_DIR) + "/" + rel; }

AwarenessStructure tiny(std::vector<std::pair<std::string, std::string>> rel) {
    AwarenessStructure m;
    m.states = {"a", "b"};
    m.vocab = {"p"};
    m.pi = {{"a", {"p"}}, {"b", {}}};
    m.rel[1] = std::move(rel);
    return m;
}

}  // namespace

TEST(Model, LoadsTwoAgentExample) {
    AwarenessStructure raw = load_structure(data("two_agents.json"));
    EXPECT_TRUE(validate(raw).empty());
    Model m(raw);
    EXPECT_EQ(m.n, 1);
    EXPECT_EQ(m.agents, 2);
    EXPECT_TRUE(m.is_aware(2, 0, parse("A2 q & !A1 q")));
    EXPECT_FALSE(m.is_aware(1, 0, parse("q")));
    EXPECT_EQ(m.max_aware_size(), 9);
}

TEST(Model, JsonRoundTrip) {
    AwarenessStructure raw = load_structure(data("two_agents.json"));
    AwarenessStructure back = structure_from_json(structure_to_json(raw));
    EXPECT_EQ(structure_to_json(back), structure_to_json(raw));
}

TEST(Model, ValidationDiagnostics) {
    nlohmann::json j = {{"agents", 1}, {"states", {"s"}}, {"vocab", {"p"}}, {"pi", {{"t", {"p"}}}}, {"rel", {{"1", nlohmann::json::array()}}}};
    AwarenessStructure raw;
    try {
        raw = structure_from_json(j);
    } catch (const ModelError& e) {
        EXPECT_FALSE(e.diagnostics.empty());
        return;
    }
    EXPECT_FALSE(validate(raw).empty());
    EXPECT_THROW(Model{raw}, ModelError);
}

TEST(Model, MalformedFile) {
    EXPECT_THROW(load_structure(data("does-not-exist.json")), ModelError);
    EXPECT_THROW(structure_from_json(nlohmann::json::array()), ModelError);
}

TEST(Model, RelClass) {
    EXPECT_EQ(rel_class(tiny({{"a", "a"}, {"a", "b"}, {"b", "a"}, {"b", "b"}}), 1).str(), "{r,t,e}");
    EXPECT_EQ(rel_class(tiny({{"a", "b"}, {"b", "b"}}), 1).str(), "{t,e}");
    EXPECT_EQ(rel_class(tiny({{"a", "b"}, {"b", "a"}}), 1).str(), "{}");
    EXPECT_EQ(rel_class(tiny({{"a", "a"}, {"b", "b"}, {"a", "b"}}), 1).str(), "{r,t}");
    RelClass c = parse_rel_class("et");
    EXPECT_TRUE(c.e && c.t && !c.r);
    EXPECT_TRUE(parse_rel_class("ret").contains(c));
    EXPECT_FALSE(c.contains(parse_rel_class("{r}")));
}

TEST(Model, CloseRelationProducesTheClass) {
    std::mt19937_64 rng(5);
    for (const char* cls : {"r", "t", "e", "et", "ret", "{r,e}"}) {
        RandomStructureSpec spec;
        spec.cls = parse_rel_class(cls);
        spec.awareness = false;
        for (int k = 0; k < 40; ++k) {
            AwarenessStructure m = random_structure(rng, spec);
            for (int i = 1; i <= m.agents; ++i) EXPECT_TRUE(rel_class(m, i).contains(spec.cls)) << cls;
        }
    }
}

TEST(Model, TwoAgentExampleProperties) {
    Model m(load_structure(data("two_agents.json")));
    PropertyReport ce = check_awareness_property(m, AwarenessProperty::ClosedExists);
    EXPECT_FALSE(ce.holds);
    ASSERT_EQ(ce.formulas.size(), 2u);
    EXPECT_EQ(ce.agent, 2);
    EXPECT_EQ(print(ce.formulas[0]), "A2 q & !A1 q");
    EXPECT_EQ(print(ce.formulas[1]), "exists ?x . (A2 ?x & !A1 ?x)");
    EXPECT_FALSE(check_awareness_property(m, AwarenessProperty::Gpp).holds);
    EXPECT_FALSE(check_awareness_property(m, AwarenessProperty::WeakGpp).holds);
    EXPECT_TRUE(check_awareness_property(m, AwarenessProperty::KnowsAware).holds);
}

TEST(Model, EmptyAwarenessIsWeaklyGenerated) {
    Model m(tiny({{"a", "a"}, {"b", "b"}}));
    EXPECT_TRUE(check_awareness_property(m, AwarenessProperty::WeakGpp).holds);
    EXPECT_TRUE(check_awareness_property(m, AwarenessProperty::ClosedExists).holds);
    // gpp forces the sentences without propositions
    EXPECT_FALSE(check_awareness_property(m, AwarenessProperty::Gpp).holds);
}

TEST(Model, KnowsAwareFailsAcrossEdges) {
    AwarenessStructure raw = tiny({{"a", "b"}, {"b", "b"}});
    raw.aware[1]["a"] = {parse("p")};
    EXPECT_FALSE(check_awareness_property(Model(raw), AwarenessProperty::KnowsAware).holds);
}

TEST(Model, GeneratedGppStructures) {
    std::mt19937_64 rng(9);
    RandomStructureSpec spec;
    spec.max_states = 3;
    spec.props = 2;
    for (int k = 0; k < 6; ++k) {
        Model m(random_gpp_structure(rng, spec, 4));
        EXPECT_TRUE(check_awareness_property(m, AwarenessProperty::Gpp, 4).holds);
        EXPECT_TRUE(check_awareness_property(m, AwarenessProperty::WeakGpp, 4).holds);
        EXPECT_TRUE(check_awareness_property(m, AwarenessProperty::ClosedExists, 4).holds);
    }
}

TEST(Model, BoundedSentences) {
    auto fs = bounded_sentences({"p"}, 1, {"x"}, 3);
    for (const auto& f : fs) {
        EXPECT_TRUE(is_sentence(f));
        EXPECT_LE(f->size, 3);
    }
    for (std::size_t i = 1; i < fs.size(); ++i) EXPECT_LE(fs[i - 1]->size, fs[i]->size);
}

TEST(Model, ExistentialAbstractions) {
    auto abs = existential_abstractions(parse("A2 q & !A1 q"), {"x"}, 12);
    bool found = false;
    for (const auto& a : abs)
        if (print(a.result) == "exists ?x . (A2 ?x & !A1 ?x)") found = true;
    EXPECT_TRUE(found);
    ASSERT_FALSE(abs.empty());
    EXPECT_EQ(abs.back().psi, nullptr);
}
