#include <gtest/gtest.h>

#include <random>

#include "qaware/bdd.hpp"

using namespace qaware;

namespace {

// random boolean function over n vars, as a BDD and as a truth table
struct RandomFn {
    BddManager::Ref ref;
    std::vector<bool> table;
};

RandomFn build(BddManager& m, std::mt19937_64& rng, int n, int depth) {
    std::uniform_int_distribution<int> pick(0, 3), v(0, n - 1);
    std::size_t rows = std::size_t{1} << n;
    int c = depth == 0 ? 0 : pick(rng);
    if (c == 0) {
        int x = v(rng);
        std::vector<bool> t(rows);
        for (std::size_t r = 0; r < rows; ++r) t[r] = (r >> x) & 1;
        return {m.var(x), t};
    }
    RandomFn a = build(m, rng, n, depth - 1);
    if (c == 1) {
        for (std::size_t r = 0; r < rows; ++r) a.table[r] = !a.table[r];
        return {m.neg(a.ref), a.table};
    }
    RandomFn b = build(m, rng, n, depth - 1);
    std::vector<bool> t(rows);
    for (std::size_t r = 0; r < rows; ++r) t[r] = c == 2 ? (a.table[r] && b.table[r]) : (a.table[r] || b.table[r]);
    return {c == 2 ? m.conj(a.ref, b.ref) : m.disj(a.ref, b.ref), t};
}

std::vector<bool> assignment(std::size_t r, int n) {
    std::vector<bool> a(n);
    for (int i = 0; i < n; ++i) a[i] = (r >> i) & 1;
    return a;
}

}  // namespace

TEST(Bdd, Constants) {
    BddManager m;
    auto x = m.var(0);
    EXPECT_EQ(m.conj(x, m.neg(x)), BddManager::False);
    EXPECT_EQ(m.disj(x, m.neg(x)), BddManager::True);
    EXPECT_EQ(m.neg(m.neg(x)), x);
    EXPECT_TRUE(m.is_const(BddManager::True));
}

TEST(Bdd, Canonical) {
    BddManager m;
    auto a = m.var(0), b = m.var(1);
    EXPECT_EQ(m.conj(a, b), m.conj(b, a));
    EXPECT_EQ(m.neg(m.conj(a, b)), m.disj(m.neg(a), m.neg(b)));
}

TEST(Bdd, AgreesWithTruthTables) {
    std::mt19937_64 rng(3);
    const int n = 5;
    for (int k = 0; k < 200; ++k) {
        BddManager m;
        RandomFn f = build(m, rng, n, 5);
        for (std::size_t r = 0; r < (std::size_t{1} << n); ++r) ASSERT_EQ(m.eval(f.ref, assignment(r, n)), f.table[r]);
        // quantification over vars {1, 3}
        auto ex = m.exists(f.ref, {1, 3});
        auto fa = m.forall(f.ref, {1, 3});
        for (std::size_t r = 0; r < (std::size_t{1} << n); ++r) {
            bool any = false, all = true;
            for (std::size_t bits = 0; bits < 4; ++bits) {
                std::size_t rr = (r & ~std::size_t{0b1010}) | ((bits & 1) << 1) | ((bits >> 1) << 3);
                any = any || f.table[rr];
                all = all && f.table[rr];
            }
            ASSERT_EQ(m.eval(ex, assignment(r, n)), any);
            ASSERT_EQ(m.eval(fa, assignment(r, n)), all);
        }
        if (f.ref != BddManager::False) {
            auto sat = m.sat_one(f.ref);
            std::vector<bool> a(n, false);
            for (auto [v, b] : sat) a[v] = b;
            EXPECT_TRUE(m.eval(f.ref, a));
        }
    }
}
