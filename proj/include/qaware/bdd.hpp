#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace qaware {

// Reduced ordered BDDs. Node handles are plain ints; 0 is false, 1 is true.
// One manager per evaluation session; nothing is ever freed.
class BddManager {
public:
    using Ref = int;
    static constexpr Ref False = 0;
    static constexpr Ref True = 1;

    BddManager();

    Ref var(int v);
    Ref neg(Ref f);
    Ref conj(Ref f, Ref g);
    Ref disj(Ref f, Ref g);
    Ref exists(Ref f, const std::vector<int>& vars);
    Ref forall(Ref f, const std::vector<int>& vars);

    bool is_const(Ref f) const { return f <= 1; }
    int top_var(Ref f) const { return nodes_[f].var; }
    // one satisfying assignment of f (f != False); unlisted vars are don't-care
    std::map<int, bool> sat_one(Ref f) const;
    bool eval(Ref f, const std::vector<bool>& assignment) const;
    std::size_t size() const { return nodes_.size(); }

private:
    struct Node {
        int var;
        Ref lo, hi;
    };
    struct Key3 {
        std::uint64_t a, b;
        bool operator==(const Key3& o) const { return a == o.a && b == o.b; }
    };
    struct Key3Hash {
        std::size_t operator()(const Key3& k) const { return k.a * 0x9e3779b97f4a7c15ULL ^ (k.b + (k.a >> 7)); }
    };

    std::vector<Node> nodes_;
    std::unordered_map<Key3, Ref, Key3Hash> unique_;
    std::unordered_map<Key3, Ref, Key3Hash> and_cache_;
    std::unordered_map<Ref, Ref> not_cache_;
    std::unordered_map<Key3, Ref, Key3Hash> ex_cache_;
    std::map<std::vector<int>, int> varset_ids_;
    std::vector<std::vector<bool>> varsets_;

    Ref mk(int v, Ref lo, Ref hi);
    Ref exists_rec(Ref f, int set_id);
};

}  // namespace qaware
