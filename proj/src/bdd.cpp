#include "qaware/bdd.hpp"

#include <algorithm>
#include <climits>

namespace qaware {

BddManager::BddManager() {
    nodes_.push_back({INT_MAX, 0, 0});
    nodes_.push_back({INT_MAX, 1, 1});
}

BddManager::Ref BddManager::mk(int v, Ref lo, Ref hi) {
    if (lo == hi) return lo;
    Key3 k{static_cast<std::uint64_t>(v), (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint32_t>(hi)};
    auto it = unique_.find(k);
    if (it != unique_.end()) return it->second;
    Ref r = static_cast<Ref>(nodes_.size());
    nodes_.push_back({v, lo, hi});
    unique_.emplace(k, r);
    return r;
}

BddManager::Ref BddManager::var(int v) { return mk(v, False, True); }

BddManager::Ref BddManager::neg(Ref f) {
    if (f == False) return True;
    if (f == True) return False;
    auto it = not_cache_.find(f);
    if (it != not_cache_.end()) return it->second;
    Node n = nodes_[f];
    Ref r = mk(n.var, neg(n.lo), neg(n.hi));
    not_cache_.emplace(f, r);
    return r;
}

BddManager::Ref BddManager::conj(Ref f, Ref g) {
    if (f == False || g == False) return False;
    if (f == True) return g;
    if (g == True || f == g) return f;
    if (f > g) std::swap(f, g);
    Key3 k{static_cast<std::uint64_t>(f), static_cast<std::uint64_t>(g)};
    auto it = and_cache_.find(k);
    if (it != and_cache_.end()) return it->second;
    Node a = nodes_[f], b = nodes_[g];
    int v = std::min(a.var, b.var);
    Ref lo = conj(a.var == v ? a.lo : f, b.var == v ? b.lo : g);
    Ref hi = conj(a.var == v ? a.hi : f, b.var == v ? b.hi : g);
    Ref r = mk(v, lo, hi);
    and_cache_.emplace(k, r);
    return r;
}

BddManager::Ref BddManager::disj(Ref f, Ref g) { return neg(conj(neg(f), neg(g))); }

BddManager::Ref BddManager::exists(Ref f, const std::vector<int>& vars) {
    if (vars.empty() || is_const(f)) return f;
    std::vector<int> key = vars;
    std::sort(key.begin(), key.end());
    auto it = varset_ids_.find(key);
    int id;
    if (it == varset_ids_.end()) {
        id = static_cast<int>(varsets_.size());
        varset_ids_.emplace(key, id);
        std::vector<bool> mask(key.back() + 1, false);
        for (int v : key) mask[v] = true;
        varsets_.push_back(std::move(mask));
    } else {
        id = it->second;
    }
    return exists_rec(f, id);
}

BddManager::Ref BddManager::exists_rec(Ref f, int id) {
    if (is_const(f)) return f;
    const auto& mask = varsets_[id];
    Node n = nodes_[f];
    if (n.var >= static_cast<int>(mask.size())) return f;  // below every quantified variable
    Key3 k{static_cast<std::uint64_t>(f), static_cast<std::uint64_t>(id)};
    auto it = ex_cache_.find(k);
    if (it != ex_cache_.end()) return it->second;
    Ref lo = exists_rec(n.lo, id);
    Ref r;
    if (mask[n.var]) {
        r = lo == True ? True : disj(lo, exists_rec(n.hi, id));
    } else {
        r = mk(n.var, lo, exists_rec(n.hi, id));
    }
    ex_cache_.emplace(k, r);
    return r;
}

BddManager::Ref BddManager::forall(Ref f, const std::vector<int>& vars) { return neg(exists(neg(f), vars)); }

std::map<int, bool> BddManager::sat_one(Ref f) const {
    std::map<int, bool> out;
    while (!is_const(f)) {
        const Node& n = nodes_[f];
        if (n.lo != False) {
            out[n.var] = false;
            f = n.lo;
        } else {
            out[n.var] = true;
            f = n.hi;
        }
    }
    return out;
}

bool BddManager::eval(Ref f, const std::vector<bool>& assignment) const {
    while (!is_const(f)) {
        const Node& n = nodes_[f];
        bool b = n.var < static_cast<int>(assignment.size()) && assignment[n.var];
        f = b ? n.hi : n.lo;
    }
    return f == True;
}

}  // namespace qaware
