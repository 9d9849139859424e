#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

#include "qaware/formula.hpp"

namespace qaware {

namespace {

constexpr std::size_t kLevelLimit = 4'000'000;

struct Entry {
    std::string text;
    Formula f;
};

struct Enumeration {
    std::vector<std::string> vocab;
    int agents;
    std::vector<std::vector<Entry>> levels;  // levels[s] = sentences of size s, sorted

    const std::vector<Entry>& level(int s) {
        while (static_cast<int>(levels.size()) <= s) build(static_cast<int>(levels.size()));
        return levels[s];
    }

    void build(int s) {
        std::vector<Entry> out;
        if (s == 1) {
            for (const auto& p : vocab) out.push_back({p, prop(p)});
        } else if (s > 1) {
            const auto& prev = levels[s - 1];
            std::size_t est = prev.size() * (1 + 3 * agents);
            for (int i = 1; i + 1 < s; ++i) est += levels[i].size() * levels[s - 1 - i].size();
            if (est > kLevelLimit) throw std::length_error("enumeration level too large");
            out.reserve(est);
            for (const auto& e : prev) {
                out.push_back({{}, neg(e.f)});
                for (int a = 1; a <= agents; ++a) {
                    out.push_back({{}, K(a, e.f)});
                    out.push_back({{}, A(a, e.f)});
                    out.push_back({{}, X(a, e.f)});
                }
            }
            for (int i = 1; i + 1 < s; ++i)
                for (const auto& l : levels[i])
                    for (const auto& r : levels[s - 1 - i]) out.push_back({{}, conj(l.f, r.f)});
            for (auto& e : out) e.text = print(e.f);
        }
        std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) { return x.text < y.text; });
        levels.push_back(std::move(out));
    }
};

std::mutex g_mu;
std::map<std::pair<std::vector<std::string>, int>, std::unique_ptr<Enumeration>> g_cache;

Enumeration& get(std::vector<std::string> vocab, int agents) {
    std::sort(vocab.begin(), vocab.end());
    vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());
    if (vocab.empty()) throw std::invalid_argument("enumeration needs a nonempty vocabulary");
    if (agents < 1) throw std::invalid_argument("enumeration needs at least one agent");
    auto key = std::make_pair(vocab, agents);
    auto& slot = g_cache[key];
    if (!slot) {
        slot = std::make_unique<Enumeration>();
        slot->vocab = vocab;
        slot->agents = agents;
        slot->levels.emplace_back();  // size 0 is empty
    }
    return *slot;
}

bool within(const Formula& f, const std::set<std::string>& vocab, int agents) {
    switch (f->op) {
    case Op::Prop:
        return vocab.count(f->name) > 0;
    case Op::Var:
    case Op::Forall:
        return false;
    case Op::And:
        return within(f->a, vocab, agents) && within(f->b, vocab, agents);
    case Op::Not:
        return within(f->a, vocab, agents);
    default:
        return f->agent <= agents && within(f->a, vocab, agents);
    }
}

}  // namespace

Formula enumerate_qf_sentences(const std::vector<std::string>& vocab, std::size_t index, int n_agents) {
    std::lock_guard<std::mutex> lock(g_mu);
    Enumeration& e = get(vocab, n_agents);
    for (int s = 1;; ++s) {
        const auto& lv = e.level(s);
        if (index < lv.size()) return lv[index].f;
        index -= lv.size();
    }
}

std::optional<std::size_t> enum_index(const std::vector<std::string>& vocab, const Formula& f, int n_agents) {
    std::set<std::string> vs(vocab.begin(), vocab.end());
    if (!within(f, vs, n_agents)) return std::nullopt;
    std::lock_guard<std::mutex> lock(g_mu);
    Enumeration& e = get(vocab, n_agents);
    std::size_t base = 0;
    for (int s = 1; s < f->size; ++s) base += e.level(s).size();
    const auto& lv = e.level(f->size);
    std::string text = print(f);
    auto it = std::lower_bound(lv.begin(), lv.end(), text,
                               [](const Entry& x, const std::string& t) { return x.text < t; });
    if (it == lv.end() || it->text != text) return std::nullopt;
    return base + static_cast<std::size_t>(it - lv.begin());
}

std::size_t enum_level_count(const std::vector<std::string>& vocab, int size, int n_agents) {
    std::lock_guard<std::mutex> lock(g_mu);
    return get(vocab, n_agents).level(size).size();
}

}  // namespace qaware
