#include "qaware/model.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace qaware {

ModelError::ModelError(std::vector<std::string> d)
    : std::runtime_error(d.empty() ? std::string("invalid structure") : "invalid structure: " + d.front()),
      diagnostics(std::move(d)) {}

// ---------------------------------------------------------------- JSON

AwarenessStructure structure_from_json(const nlohmann::json& j) {
    std::vector<std::string> errs;
    AwarenessStructure m;
    auto want = [&](const char* key, bool (nlohmann::json::*pred)() const noexcept, const char* what) {
        if (!j.contains(key)) {
            errs.push_back(std::string("missing key '") + key + "'");
            return false;
        }
        if (!(j.at(key).*pred)()) {
            errs.push_back(std::string("key '") + key + "' must be " + what);
            return false;
        }
        return true;
    };
    if (!j.is_object()) throw ModelError({"structure file must be a JSON object"});
    if (want("agents", &nlohmann::json::is_number_integer, "an integer")) m.agents = j.at("agents").get<int>();
    if (want("states", &nlohmann::json::is_array, "a list"))
        for (const auto& s : j.at("states")) {
            if (s.is_string())
                m.states.push_back(s.get<std::string>());
            else
                errs.push_back("state names must be strings");
        }
    if (j.contains("vocab")) {
        if (!j.at("vocab").is_array())
            errs.push_back("key 'vocab' must be a list");
        else
            for (const auto& p : j.at("vocab")) {
                if (p.is_string())
                    m.vocab.push_back(p.get<std::string>());
                else
                    errs.push_back("vocab entries must be strings");
            }
    }
    if (j.contains("pi")) {
        if (!j.at("pi").is_object()) {
            errs.push_back("key 'pi' must be an object");
        } else {
            for (const auto& [s, ps] : j.at("pi").items()) {
                if (!ps.is_array()) {
                    errs.push_back("pi entry for state '" + s + "' must be a list");
                    continue;
                }
                auto& slot = m.pi[s];
                for (const auto& p : ps) {
                    if (p.is_string())
                        slot.push_back(p.get<std::string>());
                    else
                        errs.push_back("pi entries must be strings");
                }
            }
        }
    }
    auto agent_key = [&](const std::string& k) {
        try {
            std::size_t used = 0;
            int i = std::stoi(k, &used);
            if (used == k.size()) return i;
        } catch (const std::exception&) {
        }
        errs.push_back("agent key '" + k + "' is not an integer");
        return -1;
    };
    if (j.contains("rel")) {
        if (!j.at("rel").is_object()) {
            errs.push_back("key 'rel' must be an object");
        } else {
            for (const auto& [k, pairs] : j.at("rel").items()) {
                int i = agent_key(k);
                if (i < 0) continue;
                auto& slot = m.rel[i];
                if (!pairs.is_array()) {
                    errs.push_back("rel entry for agent " + k + " must be a list");
                    continue;
                }
                for (const auto& pr : pairs) {
                    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string()) {
                        errs.push_back("rel pairs must be [state, state]");
                        continue;
                    }
                    slot.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
                }
            }
        }
    }
    if (j.contains("aware")) {
        if (!j.at("aware").is_object()) {
            errs.push_back("key 'aware' must be an object");
        } else {
            for (const auto& [k, per_state] : j.at("aware").items()) {
                int i = agent_key(k);
                if (i < 0) continue;
                if (!per_state.is_object()) {
                    errs.push_back("aware entry for agent " + k + " must be an object");
                    continue;
                }
                for (const auto& [s, fs] : per_state.items()) {
                    auto& slot = m.aware[i][s];
                    if (!fs.is_array()) {
                        errs.push_back("aware set for agent " + k + ", state " + s + " must be a list");
                        continue;
                    }
                    for (const auto& text : fs) {
                        if (!text.is_string()) {
                            errs.push_back("aware entries must be formula strings");
                            continue;
                        }
                        try {
                            slot.push_back(parse(text.get<std::string>()));
                        } catch (const std::exception& e) {
                            errs.push_back("aware entry '" + text.get<std::string>() + "' (agent " + k +
                                           ", state " + s + "): " + e.what());
                        }
                    }
                }
            }
        }
    }
    if (!errs.empty()) throw ModelError(errs);
    return m;
}

AwarenessStructure load_structure(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError({"cannot open " + path});
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ModelError({std::string("malformed JSON in ") + path + ": " + e.what()});
    }
    return structure_from_json(j);
}

nlohmann::json structure_to_json(const AwarenessStructure& m) {
    nlohmann::json j;
    j["agents"] = m.agents;
    j["states"] = m.states;
    j["vocab"] = m.vocab;
    j["pi"] = nlohmann::json::object();
    for (const auto& s : m.states) {
        auto it = m.pi.find(s);
        j["pi"][s] = it == m.pi.end() ? std::vector<std::string>{} : it->second;
    }
    j["rel"] = nlohmann::json::object();
    for (const auto& [i, pairs] : m.rel) {
        auto arr = nlohmann::json::array();
        for (const auto& [s, t] : pairs) arr.push_back({s, t});
        j["rel"][std::to_string(i)] = arr;
    }
    j["aware"] = nlohmann::json::object();
    for (const auto& [i, per] : m.aware) {
        auto obj = nlohmann::json::object();
        for (const auto& [s, fs] : per) {
            auto arr = nlohmann::json::array();
            for (const auto& f : fs) arr.push_back(print(f));
            obj[s] = arr;
        }
        j["aware"][std::to_string(i)] = obj;
    }
    return j;
}

// ---------------------------------------------------------------- validation

std::vector<std::string> validate(const AwarenessStructure& m) {
    std::vector<std::string> d;
    if (m.agents < 1) d.push_back("agents must be at least 1");
    if (m.states.empty()) d.push_back("no states");
    if (static_cast<int>(m.states.size()) > kMaxStates)
        d.push_back("more than " + std::to_string(kMaxStates) + " states");
    std::set<std::string> st;
    for (const auto& s : m.states)
        if (!st.insert(s).second) d.push_back("duplicate state '" + s + "'");
    std::set<std::string> voc;
    for (const auto& p : m.vocab) {
        try {
            prop(p);
        } catch (const std::exception&) {
            d.push_back("vocab entry '" + p + "' is not a proposition name");
        }
        voc.insert(p);
    }
    for (const auto& [s, ps] : m.pi) {
        if (!st.count(s)) d.push_back("pi mentions unknown state '" + s + "'");
        for (const auto& p : ps)
            if (!voc.count(p)) d.push_back("pi makes '" + p + "' true at '" + s + "' but it is not in vocab");
    }
    for (const auto& [i, pairs] : m.rel) {
        if (i < 1 || i > m.agents) d.push_back("rel given for unknown agent " + std::to_string(i));
        for (const auto& [s, t] : pairs) {
            if (!st.count(s)) d.push_back("rel pair (" + s + ", " + t + ") for agent " + std::to_string(i) +
                                          ": unknown state '" + s + "'");
            if (!st.count(t)) d.push_back("rel pair (" + s + ", " + t + ") for agent " + std::to_string(i) +
                                          ": unknown state '" + t + "'");
        }
    }
    for (const auto& [i, per] : m.aware) {
        if (i < 1 || i > m.agents) d.push_back("aware sets given for unknown agent " + std::to_string(i));
        for (const auto& [s, fs] : per) {
            if (!st.count(s)) d.push_back("aware set for unknown state '" + s + "'");
            for (const auto& f : fs) {
                if (!is_sentence(f))
                    d.push_back("aware entry '" + print(f) + "' (agent " + std::to_string(i) + ", state " + s +
                                ") is not a sentence");
                if (max_agent(f) > m.agents)
                    d.push_back("aware entry '" + print(f) + "' mentions an agent beyond " +
                                std::to_string(m.agents));
            }
        }
    }
    return d;
}

// ---------------------------------------------------------------- compiled model

Model::Model(const AwarenessStructure& m) : src_(m) {
    auto diags = validate(m);
    if (!diags.empty()) throw ModelError(diags);
    n = static_cast<int>(m.states.size());
    agents = m.agents;
    names = m.states;
    vocab = m.vocab;
    all = n == 64 ? ~StateSet{0} : ((StateSet{1} << n) - 1);
    for (const auto& p : vocab) truth[p] = 0;
    for (const auto& [s, ps] : m.pi)
        for (const auto& p : ps) truth[p] |= StateSet{1} << state(s);
    succ.assign(agents, std::vector<StateSet>(n, 0));
    for (const auto& [i, pairs] : m.rel)
        for (const auto& [s, t] : pairs) succ[i - 1][state(s)] |= StateSet{1} << state(t);
    aware.assign(agents, std::vector<std::vector<Formula>>(n));
    aware_set.assign(agents, std::vector<FormulaSet>(n));
    for (const auto& [i, per] : m.aware)
        for (const auto& [s, fs] : per) {
            int k = state(s);
            for (const auto& f : fs)
                if (aware_set[i - 1][k].insert(f).second) aware[i - 1][k].push_back(f);
        }
}

int Model::state(const std::string& name) const {
    for (int i = 0; i < n; ++i)
        if (names[i] == name) return i;
    return -1;
}

StateSet Model::prop(const std::string& p) const {
    auto it = truth.find(p);
    return it == truth.end() ? 0 : it->second;
}

StateSet Model::box(int i, StateSet t) const {
    StateSet out = 0;
    for (int s = 0; s < n; ++s)
        if ((succ[i - 1][s] & ~t) == 0) out |= StateSet{1} << s;
    return out;
}

bool Model::is_aware(int i, int s, const Formula& f) const { return aware_set[i - 1][s].count(f) > 0; }

StateSet Model::aware_states(int i, const Formula& f) const {
    StateSet out = 0;
    for (int s = 0; s < n; ++s)
        if (aware_set[i - 1][s].count(f)) out |= StateSet{1} << s;
    return out;
}

std::vector<Formula> Model::all_aware() const {
    std::vector<Formula> out;
    FormulaSet seen;
    for (const auto& per : aware)
        for (const auto& fs : per)
            for (const auto& f : fs)
                if (seen.insert(f).second) out.push_back(f);
    return out;
}

int Model::max_aware_size() const {
    int m = 0;
    for (const auto& f : all_aware()) m = std::max(m, f->size);
    return m;
}

// ---------------------------------------------------------------- relation classes

std::string RelClass::str() const {
    std::string s = "{";
    auto add = [&](bool b, char c) {
        if (!b) return;
        if (s.size() > 1) s += ',';
        s += c;
    };
    add(r, 'r');
    add(t, 't');
    add(e, 'e');
    return s + "}";
}

RelClass rel_class(const Model& m, int i) {
    RelClass c{true, true, true};
    const auto& R = m.succ[i - 1];
    for (int s = 0; s < m.n; ++s) {
        if (!((R[s] >> s) & 1)) c.r = false;
        for (int t = 0; t < m.n; ++t) {
            if (!((R[s] >> t) & 1)) continue;
            if ((R[t] & ~R[s]) != 0) c.t = false;  // (s,t),(t,u) => (s,u)
            if ((R[s] & ~R[t]) != 0) c.e = false;  // (s,t),(s,u) => (t,u)
        }
    }
    return c;
}

RelClass rel_class(const AwarenessStructure& m, int i) { return rel_class(Model(m), i); }

RelClass parse_rel_class(const std::string& s) {
    RelClass c;
    for (char ch : s) {
        if (ch == 'r') c.r = true;
        else if (ch == 't') c.t = true;
        else if (ch == 'e') c.e = true;
        else if (ch != '{' && ch != '}' && ch != ',' && ch != ' ')
            throw std::invalid_argument("bad relation class '" + s + "'");
    }
    return c;
}

// ---------------------------------------------------------------- awareness properties

std::string property_name(AwarenessProperty p) {
    switch (p) {
    case AwarenessProperty::Gpp: return "gpp";
    case AwarenessProperty::WeakGpp: return "weak_gpp";
    case AwarenessProperty::ClosedExists: return "closed_exists";
    case AwarenessProperty::KnowsAware: return "knows_aware";
    }
    return "?";
}

nlohmann::json PropertyReport::to_json() const {
    nlohmann::json j;
    j["holds"] = holds;
    j["bound"] = bound;
    if (!holds) {
        nlohmann::json w;
        w["agent"] = agent;
        w["state"] = state;
        if (!state2.empty()) w["state2"] = state2;
        auto fs = nlohmann::json::array();
        for (const auto& f : formulas) fs.push_back(print(f));
        w["formulas"] = fs;
        w["clause"] = clause;
        j["witness"] = w;
    }
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

namespace {

constexpr std::size_t kFormulaLevelLimit = 3'000'000;

// Formulas (open ones included) grouped by node count, built one level at a time.
class FormulaLevels {
public:
    FormulaLevels(std::vector<std::string> props, int agents, std::vector<std::string> vars)
        : props_(std::move(props)), agents_(agents), vars_(std::move(vars)) {
        lv_.emplace_back();
    }

    // false if the level would exceed the size limit
    bool build_next() {
        int s = static_cast<int>(lv_.size());
        std::vector<Formula> out;
        if (s == 1) {
            for (const auto& p : props_) out.push_back(prop(p));
            for (const auto& x : vars_) out.push_back(var(x));
        } else {
            std::size_t est = lv_[s - 1].size() * (1 + 3 * agents_ + vars_.size());
            for (int l = 1; l + 1 < s; ++l) est += lv_[l].size() * lv_[s - 1 - l].size();
            if (est > kFormulaLevelLimit) return false;
            for (const auto& f : lv_[s - 1]) {
                out.push_back(neg(f));
                for (int i = 1; i <= agents_; ++i) {
                    out.push_back(K(i, f));
                    out.push_back(A(i, f));
                    out.push_back(X(i, f));
                }
                for (const auto& x : vars_) out.push_back(forall(x, f));
            }
            for (int l = 1; l + 1 < s; ++l)
                for (const auto& f : lv_[l])
                    for (const auto& g : lv_[s - 1 - l]) out.push_back(conj(f, g));
        }
        lv_.push_back(std::move(out));
        return true;
    }

    int top() const { return static_cast<int>(lv_.size()) - 1; }

    // sentences of the top level, sorted by print
    std::vector<Formula> sentences() const {
        std::vector<std::pair<std::string, Formula>> level;
        for (const auto& f : lv_.back())
            if (is_sentence(f)) level.emplace_back(print(f), f);
        std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Formula> out;
        for (auto& e : level) out.push_back(e.second);
        return out;
    }

private:
    std::vector<std::string> props_;
    int agents_;
    std::vector<std::string> vars_;
    std::vector<std::vector<Formula>> lv_;
};

}  // namespace

std::vector<Formula> bounded_sentences(const std::vector<std::string>& props, int agents,
                                       const std::vector<std::string>& vars, int bound) {
    FormulaLevels lv(props, agents, vars);
    std::vector<Formula> out;
    while (lv.top() < bound) {
        if (!lv.build_next()) throw std::length_error("bounded_sentences: level too large");
        for (auto& f : lv.sentences()) out.push_back(std::move(f));
    }
    return out;
}

namespace {

void qf_sentence_subterms(const Formula& f, std::vector<Formula>& out, FormulaSet& seen) {
    if (is_sentence(f) && is_quantifier_free(f) && seen.insert(f).second) out.push_back(f);
    if (f->a) qf_sentence_subterms(f->a, out, seen);
    if (f->b) qf_sentence_subterms(f->b, out, seen);
}

// number of occurrences of psi in f where x is not bound
int count_occ(const Formula& f, const Formula& psi, const std::string& x) {
    if (same(f, psi)) return 1;
    if (f->op == Op::Forall && f->name == x) return 0;
    int c = 0;
    if (f->a) c += count_occ(f->a, psi, x);
    if (f->b) c += count_occ(f->b, psi, x);
    return c;
}

Formula rebuild(const Formula& f, Formula a, Formula b) {
    switch (f->op) {
    case Op::Not: return neg(a);
    case Op::And: return conj(a, b);
    case Op::K: return K(f->agent, a);
    case Op::A: return A(f->agent, a);
    case Op::X: return X(f->agent, a);
    case Op::Forall: return forall(f->name, a);
    default: return f;
    }
}

// replace the occurrences selected by mask (preorder numbering) with x
Formula replace_occ(const Formula& f, const Formula& psi, const std::string& x, std::uint32_t mask, int& idx) {
    if (same(f, psi)) {
        bool pick = (mask >> idx) & 1;
        ++idx;
        return pick ? var(x) : f;
    }
    if (f->op == Op::Forall && f->name == x) return f;
    if (!f->a) return f;
    Formula a = replace_occ(f->a, psi, x, mask, idx);
    Formula b = f->b ? replace_occ(f->b, psi, x, mask, idx) : nullptr;
    if (a.get() == f->a.get() && b.get() == f->b.get()) return f;
    return rebuild(f, a, b);
}

}  // namespace

std::vector<Abstraction> existential_abstractions(const Formula& alpha, const std::vector<std::string>& vars,
                                                  int max_size) {
    std::vector<Abstraction> out;
    FormulaSet seen;
    std::vector<Formula> subs;
    FormulaSet sub_seen;
    qf_sentence_subterms(alpha, subs, sub_seen);
    // propositions first (by name), then larger subterms first
    std::stable_sort(subs.begin(), subs.end(), [](const Formula& a, const Formula& b) {
        bool pa = a->op == Op::Prop, pb = b->op == Op::Prop;
        if (pa != pb) return pa;
        if (pa) return a->name < b->name;
        return a->size > b->size;
    });
    auto add = [&](Formula r, Formula psi) {
        if (r->size <= max_size && seen.insert(r).second) out.push_back({std::move(r), std::move(psi)});
    };
    for (const auto& psi : subs) {
        for (const auto& x : vars) {
            int c = count_occ(alpha, psi, x);
            if (c == 0) continue;
            std::vector<std::uint32_t> masks;
            std::uint32_t full = c >= 31 ? 0x7fffffffU : ((1U << c) - 1);
            masks.push_back(full);
            if (c <= 6) {
                for (std::uint32_t m = full - 1; m >= 1; --m) masks.push_back(m);
            } else {
                for (int k = 0; k < c && k < 31; ++k) masks.push_back(1U << k);
            }
            for (auto m : masks) {
                int idx = 0;
                Formula phi = replace_occ(alpha, psi, x, m, idx);
                add(exists(x, phi), psi);
            }
            break;  // first usable variable of the supply
        }
    }
    if (!vars.empty()) add(exists(vars.front(), alpha), nullptr);
    return out;
}

namespace {

std::vector<std::string> var_supply(const Model& m) {
    std::set<std::string> vs;
    for (const auto& f : m.all_aware())
        for (const auto& v : all_vars(f)) vs.insert(v);
    if (vs.empty()) vs.insert("x");
    return {vs.begin(), vs.end()};
}

PropertyReport check_gpp(const Model& m, int B) {
    PropertyReport r;
    r.bound = B;
    r.notes.push_back("sentences without propositions are treated as forced (empty conjunction is vacuously true)");
    r.notes.push_back("forcing direction checked for sentences up to size " + std::to_string(B));
    auto vars = var_supply(m);
    int limit_hit = B;
    for (int i = 1; i <= m.agents; ++i)
        for (int s = 0; s < m.n; ++s) {
            const auto& set = m.aware_set[i - 1][s];
            std::vector<std::string> P;
            for (const auto& f : m.aware[i - 1][s])
                if (f->op == Op::Prop) P.push_back(f->name);
            std::sort(P.begin(), P.end());
            for (const auto& f : m.aware[i - 1][s])
                for (const auto& p : f->props)
                    if (!std::binary_search(P.begin(), P.end(), p)) {
                        r.holds = false;
                        r.agent = i;
                        r.state = m.names[s];
                        r.formulas = {f, prop(p)};
                        r.clause = "member mentions a proposition outside the aware propositions";
                        return r;
                    }
            FormulaLevels lv(P, m.agents, vars);
            while (lv.top() < B) {
                if (!lv.build_next()) {
                    limit_hit = std::min(limit_hit, lv.top());
                    break;
                }
                for (const auto& f : lv.sentences())
                    if (!set.count(f)) {
                        r.holds = false;
                        r.agent = i;
                        r.state = m.names[s];
                        r.formulas = {f};
                        r.clause = "forced formula missing: all its propositions are aware";
                        return r;
                    }
            }
        }
    if (limit_hit < B)
        r.notes.push_back("forcing direction only enumerated up to size " + std::to_string(limit_hit) +
                          " (level size limit)");
    return r;
}

PropertyReport check_weak_gpp(const Model& m, int B) {
    PropertyReport r;
    r.bound = B;
    r.notes.push_back("clauses checked when both sides have size at most " + std::to_string(B));
    r.notes.push_back("K_j, A_j, X_j clauses range over every agent j");
    auto vars = var_supply(m);
    auto fail = [&](int i, int s, std::vector<Formula> fs, std::string why) {
        r.holds = false;
        r.agent = i;
        r.state = m.names[s];
        r.formulas = std::move(fs);
        r.clause = std::move(why);
    };
    for (int i = 1; i <= m.agents; ++i)
        for (int s = 0; s < m.n; ++s) {
            const auto& set = m.aware_set[i - 1][s];
            const auto& mem = m.aware[i - 1][s];
            auto in = [&](const Formula& f) { return set.count(f) > 0; };
            for (const auto& f : mem) {
                if (f->size > B) continue;
                switch (f->op) {
                case Op::Not:
                case Op::K:
                case Op::A:
                case Op::X:
                    if (!in(f->a)) return fail(i, s, {f, f->a}, "member's immediate subformula missing"), r;
                    break;
                case Op::And:
                    if (!in(f->a) || !in(f->b))
                        return fail(i, s, {f, in(f->a) ? f->b : f->a}, "conjunct of a member missing"), r;
                    break;
                case Op::Forall:
                    for (const auto& p : f->props)
                        if (!in(prop(p)))
                            return fail(i, s, {f, prop(p)}, "proposition of a quantified member missing"), r;
                    break;
                default:
                    break;
                }
                if (f->size + 1 <= B) {
                    std::vector<Formula> ups{neg(f)};
                    for (int j = 1; j <= m.agents; ++j) {
                        ups.push_back(K(j, f));
                        ups.push_back(A(j, f));
                        ups.push_back(X(j, f));
                    }
                    for (const auto& g : ups)
                        if (!in(g)) return fail(i, s, {f, g}, "operator applied to a member missing"), r;
                }
                for (const auto& g : mem)
                    if (f->size + g->size + 1 <= B && !in(conj(f, g)))
                        return fail(i, s, {f, g, conj(f, g)}, "conjunction of members missing"), r;
                for (const auto& ab : existential_abstractions(f, vars, B))
                    if (!in(ab.result)) return fail(i, s, {f, ab.result}, "existential abstraction missing"), r;
            }
        }
    return r;
}

PropertyReport check_closed_exists(const Model& m, int B) {
    PropertyReport r;
    r.bound = B;
    auto vars = var_supply(m);
    r.notes.push_back("abstractions of size at most " + std::to_string(B) + " over variables {" +
                      [&] {
                          std::string s;
                          for (const auto& v : vars) s += (s.empty() ? "?" : ", ?") + v;
                          return s;
                      }() +
                      "}");
    struct Item {
        int i, s;
        Formula f;
    };
    std::vector<Item> items;
    for (int i = 1; i <= m.agents; ++i)
        for (int s = 0; s < m.n; ++s)
            for (const auto& f : m.aware[i - 1][s]) items.push_back({i, s, f});
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.f->size > b.f->size; });
    for (bool vacuous : {false, true})
        for (const auto& it : items)
            for (const auto& ab : existential_abstractions(it.f, vars, B)) {
                if ((ab.psi == nullptr) != vacuous) continue;
                if (m.is_aware(it.i, it.s, ab.result)) continue;
                r.holds = false;
                r.agent = it.i;
                r.state = m.names[it.s];
                r.formulas = {it.f, ab.result};
                r.clause = vacuous ? "vacuous existential abstraction missing" : "existential abstraction missing";
                return r;
            }
    return r;
}

PropertyReport check_knows_aware(const Model& m) {
    PropertyReport r;
    for (int i = 1; i <= m.agents; ++i)
        for (int s = 0; s < m.n; ++s)
            for (int t = 0; t < m.n; ++t) {
                if (!((m.succ[i - 1][s] >> t) & 1)) continue;
                const auto& A1 = m.aware_set[i - 1][s];
                const auto& A2 = m.aware_set[i - 1][t];
                for (const auto& [from, to] : {std::pair{&m.aware[i - 1][s], &A2}, std::pair{&m.aware[i - 1][t], &A1}})
                    for (const auto& f : *from)
                        if (!to->count(f)) {
                            r.holds = false;
                            r.agent = i;
                            r.state = m.names[s];
                            r.state2 = m.names[t];
                            r.formulas = {f};
                            r.clause = "aware sets differ across an accessible pair";
                            return r;
                        }
            }
    return r;
}

}  // namespace

PropertyReport check_awareness_property(const Model& m, AwarenessProperty which, int bound) {
    int B = bound > 0 ? bound : m.max_aware_size() + 2;
    switch (which) {
    case AwarenessProperty::Gpp: return check_gpp(m, B);
    case AwarenessProperty::WeakGpp: return check_weak_gpp(m, B);
    case AwarenessProperty::ClosedExists: return check_closed_exists(m, B);
    case AwarenessProperty::KnowsAware: return check_knows_aware(m);
    }
    return {};
}

}  // namespace qaware
