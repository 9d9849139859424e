// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qaware/checker.hpp"
#include "qaware/decider.hpp"
#include "qaware/proofs.hpp"
#include "qaware/reduction.hpp"
#include "qaware/search.hpp"

using namespace qaware;

namespace {

// tolerances and sizes
constexpr double kExampleSeconds = 1.0;
constexpr double kSoundnessSeconds = 300.0;
constexpr int kSoundnessStructures = 200;
constexpr int kMinInstancesPerAxiom = 20;
constexpr int kOraclePairs = 500;
constexpr std::size_t kOracleBudget = 300;
constexpr int kPartitionFormulas = 100;
constexpr int kCorpusMinimum = 30;
constexpr int kCorpusMaxStates = 4;
constexpr int kHarnessPairs = 50;
constexpr int kMutations = 100;
constexpr int kGppStructures = 30;
constexpr int kGppBound = 4;

std::string data(const std::string& rel) { return std::string(QAWARE_DATA_DIR) + "/" + rel; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

Formula close_universally(Formula f) {
    std::vector<std::string> fv = f->free;
    for (auto it = fv.rbegin(); it != fv.rend(); ++it) f = forall(*it, f);
    return f;
}

// ---------------------------------------------------------------- 1

Outcome worked_example() {
    auto t0 = std::chrono::steady_clock::now();
    Model m(load_structure(data("two_agents.json")));
    Checker c(m);
    bool a = c.eval_exact(0, parse("X1 p & X2 p & X2 q & !X1 q & X2 (A2 q & !A1 q) & X1 (exists ?x . (A2 ?x & !A1 ?x))"));
    bool b = c.eval_exact(0, parse("!X2 (exists ?x . (A2 ?x & !A1 ?x))"));
    double t = seconds_since(t0);
    std::ostringstream os;
    os << "conjunction=" << a << " negated=" << b << " time=" << t << "s";
    return {a && b && t < kExampleSeconds, os.str()};
}

// ---------------------------------------------------------------- 2

struct AxiomGen {
    std::string name;
    Rule rule;
    char needs = 0;  // 'r', 't', 'e' or 0
    std::function<Formula(std::mt19937_64&)> make;
};

Outcome soundness() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2002);
    RandomFormulaSpec open;
    open.props = {"p0", "p1", "p2"};
    open.agents = 2;
    open.max_qdepth = 1;
    open.max_size = 7;
    open.allow_open = true;
    RandomFormulaSpec qf = open;
    qf.max_qdepth = 0;
    qf.allow_open = false;
    qf.max_size = 5;
    std::uniform_int_distribution<int> agent(1, 2);
    auto phi = [&](std::mt19937_64& r) { return random_formula(r, open); };

    std::vector<AxiomGen> gens = {
        {"Prop", Rule::Prop, 0,
         [&](std::mt19937_64& r) {
             Formula a = phi(r), b = phi(r), c = phi(r);
             switch (std::uniform_int_distribution<int>(0, 3)(r)) {
             case 0: return implies(a, implies(b, a));
             case 1: return implies(implies(a, implies(b, c)), implies(implies(a, b), implies(a, c)));
             case 2: return implies(implies(neg(a), neg(b)), implies(b, a));
             default: return disj(a, neg(a));
             }
         }},
        {"K", Rule::K, 0,
         [&](std::mt19937_64& r) {
             int i = agent(r);
             Formula a = phi(r), b = phi(r);
             return implies(conj(K(i, a), K(i, implies(a, b))), K(i, b));
         }},
        {"A0", Rule::A0, 0,
         [&](std::mt19937_64& r) {
             int i = agent(r);
             Formula a = phi(r);
             return iff(X(i, a), conj(K(i, a), A(i, a)));
         }},
        {"1forall", Rule::OneForall, 0,
         [&](std::mt19937_64& r) {
             for (;;) {
                 Formula body = phi(r), psi = random_formula(r, qf);
                 if (!substitutable(body, "x", psi)) continue;
                 return implies(forall("x", body), substitute(body, "x", psi));
             }
         }},
        {"Kforall", Rule::KForall, 0,
         [&](std::mt19937_64& r) {
             Formula a = phi(r), b = phi(r);
             return implies(forall("x", implies(a, b)), implies(forall("x", a), forall("x", b)));
         }},
        {"Nforall", Rule::NForall, 0,
         [&](std::mt19937_64& r) {
             for (;;) {
                 Formula a = phi(r);
                 if (occurs_free(a, "x")) continue;
                 return implies(a, forall("x", a));
             }
         }},
        {"Barcan", Rule::Barcan, 0,
         [&](std::mt19937_64& r) {
             int i = agent(r);
             Formula a = phi(r);
             return implies(forall("x", K(i, a)), K(i, forall("x", a)));
         }},
        {"T", Rule::T, 'r',
         [&](std::mt19937_64& r) {
             int i = agent(r);
             Formula a = phi(r);
             return implies(K(i, a), a);
         }},
        {"4", Rule::Four, 't',
         [&](std::mt19937_64& r) {
             int i = agent(r);
             Formula a = phi(r);
             return implies(K(i, a), K(i, K(i, a)));
         }},
        {"5", Rule::Five, 'e',
         [&](std::mt19937_64& r) {
             int i = agent(r);
             Formula a = phi(r);
             return implies(neg(K(i, a)), K(i, neg(K(i, a))));
         }},
    };

    const std::vector<std::string> classes = {"", "r", "t", "e", "rt", "et", "ret"};
    std::map<std::string, int> instances;
    int violations = 0, unmatched = 0, control_failures = 0;
    std::string first;
    const int per_structure = 2;
    for (int k = 0; k < kSoundnessStructures; ++k) {
        RandomStructureSpec spec;
        spec.max_states = 4;
        spec.props = 3;
        spec.agents = 2;
        spec.cls = parse_rel_class(classes[k % classes.size()]);
        AwarenessStructure raw = random_structure(rng, spec);
        Model m(raw);
        Checker c(m);
        for (const auto& g : gens) {
            // T/4/5 only where every agent's relation has the property
            if (g.needs) {
                bool ok = true;
                for (int i = 1; i <= m.agents; ++i) {
                    RelClass rc = rel_class(m, i);
                    ok = ok && (g.needs == 'r' ? rc.r : g.needs == 't' ? rc.t : rc.e);
                }
                if (!ok) {
                    // control: outside the class some instance should fail
                    Formula inst = g.make(rng);
                    if (c.truth_exact(close_universally(inst)) != m.all) ++control_failures;
                    continue;
                }
            }
            for (int j = 0; j < per_structure; ++j) {
                Formula inst = g.make(rng);
                if (!match_axiom(g.rule, inst).ok) {
                    ++unmatched;
                    if (first.empty()) first = "kernel rejects " + g.name + " instance " + print(inst);
                    continue;
                }
                Formula closed = close_universally(inst);
                ++instances[g.name];
                if (c.truth_exact(closed) != m.all) {
                    ++violations;
                    if (first.empty()) first = g.name + " fails: " + print(inst);
                }
            }
        }
    }
    double t = seconds_since(t0);
    int fewest = kMinInstancesPerAxiom * 1000;
    for (const auto& g : gens) fewest = std::min(fewest, instances[g.name]);
    std::ostringstream os;
    os << kSoundnessStructures << " structures, min instances/axiom=" << fewest << " violations=" << violations
       << " unmatched=" << unmatched << " control failures outside the class=" << control_failures << " time=" << t
       << "s";
    if (!first.empty()) os << " first: " << first;
    return {violations == 0 && unmatched == 0 && control_failures > 0 && fewest >= kMinInstancesPerAxiom && t < kSoundnessSeconds, os.str()};
}

// ---------------------------------------------------------------- 3

Outcome oracle_agreement() {
    std::mt19937_64 rng(3003);
    RandomStructureSpec sspec;
    RandomFormulaSpec fspec;
    fspec.props = {"p0", "p1", "p2"};
    fspec.agents = 2;
    fspec.max_qdepth = 2;
    int conclusive = 0, disagree = 0, unknown = 0;
    std::string first;
    for (int k = 0; k < kOraclePairs; ++k) {
        Model m(random_structure(rng, sspec));
        Checker c(m);
        Formula f = random_formula(rng, fspec);
        for (int s = 0; s < m.n; ++s) {
            OracleResult o = c.eval_oracle(s, f, kOracleBudget);
            if (o.value == Verdict3::Unknown) {
                ++unknown;
                continue;
            }
            ++conclusive;
            if (c.eval_exact(s, f) != (o.value == Verdict3::True)) {
                ++disagree;
                if (first.empty()) first = print(f);
            }
        }
    }
    std::ostringstream os;
    os << kOraclePairs << " pairs, conclusive state checks=" << conclusive << " unknown=" << unknown
       << " disagreements=" << disagree;
    if (!first.empty()) os << " first: " << first;
    return {disagree == 0 && conclusive > 0, os.str()};
}

// ---------------------------------------------------------------- 4

Formula merge_props(const Formula& f) {
    switch (f->op) {
    case Op::Prop: return prop("p");
    case Op::Var: return f;
    case Op::Not: return neg(merge_props(f->a));
    case Op::And: return conj(merge_props(f->a), merge_props(f->b));
    case Op::K: return K(f->agent, merge_props(f->a));
    case Op::Forall: return forall(f->name, merge_props(f->a));
    default: throw std::logic_error("merge_props: outside the fragment");
    }
}

Outcome partition() {
    std::mt19937_64 rng(4004);
    RandomFormulaSpec spec;
    spec.props = {"p", "q"};
    spec.agents = 1;
    spec.max_qdepth = 2;
    spec.max_size = 10;
    spec.awareness = false;
    int bad = 0, restricted = 0, checks = 0;
    std::string first;
    for (int k = 0; k < kPartitionFormulas; ++k) {
        Formula f = random_formula(rng, spec);
        for (Variant v : {Variant::Ret, Variant::Et, Variant::E}) {
            Formula g = f;
            // the e atom space over two props is out of reach above level 0
            if (v == Variant::E && qdepth(f) >= 1 && f->props.size() > 1) {
                g = merge_props(f);
                ++restricted;
            }
            const std::vector<std::string>& p = g->props;
            int lvl = qdepth(g);
            Decider d(v);
            AtSet pos = d.at_set(g, p, lvl), negs = d.at_set_neg(g, p, lvl);
            std::vector<AtomDescriptor> both;
            std::set_intersection(pos.atoms.begin(), pos.atoms.end(), negs.atoms.begin(), negs.atoms.end(),
                                  std::back_inserter(both));
            ++checks;
            if (!both.empty() || pos.atoms.size() + negs.atoms.size() != atoms_count(p.size(), lvl, v)) {
                ++bad;
                if (first.empty()) first = variant_name(v) + " " + print(g);
            }
        }
    }
    std::ostringstream os;
    os << kPartitionFormulas << " formulas x 3 variants, failures=" << bad << " (e variant: " << restricted
       << " formulas with props merged to one)";
    if (!first.empty()) os << " first: " << first;
    return {bad == 0 && checks == 3 * kPartitionFormulas, os.str()};
}

// ---------------------------------------------------------------- 5

Outcome corpus() {
    auto j = nlohmann::json::parse(std::ifstream(data("decider_corpus.json")));
    int n = 0, bad = 0;
    std::string first;
    for (const auto& t : j.at("formulas")) {
        ++n;
        Formula f = parse(t.get<std::string>());
        for (Variant v : {Variant::Ret, Variant::Et, Variant::E}) {
            bool valid = decide_valid(f, v);
            SearchConfig cfg;
            cfg.max_states = kCorpusMaxStates;
            cfg.cls = parse_rel_class(variant_name(v));
            cfg.max_structures = 3000;
            SearchResult r = search_countermodel(f, cfg);
            if (valid == r.found) {
                ++bad;
                if (first.empty()) first = variant_name(v) + " " + t.get<std::string>();
            }
        }
    }
    std::ostringstream os;
    os << n << " formulas x 3 variants, mismatches=" << bad << "; excluded (infinite countermodels only):";
    for (const auto& e : j.at("excluded")) os << " [" << e.at("formula").get<std::string>() << "]";
    if (!first.empty()) os << " first: " << first;
    return {bad == 0 && n >= kCorpusMinimum, os.str()};
}

// ---------------------------------------------------------------- 6

Outcome harness() {
    std::mt19937_64 rng(6006);
    int disagree = 0, sigma_fail = 0, class_fail = 0;
    std::string first;
    for (int k = 0; k < kHarnessPairs; ++k) {
        RModel n = random_rmodel(rng, 3);
        RFormula f = random_rsentence(rng, 2, 8);
        for (Reduction w : {Reduction::T51, Reduction::T52}) {
            EquivReport r = check_equiv(n, f, w);
            if (!r.agree) {
                ++disagree;
                if (first.empty()) first = reduction_name(w) + " " + print(f);
            }
        }
        MN51 m = build_MN_t51(n);
        Formula sig = sigma_t51();
        for (int s = 0; s < static_cast<int>(m.states.size()); ++s)
            if (!quotient_eval(m, s, sig)) ++sigma_fail;
        AwarenessStructure s52 = build_MN_t52(n, 2);
        for (int i : {1, 2})
            if (!rel_class(s52, i).contains(parse_rel_class("ret"))) ++class_fail;
    }
    std::ostringstream os;
    os << kHarnessPairs << " pairs (t51, t52), disagreements=" << disagree << " sigma failures=" << sigma_fail
       << " t52 relations outside {r,e,t}=" << class_fail;
    if (!first.empty()) os << " first: " << first;
    return {disagree == 0 && sigma_fail == 0 && class_fail == 0, os.str()};
}

// ---------------------------------------------------------------- 7

Outcome proofs() {
    std::vector<std::pair<std::string, ProofScript>> lib;
    for (const auto& e : std::filesystem::directory_iterator(data("proofs")))
        if (e.path().extension() == ".json") lib.emplace_back(e.path().filename().string(), load_script(e.path().string()));
    std::sort(lib.begin(), lib.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    int rejected = 0, bad_mut = 0;
    bool barcan_free = false, kforall = false;
    std::string first;
    for (const auto& [name, s] : lib) {
        ProofVerdict v = check_proof(s);
        if (!v.accepted) {
            ++rejected;
            if (first.empty()) first = name;
        }
        // a Barcan instance derived with the Barcan axiom switched off
        if (v.accepted && s.system.count("noBarcan") && match_axiom(Rule::Barcan, v.theorem).ok) barcan_free = true;
        for (const auto& st : s.steps) kforall = kforall || st.rule == Rule::KForall;
    }
    std::mt19937_64 rng(7007);
    for (int k = 0; k < kMutations; ++k) {
        const auto& [name, s] = lib[k % lib.size()];
        std::string what;
        if (check_proof(mutate_script(s, rng, &what)).accepted) {
            ++bad_mut;
            if (first.empty()) first = "mutation " + what + " of " + name;
        }
    }
    std::ostringstream os;
    os << lib.size() << " scripts, rejected=" << rejected << "; " << kMutations << " mutations, accepted=" << bad_mut;
    if (!first.empty()) os << " first: " << first;
    return {lib.size() >= 10 && rejected == 0 && bad_mut == 0 && barcan_free && kforall, os.str()};
}

// ---------------------------------------------------------------- 8

Outcome awareness() {
    std::mt19937_64 rng(8008);
    RandomStructureSpec spec;
    spec.max_states = 3;
    spec.props = 2;
    spec.agents = 2;
    int gpp = 0, broken = 0;
    for (int k = 0; k < kGppStructures; ++k) {
        Model m(random_gpp_structure(rng, spec, kGppBound));
        if (!check_awareness_property(m, AwarenessProperty::Gpp, kGppBound).holds) continue;
        ++gpp;
        if (!check_awareness_property(m, AwarenessProperty::WeakGpp, kGppBound).holds) ++broken;
        if (!check_awareness_property(m, AwarenessProperty::ClosedExists, kGppBound).holds) ++broken;
    }
    Model ex(load_structure(data("two_agents.json")));
    PropertyReport ce = check_awareness_property(ex, AwarenessProperty::ClosedExists);
    bool witness = false;
    for (const auto& f : ce.formulas) witness = witness || print(f) == "A2 q & !A1 q";
    std::ostringstream os;
    os << gpp << "/" << kGppStructures << " generated structures satisfy gpp (bound " << kGppBound
       << "), implication failures=" << broken << "; example closed_exists=" << ce.holds << " witness "
       << (witness ? "A2 q & !A1 q" : "missing");
    return {gpp == kGppStructures && broken == 0 && !ce.holds && witness, os.str()};
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 example reproduction", worked_example},  {"2 axiom soundness", soundness},
        {"3 exact vs oracle", oracle_agreement}, {"4 decider partition", partition},
        {"5 decider vs search", corpus},         {"6 reduction harness", harness},
        {"7 proof kernel", proofs},              {"8 awareness properties", awareness},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    }
    return failed ? 1 : 0;
}
