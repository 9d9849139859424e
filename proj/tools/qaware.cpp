// qaware: command-line front end.
// Exit codes: 0 true / valid / accepted / found, 1 false / invalid / rejected / none, 2 unknown or error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qaware/checker.hpp"
#include "qaware/decider.hpp"
#include "qaware/model.hpp"
#include "qaware/proofs.hpp"
#include "qaware/reduction.hpp"
#include "qaware/search.hpp"

using namespace qaware;
using nlohmann::json;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    bool json_out = false;
    bool quiet = false;
};

// JSON always goes to stdout with --json; otherwise a short human line unless --quiet
void emit(const Globals& g, const json& j, const std::string& human) {
    if (g.json_out) {
        std::cout << j.dump(2) << "\n";
    } else if (!g.quiet) {
        std::cout << human << "\n";
    }
}

int fail(const Globals& g, const std::string& msg, const std::vector<std::string>& diags = {}) {
    json j{{"error", msg}, {"diagnostics", diags}};
    if (g.json_out) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "error: " << msg << "\n";
        for (const auto& d : diags) std::cerr << "  " << d << "\n";
    }
    return 2;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_check(const Globals& g, const std::string& model_file, const std::string& text, const std::string& method,
              std::size_t budget, const std::string& state) {
    AwarenessStructure raw = load_structure(model_file);
    Model m(raw);
    Formula f = parse(text, m.agents);
    Checker c(m);
    std::vector<int> states;
    if (!state.empty()) {
        int s = m.state(state);
        if (s < 0) return fail(g, "unknown state '" + state + "'");
        states.push_back(s);
    } else {
        for (int s = 0; s < m.n; ++s) states.push_back(s);
    }
    json per = json::object();
    bool any_false = false, any_unknown = false;
    json witness = nullptr;
    for (int s : states) {
        if (method == "exact") {
            bool v = c.eval_exact(s, f);
            per[m.names[s]] = v;
            if (!v) {
                any_false = true;
                if (witness.is_null() && is_sentence(f)) {
                    // the oracle's instances are the readable ones; the exact witness is a padded generic sentence
                    OracleResult o = c.eval_oracle(s, f, budget);
                    if (o.value == Verdict3::False && o.witness) {
                        witness = {{"state", m.names[s]}, {"instance", print(o.witness)}};
                    } else if (auto w = c.witness(s, f)) {
                        witness = {{"state", m.names[s]}, {"instance", print(*w)}};
                    }
                }
            }
        } else {
            OracleResult r = c.eval_oracle(s, f, budget);
            per[m.names[s]] = to_string(r.value);
            if (r.value == Verdict3::False) any_false = true;
            if (r.value == Verdict3::Unknown) any_unknown = true;
            if (r.witness && witness.is_null()) witness = {{"state", m.names[s]}, {"instance", print(r.witness)}};
        }
    }
    std::string verdict = any_false ? "false" : any_unknown ? "unknown" : "true";
    json j{{"formula", print(f)}, {"method", method}, {"states", per}, {"verdict", verdict}, {"witness", witness}};
    std::string human = verdict;
    if (!witness.is_null()) human += " (witness at " + witness["state"].get<std::string>() + ": " +
                                     witness["instance"].get<std::string>() + ")";
    emit(g, j, human);
    return any_false ? 1 : any_unknown ? 2 : 0;
}

int cmd_decide(const Globals& g, const std::string& text, const std::string& cls) {
    Formula f = parse(text);
    Variant v = parse_variant(cls);
    check_fragment(f);
    Decider d(v);
    auto r = d.decide(f);
    json j{{"formula", print(f)},
           {"class", variant_name(v)},
           {"valid", r.valid},
           {"level", r.level},
           {"p", r.p},
           {"atoms_total", r.atoms_total},
           {"atoms_satisfying", r.atoms_satisfying}};
    if (r.failing) j["failing_atom"] = r.failing->str(r.p);
    std::string human = std::string(r.valid ? "valid" : "invalid") + " in class " + variant_name(v) + " (" +
                        std::to_string(r.atoms_satisfying) + "/" + std::to_string(r.atoms_total) + " atoms)";
    emit(g, j, human);
    return r.valid ? 0 : 1;
}

int cmd_search(const Globals& g, const std::string& text, const std::string& cls, int max_states,
               std::size_t max_structures, int vocab_size, bool satisfy, const std::string& out) {
    Formula f = parse(text);
    SearchConfig cfg;
    cfg.cls = parse_rel_class(cls);
    cfg.max_states = max_states;
    cfg.max_structures = max_structures;
    cfg.vocab_size = vocab_size;
    cfg.seed = g.seed;
    // --satisfy looks for a model of the formula, i.e. a countermodel to its negation
    SearchResult r = search_countermodel(satisfy ? neg(f) : f, cfg);
    json j{{"formula", print(f)}, {"class", cfg.cls.str()}, {"found", r.found}, {"examined", r.examined},
           {"seed", g.seed}};
    if (r.found) {
        j["state"] = r.state;
        j["structure"] = structure_to_json(r.model);
        if (!out.empty()) {
            std::ofstream o(out);
            o << structure_to_json(r.model).dump(2) << "\n";
        }
    }
    std::string human = r.found ? "found at state " + r.state + " (" + std::to_string(r.model.states.size()) +
                                      " states)\n" + structure_to_json(r.model).dump(2)
                                : "none found (" + std::to_string(r.examined) + " structures)";
    emit(g, j, human);
    return r.found ? 0 : 1;
}

int cmd_translate(const Globals& g, const std::string& input, const std::string& which_s, const std::string& harness) {
    std::string text = input;
    std::ifstream probe(input);
    if (probe.good()) text = slurp(input);
    RFormula f = parse_rformula(text);
    Reduction which = parse_reduction(which_s);
    RFormula n = nnf(f);
    if (harness.empty()) {
        Formula t = which == Reduction::T51 ? translate_t51(n) : translate_t52(n, which == Reduction::T52 ? 2 : 1);
        Formula sig = which == Reduction::T51 ? sigma_t51() : sigma_t52(which == Reduction::T52 ? 2 : 1);
        json j{{"input", print(f)}, {"nnf", print(n)}, {"which", which_s}, {"translated", print(t)},
               {"sigma", print(sig)}};
        emit(g, j, print(t));
        return 0;
    }
    RModel m = load_rmodel(harness);
    EquivReport r = check_equiv(m, f, which);
    json j = r.to_json();
    j["input"] = print(f);
    j["which"] = which_s;
    emit(g, j,
         std::string(r.agree ? "agree" : "DISAGREE") + ": fo=" + (r.fo ? "true" : "false") +
             " modal=" + (r.modal ? "true" : "false") + " sigma=" + (r.sigma ? "true" : "false"));
    return r.agree ? 0 : 1;
}

int cmd_prove(const Globals& g, const std::string& file) {
    ProofScript s = load_script(file);
    ProofVerdict v = check_proof(s);
    emit(g, v.to_json(), v.accepted ? "accepted: " + print(v.theorem) : "rejected: " + v.message);
    return v.accepted ? 0 : 1;
}

int cmd_props(const Globals& g, const std::string& model_file, int bound) {
    Model m(load_structure(model_file));
    json j;
    std::string human;
    for (auto p : {AwarenessProperty::Gpp, AwarenessProperty::WeakGpp, AwarenessProperty::ClosedExists,
                   AwarenessProperty::KnowsAware}) {
        PropertyReport r = check_awareness_property(m, p, bound);
        j[property_name(p)] = r.to_json();
        human += property_name(p) + "=" + (r.holds ? "true" : "false");
        if (!r.holds && !r.formulas.empty()) {
            human += " [agent " + std::to_string(r.agent) + " at " + r.state + ":";
            for (const auto& w : r.formulas) human += " " + print(w) + ";";
            human += "]";
        }
        human += "\n";
    }
    for (int i = 1; i <= m.agents; ++i) {
        std::string c = rel_class(m, i).str();
        j["rel_class"][std::to_string(i)] = c;
        human += "rel_class[" + std::to_string(i) + "]=" + c + "\n";
    }
    if (!human.empty()) human.pop_back();
    emit(g, j, human);
    return 0;
}

int cmd_atoms(const Globals& g, const std::string& props_csv, int level, const std::string& cls, std::size_t limit) {
    std::vector<std::string> p;
    std::stringstream ss(props_csv);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) p.push_back(item);
    Variant v = parse_variant(cls);
    std::size_t total = atoms_count(p.size(), level, v);
    json j{{"p", p}, {"level", level}, {"class", variant_name(v)}, {"count", total}};
    std::string human = std::to_string(total) + " atoms";
    if (limit > 0) {
        auto all = atoms(p, level, v);
        j["atoms"] = json::array();
        for (std::size_t i = 0; i < all.size() && i < limit; ++i) {
            j["atoms"].push_back(all[i].str(p));
            human += "\n" + all[i].str(p);
        }
    }
    emit(g, j, human);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantified awareness logic toolkit"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "random seed")->default_val(0);
    app.add_flag("--json", g.json_out, "JSON output");
    app.add_flag("--quiet", g.quiet, "no output, exit code only");

    std::string model_file, formula, method = "exact", state, cls = "e", file, which = "t51", harness, props_csv = "p",
                                      out;
    std::size_t budget = 2000, max_structures = 20000, limit = 0;
    int max_states = 4, vocab_size = 0, level = 0, bound = 0;
    bool satisfy = false;

    auto* check = app.add_subcommand("check", "evaluate a formula on a structure");
    check->add_option("model", model_file)->required();
    check->add_option("formula", formula)->required();
    check->add_option("--method", method)->check(CLI::IsMember({"exact", "oracle"}));
    check->add_option("--budget", budget, "oracle instantiation budget");
    check->add_option("--state", state, "only this state (default: all)");

    auto* decide = app.add_subcommand("decide", "validity in the single-agent quantified fragment");
    decide->add_option("formula", formula)->required();
    decide->add_option("--class", cls)->check(CLI::IsMember({"ret", "et", "e"}));

    auto* search = app.add_subcommand("search", "bounded countermodel search");
    search->add_option("formula", formula)->required();
    search->add_option("--class", cls, "relation class, e.g. e, et, ret, {r,t}");
    search->add_option("--max-states", max_states);
    search->add_option("--max-structures", max_structures);
    search->add_option("--vocab-size", vocab_size);
    search->add_flag("--satisfy", satisfy, "look for a model of the formula instead of a countermodel");
    search->add_option("--out", out, "write the structure here");

    auto* translate = app.add_subcommand("translate", "translate an R-sentence (text or file)");
    translate->add_option("input", formula)->required();
    translate->add_option("--which", which)->check(CLI::IsMember({"t51", "t52", "t52s"}));
    translate->add_option("--harness", harness, "R-model file: compare with first-order truth");

    auto* prove = app.add_subcommand("prove", "check a proof script");
    prove->add_option("file", file)->required();

    auto* props = app.add_subcommand("props", "awareness properties and relation classes");
    props->add_option("model", model_file)->required();
    props->add_option("--bound", bound, "formula size bound (default: largest aware formula + 2)");

    auto* atoms_cmd = app.add_subcommand("atoms", "list (p,k)-atoms");
    atoms_cmd->add_option("--props", props_csv, "comma separated");
    atoms_cmd->add_option("--level", level);
    atoms_cmd->add_option("--class", cls)->check(CLI::IsMember({"ret", "et", "e"}));
    atoms_cmd->add_option("--limit", limit, "print at most this many");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*check) return cmd_check(g, model_file, formula, method, budget, state);
        if (*decide) return cmd_decide(g, formula, cls);
        if (*search) return cmd_search(g, formula, cls, max_states, max_structures, vocab_size, satisfy, out);
        if (*translate) return cmd_translate(g, formula, which, harness);
        if (*prove) return cmd_prove(g, file);
        if (*props) return cmd_props(g, model_file, bound);
        if (*atoms_cmd) return cmd_atoms(g, props_csv, level, cls, limit);
    } catch (const ModelError& e) {
        return fail(g, "invalid structure", e.diagnostics);
    } catch (const std::exception& e) {
        return fail(g, e.what());
    }
    return 2;
}
