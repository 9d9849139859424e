#include "qaware/decider.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace qaware {

std::string variant_name(Variant v) {
    switch (v) {
    case Variant::Ret: return "ret";
    case Variant::Et: return "et";
    case Variant::E: return "e";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    if (s == "ret" || s == "re" || s == "rte" || s == "ert") return Variant::Ret;
    if (s == "et" || s == "te") return Variant::Et;
    if (s == "e") return Variant::E;
    throw std::invalid_argument("unknown structure class '" + s + "' (want ret, et or e)");
}

// ---------------------------------------------------------------- counts

std::string CountToken::str() const {
    switch (kind) {
    case E: return "E" + std::to_string(l);
    case C: return "C" + std::to_string(l);
    case Inf: return "Einf";
    }
    return "?";
}

std::vector<CountToken> count_tokens(int k) {
    int N = 1 << k;
    std::vector<CountToken> out;
    for (int l = 0; l < N; ++l) out.push_back(CountToken::e(l));
    out.push_back(CountToken::c(N));
    out.push_back(CountToken::inf());
    return out;
}

CountToken bounded(int l, int N) { return l < N ? CountToken::e(l) : CountToken::c(N); }

CountToken add_counts(CountToken a, CountToken b, int N) {
    if (a.kind == CountToken::C || b.kind == CountToken::C) return CountToken::c(N);
    if (a.kind == CountToken::Inf && b.kind == CountToken::Inf) return a;
    // undescribable worlds do not change the number of describable ones
    if (a.kind == CountToken::Inf) return b.zero() ? a : b;
    if (b.kind == CountToken::Inf) return a.zero() ? b : a;
    return bounded(a.l + b.l, N);
}

CountToken truncate_count(CountToken c, int j) {
    int N = 1 << j;
    switch (c.kind) {
    case CountToken::E: return bounded(c.l, N);
    case CountToken::C: return CountToken::c(N);
    default: return c;
    }
}

std::vector<std::pair<CountToken, CountToken>> x_partitions(CountToken c, int k, bool literal) {
    int N = 1 << k;
    std::vector<std::pair<CountToken, CountToken>> out;
    switch (c.kind) {
    case CountToken::E:
        for (int lp = 0; lp <= c.l; ++lp) {
            std::pair<CountToken, CountToken> e{bounded(lp, N), bounded(c.l - lp, N)};
            if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
        }
        break;
    case CountToken::C:
        out.push_back({CountToken::c(N), CountToken::c(N)});
        for (int j = 0; j < N; ++j) {
            out.push_back({CountToken::e(j), CountToken::c(N)});
            out.push_back({CountToken::c(N), CountToken::e(j)});
        }
        break;
    case CountToken::Inf:
        out.push_back({CountToken::inf(), CountToken::inf()});
        if (!literal) {
            out.push_back({CountToken::e(0), CountToken::inf()});
            out.push_back({CountToken::inf(), CountToken::e(0)});
        }
        break;
    }
    return out;
}

namespace {

bool token_ok(CountToken t, int k) {
    int N = 1 << k;
    if (t.kind == CountToken::E) return t.l >= 0 && t.l < N;
    if (t.kind == CountToken::C) return t.l == N;
    return true;
}

}  // namespace

bool x_partition(CountToken c, CountToken plus, CountToken minus, int k, bool literal) {
    if (k < 0 || !token_ok(c, k + 1)) throw std::invalid_argument("x_partition: count is not 2^(k+1)-bounded");
    if (!token_ok(plus, k) || !token_ok(minus, k))
        throw std::invalid_argument("x_partition: parts are not 2^k-bounded");
    auto ps = x_partitions(c, k, literal);
    return std::find(ps.begin(), ps.end(), std::make_pair(plus, minus)) != ps.end();
}

// ---------------------------------------------------------------- atoms

std::vector<CountToken> AtomDescriptor::counts_kk() const {
    std::vector<CountToken> out(counts.size());
    int N = 1 << level;
    for (std::size_t b = 0; b < counts.size(); ++b)
        out[b] = extra.empty() ? counts[b] : add_counts(counts[b], extra[b], N);
    return out;
}

bool AtomDescriptor::operator==(const AtomDescriptor& o) const {
    return variant == o.variant && level == o.level && point == o.point && pos == o.pos && counts == o.counts &&
           extra == o.extra;
}

bool AtomDescriptor::operator<(const AtomDescriptor& o) const {
    return std::tie(level, point, pos, counts, extra) < std::tie(o.level, o.point, o.pos, o.counts, o.extra);
}

std::string AtomDescriptor::str(const std::vector<std::string>& p) const {
    auto pa = [&](unsigned b) {
        std::string s;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) s += "&";
            s += ((b >> i) & 1) ? p[i] : "!" + p[i];
        }
        return s.empty() ? std::string("T") : s;
    };
    std::string s = pa(point);
    if (variant != Variant::Ret)
        s += pos == Position::S ? " indist" : pos == Position::New ? " !indist indistKK" : " !indist";
    for (std::size_t b = 0; b < counts.size(); ++b) {
        s += " " + counts[b].str() + "(" + pa(static_cast<unsigned>(b)) + ")";
        if (!extra.empty() && !extra[b].zero()) s += "+" + extra[b].str();
    }
    return s;
}

std::string atom_violation(const AtomDescriptor& a, std::size_t m) {
    std::size_t P = std::size_t{1} << m;
    if (a.counts.size() != P) return "wrong number of counts";
    if (!a.extra.empty() && a.extra.size() != P) return "wrong number of extra counts";
    if (a.point >= P) return "point atom out of range";
    if (a.pos == Position::New && a.extra.size() != P) return "indistKK atom without second-cluster counts";
    for (const auto& c : a.counts)
        if (!token_ok(c, a.level)) return "count " + c.str() + " is not 2^k-bounded";
    bool any_extra = false;
    for (const auto& c : a.extra) {
        if (!token_ok(c, a.level)) return "count " + c.str() + " is not 2^k-bounded";
        any_extra = any_extra || !c.zero();
    }
    if (a.variant != Variant::E && any_extra) return "second-cluster counts only exist in variant e";
    if (a.variant == Variant::Ret && a.pos != Position::S) return "ret atoms are indist";
    if (a.variant == Variant::Et && a.pos == Position::New) return "et atoms have no second cluster";
    switch (a.pos) {
    case Position::S:
        if (a.counts[a.point].zero()) return "indist atom with E0 for its own point atom";
        if (any_extra) return "indist atom cannot see new worlds two steps away";
        break;
    case Position::New:
        // s0 matches a world two steps away only if that world, and everything new there, is undescribable
        for (std::size_t b = 0; b < P; ++b) {
            if (a.extra[b].kind == CountToken::Inf && a.counts[b].zero()) return "visible new world";
            if (a.extra[b].kind != CountToken::Inf && !a.extra[b].zero()) return "describable new world";
        }
        if (a.extra[a.point].kind != CountToken::Inf) return "indistKK atom without a matching new world";
        break;
    case Position::None: break;
    }
    if (any_extra && std::all_of(a.counts.begin(), a.counts.end(), [](const CountToken& c) { return c.zero(); }))
        return "new worlds two steps away but no successors";
    return "";
}

namespace {

// calls fn on every valid atom; stops when fn returns false
bool for_each_atom(std::size_t m, int k, Variant v, const std::function<bool(const AtomDescriptor&)>& fn) {
    std::size_t P = std::size_t{1} << m;
    auto toks = count_tokens(k);
    std::vector<Position> poss{Position::S};
    if (v != Variant::Ret) poss.push_back(Position::None);
    if (v == Variant::E) poss.push_back(Position::New);
    AtomDescriptor a;
    a.variant = v;
    a.level = k;
    a.counts.assign(P, CountToken::e(0));
    a.extra.assign(P, CountToken::e(0));
    std::size_t slots = v == Variant::E ? 2 * P : P;
    std::vector<std::size_t> idx(slots, 0);
    for (;;) {
        for (std::size_t i = 0; i < P; ++i) a.counts[i] = toks[idx[i]];
        if (v == Variant::E)
            for (std::size_t i = 0; i < P; ++i) a.extra[i] = toks[idx[P + i]];
        for (unsigned pt = 0; pt < P; ++pt)
            for (Position ps : poss) {
                a.point = pt;
                a.pos = ps;
                if (atom_violation(a, m).empty() && !fn(a)) return false;
            }
        std::size_t i = 0;
        while (i < slots && ++idx[i] == toks.size()) idx[i++] = 0;
        if (i == slots) break;
    }
    return true;
}

}  // namespace

std::vector<AtomDescriptor> atoms(const std::vector<std::string>& p, int k, Variant v) {
    if (k < 0) throw std::invalid_argument("atoms: negative level");
    std::vector<AtomDescriptor> out;
    for_each_atom(p.size(), k, v, [&](const AtomDescriptor& a) {
        out.push_back(a);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t atoms_count(std::size_t m, int k, Variant v) {
    std::size_t n = 0;
    for_each_atom(m, k, v, [&](const AtomDescriptor&) {
        ++n;
        return true;
    });
    return n;
}

bool possible(const AtomDescriptor& a, const AtomDescriptor& a2) {
    if (a.variant != a2.variant || a.level != a2.level || a.counts.size() != a2.counts.size())
        throw std::invalid_argument("possible: atoms of different shape");
    // every world considered possible is in its own cluster (secondary reflexivity)
    if (a2.pos != Position::S) return false;
    for (const auto& c : a2.extra)
        if (!c.zero()) return false;
    if (a.counts[a2.point].zero()) return false;
    return a2.counts == a.counts_kk();
}

std::vector<AtomDescriptor> successors(const AtomDescriptor& a, std::size_t m) {
    std::vector<AtomDescriptor> out;
    std::size_t P = std::size_t{1} << m;
    auto kk = a.counts_kk();
    for (unsigned b = 0; b < P; ++b) {
        if (a.counts[b].zero()) continue;
        AtomDescriptor s;
        s.variant = a.variant;
        s.level = a.level;
        s.point = b;
        s.pos = Position::S;
        s.counts = kk;
        s.extra.assign(P, CountToken::e(0));
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

bool side_nonzero(const AtomDescriptor& b, std::size_t m, Position pos) {
    // the count of B's own point atom on the side where s0 lives
    if (pos == Position::S) return !b.counts[b.point].zero();
    if (pos == Position::New) return !b.extra[b.point].zero();
    (void)m;
    return true;
}

}  // namespace

bool x_compatible(const AtomDescriptor& b, const AtomDescriptor& a, std::size_t m, bool literal) {
    std::size_t P = std::size_t{1} << m;
    if (b.level + 1 != a.level || a.counts.size() != P || b.counts.size() != 2 * P || a.variant != b.variant)
        throw std::invalid_argument("x_compatible: atom lists or levels do not match");
    if ((b.point & (P - 1)) != a.point) return false;
    if (b.pos != a.pos) return false;
    if (!side_nonzero(b, m, b.pos)) return false;
    for (std::size_t c = 0; c < P; ++c) {
        if (!x_partition(a.counts[c], b.counts[c | P], b.counts[c], b.level, literal)) return false;
        if (a.variant == Variant::E &&
            !x_partition(a.extra[c], b.extra[c | P], b.extra[c], b.level, literal))
            return false;
    }
    return atom_violation(b, m + 1).empty();
}

// ---------------------------------------------------------------- evaluation

void check_fragment(const Formula& f) {
    if (mentions_awareness(f)) throw std::invalid_argument("the decidable fragment has no A_i or X_i operators");
    if (max_agent(f) > 1) throw std::invalid_argument("the decidable fragment is single-agent (K1 only)");
}

namespace {

std::vector<std::string> atom_names(const Formula& f) {
    std::vector<std::string> out = f->props;
    for (const auto& x : f->free) out.push_back("?" + x);
    std::sort(out.begin(), out.end());
    return out;
}

// restrict atom a over p to the sub-list q at level j
AtomDescriptor project(const AtomDescriptor& a, const std::vector<std::string>& p, const std::vector<std::string>& q,
                       int j) {
    std::vector<int> where(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        auto it = std::find(p.begin(), p.end(), q[i]);
        if (it == p.end()) throw std::invalid_argument("formula mentions " + q[i] + " outside the atom list");
        where[i] = static_cast<int>(it - p.begin());
    }
    auto restrict = [&](unsigned b) {
        unsigned r = 0;
        for (std::size_t i = 0; i < q.size(); ++i)
            if ((b >> where[i]) & 1) r |= 1u << i;
        return r;
    };
    std::size_t Q = std::size_t{1} << q.size();
    int N = 1 << a.level;
    AtomDescriptor out;
    out.variant = a.variant;
    out.level = j;
    out.pos = a.pos;
    out.point = restrict(a.point);
    out.counts.assign(Q, CountToken::e(0));
    out.extra.assign(Q, CountToken::e(0));
    for (std::size_t b = 0; b < a.counts.size(); ++b) {
        unsigned r = restrict(static_cast<unsigned>(b));
        out.counts[r] = add_counts(out.counts[r], a.counts[b], N);
        if (!a.extra.empty()) out.extra[r] = add_counts(out.extra[r], a.extra[b], N);
    }
    for (auto& c : out.counts) c = truncate_count(c, j);
    for (auto& c : out.extra) c = truncate_count(c, j);
    if (j == 0) {
        // without quantifiers only emptiness of each point atom matters, and s0's position is invisible
        for (auto& c : out.counts)
            if (c.kind == CountToken::Inf) c = CountToken::c(1);
        for (auto& c : out.extra)
            if (c.kind == CountToken::Inf) c = CountToken::c(1);
        out.pos = Position::None;
    }
    return out;
}

std::string key_of(const AtomDescriptor& a) {
    std::string k;
    k.reserve(4 + 2 * a.counts.size());
    k.push_back(static_cast<char>(a.level));
    k.push_back(static_cast<char>(a.pos));
    k.append(reinterpret_cast<const char*>(&a.point), sizeof a.point);
    auto code = [](const CountToken& c) { return static_cast<char>(c.kind == CountToken::E ? c.l : c.kind == CountToken::C ? 100 : 101); };
    for (const auto& c : a.counts) k.push_back(code(c));
    for (const auto& c : a.extra) k.push_back(code(c));
    return k;
}

}  // namespace

Decider::Decider(Variant v, DeciderOptions opt) : v_(v), opt_(opt) {}

bool Decider::eval(const Formula& f, const AtomDescriptor& a, const std::vector<std::string>& p) {
    check_fragment(f);
    if (qdepth(f) > a.level) throw std::invalid_argument("formula quantifier depth exceeds the atom level");
    if (keep_.empty() || keep_.back() != f) keep_.push_back(f);
    return ev(f, false, a, p);
}

bool Decider::eval_neg(const Formula& f, const AtomDescriptor& a, const std::vector<std::string>& p) {
    check_fragment(f);
    if (qdepth(f) > a.level) throw std::invalid_argument("formula quantifier depth exceeds the atom level");
    if (keep_.empty() || keep_.back() != f) keep_.push_back(f);
    return ev(f, true, a, p);
}

// truth of f (neg: of !f) at a. Negation is pushed inward so the two polarities take
// separate paths through the K and forall cases.
bool Decider::ev(const Formula& f, bool neg, const AtomDescriptor& a0, const std::vector<std::string>& p) {
    switch (f->op) {
    case Op::Not: return ev(f->a, !neg, a0, p);
    case Op::Prop:
    case Op::Var: {
        std::string n = f->op == Op::Var ? "?" + f->name : f->name;
        auto it = std::find(p.begin(), p.end(), n);
        if (it == p.end()) throw std::invalid_argument("formula mentions " + n + " outside the atom list");
        bool t = (a0.point >> (it - p.begin())) & 1;
        return t != neg;
    }
    default: break;
    }
    auto q = atom_names(f);
    AtomDescriptor a = project(a0, p, q, qdepth(f));
    Key key{f.get(), neg, key_of(a)};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool r = false;
    std::size_t m = q.size();
    switch (f->op) {
    case Op::And:
        r = neg ? (ev(f->a, true, a, q) || ev(f->b, true, a, q)) : (ev(f->a, false, a, q) && ev(f->b, false, a, q));
        break;
    case Op::K: {
        auto succ = successors(a, m);
        if (neg)
            r = std::any_of(succ.begin(), succ.end(), [&](const AtomDescriptor& b) { return ev(f->a, true, b, q); });
        else
            r = std::all_of(succ.begin(), succ.end(), [&](const AtomDescriptor& b) { return ev(f->a, false, b, q); });
        break;
    }
    case Op::Forall: {
        if (!occurs_free(f->a, f->name)) {
            r = ev(f->a, neg, a, q);
            break;
        }
        // B over q.x one level down, x-compatible with a
        std::vector<std::string> qx = q;
        qx.push_back("?" + f->name);
        std::size_t P = std::size_t{1} << m;
        int k = a.level - 1;
        bool is_e = v_ == Variant::E;
        std::vector<std::vector<std::pair<CountToken, CountToken>>> split(P), split_e(P);
        for (std::size_t c = 0; c < P; ++c) {
            split[c] = x_partitions(a.counts[c], k, opt_.literal_inf_split);
            split_e[c] = is_e ? x_partitions(a.extra[c], k, opt_.literal_inf_split)
                              : std::vector<std::pair<CountToken, CountToken>>{{CountToken::e(0), CountToken::e(0)}};
        }
        AtomDescriptor b;
        b.variant = v_;
        b.level = k;
        b.pos = a.pos;
        b.counts.assign(2 * P, CountToken::e(0));
        b.extra.assign(2 * P, CountToken::e(0));
        // looking for a compatible B where the body fails
        bool found = false;
        std::function<void(std::size_t)> rec = [&](std::size_t c) {
            if (found) return;
            if (c == P) {
                for (unsigned side = 0; side < 2 && !found; ++side) {
                    b.point = a.point | (side ? static_cast<unsigned>(P) : 0u);
                    if (!side_nonzero(b, m + 1, b.pos)) continue;
                    if (!atom_violation(b, m + 1).empty()) continue;
                    if (ev(f->a, true, b, qx)) found = true;
                }
                return;
            }
            for (const auto& [pl, mi] : split[c]) {
                b.counts[c | P] = pl;
                b.counts[c] = mi;
                for (const auto& [ple, mie] : split_e[c]) {
                    b.extra[c | P] = ple;
                    b.extra[c] = mie;
                    rec(c + 1);
                    if (found) return;
                }
            }
        };
        rec(0);
        // forall holds iff no compatible B refutes the body; its negation iff some B satisfies !body
        r = neg ? found : !found;
        break;
    }
    default: throw std::invalid_argument("the decidable fragment has no A_i or X_i operators");
    }
    memo_.emplace(std::move(key), r);
    return r;
}

AtSet Decider::at_set(const Formula& f, const std::vector<std::string>& p, int k) {
    check_fragment(f);
    if (qdepth(f) > k) throw std::invalid_argument("at_set: quantifier depth exceeds the level");
    AtSet out{k, p, {}};
    keep_.push_back(f);
    for_each_atom(p.size(), k, v_, [&](const AtomDescriptor& a) {
        if (ev(f, false, a, p)) out.atoms.push_back(a);
        return true;
    });
    std::sort(out.atoms.begin(), out.atoms.end());
    return out;
}

AtSet Decider::at_set_neg(const Formula& f, const std::vector<std::string>& p, int k) {
    check_fragment(f);
    if (qdepth(f) > k) throw std::invalid_argument("at_set: quantifier depth exceeds the level");
    AtSet out{k, p, {}};
    keep_.push_back(f);
    for_each_atom(p.size(), k, v_, [&](const AtomDescriptor& a) {
        if (ev(f, true, a, p)) out.atoms.push_back(a);
        return true;
    });
    std::sort(out.atoms.begin(), out.atoms.end());
    return out;
}

Decider::Report Decider::decide(const Formula& f0) {
    check_fragment(f0);
    Formula f = f0;
    for (auto it = f0->free.rbegin(); it != f0->free.rend(); ++it) f = forall(*it, f);
    keep_.push_back(f);
    Report r;
    r.p = f->props;
    r.level = qdepth(f);
    for_each_atom(r.p.size(), r.level, v_, [&](const AtomDescriptor& a) {
        ++r.atoms_total;
        if (ev(f, false, a, r.p))
            ++r.atoms_satisfying;
        else if (!r.failing)
            r.failing = a;
        return true;
    });
    r.valid = r.atoms_total == r.atoms_satisfying;
    return r;
}

bool decide_valid(const Formula& f0, Variant v) {
    check_fragment(f0);
    Formula f = f0;
    for (auto it = f0->free.rbegin(); it != f0->free.rend(); ++it) f = forall(*it, f);
    Decider d(v);
    std::vector<std::string> p = f->props;
    return for_each_atom(p.size(), qdepth(f), v,
                         [&](const AtomDescriptor& a) { return d.eval(f, a, p); });
}

AtSet at_set(const Formula& f, const std::vector<std::string>& p, int k, Variant v) {
    Decider d(v);
    return d.at_set(f, p, k);
}

// ---------------------------------------------------------------- abbreviations

namespace {

Formula Kn(int depth, Formula f) {
    for (int i = 0; i < depth; ++i) f = K(1, f);
    return f;
}

Formula possibly(int depth, const Formula& f) { return neg(Kn(depth, neg(f))); }

Formula describable_d(const Formula& f, int depth) {
    std::string y = fresh_var({f});
    Formula vy = var(y);
    return conj(possibly(depth, f),
                neg(exists(y, conj(possibly(depth, conj(f, vy)), possibly(depth, conj(f, neg(vy)))))));
}

Formula at_least(int k, const Formula& f, int depth) {
    std::vector<std::string> xs;
    std::vector<Formula> avoid{f};
    for (int i = 0; i < k; ++i) {
        xs.push_back(fresh_var(avoid, "x" + std::to_string(i + 1)));
        avoid.push_back(var(xs.back()));
    }
    std::vector<Formula> parts;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) parts.push_back(neg(Kn(depth, iff(var(xs[i]), var(xs[j])))));
    for (int i = 0; i < k; ++i)
        parts.push_back(conj(describable_d(var(xs[i]), depth), possibly(depth, conj(var(xs[i]), f))));
    Formula body = conj_all(parts);
    for (int i = k - 1; i >= 0; --i) body = exists(xs[i], body);
    return body;
}

Formula count_d(CountToken c, const Formula& f, int depth) {
    switch (c.kind) {
    case CountToken::E:
        if (c.l == 0) return Kn(depth, neg(f));
        return conj(at_least(c.l, f, depth), neg(at_least(c.l + 1, f, depth)));
    case CountToken::C: return at_least(c.l, f, depth);
    case CountToken::Inf: return conj(possibly(depth, f), neg(at_least(1, f, depth)));
    }
    return f;
}

Formula indist_d(int depth) {
    Formula x = var("x"), y = var("y");
    return exists("x", conj(describable_d(x, depth), forall("y", iff(y, possibly(depth, conj(x, y))))));
}

}  // namespace

Formula build_describable(const Formula& f) { return describable_d(f, 1); }
Formula build_count(CountToken c, const Formula& f) { return count_d(c, f, 1); }
Formula build_indist() { return indist_d(1); }

Formula build_point_atom(unsigned point, const std::vector<std::string>& p) {
    std::vector<Formula> lits;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Formula a = p[i].front() == '?' ? var(p[i].substr(1)) : prop(p[i]);
        lits.push_back(((point >> i) & 1) ? a : neg(a));
    }
    if (lits.empty()) return neg(prop("fresh_bot"));  // the empty conjunction
    return conj_all(lits);
}

Formula expand_atom(const AtomDescriptor& a, const std::vector<std::string>& p) {
    std::vector<Formula> parts{build_point_atom(a.point, p)};
    if (a.variant != Variant::Ret) parts.push_back(a.indist() ? build_indist() : neg(build_indist()));
    if (a.variant == Variant::E) parts.push_back(a.indist_kk() ? indist_d(2) : neg(indist_d(2)));
    auto kk = a.counts_kk();
    for (std::size_t b = 0; b < a.counts.size(); ++b) {
        Formula pb = build_point_atom(static_cast<unsigned>(b), p);
        parts.push_back(count_d(a.counts[b], pb, 1));
        if (a.variant == Variant::E) parts.push_back(count_d(kk[b], pb, 2));
    }
    return conj_all(parts);
}

}  // namespace qaware
