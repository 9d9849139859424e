#include "qaware/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace qaware {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::vector<std::string> merge(const std::vector<std::string>& x, const std::vector<std::string>& y) {
    if (x.empty()) return y;
    if (y.empty()) return x;
    std::vector<std::string> out;
    out.reserve(x.size() + y.size());
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

bool is_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

// K1, A12, X3 ... are operator tokens, never propositions
bool is_modal_token(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'K' && s[0] != 'A' && s[0] != 'X')) return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Formula make(Op op, int agent, std::string name, Formula a, Formula b) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->agent = agent;
    n->name = std::move(name);
    n->a = std::move(a);
    n->b = std::move(b);
    std::size_t h = mix(static_cast<std::size_t>(op) + 1, static_cast<std::size_t>(agent));
    if (!n->name.empty()) h = mix(h, std::hash<std::string>{}(n->name));
    switch (op) {
    case Op::Prop:
        n->props = {n->name};
        break;
    case Op::Var:
        n->free = {n->name};
        break;
    case Op::And:
        h = mix(mix(h, n->a->hash), n->b->hash);
        n->size = 1 + n->a->size + n->b->size;
        n->qdepth = std::max(n->a->qdepth, n->b->qdepth);
        n->free = merge(n->a->free, n->b->free);
        n->props = merge(n->a->props, n->b->props);
        break;
    case Op::Forall: {
        h = mix(h, n->a->hash);
        n->size = 1 + n->a->size;
        n->qdepth = 1 + n->a->qdepth;
        n->free = n->a->free;
        auto it = std::lower_bound(n->free.begin(), n->free.end(), n->name);
        if (it != n->free.end() && *it == n->name) n->free.erase(it);
        n->props = n->a->props;
        break;
    }
    default:
        h = mix(h, n->a->hash);
        n->size = 1 + n->a->size;
        n->qdepth = n->a->qdepth;
        n->free = n->a->free;
        n->props = n->a->props;
    }
    n->hash = h;
    return n;
}

}  // namespace

Formula prop(const std::string& name) {
    if (!is_ident(name) || is_modal_token(name) || name == "forall" || name == "exists")
        throw std::invalid_argument("bad proposition name: " + name);
    return make(Op::Prop, 0, name, nullptr, nullptr);
}
Formula var(const std::string& name) {
    if (!is_ident(name)) throw std::invalid_argument("bad variable name: " + name);
    return make(Op::Var, 0, name, nullptr, nullptr);
}
Formula neg(Formula f) { return make(Op::Not, 0, "", std::move(f), nullptr); }
Formula conj(Formula f, Formula g) { return make(Op::And, 0, "", std::move(f), std::move(g)); }
Formula K(int i, Formula f) { return make(Op::K, i, "", std::move(f), nullptr); }
Formula A(int i, Formula f) { return make(Op::A, i, "", std::move(f), nullptr); }
Formula X(int i, Formula f) { return make(Op::X, i, "", std::move(f), nullptr); }
Formula forall(const std::string& x, Formula f) {
    if (!is_ident(x)) throw std::invalid_argument("bad variable name: " + x);
    return make(Op::Forall, 0, x, std::move(f), nullptr);
}

Formula disj(Formula f, Formula g) { return neg(conj(neg(std::move(f)), neg(std::move(g)))); }
Formula implies(Formula f, Formula g) { return disj(neg(std::move(f)), std::move(g)); }
Formula iff(Formula f, Formula g) { return conj(implies(f, g), implies(g, f)); }
Formula exists(const std::string& x, Formula f) { return neg(forall(x, neg(std::move(f)))); }
Formula conj_all(const std::vector<Formula>& fs) {
    if (fs.empty()) throw std::invalid_argument("conj_all: empty list");
    Formula r = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) r = conj(r, fs[i]);
    return r;
}

bool same(const Formula& f, const Formula& g) {
    if (f.get() == g.get()) return true;
    if (!f || !g) return false;
    if (f->hash != g->hash || f->op != g->op || f->size != g->size || f->agent != g->agent ||
        f->name != g->name)
        return false;
    if (f->a && !same(f->a, g->a)) return false;
    if (f->b && !same(f->b, g->b)) return false;
    return true;
}

bool formula_less(const Formula& f, const Formula& g) {
    if (f.get() == g.get()) return false;
    if (f->op != g->op) return f->op < g->op;
    if (f->agent != g->agent) return f->agent < g->agent;
    if (f->name != g->name) return f->name < g->name;
    if (f->a) {
        if (!same(f->a, g->a)) return formula_less(f->a, g->a);
    }
    if (f->b) return formula_less(f->b, g->b);
    return false;
}

bool as_or(const Formula& f, Formula& lhs, Formula& rhs) {
    if (f->op != Op::Not || f->a->op != Op::And) return false;
    const auto& c = f->a;
    if (c->a->op != Op::Not || c->b->op != Op::Not) return false;
    lhs = c->a->a;
    rhs = c->b->a;
    return true;
}

bool as_implies(const Formula& f, Formula& lhs, Formula& rhs) {
    Formula l, r;
    if (!as_or(f, l, r) || l->op != Op::Not) return false;
    lhs = l->a;
    rhs = r;
    return true;
}

bool as_iff(const Formula& f, Formula& lhs, Formula& rhs) {
    if (f->op != Op::And) return false;
    Formula a1, b1, a2, b2;
    if (!as_implies(f->a, a1, b1) || !as_implies(f->b, a2, b2)) return false;
    if (!same(a1, b2) || !same(b1, a2)) return false;
    lhs = a1;
    rhs = b1;
    return true;
}

bool as_exists(const Formula& f, std::string& x, Formula& body) {
    if (f->op != Op::Not || f->a->op != Op::Forall || f->a->a->op != Op::Not) return false;
    x = f->a->name;
    body = f->a->a->a;
    return true;
}

// ---------------------------------------------------------------- printer

namespace {

enum class View { Atom, Prefix, Quant, Iff, Imp, Or, And };

int prec(View v) {
    switch (v) {
    case View::Quant: return 0;
    case View::Iff: return 1;
    case View::Imp: return 2;
    case View::Or: return 3;
    case View::And: return 4;
    case View::Prefix: return 5;
    default: return 6;
    }
}

struct Shape {
    View view = View::Atom;
    std::string head;  // prefix token, quantifier keyword
    std::string var;
    Formula l, r;      // binary operands, or prefix/quantifier body in l
};

Shape classify(const Formula& f) {
    Shape s;
    Formula l, r;
    std::string x;
    switch (f->op) {
    case Op::Prop:
        return {View::Atom, f->name, "", nullptr, nullptr};
    case Op::Var:
        return {View::Atom, "?" + f->name, "", nullptr, nullptr};
    case Op::Forall:
        return {View::Quant, "forall", f->name, f->a, nullptr};
    case Op::Not:
        if (as_exists(f, x, l)) return {View::Quant, "exists", x, l, nullptr};
        if (as_implies(f, l, r)) return {View::Imp, "->", "", l, r};
        if (as_or(f, l, r)) return {View::Or, "|", "", l, r};
        return {View::Prefix, "!", "", f->a, nullptr};
    case Op::And:
        if (as_iff(f, l, r)) return {View::Iff, "<->", "", l, r};
        return {View::And, "&", "", f->a, f->b};
    case Op::K:
        return {View::Prefix, "K" + std::to_string(f->agent), "", f->a, nullptr};
    case Op::A:
        return {View::Prefix, "A" + std::to_string(f->agent), "", f->a, nullptr};
    case Op::X:
        return {View::Prefix, "X" + std::to_string(f->agent), "", f->a, nullptr};
    }
    return s;
}

void emit(const Formula& f, std::string& out);

void emit_wrapped(const Formula& f, bool paren, std::string& out) {
    if (paren) out += '(';
    emit(f, out);
    if (paren) out += ')';
}

void emit(const Formula& f, std::string& out) {
    Shape s = classify(f);
    switch (s.view) {
    case View::Atom:
        out += s.head;
        return;
    case View::Prefix: {
        out += s.head;
        if (s.head != "!") out += ' ';
        emit_wrapped(s.l, prec(classify(s.l).view) < prec(View::Prefix), out);
        return;
    }
    case View::Quant: {
        out += s.head;
        out += " ?";
        out += s.var;
        out += " . ";
        View bv = classify(s.l).view;
        emit_wrapped(s.l, bv != View::Atom && bv != View::Prefix && bv != View::Quant, out);
        return;
    }
    default: {
        int p = prec(s.view);
        bool right_assoc = s.view == View::Imp;
        int lp = prec(classify(s.l).view), rp = prec(classify(s.r).view);
        emit_wrapped(s.l, lp < p || (lp == p && right_assoc), out);
        out += ' ';
        out += s.head;
        out += ' ';
        emit_wrapped(s.r, rp < p || (rp == p && !right_assoc), out);
    }
    }
}

}  // namespace

std::string print(const Formula& f) {
    std::string out;
    emit(f, out);
    return out;
}

// ---------------------------------------------------------------- parser

ParseError::ParseError(const std::string& msg, int l, int c)
    : std::runtime_error(msg + " at line " + std::to_string(l) + ", column " + std::to_string(c)),
      line(l), column(c) {}

namespace {

enum class Tok { Ident, Var, Modal, Not, And, Or, Imp, Iff, LParen, RParen, Dot, Forall, Exists, End };

struct Token {
    Tok kind;
    std::string text;
    int agent = 0;
    int line = 1, col = 1;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto adv = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    auto ident_len = [&](std::size_t at) {
        std::size_t j = at;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        return j - at;
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            adv(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (c == '?') {
            std::size_t n = ident_len(i + 1);
            if (n == 0 || std::isdigit(static_cast<unsigned char>(s[i + 1])))
                throw ParseError("expected variable name after '?'", line, col);
            t.kind = Tok::Var;
            t.text = s.substr(i + 1, n);
            adv(n + 1);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t n = ident_len(i);
            t.text = s.substr(i, n);
            if (t.text == "forall") {
                t.kind = Tok::Forall;
            } else if (t.text == "exists") {
                t.kind = Tok::Exists;
            } else if (is_modal_token(t.text)) {
                t.kind = Tok::Modal;
                try {
                    t.agent = std::stoi(t.text.substr(1));
                } catch (const std::out_of_range&) {
                    throw ParseError("agent index out of range", line, col);
                }
            } else {
                t.kind = Tok::Ident;
            }
            adv(n);
        } else if (c == '!') {
            t.kind = Tok::Not;
            adv(1);
        } else if (c == '&') {
            t.kind = Tok::And;
            adv(1);
        } else if (c == '|') {
            t.kind = Tok::Or;
            adv(1);
        } else if (c == '(') {
            t.kind = Tok::LParen;
            adv(1);
        } else if (c == ')') {
            t.kind = Tok::RParen;
            adv(1);
        } else if (c == '.') {
            t.kind = Tok::Dot;
            adv(1);
        } else if (s.compare(i, 2, "->") == 0) {
            t.kind = Tok::Imp;
            adv(2);
        } else if (s.compare(i, 3, "<->") == 0) {
            t.kind = Tok::Iff;
            adv(3);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Tok::End;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, int n) : t_(std::move(toks)), n_(n) {}

    Formula top() {
        Formula f = formula();
        if (peek().kind != Tok::End) fail("unexpected trailing input");
        return f;
    }

private:
    std::vector<Token> t_;
    std::size_t pos_ = 0;
    int n_;

    const Token& peek() const { return t_[pos_]; }
    Token next() { return t_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().col); }

    Formula formula() {
        if (peek().kind == Tok::Forall || peek().kind == Tok::Exists) return quant();
        return iff_level();
    }

    Formula quant() {
        bool all = next().kind == Tok::Forall;
        if (peek().kind != Tok::Var) fail("expected ?variable after quantifier");
        std::string x = next().text;
        if (peek().kind != Tok::Dot) fail("expected '.' after quantified variable");
        next();
        Formula body = formula();
        return all ? forall(x, body) : exists(x, body);
    }

    Formula iff_level() {
        Formula f = imp_level();
        while (peek().kind == Tok::Iff) {
            next();
            f = iff(f, imp_level());
        }
        return f;
    }

    Formula imp_level() {
        Formula f = or_level();
        if (peek().kind == Tok::Imp) {
            next();
            return implies(f, imp_level());
        }
        return f;
    }

    Formula or_level() {
        Formula f = and_level();
        while (peek().kind == Tok::Or) {
            next();
            f = disj(f, and_level());
        }
        return f;
    }

    Formula and_level() {
        Formula f = unary();
        while (peek().kind == Tok::And) {
            next();
            f = conj(f, unary());
        }
        return f;
    }

    Formula unary() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Not:
            next();
            return neg(unary());
        case Tok::Modal: {
            if (t.agent < 1) fail("agent index must be at least 1");
            if (n_ > 0 && t.agent > n_)
                fail("agent index " + std::to_string(t.agent) + " exceeds n=" + std::to_string(n_));
            Token m = next();
            Formula sub = unary();
            if (m.text[0] == 'K') return K(m.agent, sub);
            if (m.text[0] == 'A') return A(m.agent, sub);
            return X(m.agent, sub);
        }
        case Tok::Forall:
        case Tok::Exists:
            return quant();
        case Tok::Ident:
            return prop(next().text);
        case Tok::Var:
            return var(next().text);
        case Tok::LParen: {
            next();
            Formula f = formula();
            if (peek().kind != Tok::RParen) fail("expected ')'");
            next();
            return f;
        }
        case Tok::End:
            fail("unexpected end of input");
        default:
            fail("unexpected token");
        }
    }
};

}  // namespace

Formula parse(const std::string& text, int n_agents) { return Parser(lex(text), n_agents).top(); }

// ---------------------------------------------------------------- syntactic operations

bool is_quantifier_free(const Formula& f) { return f->qdepth == 0; }

const std::vector<std::string>& free_vars(const Formula& f) { return f->free; }

bool occurs_free(const Formula& f, const std::string& x) {
    return std::binary_search(f->free.begin(), f->free.end(), x);
}

int max_agent(const Formula& f) {
    int m = f->agent;
    if (f->a) m = std::max(m, max_agent(f->a));
    if (f->b) m = std::max(m, max_agent(f->b));
    return m;
}

bool mentions_awareness(const Formula& f) {
    if (f->op == Op::A || f->op == Op::X) return true;
    return (f->a && mentions_awareness(f->a)) || (f->b && mentions_awareness(f->b));
}

namespace {
void collect_vars(const Formula& f, std::set<std::string>& out) {
    if (f->op == Op::Var || f->op == Op::Forall) out.insert(f->name);
    if (f->a) collect_vars(f->a, out);
    if (f->b) collect_vars(f->b, out);
}
}  // namespace

std::vector<std::string> all_vars(const Formula& f) {
    std::set<std::string> s;
    collect_vars(f, s);
    return {s.begin(), s.end()};
}

CaptureError::CaptureError(const std::string& v)
    : std::runtime_error("substitution captures variable ?" + v), captured(v) {}

bool substitutable(const Formula& f, const std::string& x, const Formula& g) {
    if (!occurs_free(f, x)) return true;
    switch (f->op) {
    case Op::Prop:
    case Op::Var:
        return true;
    case Op::Forall:
        if (occurs_free(g, f->name)) return false;
        return substitutable(f->a, x, g);
    case Op::And:
        return substitutable(f->a, x, g) && substitutable(f->b, x, g);
    default:
        return substitutable(f->a, x, g);
    }
}

Formula substitute(const Formula& f, const std::string& x, const Formula& g) {
    return substitute(f, std::map<std::string, Formula>{{x, g}});
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& sub) {
    bool touched = false;
    for (const auto& v : f->free)
        if (sub.count(v)) {
            touched = true;
            break;
        }
    if (!touched) return f;
    switch (f->op) {
    case Op::Var:
        return sub.at(f->name);
    case Op::Not:
        return neg(substitute(f->a, sub));
    case Op::And:
        return conj(substitute(f->a, sub), substitute(f->b, sub));
    case Op::K:
        return K(f->agent, substitute(f->a, sub));
    case Op::A:
        return A(f->agent, substitute(f->a, sub));
    case Op::X:
        return X(f->agent, substitute(f->a, sub));
    case Op::Forall: {
        std::map<std::string, Formula> inner;
        for (const auto& [v, g] : sub) {
            if (v == f->name || !occurs_free(f->a, v)) continue;
            if (occurs_free(g, f->name)) throw CaptureError(f->name);
            inner.emplace(v, g);
        }
        return forall(f->name, substitute(f->a, inner));
    }
    default:
        return f;
    }
}

std::string fresh_var(const std::vector<Formula>& avoid, const std::string& base) {
    std::set<std::string> used;
    for (const auto& f : avoid) collect_vars(f, used);
    if (!used.count(base)) return base;
    for (int i = 1;; ++i) {
        std::string c = base + std::to_string(i);
        if (!used.count(c)) return c;
    }
}

// ---------------------------------------------------------------- valuations

ValuationSyn::ValuationSyn() : dflt_(enumerate_qf_sentences({"p0"}, 0)) {}

void ValuationSyn::set(const std::string& x, Formula f) {
    if (!is_sentence(f) || !is_quantifier_free(f))
        throw std::invalid_argument("valuation image for ?" + x + " is not a quantifier-free sentence");
    over_[x] = std::move(f);
}

Formula ValuationSyn::operator()(const std::string& x) const {
    auto it = over_.find(x);
    return it == over_.end() ? dflt_ : it->second;
}

}  // namespace qaware
