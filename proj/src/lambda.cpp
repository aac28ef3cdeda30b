#include "lamnet/lambda.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace lamnet {

TermPtr var(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Var;
    t->name = std::move(name);
    return t;
}

TermPtr abs(std::string binder, TermPtr body) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Abs;
    t->name = std::move(binder);
    t->a = std::move(body);
    return t;
}

TermPtr app(TermPtr fun, TermPtr arg) {
    auto t = std::make_shared<Term>();
    t->kind = Term::App;
    t->a = std::move(fun);
    t->b = std::move(arg);
    return t;
}

ParseError::ParseError(const std::string& what, size_t off)
    : std::runtime_error(what + " (at offset " + std::to_string(off) + ")"),
      offset(off) {}

namespace {

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identCont(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct Lexer {
    const std::string& src;
    size_t pos = 0;

    explicit Lexer(const std::string& s) : src(s) {}

    void skipSpace() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) pos++;
    }

    // Token kinds: '\\' (lambda, also the UTF-8 'λ'), '.', '(', ')', 'i' (ident), 0 (eof)
    char peekKind() {
        skipSpace();
        if (pos >= src.size()) return 0;
        char c = src[pos];
        if (c == '\\' || c == '.' || c == '(' || c == ')') return c;
        if (static_cast<unsigned char>(c) == 0xCE && pos + 1 < src.size() &&
            static_cast<unsigned char>(src[pos + 1]) == 0xBB)
            return '\\';  // λ
        if (identStart(c)) return 'i';
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

    void eatPunct() {
        if (src[pos] == '\\' || src[pos] == '.' || src[pos] == '(' || src[pos] == ')')
            pos += 1;
        else
            pos += 2;  // λ
    }

    std::string eatIdent() {
        size_t start = pos;
        pos++;
        while (pos < src.size() && identCont(src[pos])) pos++;
        return src.substr(start, pos - start);
    }
};

struct Parser {
    Lexer lx;

    explicit Parser(const std::string& s) : lx(s) {}

    TermPtr term() {
        if (lx.peekKind() == '\\') {
            lx.eatPunct();
            std::vector<std::string> binders;
            while (lx.peekKind() == 'i') binders.push_back(lx.eatIdent());
            if (binders.empty()) throw ParseError("empty binder list", lx.pos);
            if (lx.peekKind() != '.') throw ParseError("expected '.' after binders", lx.pos);
            lx.eatPunct();
            TermPtr body = term();
            for (auto it = binders.rbegin(); it != binders.rend(); ++it)
                body = abs(*it, std::move(body));
            return body;
        }
        return application();
    }

    TermPtr application() {
        TermPtr t = atom();
        for (;;) {
            char k = lx.peekKind();
            if (k == 'i' || k == '(')
                t = app(std::move(t), atom());
            else
                break;
        }
        return t;
    }

    TermPtr atom() {
        char k = lx.peekKind();
        if (k == 'i') return var(lx.eatIdent());
        if (k == '(') {
            lx.eatPunct();
            TermPtr t = term();
            if (lx.peekKind() != ')') throw ParseError("expected ')'", lx.pos);
            lx.eatPunct();
            return t;
        }
        throw ParseError("expected term", lx.pos);
    }
};

}  // namespace

TermPtr parseTerm(const std::string& text) {
    Parser p(text);
    TermPtr t = p.term();
    if (p.lx.peekKind() != 0) throw ParseError("trailing input", p.lx.pos);
    return t;
}

namespace {

void printInto(const TermPtr& t, std::string& out) {
    switch (t->kind) {
        case Term::Var:
            out += t->name;
            break;
        case Term::Abs:
            out += '\\';
            out += t->name;
            out += ". ";
            printInto(t->a, out);
            break;
        case Term::App: {
            bool parenF = t->a->kind == Term::Abs;
            bool parenA = t->b->kind != Term::Var;
            if (parenF) out += '(';
            printInto(t->a, out);
            if (parenF) out += ')';
            out += ' ';
            if (parenA) out += '(';
            printInto(t->b, out);
            if (parenA) out += ')';
            break;
        }
    }
}

}  // namespace

std::string printTerm(const TermPtr& t) {
    std::string out;
    printInto(t, out);
    return out;
}

bool structuralEq(const TermPtr& a, const TermPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Term::Var: return a->name == b->name;
        case Term::Abs: return a->name == b->name && structuralEq(a->a, b->a);
        case Term::App: return structuralEq(a->a, b->a) && structuralEq(a->b, b->b);
    }
    return false;
}

namespace {

void collectFree(const TermPtr& t, std::set<std::string>& bound,
                 std::set<std::string>& seen, std::vector<std::string>& order) {
    switch (t->kind) {
        case Term::Var:
            if (!bound.count(t->name) && seen.insert(t->name).second)
                order.push_back(t->name);
            break;
        case Term::Abs: {
            bool fresh = bound.insert(t->name).second;
            collectFree(t->a, bound, seen, order);
            if (fresh) bound.erase(t->name);
            break;
        }
        case Term::App:
            collectFree(t->a, bound, seen, order);
            collectFree(t->b, bound, seen, order);
            break;
    }
}

}  // namespace

std::vector<std::string> freeVarsOrdered(const TermPtr& t) {
    std::set<std::string> bound, seen;
    std::vector<std::string> order;
    collectFree(t, bound, seen, order);
    return order;
}

std::set<std::string> freeVars(const TermPtr& t) {
    auto order = freeVarsOrdered(t);
    return {order.begin(), order.end()};
}

std::string NameSupply::fresh() { return "n" + std::to_string(counter++); }

void NameSupply::ensureAbove(const std::string& name) {
    if (name.size() < 2 || name[0] != 'n') return;
    for (size_t i = 1; i < name.size(); i++)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return;
    uint64_t k = 0;
    for (size_t i = 1; i < name.size(); i++) {
        k = k * 10 + static_cast<uint64_t>(name[i] - '0');
        if (k > (1ull << 60)) break;
    }
    if (k + 1 > counter) counter = k + 1;
}

TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& s,
                   NameSupply& fresh) {
    switch (t->kind) {
        case Term::Var:
            return t->name == x ? s : t;
        case Term::App:
            return app(substitute(t->a, x, s, fresh), substitute(t->b, x, s, fresh));
        case Term::Abs: {
            if (t->name == x) return t;
            auto fvBody = freeVars(t->a);
            if (!fvBody.count(x)) return t;
            if (freeVars(s).count(t->name)) {
                // capture: rename the binder
                auto fvS = freeVars(s);
                std::string y;
                do {
                    y = fresh.fresh();
                } while (fvS.count(y) || fvBody.count(y));
                TermPtr body = substitute(t->a, t->name, var(y), fresh);
                return abs(y, substitute(body, x, s, fresh));
            }
            return abs(t->name, substitute(t->a, x, s, fresh));
        }
    }
    return t;
}

namespace {

bool alphaEqRec(const TermPtr& a, const TermPtr& b,
                std::map<std::string, long>& ea, std::map<std::string, long>& eb,
                long lvl) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Term::Var: {
            auto ia = ea.find(a->name);
            auto ib = eb.find(b->name);
            if (ia == ea.end() && ib == eb.end()) return a->name == b->name;
            if (ia == ea.end() || ib == eb.end()) return false;
            return ia->second == ib->second;
        }
        case Term::App:
            return alphaEqRec(a->a, b->a, ea, eb, lvl) && alphaEqRec(a->b, b->b, ea, eb, lvl);
        case Term::Abs: {
            auto savedA = ea.find(a->name) != ea.end()
                              ? std::optional<long>(ea[a->name])
                              : std::nullopt;
            auto savedB = eb.find(b->name) != eb.end()
                              ? std::optional<long>(eb[b->name])
                              : std::nullopt;
            ea[a->name] = lvl;
            eb[b->name] = lvl;
            bool ok = alphaEqRec(a->a, b->a, ea, eb, lvl + 1);
            if (savedA) ea[a->name] = *savedA; else ea.erase(a->name);
            if (savedB) eb[b->name] = *savedB; else eb.erase(b->name);
            return ok;
        }
    }
    return false;
}

}  // namespace

bool alphaEq(const TermPtr& a, const TermPtr& b) {
    std::map<std::string, long> ea, eb;
    return alphaEqRec(a, b, ea, eb, 0);
}

namespace {

// One leftmost-outermost step, or null if β-normal.
TermPtr stepNormal(const TermPtr& t, NameSupply& fresh) {
    switch (t->kind) {
        case Term::Var:
            return nullptr;
        case Term::Abs: {
            TermPtr body = stepNormal(t->a, fresh);
            return body ? abs(t->name, std::move(body)) : nullptr;
        }
        case Term::App: {
            if (t->a->kind == Term::Abs)
                return substitute(t->a->a, t->a->name, t->b, fresh);
            if (TermPtr f = stepNormal(t->a, fresh)) return app(std::move(f), t->b);
            if (TermPtr a2 = stepNormal(t->b, fresh)) return app(t->a, std::move(a2));
            return nullptr;
        }
    }
    return nullptr;
}

}  // namespace

NormalizeResult normalizeRef(const TermPtr& t, long fuel) {
    NameSupply fresh;
    // keep capture-renames clear of names already in the term
    for (const auto& v : freeVarsOrdered(t)) fresh.ensureAbove(v);
    NormalizeResult r;
    r.term = t;
    while (r.steps < fuel) {
        TermPtr next = stepNormal(r.term, fresh);
        if (!next) return r;
        r.term = std::move(next);
        r.steps++;
    }
    if (stepNormal(r.term, fresh)) r.fuelExhausted = true;
    return r;
}

TermPtr church(unsigned n) {
    TermPtr body = var("x");
    for (unsigned i = 0; i < n; i++) body = app(var("f"), std::move(body));
    return abs("f", abs("x", std::move(body)));
}

namespace {

bool reservedIdent(const std::string& name) {
    if (name.size() < 2) return false;
    if (name[0] != 'n' && name[0] != 'v') return false;
    for (size_t i = 1; i < name.size(); i++)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    return true;
}

void lintIdents(const TermPtr& t, const std::string& rowName) {
    if (reservedIdent(t->name))
        throw std::runtime_error("corpus row '" + rowName + "': identifier '" + t->name +
                                 "' uses a reserved machine-name pattern");
    if (t->a) lintIdents(t->a, rowName);
    if (t->b) lintIdents(t->b, rowName);
}

}  // namespace

std::vector<CorpusEntry> parseCorpus(const std::string& content) {
    std::vector<CorpusEntry> entries;
    std::istringstream in(content);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);

        CorpusEntry entry;
        // "name: term" prefix — a colon before any term syntax
        size_t colon = line.find(':');
        if (colon != std::string::npos &&
            line.find_first_of("\\().") > colon) {
            entry.name = line.substr(0, colon);
            size_t nb = entry.name.find_last_not_of(" \t");
            entry.name = entry.name.substr(0, nb + 1);
            entry.text = line.substr(colon + 1);
        } else {
            entry.name = "line" + std::to_string(lineno);
            entry.text = line;
        }
        try {
            entry.term = parseTerm(entry.text);
        } catch (const ParseError& pe) {
            throw std::runtime_error("corpus line " + std::to_string(lineno) + ": " +
                                     pe.what());
        }
        lintIdents(entry.term, entry.name);
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<CorpusEntry> loadCorpusFile(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open corpus file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parseCorpus(ss.str());
}

}  // namespace lamnet
