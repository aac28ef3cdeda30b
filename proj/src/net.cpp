#include "lamnet/net.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace lamnet {

namespace sym {

namespace {
const Symbol table[7] = {
    {"lam", 2}, {"psi", 2}, {"del", 2}, {"eps", 0},
    {"lam*", 2}, {"psi*", 2}, {"del*", 2},
};
}

const Symbol* lam = &table[0];
const Symbol* psi = &table[1];
const Symbol* del = &table[2];
const Symbol* eps = &table[3];
const Symbol* lamS = &table[4];
const Symbol* psiS = &table[5];
const Symbol* delS = &table[6];

const Symbol* byName(const std::string& name) {
    for (const Symbol& s : table)
        if (s.name == name) return &s;
    return nullptr;
}

const std::array<const Symbol*, 7>& all() {
    static const std::array<const Symbol*, 7> a = {lam, psi, del, eps, lamS, psiS, delS};
    return a;
}

}  // namespace sym

Node* Configuration::name(const std::string& n) {
    arena.push_back(Node{});
    Node* node = &arena.back();
    node->name = n;
    return node;
}

Node* Configuration::agent(const Symbol* s) {
    arena.push_back(Node{});
    Node* node = &arena.back();
    node->sym = s;
    return node;
}

Node* Configuration::agent(const Symbol* s, Node* k0, Node* k1) {
    Node* node = agent(s);
    node->kid[0] = k0;
    node->kid[1] = k1;
    if (k0) k0->parent = node;
    if (k1) k1->parent = node;
    return node;
}

Equation& Configuration::addEquation(Node* lhs, Node* rhs) {
    equations.push_back(Equation{lhs, rhs, false});
    return equations.back();
}

size_t Configuration::liveCount() const {
    size_t n = 0;
    for (const Equation& e : equations)
        if (!e.dead) n++;
    return n;
}

namespace {

template <typename F>
void forEachName(const Node* t, F&& f) {
    if (t->isName()) {
        f(t);
        return;
    }
    for (int i = 0; i < t->sym->arity; i++) forEachName(t->kid[i], f);
}

template <typename F>
void forEachNameInConfig(const Configuration& c, F&& f) {
    for (const Node* t : c.interface_) forEachName(t, f);
    for (const Equation& e : c.equations) {
        if (e.dead) continue;
        forEachName(e.lhs, f);
        forEachName(e.rhs, f);
    }
}

}  // namespace

ValidateResult validate(const Configuration& c) {
    std::map<std::string, int> counts;
    forEachNameInConfig(c, [&](const Node* n) { counts[n->name]++; });
    for (const auto& [name, k] : counts) {
        if (k > 2) return {false, name, k};
    }
    return {};
}

namespace {

void printTermInto(const Node* t, std::string& out) {
    if (t->isName()) {
        out += t->name;
        return;
    }
    out += t->sym->name;
    if (t->sym->arity == 0) return;
    out += '(';
    for (int i = 0; i < t->sym->arity; i++) {
        if (i) out += ", ";
        printTermInto(t->kid[i], out);
    }
    out += ')';
}

}  // namespace

std::string printNetTerm(const Node* t) {
    std::string out;
    printTermInto(t, out);
    return out;
}

std::string printEquation(const Equation& e) {
    return printNetTerm(e.lhs) + " = " + printNetTerm(e.rhs);
}

std::string printConfig(const Configuration& c) {
    std::string out = "<";
    for (size_t i = 0; i < c.interface_.size(); i++) {
        if (i) out += ", ";
        printTermInto(c.interface_[i], out);
    }
    out += " | ";
    bool first = true;
    for (const Equation& e : c.equations) {
        if (e.dead) continue;
        if (!first) out += ", ";
        first = false;
        out += printEquation(e);
    }
    out += ">";
    return out;
}

namespace {

struct ConfigParser {
    const std::string& src;
    size_t pos = 0;
    Configuration& cfg;

    ConfigParser(const std::string& s, Configuration& c) : src(s), cfg(c) {}

    void skip() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) pos++;
    }

    bool atEnd() {
        skip();
        return pos >= src.size();
    }

    char peek() {
        skip();
        if (pos >= src.size()) throw ParseError("unexpected end of configuration", pos);
        return src[pos];
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        pos++;
    }

    std::string ident() {
        skip();
        if (pos >= src.size() || !(std::isalpha(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            throw ParseError("expected identifier", pos);
        size_t start = pos++;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' ||
                src[pos] == '\''))
            pos++;
        std::string name = src.substr(start, pos - start);
        if (pos < src.size() && src[pos] == '*') {
            name += '*';
            pos++;
        }
        return name;
    }

    Node* term() {
        std::string id = ident();
        skip();
        bool call = pos < src.size() && src[pos] == '(';
        const Symbol* s = sym::byName(id);
        if (!call && !s) return cfg.name(id);
        if (!call) {
            // bare symbol token — valid only at arity 0
            if (s->arity != 0) throw ArityMismatch(id);
            return cfg.agent(s);
        }
        if (!s) throw UnknownSymbol(id);
        pos++;  // '('
        std::vector<Node*> kids;
        if (peek() != ')') {
            kids.push_back(term());
            while (peek() == ',') {
                pos++;
                kids.push_back(term());
            }
        }
        expect(')');
        if (static_cast<int>(kids.size()) != s->arity) throw ArityMismatch(id);
        Node* a = cfg.agent(s);
        for (size_t i = 0; i < kids.size(); i++) {
            a->kid[i] = kids[i];
            kids[i]->parent = a;
        }
        return a;
    }
};

}  // namespace

Configuration parseConfig(const std::string& text) {
    Configuration cfg;
    ConfigParser p(text, cfg);
    p.expect('<');
    if (p.peek() != '|') {
        cfg.interface_.push_back(p.term());
        while (p.peek() == ',') {
            p.pos++;
            cfg.interface_.push_back(p.term());
        }
    }
    p.expect('|');
    if (p.peek() != '>') {
        for (;;) {
            Node* lhs = p.term();
            p.expect('=');
            Node* rhs = p.term();
            cfg.addEquation(lhs, rhs);
            if (p.peek() != ',') break;
            p.pos++;
        }
    }
    p.expect('>');
    if (!p.atEnd()) throw ParseError("trailing input after configuration", p.pos);
    return cfg;
}

namespace {

Node* cloneTerm(const Node* t, Configuration& into) {
    if (t->isName()) return into.name(t->name);
    Node* a = into.agent(t->sym);
    for (int i = 0; i < t->sym->arity; i++) {
        a->kid[i] = cloneTerm(t->kid[i], into);
        a->kid[i]->parent = a;
    }
    return a;
}

}  // namespace

Configuration cloneConfig(const Configuration& c) {
    Configuration out;
    for (const Node* t : c.interface_) out.interface_.push_back(cloneTerm(t, out));
    for (const Equation& e : c.equations) {
        if (e.dead) continue;
        out.addEquation(cloneTerm(e.lhs, out), cloneTerm(e.rhs, out));
    }
    return out;
}

Partition partitionReachable(const Configuration& c) {
    // connectivity graph: equations as vertices, shared names as edges
    std::unordered_map<std::string, std::vector<size_t>> byName;
    std::vector<const Equation*> live;
    std::vector<size_t> indices;
    size_t n = 0;
    for (const Equation& e : c.equations) {
        if (e.dead) continue;
        size_t idx = n++;
        indices.push_back(idx);
        live.push_back(&e);
        forEachName(e.lhs, [&](const Node* nm) { byName[nm->name].push_back(idx); });
        forEachName(e.rhs, [&](const Node* nm) { byName[nm->name].push_back(idx); });
    }
    std::vector<bool> reach(n, false);
    std::vector<size_t> work;
    for (const Node* t : c.interface_)
        forEachName(t, [&](const Node* nm) {
            auto it = byName.find(nm->name);
            if (it == byName.end()) return;
            for (size_t idx : it->second)
                if (!reach[idx]) {
                    reach[idx] = true;
                    work.push_back(idx);
                }
        });
    while (!work.empty()) {
        size_t idx = work.back();
        work.pop_back();
        const Equation* e = live[idx];
        auto visit = [&](const Node* nm) {
            auto it = byName.find(nm->name);
            if (it == byName.end()) return;
            for (size_t j : it->second)
                if (!reach[j]) {
                    reach[j] = true;
                    work.push_back(j);
                }
        };
        forEachName(e->lhs, visit);
        forEachName(e->rhs, visit);
    }
    Partition out;
    for (size_t i = 0; i < n; i++)
        (reach[i] ? out.live : out.garbage).push_back(live[i]);
    return out;
}

}  // namespace lamnet
