#include "lamnet/rules.h"

#include <algorithm>

namespace lamnet {

TmplTerm TmplTerm::v(std::string name) {
    TmplTerm t;
    t.var = std::move(name);
    return t;
}

TmplTerm TmplTerm::ag(const Symbol* s, std::vector<TmplTerm> kids) {
    TmplTerm t;
    t.sym = s;
    t.kids = std::move(kids);
    return t;
}

namespace {

void printTmpl(const TmplTerm& t, std::string& out) {
    if (!t.sym) {
        out += t.var;
        return;
    }
    out += t.sym->name;
    if (t.kids.empty()) return;
    out += '(';
    for (size_t i = 0; i < t.kids.size(); i++) {
        if (i) out += ", ";
        printTmpl(t.kids[i], out);
    }
    out += ')';
}

void printSide(const Symbol* s, const std::vector<TmplTerm>& ts, std::string& out) {
    out += s->name;
    out += '[';
    for (size_t i = 0; i < ts.size(); i++) {
        if (i) out += ", ";
        printTmpl(ts[i], out);
    }
    out += ']';
}

bool starred(const Symbol* s) { return !s->name.empty() && s->name.back() == '*'; }

}  // namespace

std::string printRule(const InteractionRule& r) {
    std::string out;
    printSide(r.alpha, r.alphaTemplates, out);
    out += " >< ";
    printSide(r.beta, r.betaTemplates, out);
    return out;
}

void RuleTable::add(InteractionRule r) {
    const Symbol* a = r.alpha;
    const Symbol* b = r.beta;
    auto key = std::make_pair(a, b);
    if (!ordered && b->name < a->name) key = std::make_pair(b, a);
    index_[key] = rules.size();
    rules.push_back(std::move(r));
}

const InteractionRule* RuleTable::find(const Symbol* a, const Symbol* b,
                                       bool& flipped) const {
    auto key = std::make_pair(a, b);
    if (ordered) {
        if (starred(a) == starred(b)) return nullptr;
        if (starred(a)) key = std::make_pair(b, a);
    } else {
        if (b->name < a->name) key = std::make_pair(b, a);
    }
    auto it = index_.find(key);
    if (it == index_.end()) return nullptr;
    const InteractionRule& r = rules[it->second];
    flipped = r.alpha != a;
    return &r;
}

std::string RuleTable::dump() const {
    std::string out;
    for (const InteractionRule& r : rules) {
        out += printRule(r);
        out += '\n';
    }
    return out;
}

Node* instantiateTmpl(Configuration& cfg, const TmplTerm& t,
                      std::unordered_map<std::string, std::string>& varNames,
                      NameSupply& fresh) {
    if (!t.sym) {
        auto it = varNames.find(t.var);
        if (it == varNames.end()) it = varNames.emplace(t.var, fresh.fresh()).first;
        return cfg.name(it->second);
    }
    if (t.sym->arity == 0) return cfg.agent(t.sym);
    Node* k0 = instantiateTmpl(cfg, t.kids[0], varNames, fresh);
    Node* k1 = instantiateTmpl(cfg, t.kids[1], varNames, fresh);
    return cfg.agent(t.sym, k0, k1);
}

void applyRule(const InteractionRule& r, Configuration& cfg, Equation& active,
               NameSupply& fresh) {
    if (active.lhs->isName() || active.rhs->isName())
        throw SymbolMismatch(printEquation(active));
    Node* a = active.lhs;
    Node* b = active.rhs;
    if (!(a->sym == r.alpha && b->sym == r.beta)) {
        if (a->sym == r.beta && b->sym == r.alpha)
            std::swap(a, b);
        else
            throw SymbolMismatch(printEquation(active));
    }
    active.dead = true;
    std::unordered_map<std::string, std::string> varNames;
    auto emit = [&](Node* agent, const std::vector<TmplTerm>& ts) {
        for (size_t i = 0; i < ts.size(); i++) {
            Node* port = agent->kid[i];
            Node* built = instantiateTmpl(cfg, ts[i], varNames, fresh);
            port->parent = nullptr;
            cfg.addEquation(port, built);
        }
    };
    emit(a, r.alphaTemplates);
    emit(b, r.betaTemplates);
}

}  // namespace lamnet
