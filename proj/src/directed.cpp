#include "lamnet/directed.h"

#include <algorithm>

#include "lamnet/wires.h"

namespace lamnet {

namespace {

TmplTerm v(const char* n) { return TmplTerm::v(n); }
TmplTerm ag(const Symbol* s, TmplTerm k0, TmplTerm k1) {
    return TmplTerm::ag(s, {std::move(k0), std::move(k1)});
}

InteractionRule annihilation(const Symbol* plain, const Symbol* star) {
    return {plain, star, {v("a"), v("b")}, {v("a"), v("b")}};
}

// alpha[inner(a,b), innerDual(c,d)] >< beta[outer(a,c), outerSecond(b,d)]
InteractionRule commutation(const Symbol* alpha, const Symbol* i1, const Symbol* i2,
                            const Symbol* beta, const Symbol* o1, const Symbol* o2) {
    return {alpha,
            beta,
            {ag(i1, v("a"), v("b")), ag(i2, v("c"), v("d"))},
            {ag(o1, v("a"), v("c")), ag(o2, v("b"), v("d"))}};
}

}  // namespace

DirectedSystem buildDirectedSystem() {
    DirectedSystem sys;
    sys.table.ordered = true;

    sys.table.add(annihilation(sym::lam, sym::lamS));
    sys.table.add(annihilation(sym::del, sym::delS));
    sys.table.add(annihilation(sym::psi, sym::psiS));

    sys.table.add(commutation(sym::lam, sym::del, sym::delS, sym::delS, sym::lam, sym::lam));
    sys.table.add(commutation(sym::lam, sym::del, sym::delS, sym::psiS, sym::lam, sym::lam));
    sys.table.add(commutation(sym::del, sym::lamS, sym::lamS, sym::lamS, sym::delS, sym::del));
    sys.table.add(commutation(sym::psi, sym::lamS, sym::lamS, sym::lamS, sym::delS, sym::del));
    sys.table.add(commutation(sym::psi, sym::delS, sym::delS, sym::delS, sym::psi, sym::psi));
    sys.table.add(commutation(sym::del, sym::psiS, sym::psiS, sym::psiS, sym::del, sym::del));
    return sys;
}

Configuration encodeGamma(const TermPtr& m, NameSupply& fresh) {
    return encodeCore(m, fresh, GammaSpec{sym::lam, sym::lamS, sym::psiS, false});
}

Configuration encodeGammaStar(const TermPtr& m, NameSupply& fresh) {
    return encodeCore(m, fresh, GammaSpec{sym::lamS, sym::lam, sym::psi, false});
}

namespace {

const Symbol* dualSym(const Symbol* s) {
    if (s == sym::lam) return sym::lamS;
    if (s == sym::lamS) return sym::lam;
    if (s == sym::psi) return sym::psiS;
    if (s == sym::psiS) return sym::psi;
    if (s == sym::del) return sym::delS;
    if (s == sym::delS) return sym::del;
    throw ForeignSymbol(s->name);
}

Node* copyDual(const Node* t, Configuration& out) {
    if (t->isName()) return out.name(t->name);
    const Symbol* d = dualSym(t->sym);  // reject foreign symbols before kids
    Node* k0 = copyDual(t->kid[0], out);
    Node* k1 = copyDual(t->kid[1], out);
    return out.agent(d, k0, k1);
}

}  // namespace

Configuration dual(const Configuration& c) {
    Configuration out;
    for (const Node* t : c.interface_) out.interface_.push_back(copyDual(t, out));
    for (const Equation& e : c.equations) {
        if (e.dead) continue;
        Node* l = copyDual(e.lhs, out);
        Node* r = copyDual(e.rhs, out);
        out.addEquation(l, r);
    }
    return out;
}

const std::array<const Symbol*, 6>& PolarityAssignment::symbolOrder() {
    static const std::array<const Symbol*, 6> order = {sym::lam, sym::lamS, sym::del,
                                                       sym::delS, sym::psi, sym::psiS};
    return order;
}

int PolarityAssignment::slot(const Symbol* s, int port) {
    const auto& order = symbolOrder();
    for (size_t i = 0; i < order.size(); ++i)
        if (order[i] == s) return static_cast<int>(i) * 3 + port;
    throw ForeignSymbol(s->name);
}

std::string PolarityAssignment::dumpText() const {
    std::string out;
    for (const Symbol* s : symbolOrder()) {
        for (int p = 0; p < 3; ++p) {
            out += s->name;
            out += ' ';
            out += std::to_string(p);
            out += ' ';
            out += at(s, p) > 0 ? '+' : '-';
            out += '\n';
        }
    }
    return out;
}

namespace {

struct SlotPair {
    int a, b;
};

// Records (container symbol, port) for every variable occurrence in a rule.
void collectVarPorts(const TmplTerm& t, const Symbol* container, int port,
                     std::map<std::string, std::vector<int>>& out) {
    if (!t.sym) {
        out[t.var].push_back(PolarityAssignment::slot(container, port));
        return;
    }
    for (size_t j = 0; j < t.kids.size(); ++j)
        collectVarPorts(t.kids[j], t.sym, static_cast<int>(j) + 1, out);
}

}  // namespace

std::optional<PolarityAssignment> derivePolarity(
    const DirectedSystem& sys, const std::vector<const Configuration*>& witnesses) {
    std::vector<SlotPair> opposite;
    std::vector<SlotPair> equal;

    for (const InteractionRule& r : sys.table.rules) {
        opposite.push_back({PolarityAssignment::slot(r.alpha, 0),
                            PolarityAssignment::slot(r.beta, 0)});
        std::map<std::string, std::vector<int>> varPorts;
        auto side = [&](const Symbol* s, const std::vector<TmplTerm>& ts) {
            for (size_t i = 0; i < ts.size(); ++i) {
                int port = PolarityAssignment::slot(s, static_cast<int>(i) + 1);
                if (ts[i].sym) {
                    equal.push_back({PolarityAssignment::slot(ts[i].sym, 0), port});
                    collectVarPorts(ts[i], s, static_cast<int>(i) + 1, varPorts);
                } else {
                    varPorts[ts[i].var].push_back(port);
                }
            }
        };
        side(r.alpha, r.alphaTemplates);
        side(r.beta, r.betaTemplates);
        for (const auto& [name, ports] : varPorts) {
            if (ports.size() == 2) opposite.push_back({ports[0], ports[1]});
        }
    }

    for (const Configuration* w : witnesses) {
        for (const Wire& wire : resolveWires(*w)) {
            if (wire.ports.size() != 2) continue;
            opposite.push_back(
                {PolarityAssignment::slot(wire.ports[0].agent->sym, wire.ports[0].port),
                 PolarityAssignment::slot(wire.ports[1].agent->sym, wire.ports[1].port)});
        }
    }

    for (uint32_t m = 0; m < (1u << 18); ++m) {
        auto sgn = [m](int s) { return (m >> s) & 1u; };
        bool ok = true;
        for (const SlotPair& p : opposite) {
            if (sgn(p.a) == sgn(p.b)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (const SlotPair& p : equal) {
            if (sgn(p.a) != sgn(p.b)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        PolarityAssignment a;
        for (int s = 0; s < 18; ++s) a.sign[static_cast<size_t>(s)] = sgn(s) ? 1 : -1;
        return a;
    }
    return std::nullopt;
}

PolarityCheck checkPolarity(const Configuration& c, const PolarityAssignment& p) {
    for (const Wire& w : resolveWires(c)) {
        if (w.ports.size() != 2) continue;
        int s0 = p.at(w.ports[0].agent->sym, w.ports[0].port);
        int s1 = p.at(w.ports[1].agent->sym, w.ports[1].port);
        if (s0 != s1) continue;
        PolarityCheck bad;
        bad.ok = false;
        if (!w.names.empty())
            bad.wire = w.names.front();
        else
            bad.wire = "#eq" + std::to_string(
                                   *std::min_element(w.eqIndexes.begin(), w.eqIndexes.end()));
        return bad;
    }
    return {};
}

const ReadbackTables& directedReadbackTables(DirectedFlavor flavor) {
    static const ReadbackTables gamma = [] {
        ReadbackTables t;
        t.roles[sym::lam] = {Role::Abs, Role::BVar, Role::Bad};
        t.roles[sym::lamS] = {Role::Bad, Role::Bad, Role::App};
        for (const Symbol* s : {sym::psi, sym::psiS})
            t.roles[s] = {Role::Fan, Role::Pass, Role::Pass}, t.fanFamily[s] = sym::psi;
        for (const Symbol* s : {sym::del, sym::delS})
            t.roles[s] = {Role::Fan, Role::Pass, Role::Pass}, t.fanFamily[s] = sym::del;
        return t;
    }();
    static const ReadbackTables gammaStar = [] {
        ReadbackTables t = gamma;
        t.roles[sym::lam] = {Role::Bad, Role::Bad, Role::App};
        t.roles[sym::lamS] = {Role::Abs, Role::BVar, Role::Bad};
        return t;
    }();
    return flavor == DirectedFlavor::Gamma ? gamma : gammaStar;
}

TermPtr readbackDirected(const Configuration& c, DirectedFlavor flavor) {
    return readbackWithTables(c, directedReadbackTables(flavor));
}

}  // namespace lamnet
