#include "lamnet/readback.h"

#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace lamnet {

namespace {

// Pending duplication context: a split entered at aux i of a sharing agent
// must leave through a same-family principal at branch i. The stack is
// copied at application forks so the two subtrees consume it independently.
using Ctx = std::vector<std::pair<const Symbol*, int>>;

struct Rb {
    const Configuration& c;
    const ReadbackTables& t;
    std::unordered_map<std::string, std::vector<const Node*>> occ;
    std::unordered_map<const Node*, std::pair<const Equation*, int>> eqRoot;
    std::unordered_set<const Node*> ifaceRoot;
    std::unordered_map<const Node*, std::string> binder;
    std::unordered_set<std::string> usedNames;
    long fresh = 0;
    long steps = 0;

    explicit Rb(const Configuration& cfg, const ReadbackTables& tables)
        : c(cfg), t(tables) {
        for (const Equation& e : c.equations) {
            if (e.dead) continue;
            if (!e.lhs->isName() && !e.rhs->isName()) throw NotNormal(printEquation(e));
            eqRoot[e.lhs] = {&e, 0};
            eqRoot[e.rhs] = {&e, 1};
            collect(e.lhs);
            collect(e.rhs);
        }
        for (const Node* n : c.interface_) {
            ifaceRoot.insert(n);
            collect(n);
        }
    }

    void collect(const Node* n) {
        if (n->isName()) {
            occ[n->name].push_back(n);
            usedNames.insert(n->name);
            return;
        }
        for (int i = 0; i < n->sym->arity; ++i) collect(n->kid[i]);
    }

    void budget() {
        if (++steps > 2000000)
            throw ReadbackError("readback step budget exceeded (cyclic net?)");
    }

    std::string mintBinder() {
        for (;;) {
            std::string b = "v" + std::to_string(fresh++);
            if (!usedNames.count(b)) return b;
        }
    }

    static int portOf(const Node* parent, const Node* kid) {
        return parent->kid[0] == kid ? 1 : 2;
    }

    TermPtr decodeAt(const Node* n, Ctx ctx) {
        budget();
        if (n->isName()) return wire(n, std::move(ctx));
        return enter(n, 0, std::move(ctx));
    }

    TermPtr wire(const Node* n, Ctx ctx) {
        const auto& nodes = occ.at(n->name);
        const Node* other = nullptr;
        for (const Node* cand : nodes)
            if (cand != n) other = cand;
        if (!other) return var(n->name);  // free port
        if (other->parent) return enter(other->parent, portOf(other->parent, other), std::move(ctx));
        auto it = eqRoot.find(other);
        if (it != eqRoot.end()) {
            const Equation* e = it->second.first;
            return decodeAt(it->second.second == 0 ? e->rhs : e->lhs, std::move(ctx));
        }
        throw ReadbackError("wire runs into the interface: " + n->name);
    }

    TermPtr exitPrincipal(const Node* a, Ctx ctx) {
        budget();
        if (a->parent) return enter(a->parent, portOf(a->parent, a), std::move(ctx));
        auto it = eqRoot.find(a);
        if (it != eqRoot.end()) {
            const Equation* e = it->second.first;
            return decodeAt(it->second.second == 0 ? e->rhs : e->lhs, std::move(ctx));
        }
        throw ReadbackError("agent principal runs into the interface");
    }

    TermPtr enter(const Node* a, int port, Ctx ctx) {
        budget();
        Role role = t.roles.at(a->sym)[static_cast<size_t>(port)];
        switch (role) {
            case Role::Abs: {
                std::string b = mintBinder();
                binder[a] = b;
                TermPtr body = decodeAt(a->kid[1], std::move(ctx));
                return abs(b, body);
            }
            case Role::BVar: {
                auto it = binder.find(a);
                if (it == binder.end()) {
                    const Node* bw = a->kid[0];
                    throw UnboundOccurrence(bw->isName() ? bw->name : "<binder>");
                }
                return var(it->second);
            }
            case Role::App: {
                TermPtr fun = exitPrincipal(a, ctx);  // context forks here
                TermPtr arg = decodeAt(a->kid[0], ctx);
                return app(fun, arg);
            }
            case Role::Fan: {
                const Symbol* family = t.fanFamily.at(a->sym);
                if (!ctx.empty() && ctx.back().first == family) {
                    int branch = ctx.back().second;
                    ctx.pop_back();
                    return decodeAt(a->kid[branch], std::move(ctx));
                }
                throw ResidualSharing(a->sym->name + " principal");
            }
            case Role::Pass: {
                ctx.emplace_back(t.fanFamily.at(a->sym), port - 1);
                return exitPrincipal(a, std::move(ctx));
            }
            case Role::Residual:
                throw ResidualSharing(a->sym->name);
            case Role::Bad:
            default:
                throw ResidualSharing(a->sym->name + " port " + std::to_string(port));
        }
    }
};

}  // namespace

TermPtr readbackWithTables(const Configuration& c, const ReadbackTables& tables) {
    if (c.interface_.size() != 1)
        throw ReadbackError("readback needs exactly one interface term, got " +
                            std::to_string(c.interface_.size()));
    Rb rb(c, tables);
    return rb.decodeAt(c.interface_[0], {});
}

}  // namespace lamnet
