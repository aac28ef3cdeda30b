#include "lamnet/wires.h"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace lamnet {

namespace {

struct Uf {
    std::vector<size_t> parent;

    size_t make() {
        parent.push_back(parent.size());
        return parent.size() - 1;
    }
    size_t find(size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void join(size_t a, size_t b) { parent[find(a)] = find(b); }
};

struct Builder {
    Uf uf;
    std::unordered_map<std::string, size_t> nameId;
    std::map<std::pair<const Node*, int>, size_t> portId;
    // id -> wire payload contributions, attached after union-find settles
    std::vector<std::pair<size_t, PortRef>> portAt;
    std::vector<std::pair<size_t, std::string>> nameAt;
    std::vector<std::pair<size_t, size_t>> ifaceAt;
    std::vector<std::pair<size_t, size_t>> eqAt;

    size_t ofName(const std::string& n) {
        auto it = nameId.find(n);
        if (it != nameId.end()) return it->second;
        size_t id = uf.make();
        nameId.emplace(n, id);
        nameAt.emplace_back(id, n);
        return id;
    }

    size_t ofPort(const Node* agent, int port) {
        auto key = std::make_pair(agent, port);
        auto it = portId.find(key);
        if (it != portId.end()) return it->second;
        size_t id = uf.make();
        portId.emplace(key, id);
        portAt.emplace_back(id, PortRef{agent, port});
        return id;
    }

    // Point of a term root: its name, or its principal port.
    size_t ofRoot(const Node* t) {
        if (t->isName()) return ofName(t->name);
        return ofPort(t, 0);
    }

    void walkAgent(const Node* t) {
        if (t->isName()) return;
        for (int i = 0; i < t->sym->arity; ++i) {
            uf.join(ofPort(t, i + 1), ofRoot(t->kid[i]));
            walkAgent(t->kid[i]);
        }
    }
};

}  // namespace

std::vector<Wire> resolveWires(const Configuration& c) {
    Builder b;
    for (size_t i = 0; i < c.interface_.size(); ++i) {
        size_t slot = b.uf.make();
        b.ifaceAt.emplace_back(slot, i);
        b.uf.join(slot, b.ofRoot(c.interface_[i]));
        b.walkAgent(c.interface_[i]);
    }
    size_t eqIdx = 0;
    for (const Equation& e : c.equations) {
        if (e.dead) {
            ++eqIdx;
            continue;
        }
        size_t l = b.ofRoot(e.lhs), r = b.ofRoot(e.rhs);
        b.uf.join(l, r);
        b.eqAt.emplace_back(l, eqIdx);
        b.walkAgent(e.lhs);
        b.walkAgent(e.rhs);
        ++eqIdx;
    }

    // Group by representative; order classes by smallest member id (= first
    // appearance in the scan above).
    std::map<size_t, size_t> repToSlot;
    std::vector<Wire> wires;
    auto slotFor = [&](size_t id) -> Wire& {
        size_t rep = b.uf.find(id);
        auto it = repToSlot.find(rep);
        if (it == repToSlot.end()) {
            it = repToSlot.emplace(rep, wires.size()).first;
            wires.emplace_back();
        }
        return wires[it->second];
    };
    // First pass fixes wire order by scanning ids ascending.
    for (size_t id = 0; id < b.uf.parent.size(); ++id) slotFor(id);

    for (const auto& [id, p] : b.portAt) slotFor(id).ports.push_back(p);
    for (const auto& [id, n] : b.nameAt) slotFor(id).names.push_back(n);
    for (const auto& [id, s] : b.ifaceAt) slotFor(id).ifaceSlots.push_back(s);
    for (const auto& [id, e] : b.eqAt) slotFor(id).eqIndexes.push_back(e);
    for (Wire& w : wires) std::sort(w.names.begin(), w.names.end());
    return wires;
}

}  // namespace lamnet
