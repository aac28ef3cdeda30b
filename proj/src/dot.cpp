#include "lamnet/dot.h"

#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "lamnet/wires.h"

namespace lamnet {

namespace {

void numberAgents(const Node* t, std::unordered_map<const Node*, std::string>& ids,
                  std::vector<const Node*>& order) {
    if (t->isName()) return;
    ids.emplace(t, "a" + std::to_string(order.size()));
    order.push_back(t);
    for (int i = 0; i < t->sym->arity; ++i) numberAgents(t->kid[i], ids, order);
}

void countNames(const Node* t, std::unordered_map<std::string, int>& occ) {
    if (t->isName()) {
        ++occ[t->name];
        return;
    }
    for (int i = 0; i < t->sym->arity; ++i) countNames(t->kid[i], occ);
}

}  // namespace

std::string toDot(const Configuration& c) {
    std::unordered_map<const Node*, std::string> agentId;
    std::vector<const Node*> agents;
    std::unordered_map<std::string, int> occ;
    std::unordered_set<std::string> ifaceRootNames;

    for (const Node* t : c.interface_) {
        numberAgents(t, agentId, agents);
        countNames(t, occ);
        if (t->isName()) ifaceRootNames.insert(t->name);
    }
    for (const Equation& e : c.equations) {
        if (e.dead) continue;
        numberAgents(e.lhs, agentId, agents);
        numberAgents(e.rhs, agentId, agents);
        countNames(e.lhs, occ);
        countNames(e.rhs, occ);
    }

    std::ostringstream out;
    out << "graph net {\n  node [shape=circle];\n";
    for (const Node* a : agents)
        out << "  " << agentId.at(a) << " [label=\"" << a->sym->name << "\"];\n";

    // Visible wire ends: one node per interface slot and per dangling name.
    struct End {
        std::string node;
        int port = -1;  // agent port index, or -1 for a port node
    };
    std::vector<std::string> portNodes;
    std::vector<std::vector<End>> wireEnds;
    for (const Wire& w : resolveWires(c)) {
        std::vector<End> ends;
        for (const PortRef& p : w.ports) ends.push_back({agentId.at(p.agent), p.port});
        for (size_t slot : w.ifaceSlots) {
            const Node* entry = c.interface_[slot];
            std::string label = entry->isName() ? entry->name : "#" + std::to_string(slot);
            std::string id = "p" + std::to_string(portNodes.size());
            portNodes.push_back(id + " [label=\"" + label + "\", shape=none];");
            ends.push_back({id, -1});
        }
        for (const std::string& n : w.names) {
            if (occ.at(n) == 1 && !ifaceRootNames.count(n)) {
                std::string id = "p" + std::to_string(portNodes.size());
                portNodes.push_back(id + " [label=\"" + n + "\", shape=none];");
                ends.push_back({id, -1});
            }
        }
        wireEnds.push_back(std::move(ends));
    }

    for (const std::string& p : portNodes) out << "  " << p << "\n";
    for (const auto& ends : wireEnds) {
        for (size_t i = 0; i + 1 < ends.size(); ++i) {
            const End& a = ends[i];
            const End& b = ends[i + 1];
            out << "  " << a.node << " -- " << b.node;
            std::string attrs;
            if (a.port >= 0) attrs += "taillabel=\"" + std::to_string(a.port) + "\"";
            if (b.port >= 0) {
                if (!attrs.empty()) attrs += ", ";
                attrs += "headlabel=\"" + std::to_string(b.port) + "\"";
            }
            if (!attrs.empty()) out << " [" << attrs << "]";
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace lamnet
