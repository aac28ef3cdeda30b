#pragma once

#include <string>
#include <vector>

#include "lamnet/net.h"

namespace lamnet {

struct PortRef {
    const Node* agent = nullptr;
    int port = 0;  // 0 = principal
};

// One physical wire of the net: a maximal chain of name links and equation
// joints. In a valid configuration it touches at most two agent ports; the
// rest of its ends are free ports / interface slots.
struct Wire {
    std::vector<PortRef> ports;       // agent endpoints, traversal order
    std::vector<std::string> names;   // names forming the chain, sorted
    std::vector<size_t> ifaceSlots;   // interface positions on this wire
    std::vector<size_t> eqIndexes;    // equations whose sides lie on it
};

// Deterministic: wires ordered by first appearance scanning the interface
// then the live equations.
std::vector<Wire> resolveWires(const Configuration& c);

}  // namespace lamnet
