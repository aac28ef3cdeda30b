#pragma once

#include <string>

#include "lamnet/net.h"

namespace lamnet {

// Graphviz rendering: one node per agent (labeled by symbol), one node per
// free port / interface slot, one edge per wire; agent-side edge ends carry
// the port index, principal = "0". Deterministic numbering.
std::string toDot(const Configuration& c);

}  // namespace lamnet
