#pragma once

#include <array>
#include <optional>

#include "lamnet/gamma.h"
#include "lamnet/readback.h"
#include "lamnet/rules.h"

namespace lamnet {

struct DirectedSystem {
    RuleTable table;  // ordered; exactly 9 unstarred><starred rules
};

DirectedSystem buildDirectedSystem();

enum class DirectedFlavor { Gamma, GammaStar };

// Gamma: abstractions lam, applications lam*, sharing psi*; GammaStar is the
// star-swap of Gamma. Vacuous binders dangle as free ports (no eraser in
// this system); prune gc removes the discarded argument's component.
Configuration encodeGamma(const TermPtr& m, NameSupply& fresh);
Configuration encodeGammaStar(const TermPtr& m, NameSupply& fresh);

struct ForeignSymbol : std::runtime_error {
    explicit ForeignSymbol(const std::string& s)
        : std::runtime_error("symbol has no dual: " + s) {}
};

// Star-swap every agent; names and structure unchanged. Involution.
Configuration dual(const Configuration& c);

struct PolarityAssignment {
    // +1 / -1 per (symbol, port) slot; port 0 = principal.
    std::array<int, 18> sign{};

    static const std::array<const Symbol*, 6>& symbolOrder();
    static int slot(const Symbol* s, int port);
    int at(const Symbol* s, int port) const { return sign[static_cast<size_t>(slot(s, port))]; }
    std::string dumpText() const;  // "lam 0 -" ... one line per slot
};

// Exhaustive search over all 2^18 sign assignments for one where
//   (i) each rule's two principal ports have opposite signs,
//  (ii) a top-level template agent shows its principal at the rewritten
//       port, so their signs are equal,
// (iii) each template variable's two occurrence ports have opposite signs,
//  (iv) every wire of every witness joining two agent ports joins opposite
//       signs (free ports and the interface are unconstrained).
// Returns the first satisfying assignment in ascending bitmask order
// (slot symbolIndex*3+port, set bit = '+'), or nullopt if none exists.
std::optional<PolarityAssignment> derivePolarity(
    const DirectedSystem& sys, const std::vector<const Configuration*>& witnesses);

struct PolarityCheck {
    bool ok = true;
    std::string wire;  // least name on the violating wire, or "#eq<k>"
};

// Ok iff every wire joining two agent ports joins opposite signs.
PolarityCheck checkPolarity(const Configuration& c, const PolarityAssignment& p);

const ReadbackTables& directedReadbackTables(DirectedFlavor flavor);

TermPtr readbackDirected(const Configuration& c, DirectedFlavor flavor);

}  // namespace lamnet
