#pragma once

#include "lamnet/gamma.h"
#include "lamnet/readback.h"
#include "lamnet/rules.h"

namespace lamnet {

// Two readings of the psi-del commutation schema; `Standard` produces
// 2 psi + 2 del agents (matching the directed system's sharing rules),
// `SchemaAlt` produces 4 del agents. Standard is the default everywhere.
enum class PsiDeltaVariant { Standard, SchemaAlt };

struct UndirectedSystem {
    RuleTable table;  // unordered; exactly 10 rules
    PsiDeltaVariant variant = PsiDeltaVariant::Standard;
};

UndirectedSystem buildSystem(PsiDeltaVariant variant = PsiDeltaVariant::Standard);

// Translate a λ-term over {lam, psi, del, eps}: abstractions and
// applications both use lam, shared variables split with psi, vacuous
// binders erase with eps.
Configuration encode(const TermPtr& m, NameSupply& fresh);

const ReadbackTables& undirectedReadbackTables();

// Decode a normal-form net back to a λ-term.
TermPtr readback(const Configuration& c);

}  // namespace lamnet
