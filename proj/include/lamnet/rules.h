#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lamnet/net.h"

namespace lamnet {

// Rule right-hand sides: little trees over template variables. Every
// variable occurs exactly twice across alphaTemplates ∪ betaTemplates.
struct TmplTerm {
    const Symbol* sym = nullptr;  // null → variable
    std::string var;
    std::vector<TmplTerm> kids;

    static TmplTerm v(std::string name);
    static TmplTerm ag(const Symbol* s, std::vector<TmplTerm> kids = {});
};

struct InteractionRule {
    const Symbol* alpha;
    const Symbol* beta;
    std::vector<TmplTerm> alphaTemplates;  // length Ar(alpha)
    std::vector<TmplTerm> betaTemplates;   // length Ar(beta)
};

// "lam[del(x1, y1), del(x2, y2)] >< psi[lam(x1, x2), lam(y1, y2)]"
std::string printRule(const InteractionRule& r);

struct RuleTable {
    bool ordered = false;
    std::vector<InteractionRule> rules;  // declaration order (for dumps)

    void add(InteractionRule r);
    // Finds the rule for an active pair (a, b); sets flipped when the rule
    // matches with alpha on the b side. Unordered tables canonicalize the
    // pair; ordered tables require one unstarred and one starred symbol.
    const InteractionRule* find(const Symbol* a, const Symbol* b, bool& flipped) const;

    std::string dump() const;  // one printRule line per rule

  private:
    std::map<std::pair<const Symbol*, const Symbol*>, size_t> index_;
};

struct SymbolMismatch : std::runtime_error {
    explicit SymbolMismatch(const std::string& s)
        : std::runtime_error("active pair does not match rule: " + s) {}
};

// One template instance built inside cfg. Template variables map to fresh
// names via varNames, shared across a whole rule application so each
// variable's two occurrences become the same name.
Node* instantiateTmpl(Configuration& cfg, const TmplTerm& t,
                      std::unordered_map<std::string, std::string>& varNames,
                      NameSupply& fresh);

// Rewrites the active pair in place: marks it dead and appends the port
// equations {u_i = alphaTemplates_i} then {v_j = betaTemplates_j}, drawing
// template names from fresh. Either orientation of the pair is accepted.
void applyRule(const InteractionRule& r, Configuration& cfg, Equation& active,
               NameSupply& fresh);

}  // namespace lamnet
