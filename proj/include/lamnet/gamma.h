#pragma once

#include <stdexcept>
#include <string>

#include "lamnet/lambda.h"
#include "lamnet/net.h"

namespace lamnet {

struct NonLinearFreeVariable : std::runtime_error {
    std::string name;
    explicit NonLinearFreeVariable(const std::string& n)
        : std::runtime_error("free variable occurs more than once: " + n), name(n) {}
};

// Shape of one translation: which symbol carries abstractions, which carries
// applications, which splits shared variables, and how a vacuous binder port
// is filled (eps agent, or a dangling name when the system has no eraser).
struct GammaSpec {
    const Symbol* absSym;
    const Symbol* appSym;
    const Symbol* shareSym;
    bool epsVacuous;
};

// Translate a λ-term to <root | equations>: abstraction x = abs(y, z) with
// the binder name as aux1 wire; application y = app(z, x) with the function
// on the principal wire, argument aux1, result aux2; variables shared
// between a function and its argument are split first-occurrence-first with
// one share agent each. Binders are freshened up front so net names stay
// linear. Throws NonLinearFreeVariable for open terms with a repeated free
// variable.
Configuration encodeCore(const TermPtr& m, NameSupply& fresh, const GammaSpec& spec);

}  // namespace lamnet
