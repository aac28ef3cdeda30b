#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamnet {

// λ-terms: named variables, immutable trees shared by pointer.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum Kind { Var, Abs, App } kind;
    std::string name;  // Var: variable name; Abs: binder
    TermPtr a;         // Abs: body; App: function
    TermPtr b;         // App: argument
};

TermPtr var(std::string name);
TermPtr abs(std::string binder, TermPtr body);
TermPtr app(TermPtr fun, TermPtr arg);

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& what, size_t offset);
};

// Grammar: term := lam | app ; lam := ('\'|'λ') var+ '.' term ;
// app := atom+ (left-assoc) ; atom := var | '(' term ')'.
// Identifiers: [a-zA-Z_][a-zA-Z0-9_']*.
TermPtr parseTerm(const std::string& text);

// Minimal parentheses; never emits multi-binder sugar.
std::string printTerm(const TermPtr& t);

bool structuralEq(const TermPtr& a, const TermPtr& b);

std::set<std::string> freeVars(const TermPtr& t);

// Free variables in first-occurrence order (drives deterministic ψ-splits).
std::vector<std::string> freeVarsOrdered(const TermPtr& t);

// Mints n0, n1, ... — unique per supply; callers handle clashes with
// pre-existing identifiers via ensureAbove.
struct NameSupply {
    uint64_t counter = 0;
    std::string fresh();
    // If name matches n<digits>, bump counter past it.
    void ensureAbove(const std::string& name);
};

// Capture-avoiding; binders renamed via fresh only when capture would occur.
TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& s,
                   NameSupply& fresh);

bool alphaEq(const TermPtr& a, const TermPtr& b);

struct NormalizeResult {
    TermPtr term;  // normal form, or the partially reduced term
    bool fuelExhausted = false;
    long steps = 0;  // β-steps performed
};

// Leftmost-outermost β-reduction, one fuel unit per β-step.
NormalizeResult normalizeRef(const TermPtr& t, long fuel);

TermPtr church(unsigned n);

// Corpus files: UTF-8, one term per line, optional "name: term" prefix,
// '#' comments. Identifiers n<digits> and v<digits> are reserved for
// machine names and readback binders and are rejected by the lint.
struct CorpusEntry {
    std::string name;
    std::string text;
    TermPtr term;
};

std::vector<CorpusEntry> parseCorpus(const std::string& content);
std::vector<CorpusEntry> loadCorpusFile(const std::string& path);

}  // namespace lamnet
