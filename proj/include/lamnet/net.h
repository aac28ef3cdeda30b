#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamnet/lambda.h"  // NameSupply, ParseError

namespace lamnet {

struct Symbol {
    std::string name;  // lam, psi, del, eps, lam*, psi*, del*
    int arity;
};

// The seven symbols used across both net languages, interned once.
namespace sym {
extern const Symbol* lam;
extern const Symbol* psi;
extern const Symbol* del;
extern const Symbol* eps;
extern const Symbol* lamS;  // lam*
extern const Symbol* psiS;  // psi*
extern const Symbol* delS;  // del*
const Symbol* byName(const std::string& name);  // nullptr if unknown
const std::array<const Symbol*, 7>& all();
}  // namespace sym

// A net term: name node (sym == nullptr) or agent node. Agents own their
// kids structurally; `parent` points at the enclosing agent (null at roots)
// and exists for cyclic-wire detection and readback.
struct Node {
    const Symbol* sym = nullptr;
    std::string name;  // name nodes only
    std::array<Node*, 2> kid{nullptr, nullptr};
    Node* parent = nullptr;

    bool isName() const { return sym == nullptr; }
};

struct Equation {
    Node* lhs = nullptr;
    Node* rhs = nullptr;
    bool dead = false;  // consumed by an interaction/substitution or pruned
};

// Interface plus equation multiset (serialized in insertion order; dead
// entries are tombstones left by the engine). Owns all nodes via an arena
// with stable addresses.
struct Configuration {
    std::vector<Node*> interface_;
    std::deque<Equation> equations;
    std::deque<Node> arena;

    Configuration() = default;
    Configuration(const Configuration&) = delete;
    Configuration& operator=(const Configuration&) = delete;
    Configuration(Configuration&&) = default;
    Configuration& operator=(Configuration&&) = default;

    Node* name(const std::string& n);
    Node* agent(const Symbol* s);
    Node* agent(const Symbol* s, Node* k0, Node* k1);
    Equation& addEquation(Node* lhs, Node* rhs);
    size_t liveCount() const;
};

struct ValidateResult {
    bool ok = true;
    std::string name;       // first offender, lexicographic
    int occurrences = 0;
};

// LINEARITY: every name occurs at most twice across interface + equations.
ValidateResult validate(const Configuration& c);

// "<x | x = lam(y, z), z = y>" — round-trips through parseConfig.
std::string printConfig(const Configuration& c);
std::string printNetTerm(const Node* t);
std::string printEquation(const Equation& e);

struct UnknownSymbol : std::runtime_error {
    explicit UnknownSymbol(const std::string& s)
        : std::runtime_error("unknown symbol: " + s) {}
};
struct ArityMismatch : std::runtime_error {
    explicit ArityMismatch(const std::string& s)
        : std::runtime_error("arity mismatch for symbol: " + s) {}
};

Configuration parseConfig(const std::string& text);

// Deep structural copy (names and shapes preserved).
Configuration cloneConfig(const Configuration& c);

// Equations reachable from the interface through shared names vs. the rest.
struct Partition {
    std::vector<const Equation*> live;
    std::vector<const Equation*> garbage;
};
Partition partitionReachable(const Configuration& c);

}  // namespace lamnet
