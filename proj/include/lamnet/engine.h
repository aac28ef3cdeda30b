#pragma once

#include <functional>
#include <random>
#include <string>

#include "lamnet/net.h"
#include "lamnet/rules.h"

namespace lamnet {

enum class GcMode { None, Prune };

struct Strategy {
    enum Kind { Fifo, Lifo, Random } kind = Fifo;
    uint64_t seed = 0;

    static Strategy parse(const std::string& text);  // fifo | lifo | random:<seed>
    std::string str() const;
};

struct ReductionStats {
    std::map<std::pair<std::string, std::string>, long> interactions;
    long substitutions = 0;
    long peakEquations = 0;
    long garbagePruned = 0;
    long fuelUsed = 0;

    long totalInteractions() const;
};

enum class StepStatus { Progressed, Normal, Stuck, CyclicWire };

struct StepResult {
    StepStatus status = StepStatus::Normal;
    std::string detail;  // stuck: the offending equation; cyclic: the name
};

struct ReduceOptions {
    Strategy strategy;
    long fuel = 100000;
    GcMode gc = GcMode::Prune;
    bool debugValidate = false;  // validate() after every step, throw on failure
    std::function<void(const Configuration&)> hook;  // after every step
};

enum class ReduceStatus { Normal, FuelExhausted, Stuck, CyclicWire };

struct ReduceResult {
    ReduceStatus status = ReduceStatus::Normal;
    std::string detail;
};

// Single-owner mutable reduction state: a configuration, its name supply,
// its stats, and the bookkeeping (occurrence index, worklist) that makes
// substitution O(1). Equations are selected from a worklist; name-equations
// whose name has no second occurrence are parked as free-port bindings and
// never revisited (fresh rule names cannot re-bind them).
class Session {
  public:
    Session(Configuration cfg, const RuleTable& table);

    // One progressed action (interaction or substitution), or a terminal status.
    StepResult step(const Strategy& strategy);

    ReduceResult reduce(const ReduceOptions& opts);

    const Configuration& config() const { return cfg_; }
    ReductionStats stats;
    NameSupply supply;

    void seedRandom(uint64_t seed) { rng_.seed(seed); }

  private:
    struct Slot {
        Node** where = nullptr;     // the pointer holding the name node
        Node* parentAgent = nullptr;  // enclosing agent; null at roots
    };
    struct Occ {
        Slot s[2];
        int n = 0;
    };

    Configuration cfg_;
    const RuleTable& table_;
    std::deque<size_t> pending_;
    std::unordered_map<std::string, Occ> occ_;
    std::mt19937_64 rng_;
    long live_ = 0;

    void indexTerm(Node** where, Node* parentAgent);
    void addOcc(const std::string& name, Slot s);
    void dropOccByWhere(const std::string& name, Node** where);
    void moveOcc(const std::string& name, Node** from, Slot to);
    void unindexTree(Node** where, Node* parentAgent);

    bool popNext(const Strategy& strategy, size_t& outIdx);
    StepResult stepImpl(const Strategy& strategy, long fuelLeft, bool& outOfFuel);
    void applyRule(size_t eqIdx, const InteractionRule& rule, bool flipped);
    // true if the side at `which` was a resolvable name-equation
    bool trySubstitute(size_t eqIdx, int which, bool& cyclic, std::string& cyclicName);
    void prune();
    void compact();
    void killEquation(Equation& e);

    friend class SessionTestPeer;
};

}  // namespace lamnet
