#include "lamnet/engine.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lamnet {

Strategy Strategy::parse(const std::string& text) {
    if (text == "fifo") return {Fifo, 0};
    if (text == "lifo") return {Lifo, 0};
    if (text.rfind("random:", 0) == 0) {
        Strategy s{Random, 0};
        try {
            s.seed = std::stoull(text.substr(7));
        } catch (const std::exception&) {
            throw std::runtime_error("bad strategy seed: " + text);
        }
        return s;
    }
    throw std::runtime_error("unknown strategy: " + text);
}

std::string Strategy::str() const {
    switch (kind) {
        case Fifo: return "fifo";
        case Lifo: return "lifo";
        default: return "random:" + std::to_string(seed);
    }
}

long ReductionStats::totalInteractions() const {
    long n = 0;
    for (const auto& [k, v] : interactions) n += v;
    return n;
}

Session::Session(Configuration cfg, const RuleTable& table)
    : cfg_(std::move(cfg)), table_(table) {
    for (size_t i = 0; i < cfg_.interface_.size(); ++i)
        indexTerm(&cfg_.interface_[i], nullptr);
    for (size_t i = 0; i < cfg_.equations.size(); ++i) {
        Equation& e = cfg_.equations[i];
        if (e.dead) continue;
        indexTerm(&e.lhs, nullptr);
        indexTerm(&e.rhs, nullptr);
        pending_.push_back(i);
        ++live_;
    }
    stats.peakEquations = live_;
}

void Session::indexTerm(Node** where, Node* parentAgent) {
    Node* t = *where;
    if (t->isName()) {
        addOcc(t->name, Slot{where, parentAgent});
        return;
    }
    for (int i = 0; i < t->sym->arity; ++i) indexTerm(&t->kid[i], t);
}

void Session::addOcc(const std::string& name, Slot s) {
    supply.ensureAbove(name);
    Occ& o = occ_[name];
    if (o.n >= 2)
        throw std::runtime_error("linearity violation while indexing: " + name);
    o.s[o.n++] = s;
}

void Session::dropOccByWhere(const std::string& name, Node** where) {
    auto it = occ_.find(name);
    if (it == occ_.end()) return;
    Occ& o = it->second;
    for (int i = 0; i < o.n; ++i) {
        if (o.s[i].where == where) {
            o.s[i] = o.s[--o.n];
            if (o.n == 0) occ_.erase(it);
            return;
        }
    }
}

void Session::moveOcc(const std::string& name, Node** from, Slot to) {
    Occ& o = occ_.at(name);
    for (int i = 0; i < o.n; ++i) {
        if (o.s[i].where == from) {
            o.s[i] = to;
            return;
        }
    }
    throw std::logic_error("occurrence index out of sync for: " + name);
}

void Session::unindexTree(Node** where, Node* parentAgent) {
    Node* t = *where;
    if (t->isName()) {
        dropOccByWhere(t->name, where);
        return;
    }
    for (int i = 0; i < t->sym->arity; ++i) unindexTree(&t->kid[i], t);
    (void)parentAgent;
}

bool Session::popNext(const Strategy& strategy, size_t& outIdx) {
    while (!pending_.empty()) {
        size_t idx;
        switch (strategy.kind) {
            case Strategy::Fifo:
                idx = pending_.front();
                pending_.pop_front();
                break;
            case Strategy::Lifo:
                idx = pending_.back();
                pending_.pop_back();
                break;
            default: {
                size_t i = static_cast<size_t>(rng_() % pending_.size());
                std::swap(pending_[i], pending_.back());
                idx = pending_.back();
                pending_.pop_back();
                break;
            }
        }
        if (cfg_.equations[idx].dead) continue;
        outIdx = idx;
        return true;
    }
    return false;
}

void Session::applyRule(size_t eqIdx, const InteractionRule& rule, bool flipped) {
    Equation& e = cfg_.equations[eqIdx];
    Node* alphaAgent = flipped ? e.rhs : e.lhs;
    Node* betaAgent = flipped ? e.lhs : e.rhs;
    e.dead = true;
    --live_;

    std::string a = rule.alpha->name, b = rule.beta->name;
    if (!table_.ordered && b < a) std::swap(a, b);
    ++stats.interactions[{a, b}];
    ++stats.fuelUsed;

    // Shared var -> fresh-name mapping across all templates, in emission order.
    std::unordered_map<std::string, std::string> varNames;

    auto emit = [&](Node* agent, const std::vector<TmplTerm>& templates) {
        for (size_t i = 0; i < templates.size(); ++i) {
            Node* port = agent->kid[i];
            Node* built = instantiateTmpl(cfg_, templates[i], varNames, supply);
            Equation& ne = cfg_.addEquation(port, built);
            // The port term's root slot moved from inside the agent to an
            // equation side; interior slots are untouched.
            if (port->isName())
                moveOcc(port->name, &agent->kid[i], Slot{&ne.lhs, nullptr});
            port->parent = nullptr;
            indexTerm(&ne.rhs, nullptr);
            pending_.push_back(cfg_.equations.size() - 1);
            ++live_;
        }
    };
    emit(alphaAgent, rule.alphaTemplates);
    emit(betaAgent, rule.betaTemplates);
}

bool Session::trySubstitute(size_t eqIdx, int which, bool& cyclic,
                            std::string& cyclicName) {
    Equation& e = cfg_.equations[eqIdx];
    Node** sideRef = which == 0 ? &e.lhs : &e.rhs;
    Node** otherRef = which == 0 ? &e.rhs : &e.lhs;
    Node* side = *sideRef;
    if (!side->isName()) return false;
    auto it = occ_.find(side->name);
    if (it == occ_.end() || it->second.n < 2) return false;  // free-port binding

    Occ& o = it->second;
    Slot target = o.s[0].where == sideRef ? o.s[1] : o.s[0];
    Node* t = *otherRef;

    // CYCLIC-WIRE: the other occurrence sits inside (or at) the term the
    // name would be bound to.
    if (target.where == otherRef) {
        cyclic = true;
        cyclicName = side->name;
        return false;
    }
    if (target.parentAgent) {
        Node* top = target.parentAgent;
        while (top->parent) top = top->parent;
        if (top == t) {
            cyclic = true;
            cyclicName = side->name;
            return false;
        }
    }

    occ_.erase(it);
    *target.where = t;
    if (t->isName())
        moveOcc(t->name, otherRef, target);
    t->parent = target.parentAgent;
    e.dead = true;
    --live_;
    ++stats.substitutions;
    return true;
}

StepResult Session::stepImpl(const Strategy& strategy, long fuelLeft,
                             bool& outOfFuel) {
    size_t idx;
    while (popNext(strategy, idx)) {
        Equation& e = cfg_.equations[idx];
        if (!e.lhs->isName() && !e.rhs->isName()) {
            bool flipped = false;
            const InteractionRule* rule = table_.find(e.lhs->sym, e.rhs->sym, flipped);
            if (!rule) {
                pending_.push_front(idx);
                return {StepStatus::Stuck, printEquation(e)};
            }
            if (fuelLeft <= 0) {
                pending_.push_front(idx);
                outOfFuel = true;
                return {StepStatus::Normal, ""};
            }
            applyRule(idx, *rule, flipped);
            return {StepStatus::Progressed, ""};
        }
        bool cyclic = false;
        std::string cname;
        if (trySubstitute(idx, 0, cyclic, cname))
            return {StepStatus::Progressed, ""};
        if (cyclic) {
            pending_.push_front(idx);
            return {StepStatus::CyclicWire, cname};
        }
        if (trySubstitute(idx, 1, cyclic, cname))
            return {StepStatus::Progressed, ""};
        if (cyclic) {
            pending_.push_front(idx);
            return {StepStatus::CyclicWire, cname};
        }
        // Both sides are names without second occurrences: a free-port
        // binding. Park it; fresh rule names can never re-activate it.
    }
    return {StepStatus::Normal, ""};
}

StepResult Session::step(const Strategy& strategy) {
    bool oof = false;
    return stepImpl(strategy, std::numeric_limits<long>::max(), oof);
}

void Session::prune() {
    Partition p = partitionReachable(cfg_);
    if (p.garbage.empty()) return;
    for (const Equation* ce : p.garbage) {
        Equation* e = const_cast<Equation*>(ce);
        unindexTree(&e->lhs, nullptr);
        unindexTree(&e->rhs, nullptr);
        e->dead = true;
        --live_;
        ++stats.garbagePruned;
    }
}

// Dead tombstones pile up one per interaction and substitution; once they
// dominate the deque, every scan (pruning above all) pays for the whole
// history. Rebuild with live equations only, fixing the occurrence index and
// pending queue. Amortized O(1) per step.
void Session::compact() {
    size_t total = cfg_.equations.size();
    if (total < 64 || total < 4 * static_cast<size_t>(live_)) return;
    std::deque<Equation> fresh;
    std::vector<size_t> remap(total, SIZE_MAX);
    for (size_t i = 0; i < total; ++i) {
        Equation& e = cfg_.equations[i];
        if (e.dead) continue;
        Node** oldL = &e.lhs;
        Node** oldR = &e.rhs;
        fresh.push_back(e);
        Equation& ne = fresh.back();
        remap[i] = fresh.size() - 1;
        if (ne.lhs->isName()) moveOcc(ne.lhs->name, oldL, Slot{&ne.lhs, nullptr});
        if (ne.rhs->isName()) moveOcc(ne.rhs->name, oldR, Slot{&ne.rhs, nullptr});
    }
    cfg_.equations.swap(fresh);
    std::deque<size_t> keep;
    for (size_t idx : pending_)
        if (remap[idx] != SIZE_MAX) keep.push_back(remap[idx]);
    pending_.swap(keep);
}

ReduceResult Session::reduce(const ReduceOptions& opts) {
    if (opts.strategy.kind == Strategy::Random) rng_.seed(opts.strategy.seed);
    stats.peakEquations = std::max(stats.peakEquations, live_);
    for (;;) {
        bool oof = false;
        StepResult r = stepImpl(opts.strategy, opts.fuel - stats.fuelUsed, oof);
        if (oof) return {ReduceStatus::FuelExhausted, ""};
        switch (r.status) {
            case StepStatus::Normal:
                return {ReduceStatus::Normal, ""};
            case StepStatus::Stuck:
                return {ReduceStatus::Stuck, r.detail};
            case StepStatus::CyclicWire:
                return {ReduceStatus::CyclicWire, r.detail};
            case StepStatus::Progressed:
                break;
        }
        if (opts.gc == GcMode::Prune) prune();
        compact();
        stats.peakEquations = std::max(stats.peakEquations, live_);
        if (opts.debugValidate) {
            ValidateResult v = validate(cfg_);
            if (!v.ok)
                throw std::logic_error("per-step linearity violation: " + v.name +
                                       " occurs " + std::to_string(v.occurrences) +
                                       " times");
        }
        if (opts.hook) opts.hook(cfg_);
    }
}

}  // namespace lamnet
