#include "lamnet/gamma.h"

#include <map>
#include <set>

namespace lamnet {

namespace {

void seedSupply(const TermPtr& t, NameSupply& fresh) {
    switch (t->kind) {
        case Term::Var:
            fresh.ensureAbove(t->name);
            break;
        case Term::Abs:
            fresh.ensureAbove(t->name);
            seedSupply(t->a, fresh);
            break;
        case Term::App:
            seedSupply(t->a, fresh);
            seedSupply(t->b, fresh);
            break;
    }
}

void countFreeOcc(const TermPtr& t, std::set<std::string>& bound,
                  std::map<std::string, int>& counts) {
    switch (t->kind) {
        case Term::Var:
            if (!bound.count(t->name)) ++counts[t->name];
            break;
        case Term::Abs: {
            bool fresh = bound.insert(t->name).second;
            countFreeOcc(t->a, bound, counts);
            if (fresh) bound.erase(t->name);
            break;
        }
        case Term::App:
            countFreeOcc(t->a, bound, counts);
            countFreeOcc(t->b, bound, counts);
            break;
    }
}

// Rename binders so every binder is distinct from every other identifier in
// the term; net names live in one flat namespace.
TermPtr freshenBinders(const TermPtr& t, std::set<std::string>& used,
                       NameSupply& fresh) {
    switch (t->kind) {
        case Term::Var:
            return t;
        case Term::Abs: {
            std::string binder = t->name;
            TermPtr body = t->a;
            if (used.count(binder)) {
                std::string renamed = fresh.fresh();
                body = substitute(body, binder, var(renamed), fresh);
                binder = renamed;
            }
            used.insert(binder);
            return abs(binder, freshenBinders(body, used, fresh));
        }
        case Term::App:
        default:
            return app(freshenBinders(t->a, used, fresh),
                       freshenBinders(t->b, used, fresh));
    }
}

struct Enc {
    Configuration& cfg;
    NameSupply& fresh;
    const GammaSpec& spec;

    void gamma(const TermPtr& t, const std::string& x) {
        switch (t->kind) {
            case Term::Var:
                cfg.addEquation(cfg.name(x), cfg.name(t->name));
                return;
            case Term::Abs: {
                std::string z = fresh.fresh();
                std::set<std::string> fv = freeVars(t->a);
                Node* binderPort = fv.count(t->name)
                                       ? cfg.name(t->name)
                                       : (spec.epsVacuous ? cfg.agent(sym::eps)
                                                          : cfg.name(t->name));
                cfg.addEquation(cfg.name(x),
                                cfg.agent(spec.absSym, binderPort, cfg.name(z)));
                gamma(t->a, z);
                return;
            }
            case Term::App: {
                std::string y = fresh.fresh();
                std::string z = fresh.fresh();
                cfg.addEquation(cfg.name(y),
                                cfg.agent(spec.appSym, cfg.name(z), cfg.name(x)));
                TermPtr fun = t->a, arg = t->b;
                std::set<std::string> fvArg = freeVars(arg);
                for (const std::string& shared : freeVarsOrdered(fun)) {
                    if (!fvArg.count(shared)) continue;
                    std::string left = fresh.fresh();
                    std::string right = fresh.fresh();
                    cfg.addEquation(
                        cfg.name(shared),
                        cfg.agent(spec.shareSym, cfg.name(left), cfg.name(right)));
                    fun = substitute(fun, shared, var(left), fresh);
                    arg = substitute(arg, shared, var(right), fresh);
                }
                gamma(fun, y);
                gamma(arg, z);
                return;
            }
        }
    }
};

}  // namespace

Configuration encodeCore(const TermPtr& m, NameSupply& fresh, const GammaSpec& spec) {
    seedSupply(m, fresh);

    std::set<std::string> bound;
    std::map<std::string, int> counts;
    countFreeOcc(m, bound, counts);
    for (const std::string& v : freeVarsOrdered(m)) {
        if (counts.at(v) > 1) throw NonLinearFreeVariable(v);
    }

    std::set<std::string> used = freeVars(m);
    TermPtr term = freshenBinders(m, used, fresh);

    Configuration cfg;
    std::string root = fresh.fresh();
    cfg.interface_.push_back(cfg.name(root));
    Enc enc{cfg, fresh, spec};
    enc.gamma(term, root);
    return cfg;
}

}  // namespace lamnet
