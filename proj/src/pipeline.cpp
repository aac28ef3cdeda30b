#include "lamnet/pipeline.h"

namespace lamnet {

std::string systemName(SystemKind k) {
    switch (k) {
        case SystemKind::Undirected: return "undirected";
        case SystemKind::DirectedGamma: return "directed-gamma";
        default: return "directed-gammastar";
    }
}

const std::vector<SystemKind>& allSystems() {
    static const std::vector<SystemKind> all = {SystemKind::Undirected,
                                                SystemKind::DirectedGamma,
                                                SystemKind::DirectedGammaStar};
    return all;
}

PipelineResult runPipeline(const std::string& termName, const TermPtr& term,
                           const PipelineOptions& opts) {
    PipelineResult res;
    res.report.termName = termName;
    res.report.system = systemName(opts.system);

    UndirectedSystem usys;
    DirectedSystem dsys;
    const RuleTable* table = nullptr;
    NameSupply encSupply;
    Configuration cfg;
    switch (opts.system) {
        case SystemKind::Undirected:
            usys = buildSystem(opts.variant);
            table = &usys.table;
            cfg = encode(term, encSupply);
            break;
        case SystemKind::DirectedGamma:
            dsys = buildDirectedSystem();
            table = &dsys.table;
            cfg = encodeGamma(term, encSupply);
            break;
        case SystemKind::DirectedGammaStar:
            dsys = buildDirectedSystem();
            table = &dsys.table;
            cfg = encodeGammaStar(term, encSupply);
            break;
    }

    NormalizeResult oracle = normalizeRef(term, opts.fuel);
    if (!oracle.fuelExhausted) res.report.oracle = printTerm(oracle.term);

    Session session(std::move(cfg), *table);
    ReduceOptions ro;
    ro.strategy = opts.strategy;
    ro.fuel = opts.fuel;
    ro.gc = opts.gc;
    ro.debugValidate = opts.debugValidate;
    ro.hook = opts.hook;
    ReduceResult rr = session.reduce(ro);

    res.stats = session.stats;
    res.report.interactions = session.stats.totalInteractions();
    res.report.substitutions = session.stats.substitutions;
    res.report.garbagePruned = session.stats.garbagePruned;
    res.config = cloneConfig(session.config());

    switch (rr.status) {
        case ReduceStatus::FuelExhausted:
            res.report.status = "fuel";
            break;
        case ReduceStatus::Stuck:
            res.report.status = "stuck";
            res.detail = rr.detail;
            break;
        case ReduceStatus::CyclicWire:
            res.report.status = "cyclic";
            res.detail = rr.detail;
            break;
        case ReduceStatus::Normal: {
            try {
                TermPtr decoded =
                    opts.system == SystemKind::Undirected
                        ? readback(session.config())
                        : readbackDirected(session.config(),
                                           opts.system == SystemKind::DirectedGamma
                                               ? DirectedFlavor::Gamma
                                               : DirectedFlavor::GammaStar);
                res.report.readback = printTerm(decoded);
                if (!res.report.oracle)
                    res.report.status = "fuel";  // reference ran out, net did not
                else
                    res.report.status =
                        alphaEq(decoded, oracle.term) ? "ok" : "mismatch";
            } catch (const ReadbackError& e) {
                res.report.status = "residual";
                res.detail = e.what();
            }
            break;
        }
    }
    return res;
}

}  // namespace lamnet
