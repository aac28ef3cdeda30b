#pragma once

#include <functional>
#include <optional>
#include <string>

#include "lamnet/directed.h"
#include "lamnet/engine.h"
#include "lamnet/undirected.h"

namespace lamnet {

enum class SystemKind { Undirected, DirectedGamma, DirectedGammaStar };

std::string systemName(SystemKind k);
const std::vector<SystemKind>& allSystems();

struct PipelineOptions {
    SystemKind system = SystemKind::Undirected;
    Strategy strategy;
    long fuel = 100000;
    GcMode gc = GcMode::Prune;
    PsiDeltaVariant variant = PsiDeltaVariant::Standard;
    bool debugValidate = false;
    std::function<void(const Configuration&)> hook;
};

struct RunReport {
    std::string termName;
    std::string system;
    // ok | mismatch | stuck | fuel | residual | cyclic
    std::string status;
    long interactions = 0;
    long substitutions = 0;
    long garbagePruned = 0;
    std::optional<std::string> readback;
    std::optional<std::string> oracle;
};

struct PipelineResult {
    RunReport report;
    ReductionStats stats;
    Configuration config;  // final net (tombstones compacted)
    std::string detail;    // stuck pair / cyclic name / readback error
};

// encode -> reduce -> readback -> compare with the normal-order reference.
// status: ok/mismatch need a normal form on both sides; fuel covers either
// side running out (net readback, when available, is still reported);
// residual means the normal-form net did not decode.
PipelineResult runPipeline(const std::string& termName, const TermPtr& term,
                           const PipelineOptions& opts);

}  // namespace lamnet
