#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lamnet/dot.h"
#include "lamnet/pipeline.h"

using json = nlohmann::json;
using namespace lamnet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;   // mismatch / stuck / residual / cyclic
constexpr int kExitFuel = 2;   // fuel exhausted
constexpr int kExitUsage = 3;  // parse or usage error

struct CommonFlags {
    std::string system = "undirected";
    long fuel = 100000;
    std::string strategy = "fifo";
    std::string gc = "prune";
    std::string psiDelta = "standard";
    bool trace = false;
    std::string dotPath;
    bool jsonOut = false;
};

void addSystemFlag(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--system", f.system, "undirected | directed | directed-dual")
        ->check(CLI::IsMember({"undirected", "directed", "directed-dual"}));
}

void addEngineFlags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--fuel", f.fuel, "interaction budget")->check(CLI::PositiveNumber);
    cmd->add_option("--strategy", f.strategy, "fifo | lifo | random:<seed>");
    cmd->add_option("--gc", f.gc, "none | prune")
        ->check(CLI::IsMember({"none", "prune"}));
}

void addVariantFlag(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--psi-delta", f.psiDelta,
                    "psi-del commutation reading: standard | schema-alt")
        ->check(CLI::IsMember({"standard", "schema-alt"}));
}

SystemKind systemKind(const std::string& s) {
    if (s == "undirected") return SystemKind::Undirected;
    if (s == "directed") return SystemKind::DirectedGamma;
    return SystemKind::DirectedGammaStar;
}

PsiDeltaVariant variantOf(const std::string& s) {
    return s == "schema-alt" ? PsiDeltaVariant::SchemaAlt : PsiDeltaVariant::Standard;
}

GcMode gcOf(const std::string& s) {
    return s == "none" ? GcMode::None : GcMode::Prune;
}

// Positional inputs may be literal text, @path, or "-" for stdin.
std::string slurpInput(const std::string& arg) {
    if (arg.empty() || arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    if (arg[0] != '@') return arg;
    std::ifstream f(arg.substr(1), std::ios::binary);
    if (!f) throw std::runtime_error("cannot open input file: " + arg.substr(1));
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json reportToJson(const RunReport& r) {
    json j;
    j["termName"] = r.termName;
    j["system"] = r.system;
    j["status"] = r.status;
    j["interactions"] = r.interactions;
    j["substitutions"] = r.substitutions;
    j["garbagePruned"] = r.garbagePruned;
    j["readback"] = r.readback ? json(*r.readback) : json(nullptr);
    j["oracle"] = r.oracle ? json(*r.oracle) : json(nullptr);
    return j;
}

json statsToJson(const ReductionStats& s) {
    json inter = json::object();
    for (const auto& [pair, count] : s.interactions)
        inter[pair.first + "," + pair.second] = count;
    json j;
    j["interactions"] = inter;
    j["substitutions"] = s.substitutions;
    j["peak_equations"] = s.peakEquations;
    j["garbage_pruned"] = s.garbagePruned;
    j["fuel_used"] = s.fuelUsed;
    return j;
}

int exitFor(const std::string& status) {
    if (status == "ok") return kExitOk;
    if (status == "fuel") return kExitFuel;
    return kExitFail;
}

PipelineOptions pipelineOptions(const CommonFlags& f, SystemKind kind) {
    PipelineOptions opts;
    opts.system = kind;
    opts.strategy = Strategy::parse(f.strategy);
    opts.fuel = f.fuel;
    opts.gc = gcOf(f.gc);
    opts.variant = variantOf(f.psiDelta);
    return opts;
}

int cmdRun(const CommonFlags& f, const std::string& input) {
    TermPtr term = parseTerm(slurpInput(input));
    PipelineOptions opts = pipelineOptions(f, systemKind(f.system));
    long step = 0;
    if (f.trace)
        opts.hook = [&step](const Configuration& c) {
            std::cout << "[" << ++step << "] " << printConfig(c) << "\n";
        };
    PipelineResult res = runPipeline("cli", term, opts);

    if (!f.dotPath.empty()) {
        std::ofstream out(f.dotPath, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write dot file: " + f.dotPath);
        out << toDot(res.config);
    }
    if (f.jsonOut) {
        std::cout << reportToJson(res.report).dump(2) << "\n";
        return exitFor(res.report.status);
    }
    if (res.report.readback) std::cout << *res.report.readback << "\n";
    if (res.report.status == "ok") return kExitOk;
    std::cerr << "status: " << res.report.status;
    if (!res.detail.empty()) std::cerr << " (" << res.detail << ")";
    std::cerr << "\n";
    if (res.report.status == "mismatch" && res.report.oracle)
        std::cerr << "reference normal form: " << *res.report.oracle << "\n";
    return exitFor(res.report.status);
}

int cmdEncode(const CommonFlags& f, const std::string& input) {
    TermPtr term = parseTerm(slurpInput(input));
    NameSupply fresh;
    Configuration cfg;
    switch (systemKind(f.system)) {
        case SystemKind::Undirected: cfg = encode(term, fresh); break;
        case SystemKind::DirectedGamma: cfg = encodeGamma(term, fresh); break;
        case SystemKind::DirectedGammaStar: cfg = encodeGammaStar(term, fresh); break;
    }
    std::cout << printConfig(cfg) << "\n";
    return kExitOk;
}

int cmdReduce(const CommonFlags& f, const std::string& input) {
    Configuration cfg = parseConfig(slurpInput(input));
    ValidateResult v = validate(cfg);
    if (!v.ok)
        throw std::runtime_error("linearity violation: " + v.name + " occurs " +
                                 std::to_string(v.occurrences) + " times");

    UndirectedSystem usys;
    DirectedSystem dsys;
    const RuleTable* table;
    if (systemKind(f.system) == SystemKind::Undirected) {
        usys = buildSystem(variantOf(f.psiDelta));
        table = &usys.table;
    } else {
        dsys = buildDirectedSystem();
        table = &dsys.table;
    }

    Session session(std::move(cfg), *table);
    ReduceOptions ro;
    ro.strategy = Strategy::parse(f.strategy);
    ro.fuel = f.fuel;
    ro.gc = gcOf(f.gc);
    long step = 0;
    if (f.trace)
        ro.hook = [&step](const Configuration& c) {
            std::cerr << "[" << ++step << "] " << printConfig(c) << "\n";
        };
    ReduceResult r = session.reduce(ro);

    if (!f.dotPath.empty()) {
        std::ofstream out(f.dotPath, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write dot file: " + f.dotPath);
        out << toDot(session.config());
    }
    if (f.jsonOut) {
        json j;
        j["config"] = printConfig(session.config());
        j["stats"] = statsToJson(session.stats);
        std::cout << j.dump(2) << "\n";
    } else {
        // config on stdout so `encode | reduce | readback` pipes; stats on stderr
        std::cout << printConfig(session.config()) << "\n";
        std::cerr << statsToJson(session.stats).dump() << "\n";
    }
    switch (r.status) {
        case ReduceStatus::Normal: return kExitOk;
        case ReduceStatus::FuelExhausted: return kExitFuel;
        case ReduceStatus::Stuck:
        case ReduceStatus::CyclicWire:
            std::cerr << "status: " << (r.status == ReduceStatus::Stuck ? "stuck" : "cyclic")
                      << " (" << r.detail << ")\n";
            return kExitFail;
    }
    return kExitFail;
}

int cmdReadback(const CommonFlags& f, const std::string& input) {
    Configuration cfg = parseConfig(slurpInput(input));
    try {
        TermPtr t = systemKind(f.system) == SystemKind::Undirected
                        ? readback(cfg)
                        : readbackDirected(cfg, systemKind(f.system) == SystemKind::DirectedGamma
                                                    ? DirectedFlavor::Gamma
                                                    : DirectedFlavor::GammaStar);
        std::cout << printTerm(t) << "\n";
        return kExitOk;
    } catch (const ReadbackError& e) {
        std::cerr << "readback failed: " << e.what() << "\n";
        return kExitFail;
    }
}

int cmdCheck(const CommonFlags& f, const std::string& corpusPath) {
    std::vector<CorpusEntry> corpus = loadCorpusFile(corpusPath);
    bool reportOnlyUndirected = variantOf(f.psiDelta) == PsiDeltaVariant::SchemaAlt;
    std::vector<RunReport> rows;
    int failures = 0;
    for (const CorpusEntry& entry : corpus) {
        for (SystemKind kind : allSystems()) {
            PipelineOptions opts = pipelineOptions(f, kind);
            PipelineResult res = runPipeline(entry.name, entry.term, opts);
            if (res.report.status != "ok" &&
                !(reportOnlyUndirected && kind == SystemKind::Undirected))
                failures++;
            rows.push_back(std::move(res.report));
        }
    }
    if (f.jsonOut) {
        json arr = json::array();
        for (const RunReport& r : rows) arr.push_back(reportToJson(r));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const RunReport& r : rows) {
            std::cout << r.termName << " " << r.system << " " << r.status << " i="
                      << r.interactions << " s=" << r.substitutions
                      << " g=" << r.garbagePruned;
            if (reportOnlyUndirected && r.system == "undirected")
                std::cout << " (report-only)";
            std::cout << "\n";
        }
        std::cout << "passed " << (rows.size() - static_cast<size_t>(failures)) << "/"
                  << rows.size() << " rows\n";
    }
    return failures == 0 ? kExitOk : kExitFail;
}

int cmdBench(const CommonFlags& f, const std::string& corpusPath) {
    std::vector<CorpusEntry> corpus = loadCorpusFile(corpusPath);
    std::cout << "term system interactions substitutions\n";
    for (const CorpusEntry& entry : corpus) {
        for (SystemKind kind : allSystems()) {
            PipelineOptions opts = pipelineOptions(f, kind);
            PipelineResult res = runPipeline(entry.name, entry.term, opts);
            std::cout << entry.name << " " << res.report.system << " "
                      << res.report.interactions << " " << res.report.substitutions
                      << "\n";
        }
    }
    return kExitOk;
}

int cmdPolarity() {
    DirectedSystem sys = buildDirectedSystem();
    NameSupply fresh;
    Configuration witness = encodeGamma(parseTerm("\\y.y"), fresh);
    std::vector<const Configuration*> witnesses = {&witness};
    std::optional<PolarityAssignment> a = derivePolarity(sys, witnesses);
    if (!a) {
        std::cerr << "no polarity assignment exists\n";
        return kExitFail;
    }
    std::cout << a->dumpText();
    return kExitOk;
}

int cmdRules(const CommonFlags& f) {
    if (systemKind(f.system) == SystemKind::Undirected)
        std::cout << buildSystem(variantOf(f.psiDelta)).table.dump();
    else
        std::cout << buildDirectedSystem().table.dump();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lambda-term evaluation via interaction nets"};
    app.require_subcommand(1);

    CommonFlags f;
    std::string input;

    CLI::App* run = app.add_subcommand("run", "encode, reduce, read back, check oracle");
    addSystemFlag(run, f);
    addEngineFlags(run, f);
    addVariantFlag(run, f);
    run->add_flag("--trace", f.trace, "print each intermediate configuration");
    run->add_option("--dot", f.dotPath, "write the normal-form net as DOT");
    run->add_flag("--json", f.jsonOut, "emit the run report as JSON");
    run->add_option("input", input, "term text or @file")->required();

    CLI::App* enc = app.add_subcommand("encode", "translate a term to a configuration");
    addSystemFlag(enc, f);
    addVariantFlag(enc, f);
    enc->add_option("input", input, "term text or @file")->required();

    CLI::App* red = app.add_subcommand("reduce", "reduce a configuration to normal form");
    addSystemFlag(red, f);
    addEngineFlags(red, f);
    addVariantFlag(red, f);
    red->add_flag("--trace", f.trace, "print each intermediate configuration to stderr");
    red->add_option("--dot", f.dotPath, "write the final net as DOT");
    red->add_flag("--json", f.jsonOut, "emit config + stats as JSON");
    red->add_option("input", input, "configuration text, @file, or - for stdin");

    CLI::App* rb = app.add_subcommand("readback", "decode a normal-form configuration");
    addSystemFlag(rb, f);
    rb->add_option("input", input, "configuration text, @file, or - for stdin");

    CLI::App* chk = app.add_subcommand("check", "run a corpus against the reference");
    addEngineFlags(chk, f);
    addVariantFlag(chk, f);
    chk->add_flag("--json", f.jsonOut, "emit RunReport rows as JSON");
    chk->add_option("corpus", input, "corpus file path")->required();

    CLI::App* ben = app.add_subcommand("bench", "interaction/substitution counts per term");
    addEngineFlags(ben, f);
    addVariantFlag(ben, f);
    ben->add_option("corpus", input, "corpus file path")->required();

    app.add_subcommand("polarity", "derive and print the directed polarity assignment");

    CLI::App* rul = app.add_subcommand("rules", "dump a rule table");
    addSystemFlag(rul, f);
    addVariantFlag(rul, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) return cmdRun(f, input);
        if (enc->parsed()) return cmdEncode(f, input);
        if (red->parsed()) return cmdReduce(f, input);
        if (rb->parsed()) return cmdReadback(f, input);
        if (chk->parsed()) return cmdCheck(f, input);
        if (ben->parsed()) return cmdBench(f, input);
        if (app.get_subcommand("polarity")->parsed()) return cmdPolarity();
        if (rul->parsed()) return cmdRules(f);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
