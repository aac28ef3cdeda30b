#include <doctest.h>

#include <map>

#include "lamnet/engine.h"
#include "lamnet/undirected.h"

using namespace lamnet;

namespace {

// Configurations equal up to a bijection on names (agent structure, equation
// order, and interface order must match exactly).
bool isoNode(const Node* a, const Node* b, std::map<std::string, std::string>& fwd,
             std::map<std::string, std::string>& bwd) {
    if (a->isName() != b->isName()) return false;
    if (a->isName()) {
        auto f = fwd.find(a->name);
        auto g = bwd.find(b->name);
        if (f == fwd.end() && g == bwd.end()) {
            fwd[a->name] = b->name;
            bwd[b->name] = a->name;
            return true;
        }
        return f != fwd.end() && g != bwd.end() && f->second == b->name &&
               g->second == a->name;
    }
    if (a->sym != b->sym) return false;
    for (int i = 0; i < a->sym->arity; ++i)
        if (!isoNode(a->kid[i], b->kid[i], fwd, bwd)) return false;
    return true;
}

bool isoConfig(const Configuration& a, const Configuration& b) {
    if (a.interface_.size() != b.interface_.size()) return false;
    if (a.liveCount() != b.liveCount()) return false;
    std::map<std::string, std::string> fwd, bwd;
    for (size_t i = 0; i < a.interface_.size(); ++i)
        if (!isoNode(a.interface_[i], b.interface_[i], fwd, bwd)) return false;
    size_t j = 0;
    for (const Equation& ea : a.equations) {
        if (ea.dead) continue;
        while (j < b.equations.size() && b.equations[j].dead) j++;
        if (j >= b.equations.size()) return false;
        const Equation& eb = b.equations[j++];
        if (!isoNode(ea.lhs, eb.lhs, fwd, bwd)) return false;
        if (!isoNode(ea.rhs, eb.rhs, fwd, bwd)) return false;
    }
    return true;
}

Configuration enc(const char* term) {
    NameSupply fresh;
    return encode(parseTerm(term), fresh);
}

struct Census {
    long lam = 0, psi = 0, del = 0, eps = 0;
};

void countNode(const Node* n, Census& c) {
    if (n->isName()) return;
    if (n->sym == sym::lam) c.lam++;
    if (n->sym == sym::psi) c.psi++;
    if (n->sym == sym::del) c.del++;
    if (n->sym == sym::eps) c.eps++;
    for (int i = 0; i < n->sym->arity; ++i) countNode(n->kid[i], c);
}

Census agentCensus(const Configuration& c) {
    Census out;
    for (const Equation& e : c.equations) {
        if (e.dead) continue;
        countNode(e.lhs, out);
        countNode(e.rhs, out);
    }
    for (const Node* n : c.interface_) countNode(n, out);
    return out;
}

// Structural counts of the source term that the encoding must match 1:1.
void termCensus(const TermPtr& t, long& absApp, long& splits, long& vacuous) {
    switch (t->kind) {
        case Term::Var:
            return;
        case Term::Abs:
            absApp++;
            if (!freeVars(t->a).count(t->name)) vacuous++;
            termCensus(t->a, absApp, splits, vacuous);
            return;
        case Term::App: {
            absApp++;
            auto fa = freeVars(t->a);
            for (const auto& v : freeVars(t->b))
                if (fa.count(v)) splits++;
            termCensus(t->a, absApp, splits, vacuous);
            termCensus(t->b, absApp, splits, vacuous);
            return;
        }
    }
}

}  // namespace

TEST_CASE("undirected table has the ten pair rules") {
    UndirectedSystem sys = buildSystem();
    CHECK_FALSE(sys.table.ordered);
    CHECK(sys.table.rules.size() == 10);

    // Every unordered pair of the four symbols has a rule.
    const Symbol* four[] = {sym::lam, sym::psi, sym::del, sym::eps};
    for (const Symbol* a : four)
        for (const Symbol* b : four) {
            bool flipped = false;
            CHECK(sys.table.find(a, b, flipped) != nullptr);
        }

    // eps annihilation is empty on both sides.
    bool flipped = false;
    const InteractionRule* ee = sys.table.find(sym::eps, sym::eps, flipped);
    CHECK(ee->alphaTemplates.empty());
    CHECK(ee->betaTemplates.empty());
}

TEST_CASE("standard psi-del commutation produces 2 del + 2 psi") {
    UndirectedSystem sys = buildSystem(PsiDeltaVariant::Standard);
    Configuration cfg = parseConfig("<a, b, c, d | psi(a, b) = del(c, d)>");
    NameSupply fresh;
    bool flipped = false;
    const InteractionRule* r = sys.table.find(sym::psi, sym::del, flipped);
    applyRule(*r, cfg, cfg.equations[0], fresh);
    Census c = agentCensus(cfg);
    CHECK(c.del == 2);  // on psi's side
    CHECK(c.psi == 2);  // on del's side
    CHECK(printConfig(cfg) ==
          "<a, b, c, d | a = del(n0, n1), b = del(n2, n3), "
          "c = psi(n0, n2), d = psi(n1, n3)>");
}

TEST_CASE("schemaAlt psi-del commutation produces 4 del") {
    UndirectedSystem sys = buildSystem(PsiDeltaVariant::SchemaAlt);
    CHECK(sys.variant == PsiDeltaVariant::SchemaAlt);
    CHECK(sys.table.rules.size() == 10);
    Configuration cfg = parseConfig("<a, b, c, d | del(a, b) = psi(c, d)>");
    NameSupply fresh;
    bool flipped = false;
    const InteractionRule* r = sys.table.find(sym::del, sym::psi, flipped);
    applyRule(*r, cfg, cfg.equations[0], fresh);
    Census c = agentCensus(cfg);
    CHECK(c.del == 4);
    CHECK(c.psi == 0);
}

TEST_CASE("encode: variables, vacuous binders, self-application") {
    CHECK(printConfig(enc("y")) == "<n0 | n0 = y>");

    Configuration vac = enc("\\a. \\y. y");
    CHECK(printConfig(vac) == "<n0 | n0 = lam(eps, n1), n1 = lam(y, n2), n2 = y>");
    CHECK(isoConfig(vac, parseConfig("<x | x = lam(eps, z), z = lam(y, w), w = y>")));

    Configuration selfApp = enc("\\x. x x");
    CHECK(isoConfig(selfApp,
                    parseConfig("<r | r = lam(v, b), p = lam(q, b), "
                                "v = psi(v1, v2), p = v1, q = v2>")));

    // Encoding is deterministic.
    CHECK(printConfig(enc("\\x. x x")) == printConfig(enc("\\x. x x")));
}

TEST_CASE("encode: shadowed binder names survive") {
    // Shadowing forces a rename; both abstractions still encode.
    Configuration c = enc("\\x. \\x. x");
    CHECK(validate(c).ok);
    Census census = agentCensus(c);
    CHECK(census.lam == 2);
    CHECK(census.eps == 1);  // outer binder is vacuous after freshening
}

TEST_CASE("encode rejects non-linear free variables") {
    NameSupply fresh;
    CHECK_THROWS_AS(encode(parseTerm("x x"), fresh), NonLinearFreeVariable);
    CHECK_THROWS_AS(encode(parseTerm("(\\y. y) x x"), fresh), NonLinearFreeVariable);
    try {
        NameSupply f2;
        encode(parseTerm("q q"), f2);
        FAIL("expected NonLinearFreeVariable");
    } catch (const NonLinearFreeVariable& e) {
        CHECK(e.name == "q");
    }
    // One occurrence each is fine.
    CHECK_NOTHROW(encode(parseTerm("x y"), fresh));
}

TEST_CASE("encode output is always linear") {
    for (const char* t : {"\\x. x", "\\f. \\x. f (f x)", "(\\x. x x) (\\y. y)",
                          "\\a. \\b. a b a'", "(\\x. \\y. x) p q"}) {
        CHECK(validate(enc(t)).ok);
    }
    auto corpus = loadCorpusFile(LAMNET_CORPUS_DIR "/main.lam");
    for (const auto& e : corpus) {
        NameSupply fresh;
        CHECK(validate(encode(e.term, fresh)).ok);
    }
}

TEST_CASE("encode agent census matches the source term") {
    auto corpus = loadCorpusFile(LAMNET_CORPUS_DIR "/main.lam");
    for (const auto& e : corpus) {
        NameSupply fresh;
        Census got = agentCensus(encode(e.term, fresh));
        long absApp = 0, splits = 0, vacuous = 0;
        termCensus(e.term, absApp, splits, vacuous);
        CHECK(got.lam == absApp);
        CHECK(got.psi == splits);
        CHECK(got.eps == vacuous);
        CHECK(got.del == 0);  // no duplicators at encode time
    }
}

TEST_CASE("readback decodes normal forms") {
    CHECK(printTerm(readback(parseConfig("<x | x = lam(y, z), z = y>"))) ==
          "\\v0. v0");
    CHECK(alphaEq(readback(parseConfig("<x | x = lam(eps, z), z = lam(y, w), w = y>")),
                  parseTerm("\\a. \\y. y")));
    // Free variable.
    CHECK(printTerm(readback(parseConfig("<x | x = y>"))) == "y");
    CHECK(printTerm(readback(parseConfig("<q | >"))) == "q");
}

TEST_CASE("readback passes through sharing of a bound variable") {
    // encode(\x. x x) decodes without any reduction.
    Configuration c = enc("\\x. x x");
    CHECK(alphaEq(readback(c), parseTerm("\\x. x x")));
}

TEST_CASE("readback error taxonomy") {
    CHECK_THROWS_AS(readback(parseConfig("<x | x = psi(a, b)>")), ResidualSharing);
    CHECK_THROWS_AS(readback(parseConfig("<x | x = eps>")), ResidualSharing);
    CHECK_THROWS_AS(
        readback(parseConfig("<x | x = lam(y, z), z = y, psi(a, b) = psi(c, d), "
                             "a = c, b = d>")),
        NotNormal);
    CHECK_THROWS_AS(readback(parseConfig("<r | lam(r, s) = q>")), UnboundOccurrence);
    CHECK_THROWS_AS(readback(parseConfig("<a, b | a = b>")), ReadbackError);
}

TEST_CASE("readback round trip on beta-normal corpus terms") {
    auto corpus = loadCorpusFile(LAMNET_CORPUS_DIR "/main.lam");
    for (const auto& e : corpus) {
        NormalizeResult nf = normalizeRef(e.term, 1000);
        if (nf.fuelExhausted || !structuralEq(nf.term, e.term)) continue;
        NameSupply fresh;
        CHECK(alphaEq(readback(encode(e.term, fresh)), e.term));
    }
}

TEST_CASE("full pipeline on a shared-argument term") {
    // (\f. \x. f (f x)) duplicates its argument through psi.
    NameSupply fresh;
    Configuration cfg = encode(parseTerm("(\\f. \\x. f (f x)) (\\y. y)"), fresh);
    UndirectedSystem sys = buildSystem();
    Session s(std::move(cfg), sys.table);
    REQUIRE(s.reduce({}).status == ReduceStatus::Normal);
    CHECK(alphaEq(readback(s.config()), parseTerm("\\x. x")));
}
