#include <doctest.h>

#include <fstream>
#include <sstream>

#include "lamnet/directed.h"
#include "lamnet/engine.h"

using namespace lamnet;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Configuration gamma(const char* term) {
    NameSupply fresh;
    return encodeGamma(parseTerm(term), fresh);
}

}  // namespace

TEST_CASE("directed table is ordered with nine rules") {
    DirectedSystem sys = buildDirectedSystem();
    CHECK(sys.table.ordered);
    CHECK(sys.table.rules.size() == 9);

    // Every unstarred><starred pair is present, in either orientation.
    const Symbol* plain[] = {sym::lam, sym::del, sym::psi};
    const Symbol* starred[] = {sym::lamS, sym::delS, sym::psiS};
    for (const Symbol* a : plain)
        for (const Symbol* b : starred) {
            bool flipped = false;
            const InteractionRule* r = sys.table.find(a, b, flipped);
            CHECK(r != nullptr);
            CHECK_FALSE(flipped);
            const InteractionRule* rf = sys.table.find(b, a, flipped);
            CHECK(rf == r);
            CHECK(flipped);
        }

    // Same-parity pairs have no rule.
    bool flipped = false;
    CHECK(sys.table.find(sym::lam, sym::lam, flipped) == nullptr);
    CHECK(sys.table.find(sym::lamS, sym::delS, flipped) == nullptr);
    CHECK(sys.table.find(sym::psi, sym::del, flipped) == nullptr);
}

TEST_CASE("directed annihilation wires aux ports across") {
    DirectedSystem sys = buildDirectedSystem();
    Configuration cfg = parseConfig("<a, b, c, d | lam(a, b) = lam*(c, d)>");
    NameSupply fresh;
    bool flipped = false;
    const InteractionRule* r = sys.table.find(sym::lam, sym::lamS, flipped);
    applyRule(*r, cfg, cfg.equations[0], fresh);
    CHECK(printConfig(cfg) == "<a, b, c, d | a = n0, b = n1, c = n0, d = n1>");
}

TEST_CASE("directed commutation: psi meets del*") {
    DirectedSystem sys = buildDirectedSystem();
    Configuration cfg = parseConfig("<a, b, c, d | psi(a, b) = del*(c, d)>");
    NameSupply fresh;
    bool flipped = false;
    const InteractionRule* r = sys.table.find(sym::psi, sym::delS, flipped);
    applyRule(*r, cfg, cfg.equations[0], fresh);
    CHECK(printConfig(cfg) ==
          "<a, b, c, d | a = del*(n0, n1), b = del*(n2, n3), "
          "c = psi(n0, n2), d = psi(n1, n3)>");
}

TEST_CASE("encodeGamma pins applications to lam* and sharing to psi*") {
    CHECK(printConfig(gamma("(\\y. y) (\\z. z)")) ==
          "<n0 | n1 = lam*(n2, n0), n1 = lam(y, n3), n3 = y, "
          "n2 = lam(z, n4), n4 = z>");
    CHECK(printConfig(gamma("\\y. y")) == "<n0 | n0 = lam(y, n1), n1 = y>");

    // Sharing goes through psi*.
    Configuration shared = gamma("\\x. x x");
    bool sawPsiStar = false;
    for (const Equation& e : shared.equations)
        for (const Node* n : {e.lhs, e.rhs})
            if (!n->isName() && n->sym == sym::psiS) sawPsiStar = true;
    CHECK(sawPsiStar);
    CHECK(validate(shared).ok);
}

TEST_CASE("encodeGammaStar is the star image of encodeGamma") {
    for (const char* t : {"\\y. y", "(\\y. y) (\\z. z)", "\\x. x x",
                          "\\f. \\x. f (f x)", "(\\x. \\y. x) p q"}) {
        NameSupply f1, f2;
        Configuration g = encodeGamma(parseTerm(t), f1);
        Configuration gs = encodeGammaStar(parseTerm(t), f2);
        CHECK(printConfig(dual(g)) == printConfig(gs));
    }
}

TEST_CASE("dual swaps stars and is an involution") {
    Configuration g = gamma("\\y. y");
    CHECK(printConfig(dual(g)) == "<n0 | n0 = lam*(y, n1), n1 = y>");
    CHECK(printConfig(dual(dual(g))) == printConfig(g));

    // Symbols outside the directed six have no dual.
    Configuration withEps = parseConfig("<x | x = eps>");
    CHECK_THROWS_AS(dual(withEps), ForeignSymbol);
}

TEST_CASE("derivePolarity finds the frozen assignment") {
    DirectedSystem sys = buildDirectedSystem();
    NameSupply fresh;
    Configuration witness = encodeGamma(parseTerm("\\y. y"), fresh);
    auto a = derivePolarity(sys, {&witness});
    REQUIRE(a.has_value());
    CHECK(a->dumpText() == slurp(LAMNET_GOLDEN_DIR "/polarity.txt"));

    // Starred symbols carry the negated signs of their duals, port by port.
    const Symbol* pairs[][2] = {
        {sym::lam, sym::lamS}, {sym::del, sym::delS}, {sym::psi, sym::psiS}};
    for (auto& pr : pairs)
        for (int p = 0; p < 3; ++p) CHECK(a->at(pr[0], p) == -a->at(pr[1], p));

    // Spot values, matching the golden file.
    CHECK(a->at(sym::lam, 0) == -1);
    CHECK(a->at(sym::lam, 1) == -1);
    CHECK(a->at(sym::lam, 2) == +1);
    CHECK(a->at(sym::lamS, 0) == +1);
}

TEST_CASE("derivePolarity rejects corrupted tables") {
    NameSupply fresh;
    Configuration witness = encodeGamma(parseTerm("\\y. y"), fresh);

    // Swapping the lam><lam* annihilation templates breaks solvability.
    DirectedSystem bad = buildDirectedSystem();
    std::swap(bad.table.rules[0].alphaTemplates[0], bad.table.rules[0].alphaTemplates[1]);
    CHECK_FALSE(derivePolarity(bad, {&witness}).has_value());

    // So does swapping the star side of the del commutation under lam*.
    DirectedSystem bad2 = buildDirectedSystem();
    std::swap(bad2.table.rules[5].betaTemplates[0], bad2.table.rules[5].betaTemplates[1]);
    CHECK_FALSE(derivePolarity(bad2, {&witness}).has_value());

    // Not every corruption is caught: del annihilation is aux-symmetric.
    DirectedSystem shrug = buildDirectedSystem();
    std::swap(shrug.table.rules[1].alphaTemplates[0], shrug.table.rules[1].alphaTemplates[1]);
    CHECK(derivePolarity(shrug, {&witness}).has_value());
}

TEST_CASE("checkPolarity accepts encodings and flags bad wires") {
    DirectedSystem sys = buildDirectedSystem();
    NameSupply fresh;
    Configuration witness = encodeGamma(parseTerm("\\y. y"), fresh);
    auto a = derivePolarity(sys, {&witness});
    REQUIRE(a.has_value());

    NameSupply f2;
    Configuration two = encodeGamma(church(2), f2);
    CHECK(checkPolarity(two, *a).ok);
    NameSupply f3;
    Configuration twoStar = encodeGammaStar(church(2), f3);
    CHECK(checkPolarity(twoStar, *a).ok);

    // Two lam principals joined by an equation: same sign on both ends.
    Configuration badWire = parseConfig("<x | lam(a, b) = lam(c, d)>");
    PolarityCheck pc = checkPolarity(badWire, *a);
    CHECK_FALSE(pc.ok);
    CHECK(pc.wire == "#eq0");
}

TEST_CASE("polarity holds at every step of a directed reduction") {
    DirectedSystem sys = buildDirectedSystem();
    NameSupply fresh;
    Configuration witness = encodeGamma(parseTerm("\\y. y"), fresh);
    auto a = derivePolarity(sys, {&witness});
    REQUIRE(a.has_value());

    NameSupply f2;
    Configuration cfg = encodeGamma(parseTerm("(\\f. \\x. f (f x)) (\\y. y) q"), f2);
    Session s(std::move(cfg), sys.table);
    CHECK(checkPolarity(s.config(), *a).ok);
    long checked = 0;
    ReduceOptions opts;
    opts.hook = [&](const Configuration& c) {
        checked++;
        PolarityCheck pc = checkPolarity(c, *a);
        CHECK(pc.ok);
        if (!pc.ok) FAIL("polarity violated at " << pc.wire << " after step " << checked);
    };
    CHECK(s.reduce(opts).status == ReduceStatus::Normal);
    CHECK(checked > 0);
}

TEST_CASE("readbackDirected decodes gamma and gamma-star forms") {
    CHECK(alphaEq(readbackDirected(gamma("\\y. y"), DirectedFlavor::Gamma),
                  parseTerm("\\y. y")));

    // Vacuous binders dangle as free ports and still decode.
    CHECK(alphaEq(readbackDirected(gamma("\\a. \\y. y"), DirectedFlavor::Gamma),
                  parseTerm("\\a. \\y. y")));

    // Reduce a redex, then decode.
    DirectedSystem sys = buildDirectedSystem();
    Session s(gamma("(\\y. y) (\\z. z)"), sys.table);
    REQUIRE(s.reduce({}).status == ReduceStatus::Normal);
    CHECK(alphaEq(readbackDirected(s.config(), DirectedFlavor::Gamma),
                  parseTerm("\\z. z")));

    // The dual configuration decodes under the star flavor to the same term.
    NameSupply f1, f2;
    TermPtr m = parseTerm("\\f. \\x. f (f x)");
    Configuration g = encodeGamma(m, f1);
    CHECK(alphaEq(readbackDirected(dual(g), DirectedFlavor::GammaStar), m));
}

TEST_CASE("directed encodings reject repeated free variables") {
    NameSupply fresh;
    CHECK_THROWS_AS(encodeGamma(parseTerm("x x"), fresh), NonLinearFreeVariable);
    CHECK_THROWS_AS(encodeGammaStar(parseTerm("x x"), fresh), NonLinearFreeVariable);
}
