#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lamnet/lambda.h"

using namespace lamnet;

TEST_CASE("parseTerm handles variables, sugar, and applications") {
    TermPtr t = parseTerm("x");
    CHECK(t->kind == Term::Var);
    CHECK(t->name == "x");

    t = parseTerm("\\x y. x y");
    REQUIRE(t->kind == Term::Abs);
    CHECK(t->name == "x");
    REQUIRE(t->a->kind == Term::Abs);
    CHECK(t->a->name == "y");
    CHECK(t->a->a->kind == Term::App);

    t = parseTerm("(\\x. x x) (\\x. x x)");
    REQUIRE(t->kind == Term::App);
    CHECK(structuralEq(t->a, t->b));
    CHECK(structuralEq(t, parseTerm("(λx. x x) (λx. x x)")));

    // Application is left-associative.
    CHECK(structuralEq(parseTerm("a b c"), app(app(var("a"), var("b")), var("c"))));
    CHECK(structuralEq(parseTerm("a (b c)"), app(var("a"), app(var("b"), var("c")))));

    // Identifiers may use primes and underscores.
    CHECK(parseTerm("foo_bar'")->name == "foo_bar'");
}

TEST_CASE("parseTerm reports offsets for malformed input") {
    CHECK_THROWS_AS(parseTerm("(x"), ParseError);
    CHECK_THROWS_AS(parseTerm("\\. x"), ParseError);
    CHECK_THROWS_AS(parseTerm("x)"), ParseError);
    CHECK_THROWS_AS(parseTerm(""), ParseError);
    CHECK_THROWS_AS(parseTerm("\\x x"), ParseError);
    try {
        parseTerm("x)");
    } catch (const ParseError& e) {
        CHECK(e.offset == 1);
    }
}

TEST_CASE("printTerm emits minimal parentheses and round-trips") {
    CHECK(printTerm(var("x")) == "x");
    CHECK(printTerm(parseTerm("\\x. x x")) == "\\x. x x");
    CHECK(printTerm(parseTerm("a b c")) == "a b c");
    CHECK(printTerm(parseTerm("a (b c)")) == "a (b c)");
    CHECK(printTerm(parseTerm("(\\x.x) y")) == "(\\x. x) y");
    CHECK(printTerm(parseTerm("\\x y. x")) == "\\x. \\y. x");  // no sugar on output
    CHECK(printTerm(parseTerm("\\x. x (\\y. y)")) == "\\x. x (\\y. y)");
    // A bare lambda cannot sit as an application argument.
    CHECK_THROWS_AS(parseTerm("\\x. x \\y. y"), ParseError);

    for (const char* s : {"x", "\\x. x x", "a b c", "a (b c)", "(\\x. x) y",
                          "\\f. \\x. f (f x)", "(\\x. \\y. x) a b"}) {
        TermPtr t = parseTerm(s);
        CHECK(structuralEq(parseTerm(printTerm(t)), t));
    }
}

TEST_CASE("freeVars and freeVarsOrdered") {
    CHECK(freeVars(var("x")) == std::set<std::string>{"x"});
    CHECK(freeVars(parseTerm("\\x. x")).empty());
    CHECK(freeVars(parseTerm("\\x. x y")) == std::set<std::string>{"y"});
    CHECK(freeVars(parseTerm("(\\x. x) x")) == std::set<std::string>{"x"});

    // First-occurrence order, distinct entries.
    auto ord = freeVarsOrdered(parseTerm("b a (\\x. c a) b"));
    CHECK(ord == std::vector<std::string>{"b", "a", "c"});
}

TEST_CASE("NameSupply mints fresh machine names") {
    NameSupply s;
    CHECK(s.fresh() == "n0");
    CHECK(s.fresh() == "n1");
    s.ensureAbove("n7");
    CHECK(s.fresh() == "n8");
    s.ensureAbove("x");       // not a machine name: no effect
    s.ensureAbove("n3");      // below counter: no effect
    CHECK(s.fresh() == "n9");
}

TEST_CASE("substitute is capture-avoiding") {
    NameSupply fresh;
    CHECK(structuralEq(substitute(var("x"), "x", var("y"), fresh), var("y")));

    // Shadowing: no substitution under a binder of the same name.
    TermPtr shadow = parseTerm("\\x. x");
    CHECK(structuralEq(substitute(shadow, "x", var("y"), fresh), shadow));

    // Capture: \y. x y with x := y must rename the binder.
    TermPtr t = substitute(parseTerm("\\y. x y"), "x", var("y"), fresh);
    CHECK(alphaEq(t, parseTerm("\\z. y z")));
    CHECK_FALSE(alphaEq(t, parseTerm("\\y. y y")));

    // No capture risk: binder kept as-is.
    TermPtr u = substitute(parseTerm("\\y. x y"), "x", var("z"), fresh);
    CHECK(structuralEq(u, parseTerm("\\y. z y")));
}

TEST_CASE("substitute free-variable bound") {
    NameSupply fresh;
    TermPtr t = parseTerm("\\y. x y");
    TermPtr s = parseTerm("a b");
    TermPtr r = substitute(t, "x", s, fresh);
    auto fv = freeVars(r);
    for (const auto& v : fv) CHECK((v == "a" || v == "b"));
}

TEST_CASE("alphaEq compares modulo bound names only") {
    CHECK(alphaEq(parseTerm("\\x. x"), parseTerm("\\y. y")));
    CHECK(alphaEq(parseTerm("\\x. x y"), parseTerm("\\z. z y")));
    CHECK_FALSE(alphaEq(parseTerm("\\x. x"), parseTerm("\\x. x x")));
    CHECK_FALSE(alphaEq(var("x"), var("y")));  // free variables by name
    CHECK(alphaEq(parseTerm("\\x. \\y. x"), parseTerm("\\y. \\x. y")));
    CHECK_FALSE(alphaEq(parseTerm("\\x. \\y. x"), parseTerm("\\x. \\y. y")));
}

TEST_CASE("normalizeRef follows normal order with fuel per beta step") {
    NormalizeResult r = normalizeRef(parseTerm("(\\x. x) y"), 10);
    CHECK_FALSE(r.fuelExhausted);
    CHECK(structuralEq(r.term, var("y")));
    CHECK(r.steps == 1);

    // Church exponentiation 2 2 = 4.
    r = normalizeRef(app(church(2), church(2)), 100);
    CHECK_FALSE(r.fuelExhausted);
    CHECK(alphaEq(r.term, church(4)));

    // Omega diverges.
    r = normalizeRef(parseTerm("(\\x. x x) (\\x. x x)"), 1000);
    CHECK(r.fuelExhausted);

    // Normal order reaches the normal form where applicative order diverges.
    r = normalizeRef(parseTerm("(\\a. \\y. y) ((\\x. x x) (\\x. x x))"), 100);
    CHECK_FALSE(r.fuelExhausted);
    CHECK(alphaEq(r.term, parseTerm("\\y. y")));

    // Determinism.
    TermPtr big = app(app(church(2), church(3)), var("q"));
    CHECK(structuralEq(normalizeRef(big, 500).term, normalizeRef(big, 500).term));
}

TEST_CASE("church numerals") {
    CHECK(alphaEq(church(0), parseTerm("\\f. \\x. x")));
    CHECK(alphaEq(church(1), parseTerm("\\f. \\x. f x")));
    CHECK(alphaEq(church(3), parseTerm("\\f. \\x. f (f (f x))")));
}

TEST_CASE("alphaEq is an equivalence relation on sample terms") {
    std::vector<TermPtr> sample = {
        parseTerm("\\x. x"),       parseTerm("\\y. y"),
        parseTerm("\\x. x x"),     parseTerm("\\f. \\x. f x"),
        parseTerm("(\\x. x) y"),   var("z"),
    };
    for (const auto& a : sample) CHECK(alphaEq(a, a));
    for (const auto& a : sample)
        for (const auto& b : sample) CHECK(alphaEq(a, b) == alphaEq(b, a));
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample)
                if (alphaEq(a, b) && alphaEq(b, c)) CHECK(alphaEq(a, c));
}

TEST_CASE("corpus parsing: names, comments, reserved identifiers") {
    auto entries = parseCorpus("# a comment\n"
                               "id: \\x. x\n"
                               "\n"
                               "(\\x. x) y\n");
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].name == "id");
    CHECK(alphaEq(entries[0].term, parseTerm("\\x. x")));
    CHECK(entries[1].name == "line4");  // unnamed rows named by line number
    CHECK(alphaEq(entries[1].term, parseTerm("(\\x. x) y")));

    // n<digits> and v<digits> are reserved for machine names and readback.
    CHECK_THROWS_AS(parseCorpus("bad: \\n0. n0"), std::runtime_error);
    CHECK_THROWS_AS(parseCorpus("bad: v12"), std::runtime_error);
    CHECK_THROWS_AS(parseCorpus("bad: \\x. ("), std::runtime_error);

    // Not reserved: identifiers merely starting with n/v.
    CHECK(parseCorpus("ok: \\nx. v0x").size() == 1);
}

TEST_CASE("bundled corpus files load") {
    auto main = loadCorpusFile(LAMNET_CORPUS_DIR "/main.lam");
    CHECK(main.size() >= 30);
    auto div = loadCorpusFile(LAMNET_CORPUS_DIR "/divergent.lam");
    CHECK(div.size() >= 2);
    for (const auto& e : main) CHECK(structuralEq(parseTerm(printTerm(e.term)), e.term));
}
