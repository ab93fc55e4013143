#include "gdlog/errors.hpp"
#include "gdlog/parser.hpp"
#include "gdlog/printer.hpp"

#include "support/testutil.hpp"

#include <doctest.h>

#include <random>

using namespace gdlog;
using namespace gdlog::test;

TEST_CASE("parsing the network rule") {
    GProgram prog = program("Infected(X, 1), Connected(X, Y) -> Infected(Y, flip<0.1>[X, Y]).");
    REQUIRE(prog.rules.size() == 1);
    const GRule &r = prog.rules[0];
    CHECK(r.pos.size() == 2);
    CHECK(r.neg.empty());
    REQUIRE(r.head.has_value());
    REQUIRE(r.head->args.size() == 2);
    const DeltaTerm &d = std::get<DeltaTerm>(r.head->args[1]);
    CHECK(d.dist == "flip");
    REQUIRE(d.params.size() == 1);
    CHECK(std::get<ConstId>(d.params[0]) == Interner::instance().internNumeric(Rat(1, 10)));
    CHECK(d.sig.size() == 2);
}

TEST_CASE("empty input parses to the empty program") {
    GProgram prog = program("   % just a comment\n");
    CHECK(prog.rules.empty());
}

TEST_CASE("negative literals") {
    GProgram prog = program("Coin(1), not Aux1 -> Aux2.");
    REQUIRE(prog.rules.size() == 1);
    CHECK(prog.rules[0].pos.size() == 1);
    CHECK(prog.rules[0].neg.size() == 1);
    CHECK(printRule(prog.rules[0]) == "Coin(1), not Aux1 -> Aux2.");
}

TEST_CASE("parse errors carry a source span") {
    try {
        program("P(X) ->\nQ(X,.");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        REQUIRE(e.span().has_value());
        CHECK(e.span()->line == 2);
        CHECK(e.span()->colStart >= 1);
    }
}

TEST_CASE("parser rejects bad programs") {
    CHECK_THROWS_AS(program("P(X) -> Q(flop<0.5>)."), ParseError);      // unknown distribution
    CHECK_THROWS_AS(program("P(flip<0.5>) -> Q(1)."), ParseError);      // delta term in body
    CHECK_THROWS_AS(program("__active__flip__0 -> Q(1)."), ParseError); // reserved name
    CHECK_THROWS_AS(program("P(X) -> Q(flip<0.5, 0.5>)."), ParseError); // dimension mismatch
    CHECK_THROWS_AS(program("P(X) -> "), ParseError);
}

TEST_CASE("predicates are identified by name and arity") {
    GProgram prog = program("Pna(X, 1) -> Pna(X).");
    REQUIRE(prog.rules.size() == 1);
    CHECK(prog.rules[0].pos[0].pred != prog.rules[0].head->pred);
}

TEST_CASE("databases parse ground facts only") {
    Database db = parseDatabase("Router(1). Router(2).\nEdge(1, 2).");
    CHECK(db.facts.size() == 3);
    CHECK_THROWS_AS(parseDatabase("Router(X)."), ParseError);
    CHECK(parseDatabase("").facts.empty());
}

TEST_CASE("constants: rationals, decimals, symbols, quoted") {
    Database db = parseDatabase(R"(P(1/2). P(0.5). P(x). P("Hello World").)");
    Interner &in = Interner::instance();
    CHECK(db.facts[0] == db.facts[1]); // 1/2 and 0.5 are the same constant
    CHECK(in.atom(db.facts[2]).args[0] == in.internSymbol("x"));
    CHECK(in.atom(db.facts[3]).args[0] == in.internSymbol("Hello World"));
}

TEST_CASE("question-mark variables") {
    GProgram a = program("P(?x) -> Q(?x).");
    GProgram b = program("P(V) -> Q(V).");
    CHECK(a.rules.size() == b.rules.size());
}

TEST_CASE("parse then print round-trips generated programs") {
    std::mt19937 rng(23);
    const std::vector<std::string> preds = {"Rta", "Rtb", "Rtc"};
    const std::vector<std::string> vars = {"X", "Y"};
    const std::vector<std::string> consts = {"1", "2/3", "sym"};

    for (int round = 0; round < 60; ++round) {
        // Build a random safe rule as text.
        std::string body, head;
        std::vector<std::string> bodyVars;
        int nPos = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < nPos; ++i) {
            std::string v = vars[rng() % vars.size()];
            bodyVars.push_back(v);
            body += (i ? ", " : "") + preds[rng() % preds.size()] + "(" + v + ")";
        }
        if (rng() % 2) body += ", not " + preds[rng() % preds.size()] + "(" + bodyVars[0] + ")";
        if (rng() % 2) {
            head = preds[rng() % preds.size()] + "(" + bodyVars[0] + ")";
        } else {
            head = "Rh(" + bodyVars[0] + ", flip<1/4>[" + bodyVars[0] + ", " +
                   consts[rng() % consts.size()] + "])";
        }
        std::string text = body + " -> " + head + ".";

        GProgram once = program(text);
        GProgram twice = program(printProgram(once));
        REQUIRE(once.rules.size() == twice.rules.size());
        CHECK(once.rules == twice.rules);
    }
}

TEST_CASE("ground rule files") {
    auto rules = groundRules("P(1) -> Q(1).\n-> P(1).\nQ(1), not R(1) -> S(1).");
    CHECK(rules.size() == 3);
    // Reserved names are allowed here (choices files use them).
    auto atr = groundRules("__active__flip__0(1/2) -> __result__flip__0(1/2, 0).");
    CHECK(atr.size() == 1);
}
