#include "gdlog/errors.hpp"
#include "gdlog/printer.hpp"
#include "gdlog/stable.hpp"

#include "support/generators.hpp"
#include "support/testutil.hpp"

#include <doctest.h>

#include <random>

using namespace gdlog;
using namespace gdlog::test;

namespace {

GroundProgram groundProgram(const std::string &text) {
    return GroundProgram(groundRules(text));
}

Interpretation interp(const std::vector<std::string> &atoms) {
    std::vector<GAtomId> ids;
    for (const std::string &a : atoms) ids.push_back(atom(a));
    return canonicalInterpretation(std::move(ids));
}

} // namespace

TEST_CASE("reduct drops rules with violated negative literals") {
    // Ground coin fragment with the flip fixed to 1.
    GroundProgram prog = groundProgram(R"(
-> Coin(1).
Coin(1), not Aux1 -> Aux2.
Coin(1), not Aux2 -> Aux1.
)");
    GroundProgram r = reduct(prog, interp({"Aux1", "Coin(1)"}));
    // The Aux2 rule is removed (not Aux1 is false); the Aux1 rule is kept
    // stripped of its negative literal.
    CHECK(ruleTexts(r.rules()) ==
          std::set<std::string>{"-> Coin(1).", "Coin(1) -> Aux1."});
}

TEST_CASE("reduct of a positive program is itself") {
    GroundProgram prog = groundProgram("-> P(1).\nP(1) -> Q(1).");
    CHECK(reduct(prog, interp({"P(1)"})) == prog);
    CHECK(reduct(prog, interp({})) == prog);
}

TEST_CASE("reduct can drop every rule") {
    GroundProgram prog = groundProgram("not P(1) -> Q(1).\nnot Q(1) -> P(1).");
    CHECK(reduct(prog, interp({"P(1)", "Q(1)"})).empty());
}

TEST_CASE("is_stable_model on the ground coin program") {
    GroundProgram prog = groundProgram(R"(
-> __active__flip__0(1/2).
__active__flip__0(1/2) -> __result__flip__0(1/2, 1).
__result__flip__0(1/2, 1) -> Coin(1).
Coin(1), not Aux1 -> Aux2.
Coin(1), not Aux2 -> Aux1.
)");
    Interpretation base =
        interp({"__active__flip__0(1/2)", "__result__flip__0(1/2, 1)", "Coin(1)"});
    Interpretation withAux1 = base, withAux2 = base, withBoth = base;
    withAux1.push_back(atom("Aux1"));
    withAux2.push_back(atom("Aux2"));
    withBoth.push_back(atom("Aux1"));
    withBoth.push_back(atom("Aux2"));

    CHECK(isStableModel(prog, canonicalInterpretation(withAux1)));
    CHECK(isStableModel(prog, canonicalInterpretation(withAux2)));
    CHECK_FALSE(isStableModel(prog, canonicalInterpretation(withBoth))); // not minimal
    CHECK_FALSE(isStableModel(prog, base));                              // not a model
}

TEST_CASE("the empty interpretation is stable for the empty program") {
    GroundProgram empty;
    CHECK(isStableModel(empty, {}));
    CHECK(allStableModels(empty) == SmsSet{{}});
}

TEST_CASE("all_stable_models on coin outcomes") {
    SUBCASE("flip to 0: Fail forces no stable model") {
        GroundProgram prog = groundProgram(R"(
-> __active__flip__0(1/2).
__active__flip__0(1/2) -> __result__flip__0(1/2, 0).
__result__flip__0(1/2, 0) -> Coin(0).
Coin(0) -> Fail.
Fail, not Aux -> Aux.
)");
        CHECK(allStableModels(prog).empty());
        CHECK(bruteForceStableModels(prog).empty());
    }
    SUBCASE("fact-only program has its facts as the unique model") {
        GroundProgram prog = groundProgram("-> Pf(1).\n-> Qf(1).");
        SmsSet expected{interp({"Pf(1)", "Qf(1)"})};
        CHECK(allStableModels(prog) == expected);
        CHECK(bruteForceStableModels(prog) == expected);
    }
}

TEST_CASE("capacity errors name the cap") {
    Interner &in = Interner::instance();
    std::vector<GRuleId> rules;
    // 6 atoms in one negative 6-cycle: not locally stratified, component of 6.
    PredId p = in.internPred("capA", 1);
    for (int i = 0; i < 6; ++i) {
        GAtomId head = in.internAtom(p, {in.internNumeric(Rat(i))});
        GAtomId blocker = in.internAtom(p, {in.internNumeric(Rat((i + 1) % 6))});
        rules.push_back(in.internRule({}, {blocker}, head));
    }
    GroundProgram prog(rules);
    try {
        allStableModels(prog, SolverOptions{4});
        FAIL("expected CapacityError");
    } catch (const CapacityError &e) {
        CHECK(e.cap() == 4);
        CHECK(std::string(e.what()).find("4") != std::string::npos);
    }
    // The same program solves fine under a larger cap.
    CHECK_NOTHROW(allStableModels(prog, SolverOptions{8}));
}

TEST_CASE("splitting solver and brute force agree on random ground programs") {
    std::mt19937 rng(31);
    int stratifiedSeen = 0;
    for (int round = 0; round < 150; ++round) {
        GroundGenOptions opts;
        opts.maxAtoms = 9;
        opts.stratified = round % 2 == 0;
        GroundProgram prog = randomGroundProgram(rng, opts);
        if (isLocallyStratified(prog)) ++stratifiedSeen;
        CAPTURE(round);
        CHECK(allStableModels(prog) == bruteForceStableModels(prog));
    }
    CHECK(stratifiedSeen > 30);
}

TEST_CASE("every returned model is stable and minimal among the returned set") {
    std::mt19937 rng(37);
    for (int round = 0; round < 60; ++round) {
        GroundGenOptions opts;
        opts.maxAtoms = 8;
        GroundProgram prog = randomGroundProgram(rng, opts);
        SmsSet sms = allStableModels(prog);
        for (const Interpretation &m : sms) {
            CHECK(isStableModel(prog, m));
            for (const Interpretation &other : sms) {
                if (other == m) continue;
                bool subset = std::includes(m.begin(), m.end(), other.begin(), other.end(),
                                            atomSemanticLess);
                // Stable models are incomparable.
                CHECK_FALSE(subset);
            }
        }
    }
}

TEST_CASE("positive ground programs have exactly one stable model") {
    std::mt19937 rng(41);
    for (int round = 0; round < 100; ++round) {
        GroundGenOptions opts;
        opts.maxAtoms = 9;
        opts.positive = true;
        GroundProgram prog = randomGroundProgram(rng, opts);
        SmsSet sms = allStableModels(prog);
        REQUIRE(sms.size() == 1);
        CHECK(sms.front() == leastModelPositive(prog));
    }
}

TEST_CASE("locally stratified programs have exactly one stable model") {
    std::mt19937 rng(43);
    for (int round = 0; round < 100; ++round) {
        GroundGenOptions opts;
        opts.maxAtoms = 9;
        opts.stratified = true;
        GroundProgram prog = randomGroundProgram(rng, opts);
        if (!isLocallyStratified(prog)) continue;
        CHECK(allStableModels(prog).size() == 1);
    }
}
