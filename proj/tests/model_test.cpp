#include "gdlog/errors.hpp"
#include "gdlog/model.hpp"
#include "gdlog/printer.hpp"

#include "support/testutil.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace gdlog;
using namespace gdlog::test;

TEST_CASE("constants: unique names and total order") {
    Interner &in = Interner::instance();
    ConstId half = in.internNumeric(Rat(1, 2));
    ConstId halfAgain = in.internNumeric(ratFromString("2/4"));
    CHECK(half == halfAgain);

    ConstId one = in.internNumeric(Rat(1));
    ConstId alice = in.internSymbol("alice");
    ConstId bob = in.internSymbol("bob");
    CHECK(in.compareConst(half, one) < 0);
    CHECK(in.compareConst(one, alice) < 0); // symbols sort after numerics
    CHECK(in.compareConst(alice, bob) < 0);
    CHECK(in.compareConst(bob, alice) > 0);
    CHECK(in.compareConst(alice, alice) == 0);
}

TEST_CASE("constant order is a strict total order") {
    Interner &in = Interner::instance();
    std::vector<ConstId> values;
    for (int i = -6; i <= 6; ++i) values.push_back(in.internNumeric(Rat(i, 3)));
    values.push_back(in.internSymbol("s1"));
    values.push_back(in.internSymbol("s2"));
    values.push_back(in.internSymbol("another"));

    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        ConstId a = values[rng() % values.size()];
        ConstId b = values[rng() % values.size()];
        ConstId c = values[rng() % values.size()];
        // antisymmetry and totality
        int ab = in.compareConst(a, b);
        int ba = in.compareConst(b, a);
        CHECK(ab == -ba);
        if (ab == 0) CHECK(a == b);
        // transitivity
        if (ab <= 0 && in.compareConst(b, c) <= 0) CHECK(in.compareConst(a, c) <= 0);
    }
}

TEST_CASE("unsafe rules are rejected at construction") {
    CHECK_THROWS_AS(program("P(X), not Q(Y) -> R(X)."), InputError);       // Y only negative
    CHECK_THROWS_AS(program("P(X) -> R(Y)."), InputError);                  // Y only in head
    CHECK_THROWS_AS(program("P(X) -> R(flip<0.5>[Y])."), InputError);       // Y only in event sig
    CHECK_THROWS_AS(program("P(X) -> R(flip<Y>)."), InputError);            // Y only in params
    CHECK_NOTHROW(program("P(X), Q(Y) -> R(X, flip<0.5>[X, Y])."));
}

TEST_CASE("fuzzed rule construction never accepts an unsafe rule") {
    Interner &in = Interner::instance();
    PredId p = in.internPred("FzP", 2);
    PredId q = in.internPred("FzQ", 1);
    std::vector<VarId> vars;
    for (int i = 0; i < 4; ++i) vars.push_back(in.internVar("FzV" + std::to_string(i)));

    std::mt19937 rng(11);
    for (int round = 0; round < 300; ++round) {
        auto randomVar = [&]() { return vars[rng() % vars.size()]; };
        GRule rule;
        if (rng() % 2) rule.pos.push_back(Atom{p, {Term{randomVar()}, Term{randomVar()}}});
        if (rng() % 2) rule.neg.push_back(Atom{q, {Term{randomVar()}}});
        rule.head = HeadAtom{q, {HeadArg{Term{randomVar()}}}};

        std::set<std::uint32_t> posVars;
        for (const Atom &a : rule.pos)
            for (const Term &t : a.args)
                if (isVar(t)) posVars.insert(std::get<VarId>(t).value);
        bool safe = true;
        for (const Atom &a : rule.neg)
            for (const Term &t : a.args)
                if (isVar(t) && !posVars.count(std::get<VarId>(t).value)) safe = false;
        if (!posVars.count(std::get<VarId>(std::get<Term>(rule.head->args[0])).value)) safe = false;

        if (safe)
            CHECK_NOTHROW(validateRule(rule));
        else
            CHECK_THROWS_AS(validateRule(rule), InputError);
    }
}

TEST_CASE("attach_database builds Pi[D] with prepended fact rules") {
    GProgram network = programWithDb(kNetworkProgram, kNetworkDatabase);
    // 10 facts (3 Router, 6 Connected, 1 Infected) + 3 program rules + the
    // Fail/Aux rule appended by desugaring.
    CHECK(network.rules.size() == 10 + 3 + 1);
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(network.rules[i].pos.empty());
        CHECK(network.rules[i].neg.empty());
    }
    int routers = 0, connections = 0, infected = 0;
    Interner &in = Interner::instance();
    for (std::size_t i = 0; i < 10; ++i) {
        const std::string &name = in.pred(network.rules[i].head->pred).name;
        if (name == "Router") ++routers;
        if (name == "Connected") ++connections;
        if (name == "Infected") ++infected;
    }
    CHECK(routers == 3);
    CHECK(connections == 6);
    CHECK(infected == 1);
}

TEST_CASE("attach_database with empty database leaves the program unchanged") {
    GProgram coin = program(kCoinProgram);
    GProgram attached = attachDatabase(coin, Database{});
    CHECK(attached.rules == coin.rules);
}

TEST_CASE("attach_database rejects arity mismatches") {
    GProgram network = program(kNetworkProgram);
    Database bad = parseDatabase("Router(1, 2).");
    CHECK_THROWS_AS(attachDatabase(network, bad), InputError);
}

TEST_CASE("edb/idb split: predicates heading no rule are extensional") {
    Interner &in = Interner::instance();
    auto names = [&](const std::vector<PredId> &preds) {
        std::vector<std::string> out;
        for (PredId p : preds) out.push_back(in.pred(p).name);
        return out;
    };

    SUBCASE("network") {
        SchemaSplit split = edbIdbSplit(program(kNetworkProgram));
        CHECK(names(split.edb) == std::vector<std::string>{"Connected", "Router"});
        // Infected heads a rule, so it is intensional even though it also
        // occurs in the database.
        CHECK(names(split.idb) == std::vector<std::string>{"Aux", "Fail", "Infected", "Uninfected"});
    }
    SUBCASE("no rules") {
        GProgram empty;
        SchemaSplit split = edbIdbSplit(empty);
        CHECK(split.edb.empty());
        CHECK(split.idb.empty());
    }
    SUBCASE("coin: everything is intensional") {
        SchemaSplit split = edbIdbSplit(program(kCoinProgram));
        CHECK(split.edb.empty());
        CHECK(names(split.idb) ==
              std::vector<std::string>{"Aux", "Aux1", "Aux2", "Coin", "Fail"});
    }
}

TEST_CASE("desugar_bot rewrites false heads and appends the Fail/Aux rule") {
    GProgram two = program(R"(
P(X), Q(X) -> false.
R(X) -> false.
S(X) -> T(X).
)");
    Interner &in = Interner::instance();
    REQUIRE(two.failPred.has_value());
    REQUIRE(two.auxPred.has_value());
    CHECK(in.pred(*two.failPred).name == "Fail");
    CHECK(in.pred(*two.auxPred).name == "Aux");

    // Both false-heads rewritten to the same Fail; one Fail/Aux rule appended.
    int failHeads = 0, auxRules = 0;
    for (const GRule &r : two.rules) {
        REQUIRE(r.head.has_value());
        if (r.head->pred == *two.failPred) ++failHeads;
        if (r.head->pred == *two.auxPred) ++auxRules;
    }
    CHECK(failHeads == 2);
    CHECK(auxRules == 1);
    CHECK(two.rules.size() == 4);

    GRule auxRule = two.rules.back();
    CHECK(printRule(auxRule) == "Fail, not Aux -> Aux.");
}

TEST_CASE("desugar_bot avoids user predicate names") {
    GProgram prog = program(R"(
Fail(X) -> Aux(X).
P(X) -> false.
)");
    Interner &in = Interner::instance();
    CHECK(in.pred(*prog.failPred).name == "Fail2");
    CHECK(in.pred(*prog.auxPred).name == "Aux2");
}

TEST_CASE("desugar_bot leaves programs without false unchanged") {
    GProgram coinLike = program("P(X) -> Q(X).");
    CHECK_FALSE(coinLike.failPred.has_value());
    CHECK(coinLike.rules.size() == 1);
}

TEST_CASE("heads of a union is the union of heads") {
    std::mt19937 rng(13);
    Interner &in = Interner::instance();
    PredId p = in.internPred("HU", 1);
    auto randomRule = [&]() {
        GAtomId head = in.internAtom(p, {in.internNumeric(Rat(static_cast<long>(rng() % 6)))});
        std::vector<GAtomId> pos;
        if (rng() % 2) pos.push_back(in.internAtom(p, {in.internNumeric(Rat(static_cast<long>(rng() % 6)))}));
        return in.internRule(std::move(pos), {}, head);
    };
    for (int round = 0; round < 50; ++round) {
        std::vector<GRuleId> a, b;
        for (int i = 0; i < 5; ++i) a.push_back(randomRule());
        for (int i = 0; i < 5; ++i) b.push_back(randomRule());
        GroundProgram pa(a), pb(b);
        auto unionHeads = pa.unionWith(pb).heads();
        std::vector<GAtomId> merged = pa.heads();
        for (GAtomId h : pb.heads()) merged.push_back(h);
        CHECK(unionHeads == sortedAtomSet(std::move(merged)));
    }
}
