#pragma once

#include "gdlog/dist.hpp"
#include "gdlog/model.hpp"
#include "gdlog/parser.hpp"
#include "gdlog/printer.hpp"

#include <set>
#include <string>
#include <vector>

namespace gdlog::test {

inline DistributionRegistry &builtins() {
    static DistributionRegistry registry = DistributionRegistry::withBuiltins();
    return registry;
}

inline GProgram program(const std::string &text) { return parseProgram(text, builtins()); }

inline GProgram programWithDb(const std::string &programText, const std::string &dbText) {
    return attachDatabase(program(programText), parseDatabase(dbText));
}

inline GAtomId atom(const std::string &text) { return parseGroundAtom(text); }

inline GRuleId groundRule(const std::string &text) {
    return parseGroundRules(text).at(0);
}

inline std::vector<GRuleId> groundRules(const std::string &text) { return parseGroundRules(text); }

inline std::set<std::string> ruleTexts(const std::vector<GRuleId> &rules) {
    std::set<std::string> out;
    for (GRuleId r : rules) out.insert(printGroundRule(r));
    return out;
}

inline std::set<std::string> tgdTexts(const std::vector<TGD> &tgds) {
    std::set<std::string> out;
    for (const TGD &t : tgds) out.insert(printTGD(t));
    return out;
}

// The three-router fully connected network, first router infected.
inline const char *kNetworkProgram = R"(
Infected(X, 1), Connected(X, Y) -> Infected(Y, flip<0.1>[X, Y]).
Router(X), not Infected(X, 1) -> Uninfected(X).
Uninfected(X), Uninfected(Y), Connected(X, Y) -> false.
)";

inline const char *kNetworkDatabase = R"(
Router(1). Router(2). Router(3).
Infected(1, 1).
Connected(1, 2). Connected(1, 3).
Connected(2, 1). Connected(2, 3).
Connected(3, 1). Connected(3, 2).
)";

// Flipping a fair coin through stable negation.
inline const char *kCoinProgram = R"(
-> Coin(flip<0.5>).
Coin(0) -> false.
Coin(1), not Aux1 -> Aux2.
Coin(1), not Aux2 -> Aux1.
)";

// Dimes are tossed; quarters only when no dime shows tail.
inline const char *kDimesProgram = R"(
Dime(X) -> DimeTail(X, flip<0.5>[X]).
DimeTail(X, 1) -> SomeDimeTail.
Quarter(X), not SomeDimeTail -> QuarterTail(X, flip<0.5>[X]).
)";

inline const char *kDimesDatabase = R"(
Dime(1). Dime(2). Quarter(3).
)";

} // namespace gdlog::test
