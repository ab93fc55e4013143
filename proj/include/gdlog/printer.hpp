#pragma once

#include "gdlog/model.hpp"

#include <string>

namespace gdlog {

// Text forms re-parseable by the parser module (delta terms and rules),
// also used as canonical keys for structural TGD deduplication.

std::string printConst(ConstId id);
std::string printTerm(const Term &term);
std::string printAtom(const Atom &atom);
std::string printHeadAtom(const HeadAtom &atom);
std::string printRule(const GRule &rule);
std::string printProgram(const GProgram &program);

std::string printGroundAtom(GAtomId id);
std::string printGroundRule(GRuleId id);

/// TGDs print like rules; an existential head variable is marked with a
/// leading `?` and an `exists` prefix, e.g.
///   `A(X) -> exists ?Z1 R(X, ?Z1).`
std::string printTGD(const TGD &tgd);

} // namespace gdlog
