#pragma once

#include "gdlog/dist.hpp"
#include "gdlog/errors.hpp"
#include "gdlog/model.hpp"

#include <string>
#include <vector>

namespace gdlog {

// Surface syntax (EBNF):
//   program    := (rule)*
//   rule       := body? "->" head "."
//   body       := literal ("," literal)*
//   literal    := "not"? atom
//   head       := atom-with-delta-terms | "false"
//   atom       := IDENT ("(" term ("," term)* ")")?
//   delta-term := IDENT "<" term ("," term)* ">" ("[" term ("," term)* "]")?
// Variables start uppercase or with `?`; constants are rationals, decimals,
// and quoted or lowercase symbols. `%` starts a line comment. Predicate names
// beginning with `__` are reserved for engine-generated predicates.

/// Parses a program, validates safety and distribution usage, and desugars
/// `false` heads. Throws ParseError (with a span) or InputError.
GProgram parseProgram(const std::string &text, const DistributionRegistry &registry,
                      const std::string &file = "<input>");

/// Parses a database: one ground fact per `.`-terminated statement.
Database parseDatabase(const std::string &text, const std::string &file = "<input>");

/// Parses a ground existential-free TGD program (used for `--choices` files
/// and `gdlog sms --ground`). Reserved `__...` predicate names are allowed.
std::vector<GRuleId> parseGroundRules(const std::string &text, const std::string &file = "<input>");

/// Parses a single ground atom, e.g. a query argument.
GAtomId parseGroundAtom(const std::string &text, const std::string &file = "<query>");

} // namespace gdlog
