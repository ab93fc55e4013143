#pragma once

#include "gdlog/interner.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gdlog {

/// A term is a constant or a variable.
using Term = std::variant<ConstId, VarId>;

inline bool isVar(const Term &t) { return std::holds_alternative<VarId>(t); }
inline bool isConst(const Term &t) { return std::holds_alternative<ConstId>(t); }

struct Atom {
    PredId pred;
    std::vector<Term> args;

    bool ground() const;
    friend bool operator==(const Atom &, const Atom &) = default;
};

/// delta<p1,..,pk>[q1,..,qn]: a sample from the parameterized distribution
/// `dist`, one independent sample per event signature.
struct DeltaTerm {
    std::string dist;
    std::vector<Term> params;
    std::vector<Term> sig;

    friend bool operator==(const DeltaTerm &, const DeltaTerm &) = default;
};

using HeadArg = std::variant<Term, DeltaTerm>;

struct HeadAtom {
    PredId pred;
    std::vector<HeadArg> args;

    bool hasDelta() const;
    friend bool operator==(const HeadAtom &, const HeadAtom &) = default;
};

/// A generative rule. A missing head is the surface form `false`; it only
/// exists between parsing and desugaring.
struct GRule {
    std::vector<Atom> pos;
    std::vector<Atom> neg;
    std::optional<HeadAtom> head;

    friend bool operator==(const GRule &, const GRule &) = default;
};

/// Checks rule safety: every variable in the negative body and in the head
/// (including distribution parameters and event signatures) occurs in some
/// positive body atom. Delta terms may appear only in head argument position.
/// Throws InputError on violation.
void validateRule(const GRule &rule);

struct GProgram {
    std::vector<GRule> rules;
    // Predicates introduced by desugaring `false` heads; bookkeeping for
    // user-facing projection.
    std::optional<PredId> failPred;
    std::optional<PredId> auxPred;
};

struct Database {
    std::vector<GAtomId> facts;
};

/// Non-ground TGD with stable negation. In this engine every head is a single
/// atom, and a TGD has at most one existential variable (the AtR shape).
struct TGD {
    std::vector<Atom> pos;
    std::vector<Atom> neg;
    std::vector<Atom> head;
    std::vector<VarId> existVars;
};

/// A set of interned ground rules with canonical (semantic) ordering.
class GroundProgram {
  public:
    GroundProgram() = default;
    explicit GroundProgram(std::vector<GRuleId> rules);

    const std::vector<GRuleId> &rules() const { return rules_; }
    bool contains(GRuleId id) const;
    bool subsetOf(const GroundProgram &other) const;
    std::size_t size() const { return rules_.size(); }
    bool empty() const { return rules_.empty(); }

    GroundProgram unionWith(const GroundProgram &other) const;
    GroundProgram minus(const GroundProgram &other) const;

    /// heads(Sigma): the set of head atoms, sorted.
    std::vector<GAtomId> heads() const;

    friend bool operator==(const GroundProgram &, const GroundProgram &) = default;

  private:
    std::vector<GRuleId> rules_; // sorted by semantic rule order, unique
};

// --- operations on programs ---

/// Pi[D] = { -> alpha | alpha in D } u Pi, one body-free rule per fact,
/// prepended. Facts must use predicates of the program (or fresh extensional
/// ones) at the right arity.
GProgram attachDatabase(const GProgram &program, const Database &db);

struct SchemaSplit {
    std::vector<PredId> edb; // predicates heading no rule, sorted by name
    std::vector<PredId> idb;
};

SchemaSplit edbIdbSplit(const GProgram &program);

/// Replaces every `false` head with a fresh 0-ary Fail predicate and appends
/// the rule `Fail, not Aux -> Aux`. Programs without `false` are returned
/// unchanged.
GProgram desugarBot(const GProgram &program);

/// All predicates occurring in the program, sorted by name.
std::vector<PredId> collectPredicates(const GProgram &program);

std::vector<VarId> ruleVariables(const GRule &rule);

// --- small helpers used across modules ---

std::vector<GAtomId> sortedAtomSet(std::vector<GAtomId> atoms);

/// View of a ground rule as a TGD (all args constant).
TGD tgdOfGroundRule(GRuleId id);

} // namespace gdlog
