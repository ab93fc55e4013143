#pragma once

#include "gdlog/chase.hpp"
#include "gdlog/stable.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gdlog {

/// A possible outcome under the reference semantics for positive programs: a
/// minimal model of the direct (Active-free) translation whose Result choices
/// all have positive probability, with the product of those probabilities.
struct BckovOutcome {
    Interpretation model;
    Rat prob;
};

struct BckovResult {
    std::vector<BckovOutcome> outcomes;
    bool truncated = false;
};

/// Enumerates the outcomes of a positive program (with database attached) by
/// branching over undetermined Result atoms; each complete branch's fixpoint
/// is one minimal model.
BckovResult bckovOutcomes(const GProgram &program, const DistributionRegistry &registry,
                          const ChaseBudget &budget = {});

enum class IsomorphismVerdict { Isomorphic, NotIsomorphic, Inconclusive };

struct IsomorphismRow {
    Interpretation model; // simple-grounder stable model modulo Active
    Rat probSimple;
    std::optional<Rat> probBckov; // empty when unmatched
};

struct IsomorphismReport {
    IsomorphismVerdict verdict = IsomorphismVerdict::Inconclusive;
    std::vector<IsomorphismRow> rows;
    std::size_t simpleOutcomes = 0;
    std::size_t bckovOutcomes = 0;
    std::string detail;
};

/// Checks the outcome bijection between the simple-grounder semantics and the
/// reference semantics on a positive program: each simple outcome's unique
/// stable model modulo Active equals exactly one reference outcome, with
/// equal probability. Truncation in either enumeration gives Inconclusive.
IsomorphismReport checkIsomorphism(const GProgram &program, const DistributionRegistry &registry,
                                   const ChaseBudget &budget = {},
                                   const SolverOptions &solverOpts = {});

} // namespace gdlog
