#pragma once

#include "gdlog/model.hpp"

#include <vector>

namespace gdlog {

/// A finite set of ground atoms in canonical (ascending) order.
using Interpretation = std::vector<GAtomId>;

/// A canonical set of interpretations: models sorted, duplicate-free.
using SmsSet = std::vector<Interpretation>;

struct SolverOptions {
    // Universe cap for brute-force enumeration; the splitting solver applies
    // it to each strongly connected component instead.
    std::size_t bruteForceCap = 18;
};

Interpretation canonicalInterpretation(std::vector<GAtomId> atoms);
SmsSet canonicalSms(SmsSet models);

/// Gelfond-Lifschitz reduct: drops rules with a negative literal in I and
/// strips negative literals from the rest.
GroundProgram reduct(const GroundProgram &program, const Interpretation &interp);

/// Least model of a positive ground program (fixpoint from facts).
Interpretation leastModelPositive(const GroundProgram &program);

bool isModel(const GroundProgram &program, const Interpretation &interp);

/// I is stable iff I models the program and I is the least model of the
/// reduct w.r.t. I.
bool isStableModel(const GroundProgram &program, const Interpretation &interp);

/// Exhaustive check of every subset of the universe (atoms occurring in the
/// program) that contains all fact heads. Throws CapacityError when the
/// universe exceeds the cap.
SmsSet bruteForceStableModels(const GroundProgram &program, const SolverOptions &opts = {});

/// Stable models via splitting along the atom dependency graph: components
/// are solved in topological order, branching over each component's stable
/// models; locally stratified programs take the stratum-by-stratum fast path
/// with no enumeration. Throws CapacityError when a component exceeds the cap.
SmsSet allStableModels(const GroundProgram &program, const SolverOptions &opts = {});

/// True iff no cycle of the atom-level dependency graph goes through a
/// negative edge.
bool isLocallyStratified(const GroundProgram &program);

} // namespace gdlog
