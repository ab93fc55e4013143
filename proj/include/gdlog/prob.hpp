#pragma once

#include "gdlog/chase.hpp"
#include "gdlog/stable.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gdlog {

/// One finite possible outcome: the choice set, its grounding union, the
/// product of its Result-atom probabilities, and its stable models.
struct OutcomeRecord {
    ChoiceSet choices;
    GroundProgram outcome; // choices u G(choices)
    Rat prob;
    SmsSet sms;
};

/// A maximal set of finite possible outcomes sharing one set of stable models.
struct OutcomeClass {
    SmsSet key; // canonical (projected when projection is active)
    Rat mass = Rat(0);
    std::vector<std::size_t> outcomeIndices;
};

struct OutcomeDistribution {
    std::vector<OutcomeRecord> outcomes;
    std::vector<OutcomeClass> classes; // sorted by key for determinism
    Rat finiteMass = Rat(0);
    Rat truncatedMass = Rat(0);
    // The infinity/error event mass, exact when truncatedMass is zero:
    // lo = 1 - finiteMass - truncatedMass, hi = 1 - finiteMass.
    Rat infinityLo = Rat(0);
    Rat infinityHi = Rat(0);
};

/// Predicates kept when projecting models for reporting: strips the
/// translation's Active/Result bookkeeping and desugaring's Fail/Aux.
struct Projection {
    std::set<std::uint32_t> keepPreds;

    static Projection userPredicates(const GProgram &program, const TranslationResult &tr);
    Interpretation apply(const Interpretation &interp) const;
    SmsSet apply(const SmsSet &sms) const;
};

/// Groups the complete chase paths into sms-classes with exact rational
/// masses. With a projection, class keys are computed on projected models.
OutcomeDistribution buildDistribution(const ExploreResult &explored, const GrounderHandle &handle,
                                      const SolverOptions &solverOpts = {},
                                      const std::optional<Projection> &projection = std::nullopt);

struct Query {
    enum class Kind { HasStableModel, SmsClass, AtomBrave, AtomCautious } kind;
    std::optional<GAtomId> atom; // brave/cautious
    std::optional<SmsSet> cls;   // sms-class
};

/// Exact mass interval for the query: lo == hi when truncation is zero.
struct QueryResult {
    Rat lo;
    Rat hi;
    bool exact() const { return lo == hi; }
};

/// has-stable-model, sms-class(S), atom-brave(a), atom-cautious(a).
/// Atom queries require the atom's predicate to occur in the program schema.
QueryResult evalQuery(const OutcomeDistribution &dist, const Query &query,
                      const GProgram &program);

struct AsGoodAsResult {
    bool holds = true;
    std::optional<SmsSet> witnessKey; // first class where mass(a) < mass(b)
    Rat witnessMassA = Rat(0);
    Rat witnessMassB = Rat(0);
};

/// Per-class mass dominance: a is as good as b iff every sms-class gets at
/// least as much mass under a as under b. Both distributions must be built
/// from the same program with zero truncated mass.
AsGoodAsResult asGoodAs(const OutcomeDistribution &a, const OutcomeDistribution &b);

int compareSms(const SmsSet &a, const SmsSet &b);

} // namespace gdlog
