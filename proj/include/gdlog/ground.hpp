#pragma once

#include "gdlog/dist.hpp"
#include "gdlog/model.hpp"
#include "gdlog/translate.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gdlog {

/// A functionally consistent set of ground AtR TGDs: a configuration of
/// probabilistic choices. Induces the partial function from Active atoms to
/// Result atoms.
class ChoiceSet {
  public:
    ChoiceSet() = default;

    /// Validates AtR shape against the translation and functional consistency.
    static ChoiceSet fromRules(const std::vector<GRuleId> &rules, const TranslationResult &tr);

    /// Extends with one more choice; the new Active atom must be unresolved.
    ChoiceSet extended(GRuleId atrRule) const;

    const std::vector<GRuleId> &rules() const { return rules_; }
    bool defines(GAtomId active) const { return atr_.count(active.value) > 0; }
    std::optional<GAtomId> resolve(GAtomId active) const;
    bool subsetOf(const ChoiceSet &other) const;
    std::size_t size() const { return rules_.size(); }
    bool empty() const { return rules_.empty(); }

    GroundProgram asProgram() const { return GroundProgram(rules_); }
    std::string cacheKey() const;

    friend bool operator==(const ChoiceSet &a, const ChoiceSet &b) { return a.rules_ == b.rules_; }

  private:
    std::vector<GRuleId> rules_;                    // sorted, unique
    std::map<std::uint32_t, GAtomId> atr_;          // active atom id -> result atom
};

/// True iff the Active -> outcome map induced by the rules is single-valued.
bool isConsistent(const std::vector<GRuleId> &atrRules);

/// True iff every Active atom occurring in heads(program) is resolved by the
/// choice set.
bool isCompatible(const ChoiceSet &choices, const GroundProgram &program,
                  const TranslationResult &tr);

/// Active atoms in heads(program) left unresolved, in ascending atom order.
std::vector<GAtomId> unresolvedActives(const ChoiceSet &choices, const GroundProgram &program,
                                       const TranslationResult &tr);

struct DependencyEdge {
    PredId from;
    PredId to;
    bool negative = false;
};

struct StratifyResult {
    bool stratified = false;
    // Strongly connected components of the dependency graph in topological
    // order; incomparable components are ordered by (dependency depth, least
    // predicate name). Components sorted by name internally.
    std::vector<std::vector<PredId>> components;
    std::vector<DependencyEdge> edges;
    // A negative edge inside a component, when not stratified.
    std::optional<DependencyEdge> negativeCycleWitness;
};

/// Dependency graph + SCC decomposition of a program (typically Pi[D]).
StratifyResult stratify(const GProgram &program);

enum class GrounderKind { Simple, Perfect };

std::string grounderName(GrounderKind kind);

/// A grounder bound to a program Pi[D]: a monotone map from choice sets to
/// ground existential-free programs.
///
/// Simple grounds by matching positive bodies against derived heads; Perfect
/// additionally requires negative bodies to miss the heads derived by earlier
/// strata, processing the rules stratum by stratum.
class GrounderHandle {
  public:
    /// `program` is the desugared program with the database attached.
    /// Perfect requires stratified negation and throws otherwise.
    GrounderHandle(GProgram program, const DistributionRegistry *registry, GrounderKind kind);

    /// Perfect grounder over a caller-supplied topological ordering of the
    /// dependency components (any valid ordering yields the same grounding).
    GrounderHandle(GProgram program, const DistributionRegistry *registry,
                   std::vector<std::vector<PredId>> componentOrder);

    const GroundProgram &eval(const ChoiceSet &choices) const; // memoized

    GrounderKind kind() const { return kind_; }
    const GProgram &program() const { return program_; }
    const TranslationResult &translation() const { return translation_; }
    const DistributionRegistry &registry() const { return *registry_; }
    const StratifyResult &strata() const { return strata_; }

    /// Per-stratum grounding chain Sigma^C_1 .. Sigma^C_n (Perfect only).
    std::vector<GroundProgram> perfectChain(const ChoiceSet &choices) const;

  private:
    GroundProgram evalSimple(const ChoiceSet &choices) const;
    GroundProgram evalPerfect(const ChoiceSet &choices) const;

    GProgram program_;
    const DistributionRegistry *registry_;
    GrounderKind kind_;
    TranslationResult translation_;
    StratifyResult strata_;
    // Perfect: sigmaNoExists TGD indices per stratum.
    std::vector<std::vector<std::size_t>> strataTgds_;
    mutable std::unordered_map<std::string, GroundProgram> cache_;
};

/// Closure of Simple/Perfect one-step operators from the empty program:
/// repeatedly adds h(sigma) for homomorphisms h with h(B+) among accumulated
/// heads; with `negOracle`, additionally h(B-) disjoint from the oracle.
GroundProgram operatorClosure(const std::vector<const TGD *> &rules,
                              const std::vector<GAtomId> *negOracle);

} // namespace gdlog
