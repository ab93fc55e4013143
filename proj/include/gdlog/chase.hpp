#pragma once

#include "gdlog/ground.hpp"
#include "gdlog/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gdlog {

/// An unresolved Active atom of heads(G(Sigma)) together with its decoded
/// distribution call.
struct Trigger {
    GAtomId active;
    std::string dist;
    std::vector<Rat> params;
    std::vector<ConstId> sig;
};

struct ChaseBudget {
    std::size_t maxSteps = 10000; // trigger applications per path
    Rat minPathProb = Rat(0);     // paths below this probability truncate
};

enum class PathStatus { Complete, TruncatedDepth, TruncatedProb };

/// A finite maximal (or truncated) chase path, carried by its result: the
/// choice set labelling its last node.
struct ChasePath {
    ChoiceSet choices;
    Rat prob;
    std::size_t length = 0;
    PathStatus status = PathStatus::Complete;
};

struct TreeNode {
    std::size_t id = 0;
    std::optional<std::size_t> parent;
    std::optional<GRuleId> addedChoice;
    Rat edgeProb = Rat(1);
    std::string status; // "internal", "complete", "truncated-depth", "truncated-prob"
};

struct ExploreResult {
    std::vector<ChasePath> complete;
    Rat truncatedMass = Rat(0);
    std::size_t truncatedCount = 0;
    std::vector<TreeNode> tree; // filled only when requested
};

/// Picks which trigger to apply among the unresolved Active atoms (ascending
/// order). The default policy picks the least one; randomized policies verify
/// order independence.
using TriggerPolicy = std::function<std::size_t(const std::vector<GAtomId> &)>;

/// Decodes the lexicographically least unresolved Active head, if any.
std::optional<Trigger> findTrigger(const GrounderHandle &handle, const ChoiceSet &choices,
                                   const GroundProgram &grounded);

/// One child per support outcome with positive probability, ascending.
std::vector<std::pair<GRuleId, Rat>> applyTrigger(const GrounderHandle &handle,
                                                  const Trigger &trigger);

/// Exhaustively expands the chase tree rooted at the empty choice set. Paths
/// stop when no trigger exists (complete), at maxSteps trigger applications,
/// or below minPathProb; truncated paths contribute their probability to
/// truncatedMass. Complete-path probabilities and truncatedMass always sum
/// to exactly 1.
ExploreResult explore(const GrounderHandle &handle, const ChaseBudget &budget = {},
                      const TriggerPolicy &policy = {}, bool collectTree = false);

struct TerminalsResult {
    std::vector<ChoiceSet> terminals; // subset-minimal compatible choice sets
    bool truncated = false;
};

/// The subset-minimal elements of terminals(G) reachable within the budget:
/// the chase-path results, by the path/outcome bijection.
TerminalsResult terminalsEnumerate(const GrounderHandle &handle, const ChaseBudget &budget = {});

} // namespace gdlog
