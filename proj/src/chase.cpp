#include "gdlog/chase.hpp"

#include "gdlog/errors.hpp"

#include <algorithm>

namespace gdlog {

namespace {

Interner &in() { return Interner::instance(); }

Trigger decodeTrigger(const GrounderHandle &handle, GAtomId active) {
    const GAtomData &atom = in().atom(active);
    const DeltaPredInfo &info = handle.translation().infoForActive(atom.pred);
    Trigger trigger;
    trigger.active = active;
    trigger.dist = info.dist;
    for (std::size_t i = 0; i < info.paramCount; ++i)
        trigger.params.push_back(in().constant(atom.args[i]).code);
    for (std::size_t i = info.paramCount; i < atom.args.size(); ++i)
        trigger.sig.push_back(atom.args[i]);
    return trigger;
}

} // namespace

std::optional<Trigger> findTrigger(const GrounderHandle &handle, const ChoiceSet &choices,
                                   const GroundProgram &grounded) {
    std::vector<GAtomId> open = unresolvedActives(choices, grounded, handle.translation());
    if (open.empty()) return std::nullopt;
    return decodeTrigger(handle, open.front());
}

std::vector<std::pair<GRuleId, Rat>> applyTrigger(const GrounderHandle &handle,
                                                  const Trigger &trigger) {
    Support support = handle.registry().support(trigger.dist, trigger.params);
    const GAtomData &atom = in().atom(trigger.active);
    const DeltaPredInfo &info = handle.translation().infoForActive(atom.pred);
    std::vector<std::pair<GRuleId, Rat>> children;
    children.reserve(support.size());
    for (const SupportEntry &entry : support) {
        std::vector<ConstId> args = atom.args;
        args.push_back(entry.outcome);
        GAtomId result = in().internAtom(info.result, std::move(args));
        children.push_back({in().internRule({trigger.active}, {}, result), entry.prob});
    }
    return children;
}

ExploreResult explore(const GrounderHandle &handle, const ChaseBudget &budget,
                      const TriggerPolicy &policy, bool collectTree) {
    ExploreResult result;

    struct NodeState {
        ChoiceSet choices;
        Rat prob;
        std::size_t depth;
        std::optional<std::size_t> parent;
        std::optional<GRuleId> addedChoice;
        Rat edgeProb;
    };

    std::vector<NodeState> stack;
    stack.push_back({ChoiceSet{}, Rat(1), 0, std::nullopt, std::nullopt, Rat(1)});

    while (!stack.empty()) {
        NodeState node = std::move(stack.back());
        stack.pop_back();

        std::optional<std::size_t> nodeId;
        if (collectTree) {
            nodeId = result.tree.size();
            result.tree.push_back(
                {*nodeId, node.parent, node.addedChoice, node.edgeProb, "internal"});
        }

        const GroundProgram &grounded = handle.eval(node.choices);
        std::vector<GAtomId> open = unresolvedActives(node.choices, grounded, handle.translation());
        if (open.empty()) {
            result.complete.push_back(
                {node.choices, node.prob, node.depth, PathStatus::Complete});
            if (collectTree) result.tree[*nodeId].status = "complete";
            continue;
        }
        if (node.depth >= budget.maxSteps) {
            result.truncatedMass += node.prob;
            ++result.truncatedCount;
            if (collectTree) result.tree[*nodeId].status = "truncated-depth";
            continue;
        }
        std::size_t pick = policy ? policy(open) : 0;
        if (pick >= open.size())
            throw InputError("trigger policy picked an out-of-range index");
        Trigger trigger = decodeTrigger(handle, open[pick]);
        auto children = applyTrigger(handle, trigger);
        // Push in reverse so lower outcomes are explored first.
        for (auto it = children.rbegin(); it != children.rend(); ++it) {
            Rat childProb = node.prob * it->second;
            childProb.canonicalize();
            if (budget.minPathProb > 0 && childProb < budget.minPathProb) {
                result.truncatedMass += childProb;
                ++result.truncatedCount;
                if (collectTree) {
                    std::size_t id = result.tree.size();
                    result.tree.push_back({id, nodeId, it->first, it->second, "truncated-prob"});
                }
                continue;
            }
            stack.push_back(
                {node.choices.extended(it->first), childProb, node.depth + 1, nodeId, it->first,
                 it->second});
        }
    }
    return result;
}

TerminalsResult terminalsEnumerate(const GrounderHandle &handle, const ChaseBudget &budget) {
    ExploreResult explored = explore(handle, budget);
    TerminalsResult result;
    result.truncated = explored.truncatedCount > 0;
    for (const ChasePath &path : explored.complete) result.terminals.push_back(path.choices);
    return result;
}

} // namespace gdlog
