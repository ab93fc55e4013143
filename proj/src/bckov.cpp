#include "gdlog/bckov.hpp"

#include "gdlog/errors.hpp"
#include "gdlog/match.hpp"
#include "gdlog/printer.hpp"
#include "gdlog/prob.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gdlog {

namespace {

Interner &in() { return Interner::instance(); }

// Immediate-consequence closure of the non-existential TGDs over a set of
// atoms (programs here are positive).
void deriveClosure(const std::vector<const TGD *> &rules, AtomIndex &atoms,
                   std::vector<GAtomId> &atomList) {
    std::vector<GAtomId> delta;
    auto admit = [&](GAtomId a) {
        if (atoms.add(a)) {
            atomList.push_back(a);
            delta.push_back(a);
        }
    };
    for (const TGD *tgd : rules) {
        if (!tgd->pos.empty()) continue;
        Subst empty;
        admit(instantiateAtom(tgd->head.at(0), empty));
    }
    // Seed rounds with everything already present.
    delta = atomList;
    while (!delta.empty()) {
        AtomIndex deltaIdx;
        for (GAtomId a : delta) deltaIdx.add(a);
        delta.clear();
        for (const TGD *tgd : rules) {
            if (tgd->pos.empty()) continue;
            forEachHom(*tgd, atoms, &deltaIdx,
                       [&](const Subst &s) { admit(instantiateAtom(tgd->head.at(0), s)); });
        }
    }
}

struct BckovMachine {
    std::vector<const TGD *> plainRules;
    std::vector<const TGD *> existRules;
    const TranslationResult *tr = nullptr;
    const DistributionRegistry *registry = nullptr;
    std::size_t maxSteps = 0;

    std::vector<BckovOutcome> outcomes;
    bool truncated = false;

    // Least undetermined sample point, encoded as its Active atom.
    std::optional<GAtomId> findBranchPoint(const AtomIndex &atoms,
                                           const std::vector<GAtomId> &atomList) const {
        std::optional<GAtomId> best;
        for (const TGD *tgd : existRules) {
            const Atom &resultHead = tgd->head.at(0);
            const DeltaPredInfo &info = tr->infoForResult(resultHead.pred);
            auto consider = [&](const Subst &subst) {
                std::vector<ConstId> prefix;
                for (std::size_t i = 0; i + 1 < resultHead.args.size(); ++i) {
                    const Term &t = resultHead.args[i];
                    prefix.push_back(isConst(t) ? std::get<ConstId>(t)
                                                : subst.at(std::get<VarId>(t).value));
                }
                // Determined iff some Result atom with this prefix is present.
                for (GAtomId existing : atoms.forPred(info.result)) {
                    const GAtomData &data = in().atom(existing);
                    bool samePrefix = true;
                    for (std::size_t i = 0; i < prefix.size(); ++i)
                        if (!(data.args[i] == prefix[i])) samePrefix = false;
                    if (samePrefix) return;
                }
                GAtomId active = in().internAtom(info.active, std::move(prefix));
                if (!best || in().compareAtom(active, *best) < 0) best = active;
            };
            if (tgd->pos.empty()) {
                Subst empty;
                consider(empty);
            } else {
                forEachHom(*tgd, atoms, nullptr, consider);
            }
        }
        (void)atomList;
        return best;
    }

    void run(std::vector<GAtomId> atomList, const Rat &prob, std::size_t depth) {
        AtomIndex atoms;
        for (GAtomId a : atomList) atoms.add(a);
        deriveClosure(plainRules, atoms, atomList);

        std::optional<GAtomId> branch = findBranchPoint(atoms, atomList);
        if (!branch) {
            outcomes.push_back({canonicalInterpretation(std::move(atomList)), prob});
            return;
        }
        if (depth >= maxSteps) {
            truncated = true;
            return;
        }
        const GAtomData &active = in().atom(*branch);
        const DeltaPredInfo &info = tr->infoForActive(active.pred);
        std::vector<Rat> params;
        for (std::size_t i = 0; i < info.paramCount; ++i)
            params.push_back(in().constant(active.args[i]).code);
        Support support = registry->support(info.dist, params);
        for (const SupportEntry &entry : support) {
            std::vector<ConstId> args = active.args;
            args.push_back(entry.outcome);
            GAtomId result = in().internAtom(info.result, std::move(args));
            std::vector<GAtomId> childAtoms = atomList;
            childAtoms.push_back(result);
            run(std::move(childAtoms), prob * entry.prob, depth + 1);
        }
    }
};

} // namespace

BckovResult bckovOutcomes(const GProgram &program, const DistributionRegistry &registry,
                          const ChaseBudget &budget) {
    TranslationResult tr = translateBckov(program);

    BckovMachine machine;
    machine.tr = &tr;
    machine.registry = &registry;
    machine.maxSteps = budget.maxSteps;
    for (const TGD &tgd : tr.sigmaNoExists) machine.plainRules.push_back(&tgd);
    for (const TGD &tgd : tr.sigmaExists) machine.existRules.push_back(&tgd);

    machine.run({}, Rat(1), 0);

    BckovResult result;
    result.outcomes = std::move(machine.outcomes);
    result.truncated = machine.truncated;
    std::sort(result.outcomes.begin(), result.outcomes.end(),
              [](const BckovOutcome &a, const BckovOutcome &b) {
                  SmsSet sa{a.model}, sb{b.model};
                  return compareSms(sa, sb) < 0;
              });
    return result;
}

IsomorphismReport checkIsomorphism(const GProgram &program, const DistributionRegistry &registry,
                                   const ChaseBudget &budget, const SolverOptions &solverOpts) {
    IsomorphismReport report;

    GrounderHandle handle(program, &registry, GrounderKind::Simple);
    ExploreResult explored = explore(handle, budget);
    BckovResult reference = bckovOutcomes(program, registry, budget);
    report.simpleOutcomes = explored.complete.size();
    report.bckovOutcomes = reference.outcomes.size();

    if (explored.truncatedCount > 0 || reference.truncated) {
        report.verdict = IsomorphismVerdict::Inconclusive;
        report.detail = "enumeration truncated by budget";
        return report;
    }

    std::map<std::string, std::vector<Rat>> referenceByModel;
    for (const BckovOutcome &outcome : reference.outcomes) {
        std::string key;
        for (GAtomId a : outcome.model) key += printGroundAtom(a) + ";";
        referenceByModel[key].push_back(outcome.prob);
    }

    Projection moduloActive;
    for (PredId p : collectPredicates(program)) moduloActive.keepPreds.insert(p.value);
    for (const DeltaPredInfo &info : handle.translation().deltaPreds)
        moduloActive.keepPreds.insert(info.result.value);

    report.verdict = IsomorphismVerdict::Isomorphic;
    for (const ChasePath &path : explored.complete) {
        GroundProgram outcome = path.choices.asProgram().unionWith(handle.eval(path.choices));
        SmsSet sms = allStableModels(outcome, solverOpts);
        if (sms.size() != 1) {
            report.verdict = IsomorphismVerdict::NotIsomorphic;
            report.detail = "a positive outcome produced " + std::to_string(sms.size()) +
                            " stable models, expected exactly one";
            return report;
        }
        Interpretation model = moduloActive.apply(sms.front());
        std::string key;
        for (GAtomId a : model) key += printGroundAtom(a) + ";";

        IsomorphismRow row;
        row.model = model;
        row.probSimple = path.prob;
        auto it = referenceByModel.find(key);
        if (it == referenceByModel.end() || it->second.empty()) {
            report.verdict = IsomorphismVerdict::NotIsomorphic;
            report.detail = "simple-grounder outcome has no matching reference outcome";
        } else {
            row.probBckov = it->second.back();
            it->second.pop_back();
            if (*row.probBckov != path.prob) {
                report.verdict = IsomorphismVerdict::NotIsomorphic;
                report.detail = "probability mismatch on a matched outcome";
            }
        }
        report.rows.push_back(std::move(row));
    }
    for (const auto &kv : referenceByModel) {
        if (!kv.second.empty()) {
            report.verdict = IsomorphismVerdict::NotIsomorphic;
            report.detail = "reference outcome unmatched by any simple-grounder outcome";
        }
    }
    return report;
}

} // namespace gdlog
