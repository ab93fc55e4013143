#include "gdlog/ground.hpp"

#include "gdlog/errors.hpp"
#include "gdlog/match.hpp"
#include "gdlog/printer.hpp"

#include <algorithm>
#include <set>

namespace gdlog {

namespace {

Interner &in() { return Interner::instance(); }

// (active atom, result atom) of an AtR ground rule, validated structurally.
std::pair<GAtomId, GAtomId> atrParts(GRuleId rule, const TranslationResult &tr) {
    const GRuleData &data = in().rule(rule);
    if (data.pos.size() != 1 || !data.neg.empty())
        throw InputError("not a ground AtR TGD: " + printGroundRule(rule));
    const GAtomData &head = in().atom(data.head);
    const GAtomData &body = in().atom(data.pos[0]);
    if (!tr.isResultPred(head.pred) || !tr.isActivePred(body.pred))
        throw InputError("not a ground AtR TGD: " + printGroundRule(rule));
    const DeltaPredInfo &info = tr.infoForResult(head.pred);
    if (info.active != body.pred || head.args.size() != body.args.size() + 1)
        throw InputError("malformed AtR TGD: " + printGroundRule(rule));
    for (std::size_t i = 0; i < body.args.size(); ++i)
        if (!(head.args[i] == body.args[i]))
            throw InputError("malformed AtR TGD: " + printGroundRule(rule));
    return {data.pos[0], data.head};
}

} // namespace

ChoiceSet ChoiceSet::fromRules(const std::vector<GRuleId> &rules, const TranslationResult &tr) {
    ChoiceSet cs;
    for (GRuleId r : rules) {
        auto [active, result] = atrParts(r, tr);
        auto it = cs.atr_.find(active.value);
        if (it != cs.atr_.end()) {
            if (!(it->second == result))
                throw InputError("inconsistent choices: two outcomes for " + printGroundAtom(active));
            continue;
        }
        cs.atr_.emplace(active.value, result);
        cs.rules_.push_back(r);
    }
    std::sort(cs.rules_.begin(), cs.rules_.end(), ruleSemanticLess);
    cs.rules_.erase(std::unique(cs.rules_.begin(), cs.rules_.end()), cs.rules_.end());
    return cs;
}

ChoiceSet ChoiceSet::extended(GRuleId atrRule) const {
    ChoiceSet next = *this;
    const GRuleData &data = in().rule(atrRule);
    GAtomId active = data.pos.at(0);
    auto it = next.atr_.find(active.value);
    if (it != next.atr_.end()) {
        if (!(it->second == data.head))
            throw InputError("inconsistent choice extension for " + printGroundAtom(active));
        return next;
    }
    next.atr_.emplace(active.value, data.head);
    next.rules_.insert(std::upper_bound(next.rules_.begin(), next.rules_.end(), atrRule,
                                        ruleSemanticLess),
                       atrRule);
    return next;
}

std::optional<GAtomId> ChoiceSet::resolve(GAtomId active) const {
    auto it = atr_.find(active.value);
    if (it == atr_.end()) return std::nullopt;
    return it->second;
}

bool ChoiceSet::subsetOf(const ChoiceSet &other) const {
    return std::includes(other.rules_.begin(), other.rules_.end(), rules_.begin(), rules_.end(),
                         ruleSemanticLess);
}

std::string ChoiceSet::cacheKey() const {
    std::string key;
    for (GRuleId r : rules_) {
        key += std::to_string(r.value);
        key += ',';
    }
    return key;
}

bool isConsistent(const std::vector<GRuleId> &atrRules) {
    std::map<std::uint32_t, GAtomId> seen;
    for (GRuleId r : atrRules) {
        const GRuleData &data = in().rule(r);
        if (data.pos.size() != 1) return false;
        auto [it, inserted] = seen.emplace(data.pos[0].value, data.head);
        if (!inserted && !(it->second == data.head)) return false;
    }
    return true;
}

bool isCompatible(const ChoiceSet &choices, const GroundProgram &program,
                  const TranslationResult &tr) {
    return unresolvedActives(choices, program, tr).empty();
}

std::vector<GAtomId> unresolvedActives(const ChoiceSet &choices, const GroundProgram &program,
                                       const TranslationResult &tr) {
    std::vector<GAtomId> open;
    for (GAtomId head : program.heads()) {
        if (tr.isActivePred(in().atom(head).pred) && !choices.defines(head))
            open.push_back(head);
    }
    return open; // heads() is already in ascending atom order
}

StratifyResult stratify(const GProgram &program) {
    StratifyResult result;
    std::vector<PredId> preds = collectPredicates(program);
    std::map<std::uint32_t, std::size_t> indexOf;
    for (std::size_t i = 0; i < preds.size(); ++i) indexOf[preds[i].value] = i;

    std::set<std::tuple<std::uint32_t, std::uint32_t, bool>> edgeSet;
    for (const GRule &rule : program.rules) {
        if (!rule.head) throw InputError("stratify requires 'false' heads to be desugared first");
        PredId headPred = rule.head->pred;
        for (const Atom &a : rule.pos) edgeSet.insert({a.pred.value, headPred.value, false});
        for (const Atom &a : rule.neg) edgeSet.insert({a.pred.value, headPred.value, true});
    }
    std::vector<std::vector<std::size_t>> succ(preds.size());
    for (const auto &[from, to, neg] : edgeSet) {
        result.edges.push_back({PredId{from}, PredId{to}, neg});
        succ[indexOf[from]].push_back(indexOf[to]);
    }

    // Tarjan SCC, iterative.
    const std::size_t n = preds.size();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> onStack(n, false);
    std::vector<std::size_t> stack;
    int nextIndex = 0;
    int compCount = 0;
    struct Frame {
        std::size_t v;
        std::size_t edge;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = nextIndex++;
        stack.push_back(root);
        onStack[root] = true;
        while (!frames.empty()) {
            Frame &f = frames.back();
            if (f.edge < succ[f.v].size()) {
                std::size_t w = succ[f.v][f.edge++];
                if (index[w] == -1) {
                    index[w] = low[w] = nextIndex++;
                    stack.push_back(w);
                    onStack[w] = true;
                    frames.push_back({w, 0});
                } else if (onStack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    for (;;) {
                        std::size_t w = stack.back();
                        stack.pop_back();
                        onStack[w] = false;
                        comp[w] = compCount;
                        if (w == f.v) break;
                    }
                    ++compCount;
                }
                std::size_t v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }

    // Stratified iff no negative edge stays within a component.
    result.stratified = true;
    for (const DependencyEdge &e : result.edges) {
        if (e.negative && comp[indexOf[e.from.value]] == comp[indexOf[e.to.value]]) {
            result.stratified = false;
            if (!result.negativeCycleWitness) result.negativeCycleWitness = e;
        }
    }

    // Topological order of components by (dependency depth, least predicate
    // name): reproducible grounding traces, and any valid ordering yields the
    // same perfect grounding.
    std::vector<int> level(compCount, 0);
    std::vector<std::vector<std::size_t>> compMembers(compCount);
    for (std::size_t i = 0; i < n; ++i) compMembers[comp[i]].push_back(i);
    bool changed = true;
    while (changed) { // compCount iterations at most; cross edges form a DAG
        changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t w : succ[v]) {
                if (comp[v] != comp[w] && level[comp[w]] < level[comp[v]] + 1) {
                    level[comp[w]] = level[comp[v]] + 1;
                    changed = true;
                }
            }
        }
    }
    std::vector<std::size_t> order(compCount);
    for (int c = 0; c < compCount; ++c) order[c] = c;
    auto leastName = [&](int c) {
        std::string least;
        for (std::size_t m : compMembers[c]) {
            const std::string &name = in().pred(preds[m]).name;
            if (least.empty() || name < least) least = name;
        }
        return least;
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (level[a] != level[b]) return level[a] < level[b];
        return leastName(a) < leastName(b);
    });
    for (std::size_t c : order) {
        std::vector<PredId> members;
        for (std::size_t m : compMembers[c]) members.push_back(preds[m]);
        std::sort(members.begin(), members.end(),
                  [](PredId a, PredId b) { return in().comparePred(a, b) < 0; });
        result.components.push_back(std::move(members));
    }
    return result;
}

std::string grounderName(GrounderKind kind) {
    return kind == GrounderKind::Simple ? "simple" : "perfect";
}

GroundProgram operatorClosure(const std::vector<const TGD *> &rules,
                              const std::vector<GAtomId> *negOracle) {
    auto blocked = [&](GAtomId atom) {
        return negOracle && std::binary_search(negOracle->begin(), negOracle->end(), atom,
                                               atomSemanticLess);
    };

    std::set<std::uint32_t> programSet;
    std::vector<GRuleId> program;
    AtomIndex all;                  // heads derived so far
    std::vector<GAtomId> deltaVec;  // heads new since the last processed round

    auto admit = [&](GRuleId id) {
        if (!programSet.insert(id.value).second) return;
        program.push_back(id);
        GAtomId head = in().rule(id).head;
        if (all.add(head)) deltaVec.push_back(head);
    };

    auto tryEmit = [&](const TGD &tgd, const Subst &subst) {
        if (negOracle) {
            for (const Atom &a : tgd.neg)
                if (blocked(instantiateAtom(a, subst))) return;
        }
        admit(instantiateRule(tgd, subst));
    };

    // Round 0: rules with an empty positive body always match.
    for (const TGD *tgd : rules) {
        if (!tgd->pos.empty()) continue;
        Subst empty;
        tryEmit(*tgd, empty);
    }

    while (!deltaVec.empty()) {
        AtomIndex deltaIdx;
        for (GAtomId a : deltaVec) deltaIdx.add(a);
        deltaVec.clear();
        for (const TGD *tgd : rules) {
            if (tgd->pos.empty()) continue;
            forEachHom(*tgd, all, &deltaIdx, [&](const Subst &s) { tryEmit(*tgd, s); });
        }
    }
    return GroundProgram(std::move(program));
}

GrounderHandle::GrounderHandle(GProgram program, const DistributionRegistry *registry,
                               GrounderKind kind)
    : program_(std::move(program)), registry_(registry), kind_(kind),
      translation_(translateProgram(program_)), strata_(stratify(program_)) {
    if (kind_ == GrounderKind::Perfect) {
        if (!strata_.stratified) {
            std::string detail;
            if (strata_.negativeCycleWitness)
                detail = ": negative dependency of '" +
                         in().pred(strata_.negativeCycleWitness->to).name + "' on '" +
                         in().pred(strata_.negativeCycleWitness->from).name + "' lies on a cycle";
            throw InputError("the perfect grounder requires stratified negation" + detail);
        }
        buildStrataTgds();
    }
}

GrounderHandle::GrounderHandle(GProgram program, const DistributionRegistry *registry,
                               std::vector<std::vector<PredId>> componentOrder)
    : GrounderHandle(std::move(program), registry, GrounderKind::Perfect) {
    strata_.components = std::move(componentOrder);
    strataTgds_.clear();
    buildStrataTgds();
    cache_.clear();
}

void GrounderHandle::buildStrataTgds() {
    // Stratum index per predicate, then per sigmaNoExists TGD via the head
    // predicates of its origin rules.
    std::map<std::uint32_t, std::size_t> stratumOfPred;
    for (std::size_t i = 0; i < strata_.components.size(); ++i)
        for (PredId p : strata_.components[i]) stratumOfPred[p.value] = i;
    strataTgds_.assign(strata_.components.size(), {});
    for (std::size_t t = 0; t < translation_.sigmaNoExists.size(); ++t) {
        std::set<std::size_t> strataOfTgd;
        for (std::size_t ruleIdx : translation_.noExistsOrigins[t]) {
            const GRule &rule = program_.rules[ruleIdx];
            strataOfTgd.insert(stratumOfPred.at(rule.head->pred.value));
        }
        for (std::size_t s : strataOfTgd) strataTgds_[s].push_back(t);
    }
}

const GroundProgram &GrounderHandle::eval(const ChoiceSet &choices) const {
    std::string key = choices.cacheKey();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    GroundProgram result =
        kind_ == GrounderKind::Simple ? evalSimple(choices) : evalPerfect(choices);
    return cache_.emplace(std::move(key), std::move(result)).first->second;
}

GroundProgram GrounderHandle::evalSimple(const ChoiceSet &choices) const {
    std::vector<TGD> owned;
    owned.reserve(choices.rules().size());
    for (GRuleId r : choices.rules()) owned.push_back(tgdOfGroundRule(r));
    std::vector<const TGD *> rules;
    for (const TGD &tgd : translation_.sigmaNoExists) rules.push_back(&tgd);
    for (const TGD &tgd : owned) rules.push_back(&tgd);
    return operatorClosure(rules, nullptr).minus(choices.asProgram());
}

GroundProgram GrounderHandle::evalPerfect(const ChoiceSet &choices) const {
    GroundProgram prev;
    for (const GroundProgram &step : perfectChain(choices)) prev = step;
    return prev;
}

std::vector<GroundProgram> GrounderHandle::perfectChain(const ChoiceSet &choices) const {
    if (kind_ != GrounderKind::Perfect)
        throw InputError("perfectChain is only available on a perfect grounder handle");
    std::vector<GroundProgram> chain;
    GroundProgram prev;
    GroundProgram sigma = choices.asProgram();
    std::vector<TGD> choiceTgds;
    choiceTgds.reserve(choices.rules().size());
    for (GRuleId r : choices.rules()) choiceTgds.push_back(tgdOfGroundRule(r));

    bool frozen = false;
    for (std::size_t i = 0; i < strata_.components.size(); ++i) {
        if (!frozen && !isCompatible(choices, prev, translation_)) frozen = true;
        if (frozen) {
            chain.push_back(prev);
            continue;
        }
        // Negative literals of stratum-i rules refer to strictly earlier
        // strata, whose heads are final in prev.
        std::vector<GAtomId> negOracle = prev.heads();
        std::vector<TGD> owned;
        owned.reserve(prev.size());
        for (GRuleId r : prev.rules()) owned.push_back(tgdOfGroundRule(r));
        std::vector<const TGD *> rules;
        for (std::size_t t : strataTgds_[i]) rules.push_back(&translation_.sigmaNoExists[t]);
        for (const TGD &tgd : owned) rules.push_back(&tgd);
        for (const TGD &tgd : choiceTgds) rules.push_back(&tgd);
        prev = operatorClosure(rules, &negOracle).minus(sigma);
        chain.push_back(prev);
    }
    return chain;
}

} // namespace gdlog
