#include "gdlog/stable.hpp"

#include "gdlog/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace gdlog {

Interpretation canonicalInterpretation(std::vector<GAtomId> atoms) {
    return sortedAtomSet(std::move(atoms));
}

namespace {

int compareInterp(const Interpretation &a, const Interpretation &b) {
    Interner &in = Interner::instance();
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = in.compareAtom(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

} // namespace

SmsSet canonicalSms(SmsSet models) {
    std::sort(models.begin(), models.end(),
              [](const Interpretation &a, const Interpretation &b) { return compareInterp(a, b) < 0; });
    models.erase(std::unique(models.begin(), models.end()), models.end());
    return models;
}

GroundProgram reduct(const GroundProgram &program, const Interpretation &interp) {
    Interner &in = Interner::instance();
    auto holds = [&](GAtomId a) {
        return std::binary_search(interp.begin(), interp.end(), a, atomSemanticLess);
    };
    std::vector<GRuleId> kept;
    for (GRuleId r : program.rules()) {
        const GRuleData &data = in.rule(r);
        bool dropped = false;
        for (GAtomId a : data.neg) {
            if (holds(a)) {
                dropped = true;
                break;
            }
        }
        if (dropped) continue;
        kept.push_back(in.internRule(data.pos, {}, data.head));
    }
    return GroundProgram(std::move(kept));
}

// --- bitmask representation over the program's universe ---

namespace {

struct MaskProgram {
    std::vector<GAtomId> universe; // ascending atom order
    std::map<std::uint32_t, std::size_t> indexOf;
    struct MRule {
        std::uint64_t pos = 0;
        std::uint64_t neg = 0;
        std::size_t head = 0;
    };
    std::vector<MRule> rules;
    std::uint64_t factMask = 0; // heads of body-free rules

    std::uint64_t maskOf(const Interpretation &interp) const {
        std::uint64_t m = 0;
        for (GAtomId a : interp) {
            auto it = indexOf.find(a.value);
            if (it == indexOf.end()) return ~static_cast<std::uint64_t>(0); // outside universe
            m |= std::uint64_t(1) << it->second;
        }
        return m;
    }

    Interpretation interpOf(std::uint64_t mask) const {
        Interpretation interp;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (mask & (std::uint64_t(1) << i)) interp.push_back(universe[i]);
        return interp;
    }
};

MaskProgram buildMasks(const GroundProgram &program) {
    Interner &in = Interner::instance();
    std::vector<GAtomId> atoms;
    for (GRuleId r : program.rules()) {
        const GRuleData &data = in.rule(r);
        for (GAtomId a : data.pos) atoms.push_back(a);
        for (GAtomId a : data.neg) atoms.push_back(a);
        atoms.push_back(data.head);
    }
    MaskProgram mp;
    mp.universe = sortedAtomSet(std::move(atoms));
    if (mp.universe.size() > 64)
        throw CapacityError("ground program universe exceeds the 64-atom solver representation (" +
                                std::to_string(mp.universe.size()) + " atoms)",
                            64);
    for (std::size_t i = 0; i < mp.universe.size(); ++i) mp.indexOf[mp.universe[i].value] = i;
    for (GRuleId r : program.rules()) {
        const GRuleData &data = in.rule(r);
        MaskProgram::MRule rule;
        for (GAtomId a : data.pos) rule.pos |= std::uint64_t(1) << mp.indexOf[a.value];
        for (GAtomId a : data.neg) rule.neg |= std::uint64_t(1) << mp.indexOf[a.value];
        rule.head = mp.indexOf[data.head.value];
        if (rule.pos == 0 && rule.neg == 0) mp.factMask |= std::uint64_t(1) << rule.head;
        mp.rules.push_back(rule);
    }
    return mp;
}

std::uint64_t leastModelMask(const MaskProgram &mp, std::uint64_t candidate, bool useReduct) {
    std::uint64_t m = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto &rule : mp.rules) {
            if (useReduct && (rule.neg & candidate) != 0) continue; // removed by the reduct
            if ((rule.pos & ~m) != 0) continue;
            std::uint64_t bit = std::uint64_t(1) << rule.head;
            if (!(m & bit)) {
                m |= bit;
                changed = true;
            }
        }
    }
    return m;
}

bool modelsMask(const MaskProgram &mp, std::uint64_t interp) {
    for (const auto &rule : mp.rules) {
        if ((rule.pos & ~interp) != 0) continue;
        if ((rule.neg & interp) != 0) continue;
        if (!(interp & (std::uint64_t(1) << rule.head))) return false;
    }
    return true;
}

bool stableMask(const MaskProgram &mp, std::uint64_t interp) {
    return modelsMask(mp, interp) && leastModelMask(mp, interp, /*useReduct=*/true) == interp;
}

} // namespace

Interpretation leastModelPositive(const GroundProgram &program) {
    MaskProgram mp = buildMasks(program);
    for (const auto &rule : mp.rules)
        if (rule.neg != 0) throw InputError("leastModelPositive requires a positive program");
    return mp.interpOf(leastModelMask(mp, 0, false));
}

bool isModel(const GroundProgram &program, const Interpretation &interp) {
    MaskProgram mp = buildMasks(program);
    std::uint64_t m = mp.maskOf(interp);
    if (m == ~static_cast<std::uint64_t>(0)) {
        // Atoms outside the universe never appear in rule heads, so the
        // interpretation cannot be a least model; it can still be a classical
        // model. Re-check structurally.
        Interner &in = Interner::instance();
        auto holds = [&](GAtomId a) {
            return std::binary_search(interp.begin(), interp.end(), a, atomSemanticLess);
        };
        for (GRuleId r : program.rules()) {
            const GRuleData &data = in.rule(r);
            bool fire = true;
            for (GAtomId a : data.pos)
                if (!holds(a)) fire = false;
            for (GAtomId a : data.neg)
                if (holds(a)) fire = false;
            if (fire && !holds(data.head)) return false;
        }
        return true;
    }
    return modelsMask(mp, m);
}

bool isStableModel(const GroundProgram &program, const Interpretation &interp) {
    MaskProgram mp = buildMasks(program);
    std::uint64_t m = mp.maskOf(interp);
    if (m == ~static_cast<std::uint64_t>(0)) return false; // atoms never derivable
    return stableMask(mp, m);
}

SmsSet bruteForceStableModels(const GroundProgram &program, const SolverOptions &opts) {
    MaskProgram mp = buildMasks(program);
    if (mp.universe.size() > opts.bruteForceCap)
        throw CapacityError("universe of " + std::to_string(mp.universe.size()) +
                                " atoms exceeds the brute-force cap of " +
                                std::to_string(opts.bruteForceCap),
                            opts.bruteForceCap);
    // Every stable model contains all fact heads; enumerate only the rest.
    std::vector<std::size_t> freeIdx;
    for (std::size_t i = 0; i < mp.universe.size(); ++i)
        if (!(mp.factMask & (std::uint64_t(1) << i))) freeIdx.push_back(i);

    SmsSet found;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << freeIdx.size()); ++bits) {
        std::uint64_t candidate = mp.factMask;
        for (std::size_t j = 0; j < freeIdx.size(); ++j)
            if (bits & (std::uint64_t(1) << j)) candidate |= std::uint64_t(1) << freeIdx[j];
        if (stableMask(mp, candidate)) found.push_back(mp.interpOf(candidate));
    }
    return canonicalSms(std::move(found));
}

// --- splitting solver ---

namespace {

struct AtomGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> succ;
    std::vector<std::pair<std::size_t, std::size_t>> negEdges;
};

AtomGraph atomDependencies(const MaskProgram &mp) {
    AtomGraph g;
    g.n = mp.universe.size();
    g.succ.assign(g.n, {});
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto &rule : mp.rules) {
        for (std::size_t i = 0; i < g.n; ++i) {
            std::uint64_t bit = std::uint64_t(1) << i;
            if (rule.pos & bit) {
                if (seen.insert({i, rule.head}).second) g.succ[i].push_back(rule.head);
            }
            if (rule.neg & bit) {
                if (seen.insert({i, rule.head}).second) g.succ[i].push_back(rule.head);
                g.negEdges.push_back({i, rule.head});
            }
        }
    }
    return g;
}

// Iterative Tarjan; returns component index per node, components numbered in
// reverse topological order of the condensation.
std::vector<int> sccOf(const AtomGraph &g, int &compCount) {
    std::vector<int> index(g.n, -1), low(g.n, 0), comp(g.n, -1);
    std::vector<bool> onStack(g.n, false);
    std::vector<std::size_t> stack;
    int nextIndex = 0;
    compCount = 0;
    struct Frame {
        std::size_t v;
        std::size_t edge;
    };
    for (std::size_t root = 0; root < g.n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = nextIndex++;
        stack.push_back(root);
        onStack[root] = true;
        while (!frames.empty()) {
            Frame &f = frames.back();
            if (f.edge < g.succ[f.v].size()) {
                std::size_t w = g.succ[f.v][f.edge++];
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
    return comp;
}

// Condensation topological order (sources first), deterministic.
std::vector<std::vector<std::size_t>> componentOrder(const AtomGraph &g, const std::vector<int> &comp,
                                                     int compCount) {
    std::vector<int> level(compCount, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < g.n; ++v) {
            for (std::size_t w : g.succ[v]) {
                if (comp[v] != comp[w] && level[comp[w]] < level[comp[v]] + 1) {
                    level[comp[w]] = level[comp[v]] + 1;
                    changed = true;
                }
            }
        }
    }
    std::vector<std::vector<std::size_t>> members(compCount);
    for (std::size_t v = 0; v < g.n; ++v) members[comp[v]].push_back(v);
    std::vector<std::size_t> order(compCount);
    for (int c = 0; c < compCount; ++c) order[c] = c;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (level[a] != level[b]) return level[a] < level[b];
        return members[a].front() < members[b].front();
    });
    std::vector<std::vector<std::size_t>> result;
    for (std::size_t c : order) result.push_back(members[c]);
    return result;
}

} // namespace

bool isLocallyStratified(const GroundProgram &program) {
    MaskProgram mp = buildMasks(program);
    AtomGraph g = atomDependencies(mp);
    int compCount = 0;
    std::vector<int> comp = sccOf(g, compCount);
    for (const auto &[from, to] : g.negEdges)
        if (comp[from] == comp[to]) return false;
    return true;
}

SmsSet allStableModels(const GroundProgram &program, const SolverOptions &opts) {
    MaskProgram mp = buildMasks(program);
    AtomGraph g = atomDependencies(mp);
    int compCount = 0;
    std::vector<int> comp = sccOf(g, compCount);
    auto components = componentOrder(g, comp, compCount);

    // Rules grouped by the component of their head.
    std::vector<std::vector<std::size_t>> rulesOfComp(components.size());
    std::map<int, std::size_t> posOfComp;
    for (std::size_t c = 0; c < components.size(); ++c)
        posOfComp[comp[components[c].front()]] = c;
    for (std::size_t r = 0; r < mp.rules.size(); ++r)
        rulesOfComp[posOfComp.at(comp[mp.rules[r].head])].push_back(r);

    std::vector<std::uint64_t> partials{0};
    for (std::size_t c = 0; c < components.size(); ++c) {
        const auto &atoms = components[c];
        bool negInside = false;
        for (std::size_t r : rulesOfComp[c]) {
            for (std::size_t a : atoms)
                if (mp.rules[r].neg & (std::uint64_t(1) << a)) negInside = true;
        }
        if (negInside && atoms.size() > opts.bruteForceCap)
            throw CapacityError("dependency component of " + std::to_string(atoms.size()) +
                                    " atoms exceeds the enumeration cap of " +
                                    std::to_string(opts.bruteForceCap),
                                opts.bruteForceCap);

        std::vector<std::uint64_t> next;
        for (std::uint64_t m : partials) {
            if (!negInside) {
                // No negation on this component's atoms inside the residual
                // program: a positive fixpoint gives its unique extension.
                std::uint64_t derived = 0;
                bool changed = true;
                while (changed) {
                    changed = false;
                    for (std::size_t r : rulesOfComp[c]) {
                        const auto &rule = mp.rules[r];
                        if ((rule.neg & (m | derived)) != 0) continue;
                        if ((rule.pos & ~(m | derived)) != 0) continue;
                        std::uint64_t bit = std::uint64_t(1) << rule.head;
                        if (!(derived & bit)) {
                            derived |= bit;
                            changed = true;
                        }
                    }
                }
                next.push_back(m | derived);
                continue;
            }
            // Branch over the component's stable extensions.
            for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << atoms.size()); ++bits) {
                std::uint64_t j = 0;
                for (std::size_t k = 0; k < atoms.size(); ++k)
                    if (bits & (std::uint64_t(1) << k)) j |= std::uint64_t(1) << atoms[k];
                std::uint64_t x = m | j;
                // Least model of the residual reduct over this component.
                std::uint64_t derived = 0;
                bool changed = true;
                while (changed) {
                    changed = false;
                    for (std::size_t r : rulesOfComp[c]) {
                        const auto &rule = mp.rules[r];
                        if ((rule.neg & x) != 0) continue;
                        if ((rule.pos & ~(m | derived)) != 0) continue;
                        std::uint64_t bit = std::uint64_t(1) << rule.head;
                        if (!(derived & bit)) {
                            derived |= bit;
                            changed = true;
                        }
                    }
                }
                if (derived == j) next.push_back(x);
            }
        }
        partials = std::move(next);
    }

    SmsSet found;
    for (std::uint64_t m : partials) found.push_back(mp.interpOf(m));
    return canonicalSms(std::move(found));
}

} // namespace gdlog
