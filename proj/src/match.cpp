#include "gdlog/match.hpp"

#include "gdlog/errors.hpp"
#include "gdlog/printer.hpp"

namespace gdlog {

bool AtomIndex::add(GAtomId atom) {
    if (!members_.insert(atom.value).second) return false;
    byPred_[Interner::instance().atom(atom).pred.value].push_back(atom);
    return true;
}

bool AtomIndex::contains(GAtomId atom) const { return members_.count(atom.value) > 0; }

const std::vector<GAtomId> &AtomIndex::forPred(PredId pred) const {
    static const std::vector<GAtomId> empty;
    auto it = byPred_.find(pred.value);
    return it == byPred_.end() ? empty : it->second;
}

namespace {

bool unify(const Atom &pattern, GAtomId candidate, Subst &subst,
           std::vector<std::uint32_t> &bound) {
    const GAtomData &data = Interner::instance().atom(candidate);
    if (data.pred != pattern.pred || data.args.size() != pattern.args.size()) return false;
    std::size_t boundBefore = bound.size();
    for (std::size_t i = 0; i < pattern.args.size(); ++i) {
        const Term &t = pattern.args[i];
        if (isConst(t)) {
            if (std::get<ConstId>(t) != data.args[i]) {
                while (bound.size() > boundBefore) {
                    subst.erase(bound.back());
                    bound.pop_back();
                }
                return false;
            }
        } else {
            std::uint32_t v = std::get<VarId>(t).value;
            auto it = subst.find(v);
            if (it == subst.end()) {
                subst.emplace(v, data.args[i]);
                bound.push_back(v);
            } else if (!(it->second == data.args[i])) {
                while (bound.size() > boundBefore) {
                    subst.erase(bound.back());
                    bound.pop_back();
                }
                return false;
            }
        }
    }
    return true;
}

void matchFrom(const TGD &tgd, std::size_t pos, const AtomIndex &all, const AtomIndex *delta,
               std::size_t pivot, Subst &subst, const std::function<void(const Subst &)> &callback) {
    if (pos == tgd.pos.size()) {
        callback(subst);
        return;
    }
    const Atom &pattern = tgd.pos[pos];
    const AtomIndex &source = (delta && pos == pivot) ? *delta : all;
    for (GAtomId candidate : source.forPred(pattern.pred)) {
        // Positions before the pivot range over pre-delta atoms only, so each
        // homomorphism is enumerated exactly once per round.
        if (delta && pos < pivot && delta->contains(candidate)) continue;
        std::vector<std::uint32_t> bound;
        if (!unify(pattern, candidate, subst, bound)) continue;
        matchFrom(tgd, pos + 1, all, delta, pivot, subst, callback);
        for (std::uint32_t v : bound) subst.erase(v);
    }
}

} // namespace

void forEachHom(const TGD &tgd, const AtomIndex &all, const AtomIndex *delta,
                const std::function<void(const Subst &)> &callback) {
    if (tgd.pos.empty()) {
        if (!delta) {
            Subst subst;
            callback(subst);
        }
        return;
    }
    if (!delta) {
        Subst subst;
        matchFrom(tgd, 0, all, nullptr, 0, subst, callback);
        return;
    }
    for (std::size_t pivot = 0; pivot < tgd.pos.size(); ++pivot) {
        Subst subst;
        matchFrom(tgd, 0, all, delta, pivot, subst, callback);
    }
}

GAtomId instantiateAtom(const Atom &atom, const Subst &subst) {
    std::vector<ConstId> args;
    args.reserve(atom.args.size());
    for (const Term &t : atom.args) {
        if (isConst(t)) {
            args.push_back(std::get<ConstId>(t));
        } else {
            auto it = subst.find(std::get<VarId>(t).value);
            if (it == subst.end())
                throw InputError("unbound variable '" +
                                 Interner::instance().varName(std::get<VarId>(t)) +
                                 "' while grounding " + printAtom(atom));
            args.push_back(it->second);
        }
    }
    return Interner::instance().internAtom(atom.pred, std::move(args));
}

GRuleId instantiateRule(const TGD &tgd, const Subst &subst) {
    if (!tgd.existVars.empty())
        throw InputError("cannot ground a TGD with existential variables");
    std::vector<GAtomId> pos, neg;
    pos.reserve(tgd.pos.size());
    neg.reserve(tgd.neg.size());
    for (const Atom &a : tgd.pos) pos.push_back(instantiateAtom(a, subst));
    for (const Atom &a : tgd.neg) neg.push_back(instantiateAtom(a, subst));
    return Interner::instance().internRule(std::move(pos), std::move(neg),
                                           instantiateAtom(tgd.head.at(0), subst));
}

} // namespace gdlog
