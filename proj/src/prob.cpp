#include "gdlog/prob.hpp"

#include "gdlog/errors.hpp"
#include "gdlog/printer.hpp"

#include <algorithm>
#include <map>

namespace gdlog {

Projection Projection::userPredicates(const GProgram &program, const TranslationResult &tr) {
    Projection proj;
    for (PredId p : collectPredicates(program)) {
        if (tr.isActivePred(p) || tr.isResultPred(p)) continue;
        if (program.failPred && *program.failPred == p) continue;
        if (program.auxPred && *program.auxPred == p) continue;
        proj.keepPreds.insert(p.value);
    }
    return proj;
}

Interpretation Projection::apply(const Interpretation &interp) const {
    Interpretation kept;
    for (GAtomId a : interp)
        if (keepPreds.count(Interner::instance().atom(a).pred.value)) kept.push_back(a);
    return canonicalInterpretation(std::move(kept));
}

SmsSet Projection::apply(const SmsSet &sms) const {
    SmsSet projected;
    for (const Interpretation &m : sms) projected.push_back(apply(m));
    return canonicalSms(std::move(projected));
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

int compareSms(const SmsSet &a, const SmsSet &b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = compareInterp(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

OutcomeDistribution buildDistribution(const ExploreResult &explored, const GrounderHandle &handle,
                                      const SolverOptions &solverOpts,
                                      const std::optional<Projection> &projection) {
    OutcomeDistribution dist;
    dist.truncatedMass = explored.truncatedMass;

    std::map<std::string, std::size_t> classIndexByKey;
    for (const ChasePath &path : explored.complete) {
        OutcomeRecord record;
        record.choices = path.choices;
        record.outcome = path.choices.asProgram().unionWith(handle.eval(path.choices));
        record.prob = path.prob;
        try {
            record.sms = allStableModels(record.outcome, solverOpts);
        } catch (const CapacityError &e) {
            throw CapacityError(std::string(e.what()) + " (while solving the outcome of choices {" +
                                    path.choices.cacheKey() + "})",
                                e.cap());
        }
        SmsSet key = projection ? projection->apply(record.sms) : record.sms;
        std::string keyText;
        for (const Interpretation &m : key) {
            keyText += '{';
            for (GAtomId a : m) keyText += std::to_string(a.value) + ",";
            keyText += '}';
        }
        dist.finiteMass += record.prob;
        dist.outcomes.push_back(std::move(record));

        auto it = classIndexByKey.find(keyText);
        if (it == classIndexByKey.end()) {
            OutcomeClass cls;
            cls.key = std::move(key);
            cls.mass = dist.outcomes.back().prob;
            cls.outcomeIndices.push_back(dist.outcomes.size() - 1);
            dist.classes.push_back(std::move(cls));
            classIndexByKey.emplace(std::move(keyText), dist.classes.size() - 1);
        } else {
            dist.classes[it->second].mass += dist.outcomes.back().prob;
            dist.classes[it->second].outcomeIndices.push_back(dist.outcomes.size() - 1);
        }
    }

    std::sort(dist.classes.begin(), dist.classes.end(),
              [](const OutcomeClass &a, const OutcomeClass &b) { return compareSms(a.key, b.key) < 0; });

    dist.infinityLo = Rat(1) - dist.finiteMass - dist.truncatedMass;
    if (dist.infinityLo < 0) dist.infinityLo = Rat(0);
    dist.infinityHi = Rat(1) - dist.finiteMass;
    return dist;
}

QueryResult evalQuery(const OutcomeDistribution &dist, const Query &query,
                      const GProgram &program) {
    if (query.kind == Query::Kind::AtomBrave || query.kind == Query::Kind::AtomCautious) {
        if (!query.atom) throw InputError("atom query without an atom");
        PredId pred = Interner::instance().atom(*query.atom).pred;
        bool known = false;
        for (PredId p : collectPredicates(program))
            if (p == pred) known = true;
        if (!known)
            throw InputError("unknown atom predicate '" + Interner::instance().pred(pred).name +
                             "'");
    }

    auto contains = [](const Interpretation &interp, GAtomId a) {
        return std::binary_search(interp.begin(), interp.end(), a, atomSemanticLess);
    };

    Rat mass(0);
    for (const OutcomeClass &cls : dist.classes) {
        bool counts = false;
        switch (query.kind) {
        case Query::Kind::HasStableModel:
            counts = !cls.key.empty();
            break;
        case Query::Kind::SmsClass:
            counts = query.cls && compareSms(cls.key, *query.cls) == 0;
            break;
        case Query::Kind::AtomBrave:
            for (const Interpretation &m : cls.key)
                if (contains(m, *query.atom)) counts = true;
            break;
        case Query::Kind::AtomCautious: {
            counts = !cls.key.empty();
            for (const Interpretation &m : cls.key)
                if (!contains(m, *query.atom)) counts = false;
            break;
        }
        }
        if (counts) mass += cls.mass;
    }
    QueryResult result{mass, mass + dist.truncatedMass};
    return result;
}

AsGoodAsResult asGoodAs(const OutcomeDistribution &a, const OutcomeDistribution &b) {
    if (a.truncatedMass != 0 || b.truncatedMass != 0)
        throw InputError("as-good-as comparison requires zero truncated mass");

    // Walk the union of class keys; missing classes have mass 0.
    AsGoodAsResult result;
    std::size_t i = 0, j = 0;
    auto report = [&](const SmsSet &key, const Rat &massA, const Rat &massB) {
        if (massA < massB && result.holds) {
            result.holds = false;
            result.witnessKey = key;
            result.witnessMassA = massA;
            result.witnessMassB = massB;
        }
    };
    while (i < a.classes.size() || j < b.classes.size()) {
        if (i < a.classes.size() && j < b.classes.size()) {
            int c = compareSms(a.classes[i].key, b.classes[j].key);
            if (c == 0) {
                report(a.classes[i].key, a.classes[i].mass, b.classes[j].mass);
                ++i;
                ++j;
            } else if (c < 0) {
                ++i; // class absent in b: mass_b = 0, dominance trivial
            } else {
                report(b.classes[j].key, Rat(0), b.classes[j].mass);
                ++j;
            }
        } else if (i < a.classes.size()) {
            ++i;
        } else {
            report(b.classes[j].key, Rat(0), b.classes[j].mass);
            ++j;
        }
    }
    return result;
}

} // namespace gdlog
