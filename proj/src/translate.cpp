#include "gdlog/translate.hpp"

#include "gdlog/errors.hpp"
#include "gdlog/printer.hpp"

#include <map>
#include <set>

namespace gdlog {

const DeltaPredInfo &TranslationResult::infoForActive(PredId p) const {
    return deltaPreds.at(byActivePred.at(p.value));
}

const DeltaPredInfo &TranslationResult::infoForResult(PredId p) const {
    return deltaPreds.at(byResultPred.at(p.value));
}

std::string activePredName(const std::string &dist, std::size_t sigCount) {
    return "__active__" + dist + "__" + std::to_string(sigCount);
}

std::string resultPredName(const std::string &dist, std::size_t sigCount) {
    return "__result__" + dist + "__" + std::to_string(sigCount);
}

namespace {

struct DeltaOccurrence {
    std::size_t argIndex;
    DeltaTerm term;
};

DeltaPredInfo deltaPredsFor(const DeltaTerm &d) {
    DeltaPredInfo info;
    info.dist = d.dist;
    info.paramCount = d.params.size();
    info.sigCount = d.sig.size();
    Interner &in = Interner::instance();
    info.active = in.internPred(activePredName(d.dist, d.sig.size()), d.params.size() + d.sig.size());
    info.result = in.internPred(resultPredName(d.dist, d.sig.size()), d.params.size() + d.sig.size() + 1);
    return info;
}

VarId freshVar(std::size_t j, const std::set<std::string> &taken) {
    std::string prefix = "Z";
    for (;;) {
        std::string candidate = prefix + std::to_string(j);
        if (!taken.count(candidate)) return Interner::instance().internVar(candidate);
        prefix += "Z";
    }
}

std::set<std::string> ruleVarNames(const GRule &rule) {
    std::set<std::string> names;
    for (VarId v : ruleVariables(rule)) names.insert(Interner::instance().varName(v));
    return names;
}

} // namespace

std::vector<TGD> translateRule(const GRule &rule) {
    validateRule(rule);
    if (!rule.head) throw InputError("translate requires 'false' heads to be desugared first");

    std::vector<DeltaOccurrence> deltas;
    for (std::size_t i = 0; i < rule.head->args.size(); ++i)
        if (std::holds_alternative<DeltaTerm>(rule.head->args[i]))
            deltas.push_back({i, std::get<DeltaTerm>(rule.head->args[i])});

    std::vector<TGD> out;
    std::set<std::string> seen;
    auto push = [&](TGD tgd) {
        std::string key = printTGD(tgd);
        if (seen.insert(key).second) out.push_back(std::move(tgd));
    };

    if (deltas.empty()) {
        TGD tgd;
        tgd.pos = rule.pos;
        tgd.neg = rule.neg;
        Atom head;
        head.pred = rule.head->pred;
        for (const HeadArg &arg : rule.head->args) head.args.push_back(std::get<Term>(arg));
        tgd.head.push_back(std::move(head));
        push(std::move(tgd));
        return out;
    }

    std::set<std::string> takenVars = ruleVarNames(rule);
    std::vector<VarId> ys;
    std::vector<Atom> resultAtoms;
    for (std::size_t j = 0; j < deltas.size(); ++j) {
        const DeltaTerm &d = deltas[j].term;
        DeltaPredInfo info = deltaPredsFor(d);
        VarId y = freshVar(j + 1, takenVars);
        ys.push_back(y);

        Atom activeAtom;
        activeAtom.pred = info.active;
        activeAtom.args = d.params;
        activeAtom.args.insert(activeAtom.args.end(), d.sig.begin(), d.sig.end());

        Atom resultAtom;
        resultAtom.pred = info.result;
        resultAtom.args = activeAtom.args;
        resultAtom.args.push_back(Term{y});
        resultAtoms.push_back(resultAtom);

        TGD activeRule;
        activeRule.pos = rule.pos;
        activeRule.neg = rule.neg;
        activeRule.head.push_back(activeAtom);
        push(std::move(activeRule));

        TGD atr;
        atr.pos.push_back(activeAtom);
        atr.head.push_back(resultAtom);
        atr.existVars.push_back(y);
        push(std::move(atr));
    }

    // The final rule joins every Result atom with the full original body and
    // replaces delta terms with the y variables.
    TGD finalRule;
    finalRule.pos = resultAtoms;
    finalRule.pos.insert(finalRule.pos.end(), rule.pos.begin(), rule.pos.end());
    finalRule.neg = rule.neg;
    Atom head;
    head.pred = rule.head->pred;
    std::size_t nextDelta = 0;
    for (std::size_t i = 0; i < rule.head->args.size(); ++i) {
        if (std::holds_alternative<DeltaTerm>(rule.head->args[i])) {
            head.args.push_back(Term{ys[nextDelta]});
            ++nextDelta;
        } else {
            head.args.push_back(std::get<Term>(rule.head->args[i]));
        }
    }
    finalRule.head.push_back(std::move(head));
    push(std::move(finalRule));
    return out;
}

namespace {

void checkReservedNames(const GProgram &program) {
    for (PredId p : collectPredicates(program)) {
        const std::string &name = Interner::instance().pred(p).name;
        if (name.rfind("__active__", 0) == 0 || name.rfind("__result__", 0) == 0)
            throw InputError("predicate name '" + name + "' collides with translation-reserved names");
    }
}

void registerDelta(TranslationResult &result, const DeltaTerm &d) {
    DeltaPredInfo info = deltaPredsFor(d);
    if (result.byActivePred.count(info.active.value)) return;
    result.deltaPreds.push_back(info);
    result.byActivePred[info.active.value] = result.deltaPreds.size() - 1;
    result.byResultPred[info.result.value] = result.deltaPreds.size() - 1;
}

TranslationResult translateWith(const GProgram &program,
                                std::vector<TGD> (*ruleTranslator)(const GRule &)) {
    checkReservedNames(program);
    TranslationResult result;
    std::map<std::string, std::size_t> existsByKey;
    std::map<std::string, std::size_t> noExistsByKey;
    for (std::size_t ruleIdx = 0; ruleIdx < program.rules.size(); ++ruleIdx) {
        const GRule &rule = program.rules[ruleIdx];
        if (rule.head) {
            for (const HeadArg &arg : rule.head->args)
                if (std::holds_alternative<DeltaTerm>(arg))
                    registerDelta(result, std::get<DeltaTerm>(arg));
        }
        for (TGD &tgd : ruleTranslator(rule)) {
            std::string key = printTGD(tgd);
            if (!tgd.existVars.empty()) {
                if (!existsByKey.count(key)) {
                    existsByKey[key] = result.sigmaExists.size();
                    result.sigmaExists.push_back(std::move(tgd));
                }
            } else {
                auto it = noExistsByKey.find(key);
                if (it == noExistsByKey.end()) {
                    noExistsByKey[key] = result.sigmaNoExists.size();
                    result.sigmaNoExists.push_back(std::move(tgd));
                    result.noExistsOrigins.push_back({ruleIdx});
                } else {
                    result.noExistsOrigins[it->second].push_back(ruleIdx);
                }
            }
        }
    }
    return result;
}

std::vector<TGD> translateRuleBckov(const GRule &rule) {
    validateRule(rule);
    if (!rule.head) throw InputError("translate requires 'false' heads to be desugared first");
    if (!rule.neg.empty())
        throw InputError("the BCKOV translation is defined for positive programs only");

    std::vector<DeltaOccurrence> deltas;
    for (std::size_t i = 0; i < rule.head->args.size(); ++i)
        if (std::holds_alternative<DeltaTerm>(rule.head->args[i]))
            deltas.push_back({i, std::get<DeltaTerm>(rule.head->args[i])});

    std::vector<TGD> out;
    std::set<std::string> seen;
    auto push = [&](TGD tgd) {
        std::string key = printTGD(tgd);
        if (seen.insert(key).second) out.push_back(std::move(tgd));
    };

    if (deltas.empty()) {
        TGD tgd;
        tgd.pos = rule.pos;
        Atom head;
        head.pred = rule.head->pred;
        for (const HeadArg &arg : rule.head->args) head.args.push_back(std::get<Term>(arg));
        tgd.head.push_back(std::move(head));
        push(std::move(tgd));
        return out;
    }

    std::set<std::string> takenVars = ruleVarNames(rule);
    std::vector<VarId> ys;
    std::vector<Atom> resultAtoms;
    for (std::size_t j = 0; j < deltas.size(); ++j) {
        const DeltaTerm &d = deltas[j].term;
        DeltaPredInfo info = deltaPredsFor(d);
        VarId y = freshVar(j + 1, takenVars);
        ys.push_back(y);

        Atom resultAtom;
        resultAtom.pred = info.result;
        resultAtom.args = d.params;
        resultAtom.args.insert(resultAtom.args.end(), d.sig.begin(), d.sig.end());
        resultAtom.args.push_back(Term{y});
        resultAtoms.push_back(resultAtom);

        // body -> exists y Result(p, q, y): no Active layer in this translation.
        TGD direct;
        direct.pos = rule.pos;
        direct.head.push_back(resultAtom);
        direct.existVars.push_back(y);
        push(std::move(direct));
    }

    TGD finalRule;
    finalRule.pos = resultAtoms;
    finalRule.pos.insert(finalRule.pos.end(), rule.pos.begin(), rule.pos.end());
    Atom head;
    head.pred = rule.head->pred;
    std::size_t nextDelta = 0;
    for (std::size_t i = 0; i < rule.head->args.size(); ++i) {
        if (std::holds_alternative<DeltaTerm>(rule.head->args[i])) {
            head.args.push_back(Term{ys[nextDelta]});
            ++nextDelta;
        } else {
            head.args.push_back(std::get<Term>(rule.head->args[i]));
        }
    }
    finalRule.head.push_back(std::move(head));
    push(std::move(finalRule));
    return out;
}

} // namespace

TranslationResult translateProgram(const GProgram &program) {
    return translateWith(program, &translateRule);
}

TranslationResult translateBckov(const GProgram &program) {
    return translateWith(program, &translateRuleBckov);
}

} // namespace gdlog
