#include "gdlog/model.hpp"

#include "gdlog/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace gdlog {

bool Atom::ground() const {
    for (const Term &t : args)
        if (isVar(t)) return false;
    return true;
}

bool HeadAtom::hasDelta() const {
    for (const HeadArg &a : args)
        if (std::holds_alternative<DeltaTerm>(a)) return true;
    return false;
}

namespace {

void collectVars(const Term &t, std::set<std::uint32_t> &out) {
    if (isVar(t)) out.insert(std::get<VarId>(t).value);
}

void collectVars(const std::vector<Term> &ts, std::set<std::uint32_t> &out) {
    for (const Term &t : ts) collectVars(t, out);
}

} // namespace

void validateRule(const GRule &rule) {
    std::set<std::uint32_t> posVars;
    for (const Atom &a : rule.pos) collectVars(a.args, posVars);

    std::set<std::uint32_t> needed;
    for (const Atom &a : rule.neg) collectVars(a.args, needed);
    if (rule.head) {
        for (const HeadArg &arg : rule.head->args) {
            if (std::holds_alternative<Term>(arg)) {
                collectVars(std::get<Term>(arg), needed);
            } else {
                const DeltaTerm &d = std::get<DeltaTerm>(arg);
                collectVars(d.params, needed);
                collectVars(d.sig, needed);
                if (d.params.empty())
                    throw InputError("delta term '" + d.dist + "' needs at least one parameter");
            }
        }
    }
    for (std::uint32_t v : needed) {
        if (!posVars.count(v))
            throw InputError("unsafe rule: variable '" + Interner::instance().varName(VarId{v}) +
                             "' does not occur in a positive body atom");
    }
}

GroundProgram::GroundProgram(std::vector<GRuleId> rules) : rules_(std::move(rules)) {
    std::sort(rules_.begin(), rules_.end(), ruleSemanticLess);
    rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
}

bool GroundProgram::contains(GRuleId id) const {
    return std::binary_search(rules_.begin(), rules_.end(), id, ruleSemanticLess);
}

bool GroundProgram::subsetOf(const GroundProgram &other) const {
    return std::includes(other.rules_.begin(), other.rules_.end(), rules_.begin(), rules_.end(),
                         ruleSemanticLess);
}

GroundProgram GroundProgram::unionWith(const GroundProgram &other) const {
    std::vector<GRuleId> merged;
    merged.reserve(rules_.size() + other.rules_.size());
    std::set_union(rules_.begin(), rules_.end(), other.rules_.begin(), other.rules_.end(),
                   std::back_inserter(merged), ruleSemanticLess);
    GroundProgram result;
    result.rules_ = std::move(merged);
    return result;
}

GroundProgram GroundProgram::minus(const GroundProgram &other) const {
    std::vector<GRuleId> rest;
    std::set_difference(rules_.begin(), rules_.end(), other.rules_.begin(), other.rules_.end(),
                        std::back_inserter(rest), ruleSemanticLess);
    GroundProgram result;
    result.rules_ = std::move(rest);
    return result;
}

std::vector<GAtomId> GroundProgram::heads() const {
    std::vector<GAtomId> hs;
    hs.reserve(rules_.size());
    for (GRuleId r : rules_) hs.push_back(Interner::instance().rule(r).head);
    return sortedAtomSet(std::move(hs));
}

std::vector<GAtomId> sortedAtomSet(std::vector<GAtomId> atoms) {
    std::sort(atoms.begin(), atoms.end(), atomSemanticLess);
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

GProgram attachDatabase(const GProgram &program, const Database &db) {
    Interner &in = Interner::instance();
    std::unordered_set<std::uint32_t> programPreds;
    std::unordered_map<std::string, std::size_t> arityOfName;
    for (PredId p : collectPredicates(program)) {
        programPreds.insert(p.value);
        arityOfName.emplace(in.pred(p).name, in.pred(p).arity);
    }

    GProgram result;
    result.failPred = program.failPred;
    result.auxPred = program.auxPred;
    result.rules.reserve(program.rules.size() + db.facts.size());
    for (GAtomId fact : db.facts) {
        const GAtomData &data = in.atom(fact);
        if (!programPreds.count(data.pred.value)) {
            // A fact over a fresh predicate extends the extensional schema,
            // but reusing a program predicate name at another arity is a
            // mistake worth flagging.
            auto it = arityOfName.find(in.pred(data.pred).name);
            if (it != arityOfName.end() && it->second != data.args.size())
                throw InputError("database fact " + std::to_string(data.args.size()) +
                                 "-ary '" + in.pred(data.pred).name +
                                 "' mismatches the program's " + std::to_string(it->second) +
                                 "-ary predicate");
        }
        HeadAtom head;
        head.pred = data.pred;
        for (ConstId c : data.args) head.args.push_back(Term{c});
        result.rules.push_back(GRule{{}, {}, std::move(head)});
    }
    for (const GRule &r : program.rules) result.rules.push_back(r);
    return result;
}

SchemaSplit edbIdbSplit(const GProgram &program) {
    Interner &in = Interner::instance();
    std::set<std::uint32_t> headPreds;
    for (const GRule &r : program.rules)
        if (r.head) headPreds.insert(r.head->pred.value);

    SchemaSplit split;
    for (PredId p : collectPredicates(program)) {
        if (headPreds.count(p.value))
            split.idb.push_back(p);
        else
            split.edb.push_back(p);
    }
    auto byName = [&in](PredId a, PredId b) { return in.comparePred(a, b) < 0; };
    std::sort(split.edb.begin(), split.edb.end(), byName);
    std::sort(split.idb.begin(), split.idb.end(), byName);
    return split;
}

namespace {

// Fresh predicate name: `base` if unused, otherwise base2, base3, ...
std::string freshPredName(const std::string &base, const std::set<std::string> &taken) {
    if (!taken.count(base)) return base;
    for (int i = 2;; ++i) {
        std::string candidate = base + std::to_string(i);
        if (!taken.count(candidate)) return candidate;
    }
}

} // namespace

GProgram desugarBot(const GProgram &program) {
    bool hasBot = false;
    for (const GRule &r : program.rules)
        if (!r.head) hasBot = true;
    if (!hasBot) return program;

    Interner &in = Interner::instance();
    std::set<std::string> taken;
    for (PredId p : collectPredicates(program)) taken.insert(in.pred(p).name);

    PredId fail = in.internPred(freshPredName("Fail", taken), 0);
    PredId aux = in.internPred(freshPredName("Aux", taken), 0);

    GProgram result;
    result.failPred = fail;
    result.auxPred = aux;
    for (const GRule &r : program.rules) {
        GRule copy = r;
        if (!copy.head) copy.head = HeadAtom{fail, {}};
        result.rules.push_back(std::move(copy));
    }
    // Fail, not Aux -> Aux: forces Fail to be false in every stable model.
    result.rules.push_back(GRule{{Atom{fail, {}}}, {Atom{aux, {}}}, HeadAtom{aux, {}}});
    return result;
}

std::vector<PredId> collectPredicates(const GProgram &program) {
    std::set<std::uint32_t> seen;
    std::vector<PredId> preds;
    auto add = [&](PredId p) {
        if (seen.insert(p.value).second) preds.push_back(p);
    };
    for (const GRule &r : program.rules) {
        for (const Atom &a : r.pos) add(a.pred);
        for (const Atom &a : r.neg) add(a.pred);
        if (r.head) add(r.head->pred);
    }
    Interner &in = Interner::instance();
    std::sort(preds.begin(), preds.end(),
              [&in](PredId a, PredId b) { return in.comparePred(a, b) < 0; });
    return preds;
}

std::vector<VarId> ruleVariables(const GRule &rule) {
    std::set<std::uint32_t> seen;
    std::vector<VarId> vars;
    auto addTerm = [&](const Term &t) {
        if (isVar(t) && seen.insert(std::get<VarId>(t).value).second)
            vars.push_back(std::get<VarId>(t));
    };
    for (const Atom &a : rule.pos)
        for (const Term &t : a.args) addTerm(t);
    for (const Atom &a : rule.neg)
        for (const Term &t : a.args) addTerm(t);
    if (rule.head) {
        for (const HeadArg &arg : rule.head->args) {
            if (std::holds_alternative<Term>(arg)) {
                addTerm(std::get<Term>(arg));
            } else {
                const DeltaTerm &d = std::get<DeltaTerm>(arg);
                for (const Term &t : d.params) addTerm(t);
                for (const Term &t : d.sig) addTerm(t);
            }
        }
    }
    return vars;
}

TGD tgdOfGroundRule(GRuleId id) {
    Interner &in = Interner::instance();
    const GRuleData &data = in.rule(id);
    TGD tgd;
    auto toAtom = [&in](GAtomId a) {
        const GAtomData &d = in.atom(a);
        Atom atom;
        atom.pred = d.pred;
        for (ConstId c : d.args) atom.args.push_back(Term{c});
        return atom;
    };
    for (GAtomId a : data.pos) tgd.pos.push_back(toAtom(a));
    for (GAtomId a : data.neg) tgd.neg.push_back(toAtom(a));
    tgd.head.push_back(toAtom(data.head));
    return tgd;
}

} // namespace gdlog
