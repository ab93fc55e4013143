#include "gdlog/interner.hpp"

#include "gdlog/errors.hpp"

#include <algorithm>

namespace gdlog {

namespace {

std::string atomKey(PredId pred, const std::vector<ConstId> &args) {
    std::string key = std::to_string(pred.value);
    for (ConstId a : args) {
        key += ',';
        key += std::to_string(a.value);
    }
    return key;
}

std::string ruleKey(const std::vector<GAtomId> &pos, const std::vector<GAtomId> &neg, GAtomId head) {
    std::string key;
    for (GAtomId a : pos) {
        key += std::to_string(a.value);
        key += ',';
    }
    key += '|';
    for (GAtomId a : neg) {
        key += std::to_string(a.value);
        key += ',';
    }
    key += '|';
    key += std::to_string(head.value);
    return key;
}

} // namespace

Interner &Interner::instance() {
    static Interner interner;
    return interner;
}

ConstId Interner::internNumeric(const Rat &value) {
    Rat canonical = value;
    canonical.canonicalize();
    std::lock_guard<std::mutex> lock(mutex_);
    std::string key = canonical.get_str();
    auto it = numericByKey_.find(key);
    if (it != numericByKey_.end()) return ConstId{it->second};
    ConstData data;
    data.symbolic = false;
    data.value = canonical;
    data.code = canonical;
    consts_.push_back(std::move(data));
    std::uint32_t id = static_cast<std::uint32_t>(consts_.size() - 1);
    numericByKey_.emplace(std::move(key), id);
    return ConstId{id};
}

ConstId Interner::internSymbol(const std::string &name) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = symbolByName_.find(name);
    if (it != symbolByName_.end()) return ConstId{it->second};
    ConstData data;
    data.symbolic = true;
    data.name = name;
    data.code = Rat(static_cast<unsigned long>(symbolCount_));
    ++symbolCount_;
    consts_.push_back(std::move(data));
    std::uint32_t id = static_cast<std::uint32_t>(consts_.size() - 1);
    symbolByName_.emplace(name, id);
    return ConstId{id};
}

const ConstData &Interner::constant(ConstId id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return consts_.at(id.value);
}

int Interner::compareConst(ConstId a, ConstId b) const {
    if (a == b) return 0;
    std::lock_guard<std::mutex> lock(mutex_);
    const ConstData &ca = consts_.at(a.value);
    const ConstData &cb = consts_.at(b.value);
    if (ca.symbolic != cb.symbolic) return ca.symbolic ? 1 : -1;
    if (!ca.symbolic) {
        int c = cmp(ca.value, cb.value);
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    return ca.name < cb.name ? -1 : (ca.name > cb.name ? 1 : 0);
}

VarId Interner::internVar(const std::string &name) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = varByName_.find(name);
    if (it != varByName_.end()) return VarId{it->second};
    vars_.push_back(name);
    std::uint32_t id = static_cast<std::uint32_t>(vars_.size() - 1);
    varByName_.emplace(name, id);
    return VarId{id};
}

const std::string &Interner::varName(VarId id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return vars_.at(id.value);
}

PredId Interner::internPred(const std::string &name, std::size_t arity) {
    std::lock_guard<std::mutex> lock(mutex_);
    std::string key = name + "/" + std::to_string(arity);
    auto it = predByName_.find(key);
    if (it != predByName_.end()) return PredId{it->second};
    preds_.push_back(PredData{name, arity});
    std::uint32_t id = static_cast<std::uint32_t>(preds_.size() - 1);
    predByName_.emplace(std::move(key), id);
    return PredId{id};
}

const PredData &Interner::pred(PredId id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return preds_.at(id.value);
}

int Interner::comparePred(PredId a, PredId b) const {
    if (a == b) return 0;
    std::lock_guard<std::mutex> lock(mutex_);
    const PredData &pa = preds_.at(a.value);
    const PredData &pb = preds_.at(b.value);
    if (pa.name != pb.name) return pa.name < pb.name ? -1 : 1;
    if (pa.arity != pb.arity) return pa.arity < pb.arity ? -1 : 1;
    return 0;
}

GAtomId Interner::internAtom(PredId pred, std::vector<ConstId> args) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (preds_.at(pred.value).arity != args.size())
        throw InputError("atom over '" + preds_.at(pred.value).name + "' has " +
                         std::to_string(args.size()) + " arguments, expected " +
                         std::to_string(preds_.at(pred.value).arity));
    std::string key = atomKey(pred, args);
    auto it = atomByKey_.find(key);
    if (it != atomByKey_.end()) return GAtomId{it->second};
    atoms_.push_back(GAtomData{pred, std::move(args)});
    std::uint32_t id = static_cast<std::uint32_t>(atoms_.size() - 1);
    atomByKey_.emplace(std::move(key), id);
    return GAtomId{id};
}

const GAtomData &Interner::atom(GAtomId id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return atoms_.at(id.value);
}

int Interner::compareAtom(GAtomId a, GAtomId b) const {
    if (a == b) return 0;
    GAtomData da, db;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        da = atoms_.at(a.value);
        db = atoms_.at(b.value);
    }
    int c = comparePred(da.pred, db.pred);
    if (c != 0) return c;
    for (std::size_t i = 0; i < da.args.size() && i < db.args.size(); ++i) {
        c = compareConst(da.args[i], db.args[i]);
        if (c != 0) return c;
    }
    if (da.args.size() != db.args.size()) return da.args.size() < db.args.size() ? -1 : 1;
    return 0;
}

GRuleId Interner::internRule(std::vector<GAtomId> pos, std::vector<GAtomId> neg, GAtomId head) {
    auto canon = [this](std::vector<GAtomId> &v) {
        std::sort(v.begin(), v.end(), [this](GAtomId x, GAtomId y) { return compareAtom(x, y) < 0; });
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    canon(pos);
    canon(neg);
    std::lock_guard<std::mutex> lock(mutex_);
    std::string key = ruleKey(pos, neg, head);
    auto it = ruleByKey_.find(key);
    if (it != ruleByKey_.end()) return GRuleId{it->second};
    rules_.push_back(GRuleData{std::move(pos), std::move(neg), head});
    std::uint32_t id = static_cast<std::uint32_t>(rules_.size() - 1);
    ruleByKey_.emplace(std::move(key), id);
    return GRuleId{id};
}

const GRuleData &Interner::rule(GRuleId id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return rules_.at(id.value);
}

int Interner::compareRule(GRuleId a, GRuleId b) const {
    if (a == b) return 0;
    GRuleData da, db;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        da = rules_.at(a.value);
        db = rules_.at(b.value);
    }
    int c = compareAtom(da.head, db.head);
    if (c != 0) return c;
    auto cmpVec = [this](const std::vector<GAtomId> &x, const std::vector<GAtomId> &y) {
        for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
            int r = compareAtom(x[i], y[i]);
            if (r != 0) return r;
        }
        if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
        return 0;
    };
    c = cmpVec(da.pos, db.pos);
    if (c != 0) return c;
    return cmpVec(da.neg, db.neg);
}

} // namespace gdlog
