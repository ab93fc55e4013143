#pragma once

#include "gdlog/rational.hpp"

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gdlog {

// Interned handles. Raw values are interning order, not semantic order;
// semantic comparisons go through the Interner below.
template <class Tag>
struct Id {
    std::uint32_t value = 0;
    friend bool operator==(Id a, Id b) { return a.value == b.value; }
    friend bool operator!=(Id a, Id b) { return a.value != b.value; }
    friend bool operator<(Id a, Id b) { return a.value < b.value; }
};

using ConstId = Id<struct ConstTag>;
using VarId = Id<struct VarTag>;
using PredId = Id<struct PredTag>;
using GAtomId = Id<struct GAtomTag>;
using GRuleId = Id<struct GRuleTag>;

struct IdHash {
    template <class Tag>
    std::size_t operator()(Id<Tag> id) const {
        return std::hash<std::uint32_t>{}(id.value);
    }
};

struct ConstData {
    bool symbolic = false;
    Rat value;        // numeric constants
    std::string name; // symbolic constants
    Rat code;         // numeric value, or the symbol's interning index
};

struct PredData {
    std::string name;
    std::size_t arity = 0;
};

struct GAtomData {
    PredId pred;
    std::vector<ConstId> args;
};

// Ground TGD without existentials: body literals canonically sorted, one head atom.
struct GRuleData {
    std::vector<GAtomId> pos;
    std::vector<GAtomId> neg;
    GAtomId head;
};

/// Process-wide hash-consing tables for constants, variables, predicates,
/// ground atoms and ground rules. Grounding and model search are set-heavy;
/// interning makes their set operations id-based. Entries are immutable once
/// created; the tables only grow.
class Interner {
  public:
    static Interner &instance();

    ConstId internNumeric(const Rat &value);
    ConstId internSymbol(const std::string &name);
    const ConstData &constant(ConstId id) const;
    // Numeric ascending, then symbolic lexicographic.
    int compareConst(ConstId a, ConstId b) const;

    VarId internVar(const std::string &name);
    const std::string &varName(VarId id) const;

    // Predicates are identified by name/arity pairs.
    PredId internPred(const std::string &name, std::size_t arity);
    const PredData &pred(PredId id) const;
    int comparePred(PredId a, PredId b) const;

    GAtomId internAtom(PredId pred, std::vector<ConstId> args);
    const GAtomData &atom(GAtomId id) const;
    int compareAtom(GAtomId a, GAtomId b) const;

    // Bodies are sorted and deduplicated before interning, so structurally
    // equal rules share one id.
    GRuleId internRule(std::vector<GAtomId> pos, std::vector<GAtomId> neg, GAtomId head);
    const GRuleData &rule(GRuleId id) const;
    int compareRule(GRuleId a, GRuleId b) const;

  private:
    Interner() = default;

    mutable std::mutex mutex_;
    std::vector<ConstData> consts_;
    std::unordered_map<std::string, std::uint32_t> numericByKey_;
    std::unordered_map<std::string, std::uint32_t> symbolByName_;
    std::size_t symbolCount_ = 0;

    std::vector<std::string> vars_;
    std::unordered_map<std::string, std::uint32_t> varByName_;

    std::vector<PredData> preds_;
    std::unordered_map<std::string, std::uint32_t> predByName_;

    std::vector<GAtomData> atoms_;
    std::unordered_map<std::string, std::uint32_t> atomByKey_;

    std::vector<GRuleData> rules_;
    std::unordered_map<std::string, std::uint32_t> ruleByKey_;
};

inline bool atomSemanticLess(GAtomId a, GAtomId b) {
    return Interner::instance().compareAtom(a, b) < 0;
}

inline bool ruleSemanticLess(GRuleId a, GRuleId b) {
    return Interner::instance().compareRule(a, b) < 0;
}

inline bool constSemanticLess(ConstId a, ConstId b) {
    return Interner::instance().compareConst(a, b) < 0;
}

} // namespace gdlog
