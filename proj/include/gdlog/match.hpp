#pragma once

#include "gdlog/model.hpp"

#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace gdlog {

/// Variable binding produced by matching.
using Subst = std::unordered_map<std::uint32_t, ConstId>;

/// Ground atoms indexed by predicate, with O(1) membership.
class AtomIndex {
  public:
    bool add(GAtomId atom); // false if already present
    bool contains(GAtomId atom) const;
    const std::vector<GAtomId> &forPred(PredId pred) const;
    std::size_t size() const { return members_.size(); }

  private:
    std::unordered_map<std::uint32_t, std::vector<GAtomId>> byPred_;
    std::unordered_set<std::uint32_t> members_;
};

/// Enumerates homomorphisms from tgd.pos into `all`. With `delta` given,
/// only homomorphisms using at least one delta atom are produced (semi-naive
/// rounds); rules with an empty positive body then produce nothing.
void forEachHom(const TGD &tgd, const AtomIndex &all, const AtomIndex *delta,
                const std::function<void(const Subst &)> &callback);

/// Applies a total substitution to an atom. Throws on unbound variables.
GAtomId instantiateAtom(const Atom &atom, const Subst &subst);

/// Grounds an existential-free TGD under a total substitution.
GRuleId instantiateRule(const TGD &tgd, const Subst &subst);

} // namespace gdlog
