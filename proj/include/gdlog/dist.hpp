#pragma once

#include "gdlog/interner.hpp"
#include "gdlog/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gdlog {

struct SupportEntry {
    ConstId outcome;
    Rat prob; // always > 0
};

/// Finite support, ascending by constant order, probabilities summing to 1.
using Support = std::vector<SupportEntry>;

struct ParamDistribution {
    std::string name;
    std::size_t dimension = 0;
    std::function<Support(const std::vector<Rat> &)> supportFn;
};

/// The finite set Delta of parameterized discrete distributions. Only
/// finite-support distributions are representable, which keeps every trigger
/// application finitely branching and chase enumeration exhaustive.
class DistributionRegistry {
  public:
    /// Registry with the built-ins:
    ///   flip (dimension 1): flip<p>(1) = p, flip<p>(0) = 1-p; p outside [0,1]
    ///     is rejected.
    ///   die (dimension 6): die<p1..p6>(i) = pi when the pi are nonnegative and
    ///     sum to 1; any other parameterization yields outcome 0 with
    ///     probability 1.
    static DistributionRegistry withBuiltins();

    bool has(const std::string &name) const;
    const ParamDistribution &find(const std::string &name) const; // throws on unknown name

    /// Support of dist<params>, sorted ascending by outcome. Throws on unknown
    /// names, dimension mismatches and distribution-specific parameter errors.
    Support support(const std::string &name, const std::vector<Rat> &params) const;

    void add(ParamDistribution dist); // throws on duplicate name

    /// Registers user distributions from a JSON document of the form
    ///   {"name": {"dimension": k,
    ///             "table": [{"params": [...], "support":
    ///                        [{"value": ..., "prob": "num/den"}, ...]}, ...]}}
    /// Rationals are given as integers or as strings ("1/3", "0.25").
    void addFromJson(const std::string &jsonText);

    std::vector<std::string> names() const;

  private:
    std::map<std::string, ParamDistribution> dists_;
};

/// Checks the support invariants (probabilities positive and summing to 1,
/// outcomes distinct and ascending). Throws InputError on violation.
void validateSupport(const std::string &name, const Support &support);

} // namespace gdlog
