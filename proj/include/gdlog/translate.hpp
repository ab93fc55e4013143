#pragma once

#include "gdlog/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace gdlog {

/// Fresh predicate pair for a (distribution, event-signature-arity) key:
/// Active has arity |params|+n, Result has arity |params|+n+1.
struct DeltaPredInfo {
    std::string dist;
    std::size_t paramCount = 0;
    std::size_t sigCount = 0;
    PredId active;
    PredId result;
};

struct TranslationResult {
    std::vector<TGD> sigmaExists;   // the active-to-result TGDs
    std::vector<TGD> sigmaNoExists; // everything else
    // Indices into the source program of the rules each deduplicated TGD came
    // from; parallel to sigmaNoExists. Drives the stratum-wise rule partition
    // of the perfect grounder.
    std::vector<std::vector<std::size_t>> noExistsOrigins;

    std::vector<DeltaPredInfo> deltaPreds;
    std::map<std::uint32_t, std::size_t> byActivePred; // PredId.value -> deltaPreds index
    std::map<std::uint32_t, std::size_t> byResultPred;

    bool isActivePred(PredId p) const { return byActivePred.count(p.value) > 0; }
    bool isResultPred(PredId p) const { return byResultPred.count(p.value) > 0; }
    const DeltaPredInfo &infoForActive(PredId p) const;
    const DeltaPredInfo &infoForResult(PredId p) const;
};

/// Deterministic fresh names for the predicate pair of delta terms over
/// distribution `dist` with event signature arity n.
std::string activePredName(const std::string &dist, std::size_t sigCount);
std::string resultPredName(const std::string &dist, std::size_t sigCount);

/// Translates one rule: r = 0 delta terms gives the rule itself as a TGD;
/// otherwise one Active rule and one AtR TGD per delta occurrence plus the
/// final rule joining all Result atoms with the full original body.
std::vector<TGD> translateRule(const GRule &rule);

/// Union of per-rule translations, split into AtR TGDs and the rest.
/// Requires `false` heads to be desugared already.
TranslationResult translateProgram(const GProgram &program);

/// The direct translation for positive programs (no Active layer):
/// body -> exists y Result(...) per delta occurrence plus the Result-joined
/// rule. Throws if the program has negative literals.
TranslationResult translateBckov(const GProgram &program);

} // namespace gdlog
