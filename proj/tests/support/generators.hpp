#pragma once

#include "gdlog/model.hpp"

#include "testutil.hpp"

#include <random>
#include <string>
#include <vector>

namespace gdlog::test {

// --- random ground TGD programs over 0-ary atoms ---

struct GroundGenOptions {
    std::size_t maxAtoms = 10;
    std::size_t maxRules = 8;
    bool stratified = false;
    bool positive = false;
};

inline GroundProgram randomGroundProgram(std::mt19937 &rng, const GroundGenOptions &opts) {
    Interner &in = Interner::instance();
    std::size_t nAtoms = 2 + rng() % (opts.maxAtoms - 1);
    std::vector<GAtomId> atoms;
    std::vector<std::size_t> levelOf;
    for (std::size_t i = 0; i < nAtoms; ++i) {
        atoms.push_back(in.internAtom(in.internPred("gnd" + std::to_string(i), 0), {}));
        levelOf.push_back(rng() % 4);
    }

    std::vector<GRuleId> rules;
    std::size_t nRules = 1 + rng() % opts.maxRules;
    for (std::size_t r = 0; r < nRules; ++r) {
        std::size_t headIdx = rng() % nAtoms;
        std::vector<GAtomId> pos, neg;
        std::size_t nPos = rng() % 3;
        std::size_t nNeg = opts.positive ? 0 : rng() % 2;
        for (std::size_t i = 0; i < nPos; ++i) {
            std::size_t cand = rng() % nAtoms;
            if (opts.stratified && levelOf[cand] > levelOf[headIdx]) continue;
            pos.push_back(atoms[cand]);
        }
        for (std::size_t i = 0; i < nNeg; ++i) {
            std::size_t cand = rng() % nAtoms;
            if (opts.stratified && levelOf[cand] >= levelOf[headIdx]) continue;
            neg.push_back(atoms[cand]);
        }
        rules.push_back(in.internRule(std::move(pos), std::move(neg), atoms[headIdx]));
    }
    return GroundProgram(std::move(rules));
}

// --- random generative programs ---

struct ProgramGenOptions {
    bool positive = false;   // no negative literals at all
    bool stratified = true;  // negation only on strictly earlier predicates
    std::size_t maxRules = 3;
    std::size_t maxConsts = 2;
    int flipDenominator = 2; // flip<1/flipDenominator>
};

/// Small safe programs over unary predicates with an attached database;
/// delta heads use flip with an event signature over the body variables.
inline GProgram randomProgram(std::mt19937 &rng, const ProgramGenOptions &opts) {
    Interner &in = Interner::instance();
    const std::vector<std::string> predNames = {"Rga", "Rgb", "Rgc", "Rgd"};
    std::vector<PredId> preds;
    for (const std::string &n : predNames) preds.push_back(in.internPred(n, 1));
    VarId x = in.internVar("X");

    GProgram prog;
    // Facts over the first predicate (the generated edb).
    std::size_t nFacts = 1 + rng() % opts.maxConsts;
    for (std::size_t c = 1; c <= nFacts; ++c) {
        HeadAtom fact{preds[0], {HeadArg{Term{in.internNumeric(Rat(static_cast<long>(c)))}}}};
        prog.rules.push_back(GRule{{}, {}, fact});
    }

    std::size_t nRules = 1 + rng() % opts.maxRules;
    for (std::size_t r = 0; r < nRules; ++r) {
        // Head predicate strictly above the body in the predicate order keeps
        // the program stratified; a positive self-loop is also safe.
        std::size_t headIdx = 1 + rng() % (preds.size() - 1);
        GRule rule;
        std::size_t bodyIdx = rng() % headIdx;
        rule.pos.push_back(Atom{preds[bodyIdx], {Term{x}}});
        if (!opts.positive && rng() % 2) {
            std::size_t negIdx = rng() % headIdx;
            if (opts.stratified) {
                // Negation on a strictly earlier predicate only.
                rule.neg.push_back(Atom{preds[negIdx], {Term{x}}});
            } else {
                rule.neg.push_back(Atom{preds[rng() % preds.size()], {Term{x}}});
            }
        }
        if (rng() % 2) {
            DeltaTerm d;
            d.dist = "flip";
            d.params.push_back(Term{in.internNumeric(Rat(1, opts.flipDenominator))});
            d.sig.push_back(Term{x});
            rule.head = HeadAtom{preds[headIdx], {HeadArg{d}}};
        } else {
            rule.head = HeadAtom{preds[headIdx], {HeadArg{Term{x}}}};
        }
        prog.rules.push_back(rule);
    }
    for (const GRule &r : prog.rules) validateRule(r);
    return prog;
}

} // namespace gdlog::test
