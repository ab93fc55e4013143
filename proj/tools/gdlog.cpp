#include "gdlog/bckov.hpp"
#include "gdlog/chase.hpp"
#include "gdlog/errors.hpp"
#include "gdlog/parser.hpp"
#include "gdlog/printer.hpp"
#include "gdlog/prob.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace gdlog;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

std::string readFile(const std::string &path) {
    std::ifstream input(path, std::ios::binary);
    if (!input) throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << input.rdbuf();
    return buffer.str();
}

struct CommonOptions {
    std::string programPath;
    std::string databasePath;
    std::string distPath;
    std::string grounder = "simple";
    std::size_t maxSteps = 10000;
    std::string minPathProb = "0";
    std::string format = "json";
    bool project = false;
    std::size_t bruteForceCap = 18;
    std::optional<unsigned> seed;
};

void addCommon(CLI::App *cmd, CommonOptions &opts, bool needsProgram = true) {
    auto *p = cmd->add_option("-p,--program", opts.programPath, "program file (.gdl)");
    if (needsProgram) p->required();
    cmd->add_option("-d,--database", opts.databasePath, "database file (.facts)");
    cmd->add_option("--dist", opts.distPath, "user distribution file (.dist.json)");
    cmd->add_option("--grounder", opts.grounder, "grounder: simple or perfect")
        ->check(CLI::IsMember({"simple", "perfect"}));
    cmd->add_option("--max-steps", opts.maxSteps, "chase budget: trigger applications per path");
    cmd->add_option("--min-path-prob", opts.minPathProb,
                    "chase budget: truncate paths below this probability (rational)");
    cmd->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "table"}));
    cmd->add_flag("--project-user-predicates", opts.project,
                  "strip Active/Result/Fail/Aux bookkeeping atoms from reported models");
    cmd->add_option("--brute-force-cap", opts.bruteForceCap,
                    "stable-model enumeration cap per dependency component");
    cmd->add_option("--seed", opts.seed, "randomize trigger order (results must not change)");
}

struct LoadedInput {
    DistributionRegistry registry;
    GProgram program; // desugared, database attached
};

LoadedInput load(const CommonOptions &opts) {
    LoadedInput loaded{DistributionRegistry::withBuiltins(), {}};
    if (!opts.distPath.empty()) loaded.registry.addFromJson(readFile(opts.distPath));
    GProgram program =
        parseProgram(readFile(opts.programPath), loaded.registry, opts.programPath);
    if (!opts.databasePath.empty()) {
        Database db = parseDatabase(readFile(opts.databasePath), opts.databasePath);
        program = attachDatabase(program, db);
    }
    loaded.program = std::move(program);
    return loaded;
}

ChaseBudget budgetOf(const CommonOptions &opts) {
    ChaseBudget budget;
    budget.maxSteps = opts.maxSteps;
    if (const char *env = std::getenv("GDLOG_MAX_STEPS")) {
        budget.maxSteps = static_cast<std::size_t>(std::stoull(env));
    }
    if (opts.maxSteps != 10000) budget.maxSteps = opts.maxSteps; // flags override env
    budget.minPathProb = ratFromString(opts.minPathProb);
    return budget;
}

TriggerPolicy policyOf(const CommonOptions &opts) {
    if (!opts.seed) return {};
    auto rng = std::make_shared<std::mt19937_64>(*opts.seed);
    return [rng](const std::vector<GAtomId> &open) {
        return std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(*rng);
    };
}

GrounderKind kindOf(const std::string &name) {
    return name == "perfect" ? GrounderKind::Perfect : GrounderKind::Simple;
}

json ratJson(const Rat &value) {
    return json{{"value", ratToString(value)}, {"decimal", ratToDouble(value)}};
}

json modelJson(const Interpretation &model) {
    json atoms = json::array();
    for (GAtomId a : model) atoms.push_back(printGroundAtom(a));
    return atoms;
}

json smsJson(const SmsSet &sms) {
    json models = json::array();
    for (const Interpretation &m : sms) models.push_back(modelJson(m));
    return models;
}

void emit(const json &doc) { std::cout << doc.dump(2) << "\n"; }

// --- subcommands ---

int runCheck(const CommonOptions &opts) {
    LoadedInput loaded = load(opts);
    SchemaSplit split = edbIdbSplit(loaded.program);
    StratifyResult strata = stratify(loaded.program);

    json doc;
    doc["format"] = 1;
    doc["rules"] = loaded.program.rules.size();
    json edb = json::array(), idb = json::array();
    for (PredId p : split.edb) edb.push_back(Interner::instance().pred(p).name);
    for (PredId p : split.idb) idb.push_back(Interner::instance().pred(p).name);
    doc["edb"] = edb;
    doc["idb"] = idb;
    doc["stratified"] = strata.stratified;
    json components = json::array();
    for (const auto &component : strata.components) {
        json names = json::array();
        for (PredId p : component) names.push_back(Interner::instance().pred(p).name);
        components.push_back(names);
    }
    doc["strata"] = components;
    if (!strata.stratified && strata.negativeCycleWitness) {
        doc["negative_cycle_edge"] =
            json::array({Interner::instance().pred(strata.negativeCycleWitness->from).name,
                         Interner::instance().pred(strata.negativeCycleWitness->to).name});
    }
    emit(doc);
    return kExitOk;
}

int runTranslate(const CommonOptions &opts) {
    LoadedInput loaded = load(opts);
    TranslationResult tr = translateProgram(loaded.program);
    std::cout << "% sigma_exists (active-to-result TGDs)\n";
    for (const TGD &tgd : tr.sigmaExists) std::cout << printTGD(tgd) << "\n";
    std::cout << "% sigma_noexists\n";
    for (const TGD &tgd : tr.sigmaNoExists) std::cout << printTGD(tgd) << "\n";
    return kExitOk;
}

int runGround(const CommonOptions &opts, const std::string &choicesPath) {
    LoadedInput loaded = load(opts);
    GrounderHandle handle(loaded.program, &loaded.registry, kindOf(opts.grounder));
    ChoiceSet choices;
    if (!choicesPath.empty()) {
        std::vector<GRuleId> rules = parseGroundRules(readFile(choicesPath), choicesPath);
        choices = ChoiceSet::fromRules(rules, handle.translation());
    }
    const GroundProgram &grounded = handle.eval(choices);
    for (GRuleId r : grounded.rules()) std::cout << printGroundRule(r) << "\n";
    std::cout << "% compatible: " << (isCompatible(choices, grounded, handle.translation()) ? "yes" : "no")
              << "\n";
    return kExitOk;
}

int runChase(const CommonOptions &opts, const std::string &dumpTreePath) {
    LoadedInput loaded = load(opts);
    GrounderHandle handle(loaded.program, &loaded.registry, kindOf(opts.grounder));
    ExploreResult explored =
        explore(handle, budgetOf(opts), policyOf(opts), !dumpTreePath.empty());

    json doc;
    doc["format"] = 1;
    doc["grounder"] = opts.grounder;
    doc["complete_paths"] = explored.complete.size();
    doc["truncated_paths"] = explored.truncatedCount;
    doc["truncated_mass"] = ratToString(explored.truncatedMass);
    json paths = json::array();
    for (const ChasePath &path : explored.complete) {
        json entry;
        entry["prob"] = ratToString(path.prob);
        entry["length"] = path.length;
        json choiceRules = json::array();
        for (GRuleId r : path.choices.rules()) choiceRules.push_back(printGroundRule(r));
        entry["choices"] = choiceRules;
        paths.push_back(entry);
    }
    doc["paths"] = paths;
    emit(doc);

    if (!dumpTreePath.empty()) {
        json tree;
        tree["format"] = 1;
        json nodes = json::array();
        for (const TreeNode &node : explored.tree) {
            json entry;
            entry["id"] = node.id;
            if (node.parent)
                entry["parent"] = *node.parent;
            else
                entry["parent"] = nullptr;
            if (node.addedChoice)
                entry["added_atr_tgd"] = printGroundRule(*node.addedChoice);
            else
                entry["added_atr_tgd"] = nullptr;
            entry["prob_edge"] = ratToString(node.edgeProb);
            entry["status"] = node.status;
            nodes.push_back(entry);
        }
        tree["nodes"] = nodes;
        std::ofstream out(dumpTreePath, std::ios::binary);
        if (!out) throw InputError("cannot write '" + dumpTreePath + "'");
        out << tree.dump(2) << "\n";
    }
    return explored.truncatedCount > 0 ? kExitCapacity : kExitOk;
}

int runProb(const CommonOptions &opts, const std::vector<std::string> &queries) {
    LoadedInput loaded = load(opts);
    GrounderHandle handle(loaded.program, &loaded.registry, kindOf(opts.grounder));
    ExploreResult explored = explore(handle, budgetOf(opts), policyOf(opts));
    SolverOptions solverOpts{opts.bruteForceCap};
    std::optional<Projection> projection;
    if (opts.project)
        projection = Projection::userPredicates(loaded.program, handle.translation());
    OutcomeDistribution dist = buildDistribution(explored, handle, solverOpts, projection);

    json doc;
    doc["format"] = 1;
    doc["grounder"] = opts.grounder;
    json classes = json::array();
    for (const OutcomeClass &cls : dist.classes) {
        json entry;
        entry["models"] = smsJson(cls.key);
        entry["mass"] = ratToString(cls.mass);
        entry["mass_decimal"] = ratToDouble(cls.mass);
        entry["outcomes"] = cls.outcomeIndices.size();
        classes.push_back(entry);
    }
    doc["classes"] = classes;
    doc["finite_mass"] = ratToString(dist.finiteMass);
    doc["infinity_mass"] =
        json{{"lo", ratToString(dist.infinityLo)}, {"hi", ratToString(dist.infinityHi)}};
    doc["truncated_mass"] = ratToString(dist.truncatedMass);

    json queryResults = json::object();
    for (const std::string &queryText : queries) {
        Query query;
        if (queryText == "has-stable-model") {
            query.kind = Query::Kind::HasStableModel;
        } else if (queryText.rfind("brave:", 0) == 0) {
            query.kind = Query::Kind::AtomBrave;
            query.atom = parseGroundAtom(queryText.substr(6));
        } else if (queryText.rfind("cautious:", 0) == 0) {
            query.kind = Query::Kind::AtomCautious;
            query.atom = parseGroundAtom(queryText.substr(9));
        } else if (queryText.rfind("class:", 0) == 0) {
            query.kind = Query::Kind::SmsClass;
            SmsSet cls;
            std::string body = queryText.substr(6);
            std::stringstream models(body);
            std::string modelText;
            while (std::getline(models, modelText, '|')) {
                Interpretation model;
                std::stringstream atoms(modelText);
                std::string atomText;
                while (std::getline(atoms, atomText, ';'))
                    if (!atomText.empty()) model.push_back(parseGroundAtom(atomText));
                cls.push_back(canonicalInterpretation(std::move(model)));
            }
            query.cls = canonicalSms(std::move(cls));
        } else {
            throw InputError("unknown query '" + queryText +
                             "' (expected has-stable-model, brave:Atom, cautious:Atom, or "
                             "class:Atom;Atom|Atom)");
        }
        QueryResult qr = evalQuery(dist, query, loaded.program);
        json entry;
        if (qr.exact()) {
            entry["value"] = ratToString(qr.lo);
            entry["decimal"] = ratToDouble(qr.lo);
        } else {
            entry["lo"] = ratToString(qr.lo);
            entry["hi"] = ratToString(qr.hi);
        }
        queryResults[queryText] = entry;
    }
    doc["query_results"] = queryResults;
    emit(doc);
    return kExitOk;
}

int runCompare(const CommonOptions &opts, const std::string &a, const std::string &b) {
    LoadedInput loaded = load(opts);
    SolverOptions solverOpts{opts.bruteForceCap};
    ChaseBudget budget = budgetOf(opts);

    GrounderHandle handleA(loaded.program, &loaded.registry, kindOf(a));
    GrounderHandle handleB(loaded.program, &loaded.registry, kindOf(b));
    ExploreResult exploredA = explore(handleA, budget);
    ExploreResult exploredB = explore(handleB, budget);
    if (exploredA.truncatedCount > 0 || exploredB.truncatedCount > 0) {
        json doc;
        doc["format"] = 1;
        doc["error"] = "comparison is unsound under truncation";
        emit(doc);
        return kExitCapacity;
    }
    OutcomeDistribution distA = buildDistribution(exploredA, handleA, solverOpts);
    OutcomeDistribution distB = buildDistribution(exploredB, handleB, solverOpts);
    AsGoodAsResult verdict = asGoodAs(distA, distB);

    json doc;
    doc["format"] = 1;
    doc["a"] = a;
    doc["b"] = b;
    doc["as_good_as"] = verdict.holds;
    if (!verdict.holds) {
        json witness;
        witness["models"] = smsJson(*verdict.witnessKey);
        witness["mass_a"] = ratToString(verdict.witnessMassA);
        witness["mass_b"] = ratToString(verdict.witnessMassB);
        doc["witness"] = witness;
    }
    emit(doc);
    return kExitOk;
}

int runBckovCheck(const CommonOptions &opts) {
    LoadedInput loaded = load(opts);
    IsomorphismReport report =
        checkIsomorphism(loaded.program, loaded.registry, budgetOf(opts),
                         SolverOptions{opts.bruteForceCap});
    json doc;
    doc["format"] = 1;
    switch (report.verdict) {
    case IsomorphismVerdict::Isomorphic:
        doc["verdict"] = "isomorphic";
        break;
    case IsomorphismVerdict::NotIsomorphic:
        doc["verdict"] = "not-isomorphic";
        break;
    case IsomorphismVerdict::Inconclusive:
        doc["verdict"] = "inconclusive";
        break;
    }
    if (!report.detail.empty()) doc["detail"] = report.detail;
    doc["simple_outcomes"] = report.simpleOutcomes;
    doc["bckov_outcomes"] = report.bckovOutcomes;
    json rows = json::array();
    for (const IsomorphismRow &row : report.rows) {
        json entry;
        entry["model"] = modelJson(row.model);
        entry["prob_simple"] = ratToString(row.probSimple);
        if (row.probBckov)
            entry["prob_bckov"] = ratToString(*row.probBckov);
        else
            entry["prob_bckov"] = nullptr;
        rows.push_back(entry);
    }
    doc["outcomes"] = rows;
    emit(doc);
    return report.verdict == IsomorphismVerdict::Inconclusive ? kExitCapacity : kExitOk;
}

int runSms(const std::string &groundPath, std::size_t cap) {
    std::vector<GRuleId> rules = parseGroundRules(readFile(groundPath), groundPath);
    GroundProgram program(rules);
    SmsSet sms = allStableModels(program, SolverOptions{cap});
    for (const Interpretation &model : sms) {
        bool first = true;
        for (GAtomId a : model) {
            if (!first) std::cout << " ";
            std::cout << printGroundAtom(a);
            first = false;
        }
        std::cout << "\n";
    }
    std::cout << "% " << sms.size() << " stable model" << (sms.size() == 1 ? "" : "s") << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"gdlog: inference engine for generative Datalog with stable negation"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string choicesPath, dumpTreePath, groundFile;
    std::vector<std::string> queries;
    std::string compareA = "simple", compareB = "perfect";

    CLI::App *check = app.add_subcommand("check", "parse, safety and stratification report");
    addCommon(check, opts);
    CLI::App *translate = app.add_subcommand("translate", "dump the TGD translation");
    addCommon(translate, opts);
    CLI::App *ground = app.add_subcommand("ground", "evaluate the grounder on a choice set");
    addCommon(ground, opts);
    ground->add_option("--choices", choicesPath, "ground AtR TGD file");
    CLI::App *chase = app.add_subcommand("chase", "explore the chase tree");
    addCommon(chase, opts);
    chase->add_option("--dump-tree", dumpTreePath, "write the materialized tree as JSON");
    CLI::App *prob = app.add_subcommand("prob", "outcome distribution and queries");
    addCommon(prob, opts);
    prob->add_option("--query", queries, "has-stable-model | brave:Atom | cautious:Atom | class:...");
    CLI::App *compare = app.add_subcommand("compare", "as-good-as comparison of two grounders");
    addCommon(compare, opts);
    compare->add_option("--a", compareA, "first grounder")->check(CLI::IsMember({"simple", "perfect"}));
    compare->add_option("--b", compareB, "second grounder")->check(CLI::IsMember({"simple", "perfect"}));
    CLI::App *bckov = app.add_subcommand("bckov-check", "reference-semantics isomorphism check");
    addCommon(bckov, opts);
    CLI::App *sms = app.add_subcommand("sms", "stable models of a ground program");
    sms->add_option("--ground", groundFile, "ground TGD program file")->required();
    sms->add_option("--brute-force-cap", opts.bruteForceCap, "enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return runCheck(opts);
        if (translate->parsed()) return runTranslate(opts);
        if (ground->parsed()) return runGround(opts, choicesPath);
        if (chase->parsed()) return runChase(opts, dumpTreePath);
        if (prob->parsed()) return runProb(opts, queries);
        if (compare->parsed()) return runCompare(opts, compareA, compareB);
        if (bckov->parsed()) return runBckovCheck(opts);
        if (sms->parsed()) return runSms(groundFile, opts.bruteForceCap);
    } catch (const CapacityError &e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
