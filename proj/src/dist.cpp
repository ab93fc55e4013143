#include "gdlog/dist.hpp"

#include "gdlog/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>

namespace gdlog {

namespace {

ConstId numConst(long v) { return Interner::instance().internNumeric(Rat(v)); }

Support sortedSupport(Support s) {
    std::sort(s.begin(), s.end(),
              [](const SupportEntry &a, const SupportEntry &b) { return constSemanticLess(a.outcome, b.outcome); });
    return s;
}

} // namespace

void validateSupport(const std::string &name, const Support &support) {
    Rat total(0);
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i].prob <= 0)
            throw InputError("distribution '" + name + "': nonpositive probability in support");
        if (i > 0 && !constSemanticLess(support[i - 1].outcome, support[i].outcome))
            throw InputError("distribution '" + name + "': support outcomes not distinct/ascending");
        total += support[i].prob;
    }
    if (total != 1)
        throw InputError("distribution '" + name + "': support probabilities sum to " +
                         ratToString(total) + ", expected 1");
}

DistributionRegistry DistributionRegistry::withBuiltins() {
    DistributionRegistry reg;

    ParamDistribution flip;
    flip.name = "flip";
    flip.dimension = 1;
    flip.supportFn = [](const std::vector<Rat> &params) {
        const Rat &p = params[0];
        if (p < 0 || p > 1)
            throw InputError("flip parameter " + ratToString(p) + " outside [0,1]");
        if (p == 0) return Support{{numConst(0), Rat(1)}};
        if (p == 1) return Support{{numConst(1), Rat(1)}};
        return Support{{numConst(0), Rat(1) - p}, {numConst(1), p}};
    };
    reg.add(std::move(flip));

    ParamDistribution die;
    die.name = "die";
    die.dimension = 6;
    die.supportFn = [](const std::vector<Rat> &params) {
        Rat total(0);
        bool valid = true;
        for (const Rat &p : params) {
            if (p < 0) valid = false;
            total += p;
        }
        if (!valid || total != 1) {
            // Incorrect parameterizations map to the dedicated outcome 0.
            return Support{{numConst(0), Rat(1)}};
        }
        Support s;
        for (std::size_t i = 0; i < 6; ++i)
            if (params[i] > 0) s.push_back({numConst(static_cast<long>(i) + 1), params[i]});
        return s;
    };
    reg.add(std::move(die));

    return reg;
}

bool DistributionRegistry::has(const std::string &name) const { return dists_.count(name) > 0; }

const ParamDistribution &DistributionRegistry::find(const std::string &name) const {
    auto it = dists_.find(name);
    if (it == dists_.end()) throw InputError("unknown distribution '" + name + "'");
    return it->second;
}

Support DistributionRegistry::support(const std::string &name, const std::vector<Rat> &params) const {
    const ParamDistribution &dist = find(name);
    if (params.size() != dist.dimension)
        throw InputError("distribution '" + name + "' takes " + std::to_string(dist.dimension) +
                         " parameters, got " + std::to_string(params.size()));
    std::vector<Rat> canonical = params;
    for (Rat &p : canonical) p.canonicalize();
    Support s = sortedSupport(dist.supportFn(canonical));
    validateSupport(name, s);
    return s;
}

void DistributionRegistry::add(ParamDistribution dist) {
    if (dists_.count(dist.name))
        throw InputError("distribution '" + dist.name + "' already registered");
    dists_.emplace(dist.name, std::move(dist));
}

namespace {

Rat ratFromJson(const nlohmann::json &j, const std::string &context) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return ratFromString(j.get<std::string>());
    throw InputError(context + ": rationals must be integers or strings like \"1/10\"");
}

ConstId constFromJson(const nlohmann::json &j, const std::string &context) {
    Interner &in = Interner::instance();
    if (j.is_number_integer()) return in.internNumeric(Rat(static_cast<long>(j.get<long long>())));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-'))
            return in.internNumeric(ratFromString(s));
        return in.internSymbol(s);
    }
    throw InputError(context + ": outcome values must be integers or strings");
}

} // namespace

void DistributionRegistry::addFromJson(const std::string &jsonText) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(jsonText);
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("invalid distribution JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("distribution JSON must be an object");

    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string name = it.key();
        const nlohmann::json &spec = it.value();
        if (!spec.is_object() || !spec.contains("dimension") || !spec.contains("table"))
            throw InputError("distribution '" + name + "': expected {\"dimension\", \"table\"}");
        std::size_t dim = spec.at("dimension").get<std::size_t>();
        if (dim == 0) throw InputError("distribution '" + name + "': dimension must be positive");

        // param vector (canonical string) -> support
        auto table = std::make_shared<std::map<std::string, Support>>();
        for (const nlohmann::json &row : spec.at("table")) {
            std::vector<Rat> params;
            for (const nlohmann::json &p : row.at("params"))
                params.push_back(ratFromJson(p, "distribution '" + name + "'"));
            if (params.size() != dim)
                throw InputError("distribution '" + name + "': table row has " +
                                 std::to_string(params.size()) + " params, expected " +
                                 std::to_string(dim));
            Support support;
            Rat total(0);
            for (const nlohmann::json &entry : row.at("support")) {
                ConstId value = constFromJson(entry.at("value"), "distribution '" + name + "'");
                Rat prob = ratFromJson(entry.at("prob"), "distribution '" + name + "'");
                if (prob < 0)
                    throw InputError("distribution '" + name + "': negative probability");
                total += prob;
                if (prob == 0) continue; // zero-probability outcomes stay out of the support
                for (const SupportEntry &prev : support)
                    if (prev.outcome == value)
                        throw InputError("distribution '" + name + "': duplicate support value " +
                                         ratToString(Interner::instance().constant(value).code));
                support.push_back({value, prob});
            }
            if (total != 1)
                throw InputError("distribution '" + name + "': support probabilities sum to " +
                                 ratToString(total) + ", expected 1");
            support = sortedSupport(std::move(support));
            validateSupport(name, support);
            std::string key;
            for (const Rat &p : params) key += ratToString(p) + ";";
            if (!table->emplace(std::move(key), std::move(support)).second)
                throw InputError("distribution '" + name + "': duplicate table row");
        }

        ParamDistribution dist;
        dist.name = name;
        dist.dimension = dim;
        dist.supportFn = [name, table](const std::vector<Rat> &params) {
            std::string key;
            for (const Rat &p : params) key += ratToString(p) + ";";
            auto found = table->find(key);
            if (found == table->end()) {
                std::string shown;
                for (const Rat &p : params) shown += (shown.empty() ? "" : ",") + ratToString(p);
                throw InputError("distribution '" + name + "' has no table row for parameters <" +
                                 shown + ">");
            }
            return found->second;
        };
        add(std::move(dist));
    }
}

std::vector<std::string> DistributionRegistry::names() const {
    std::vector<std::string> out;
    for (const auto &kv : dists_) out.push_back(kv.first);
    return out;
}

} // namespace gdlog
