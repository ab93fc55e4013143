#include "gdlog/printer.hpp"

#include <algorithm>
#include <cctype>

namespace gdlog {

namespace {

bool plainSymbolName(const std::string &name) {
    if (name.empty()) return false;
    if (!std::islower(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return name != "not" && name != "false" && name != "exists";
}

} // namespace

std::string printConst(ConstId id) {
    const ConstData &data = Interner::instance().constant(id);
    if (!data.symbolic) return ratToString(data.value);
    if (plainSymbolName(data.name)) return data.name;
    return "\"" + data.name + "\"";
}

std::string printTerm(const Term &term) {
    if (isConst(term)) return printConst(std::get<ConstId>(term));
    return Interner::instance().varName(std::get<VarId>(term));
}

namespace {

std::string printArgs(const std::vector<Term> &args) {
    if (args.empty()) return "";
    std::string out = "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ", ";
        out += printTerm(args[i]);
    }
    out += ")";
    return out;
}

std::string printDelta(const DeltaTerm &d) {
    std::string out = d.dist + "<";
    for (std::size_t i = 0; i < d.params.size(); ++i) {
        if (i) out += ", ";
        out += printTerm(d.params[i]);
    }
    out += ">";
    if (!d.sig.empty()) {
        out += "[";
        for (std::size_t i = 0; i < d.sig.size(); ++i) {
            if (i) out += ", ";
            out += printTerm(d.sig[i]);
        }
        out += "]";
    }
    return out;
}

} // namespace

std::string printAtom(const Atom &atom) {
    return Interner::instance().pred(atom.pred).name + printArgs(atom.args);
}

std::string printHeadAtom(const HeadAtom &atom) {
    std::string out = Interner::instance().pred(atom.pred).name;
    if (atom.args.empty()) return out;
    out += "(";
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
        if (i) out += ", ";
        if (std::holds_alternative<Term>(atom.args[i]))
            out += printTerm(std::get<Term>(atom.args[i]));
        else
            out += printDelta(std::get<DeltaTerm>(atom.args[i]));
    }
    out += ")";
    return out;
}

std::string printRule(const GRule &rule) {
    std::string out;
    bool first = true;
    for (const Atom &a : rule.pos) {
        if (!first) out += ", ";
        out += printAtom(a);
        first = false;
    }
    for (const Atom &a : rule.neg) {
        if (!first) out += ", ";
        out += "not " + printAtom(a);
        first = false;
    }
    if (!first) out += " ";
    out += "-> ";
    out += rule.head ? printHeadAtom(*rule.head) : "false";
    out += ".";
    return out;
}

std::string printProgram(const GProgram &program) {
    std::string out;
    for (const GRule &r : program.rules) {
        out += printRule(r);
        out += "\n";
    }
    return out;
}

std::string printGroundAtom(GAtomId id) {
    const GAtomData &data = Interner::instance().atom(id);
    Atom atom;
    atom.pred = data.pred;
    for (ConstId c : data.args) atom.args.push_back(Term{c});
    return printAtom(atom);
}

std::string printGroundRule(GRuleId id) {
    const GRuleData &data = Interner::instance().rule(id);
    std::string out;
    bool first = true;
    for (GAtomId a : data.pos) {
        if (!first) out += ", ";
        out += printGroundAtom(a);
        first = false;
    }
    for (GAtomId a : data.neg) {
        if (!first) out += ", ";
        out += "not " + printGroundAtom(a);
        first = false;
    }
    if (!first) out += " ";
    out += "-> " + printGroundAtom(data.head) + ".";
    return out;
}

std::string printTGD(const TGD &tgd) {
    std::string out;
    bool first = true;
    for (const Atom &a : tgd.pos) {
        if (!first) out += ", ";
        out += printAtom(a);
        first = false;
    }
    for (const Atom &a : tgd.neg) {
        if (!first) out += ", ";
        out += "not " + printAtom(a);
        first = false;
    }
    if (!first) out += " ";
    out += "-> ";
    for (VarId v : tgd.existVars) out += "exists ?" + Interner::instance().varName(v) + " ";
    for (std::size_t i = 0; i < tgd.head.size(); ++i) {
        if (i) out += ", ";
        Atom headAtom = tgd.head[i];
        if (!tgd.existVars.empty()) {
            // Existential variables render with the `?` marker.
            std::string s = Interner::instance().pred(headAtom.pred).name + "(";
            for (std::size_t j = 0; j < headAtom.args.size(); ++j) {
                if (j) s += ", ";
                const Term &t = headAtom.args[j];
                bool existential =
                    isVar(t) && std::any_of(tgd.existVars.begin(), tgd.existVars.end(),
                                            [&](VarId v) { return v == std::get<VarId>(t); });
                s += existential ? "?" + printTerm(t) : printTerm(t);
            }
            s += ")";
            out += s;
        } else {
            out += printAtom(headAtom);
        }
    }
    out += ".";
    return out;
}

} // namespace gdlog
