#include "gdlog/rational.hpp"

#include "gdlog/errors.hpp"

#include <cctype>
#include <cstddef>

namespace gdlog {

namespace {

bool allDigits(const std::string &s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rat ratFromString(const std::string &text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    if (s.empty()) throw InputError("malformed rational literal: '" + text + "'");

    Rat value;
    auto dot = s.find('.');
    auto slash = s.find('/');
    if (dot != std::string::npos && slash != std::string::npos)
        throw InputError("malformed rational literal: '" + text + "'");
    if (dot != std::string::npos) {
        std::string intPart = s.substr(0, dot);
        std::string fracPart = s.substr(dot + 1);
        if (!allDigits(intPart) || !allDigits(fracPart))
            throw InputError("malformed rational literal: '" + text + "'");
        mpz_class num(intPart + fracPart);
        mpz_class den(1);
        for (std::size_t i = 0; i < fracPart.size(); ++i) den *= 10;
        value = Rat(num, den);
    } else if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!allDigits(num) || !allDigits(den))
            throw InputError("malformed rational literal: '" + text + "'");
        mpz_class d(den);
        if (d == 0) throw InputError("zero denominator in rational literal: '" + text + "'");
        value = Rat(mpz_class(num), d);
    } else {
        if (!allDigits(s)) throw InputError("malformed rational literal: '" + text + "'");
        value = Rat(mpz_class(s));
    }
    value.canonicalize();
    if (negative) value = -value;
    return value;
}

std::string ratToString(const Rat &value) {
    Rat canonical = value;
    canonical.canonicalize();
    if (canonical.get_den() == 1) return canonical.get_num().get_str();
    return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

double ratToDouble(const Rat &value) { return value.get_d(); }

std::size_t ratHash(const Rat &value) {
    return std::hash<std::string>{}(value.get_str());
}

} // namespace gdlog
