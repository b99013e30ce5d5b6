#include "penlab/rational.hpp"

namespace penlab {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto isDecimal = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!isDecimal(text)) throw ParseError("bad integer literal: " + text);
            return Rational(BigInt(text));
        }
        const std::string n = text.substr(0, slash);
        const std::string d = text.substr(slash + 1);
        if (!isDecimal(n) || !isDecimal(d)) throw ParseError("bad rational literal: " + text);
        return Rational(BigInt(n), BigInt(d));
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + text);
    }
}

std::string Rational::str() const {
    if (isInteger()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

}  // namespace penlab
