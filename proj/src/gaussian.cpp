#include "penlab/gaussian.hpp"

namespace penlab {

namespace {

Rational parseSignedRational(const std::string& tok) {
    if (tok.empty()) throw ParseError("empty rational token");
    if (tok[0] == '+') return Rational::parse(tok.substr(1));
    if (tok[0] == '-') return -Rational::parse(tok.substr(1));
    return Rational::parse(tok);
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& raw) {
    std::string text = raw;
    // Tolerate surrounding whitespace only.
    const auto first = text.find_first_not_of(" \t");
    const auto last = text.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty scalar literal");
    text = text.substr(first, last - first + 1);

    if (text.back() != 'i') return GaussianRational(parseSignedRational(text));

    // Split "a+c*i" / "a-c*i" at the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t k = text.size(); k-- > 1;) {
        if (text[k] == '+' || text[k] == '-') {
            split = k;
            break;
        }
    }
    std::string realTok;
    std::string imagTok;
    if (split == std::string::npos) {
        imagTok = text;  // purely imaginary, e.g. "i", "-3/4*i" (split catches the sign)
    } else {
        realTok = text.substr(0, split);
        imagTok = text.substr(split);
    }

    imagTok.pop_back();  // drop the trailing 'i'
    if (!imagTok.empty() && imagTok.back() == '*') imagTok.pop_back();

    Rational im;
    if (imagTok.empty() || imagTok == "+")
        im = Rational(1);
    else if (imagTok == "-")
        im = Rational(-1);
    else
        im = parseSignedRational(imagTok);

    Rational re;
    if (!realTok.empty()) re = parseSignedRational(realTok);
    return GaussianRational(re, im);
}

std::string GaussianRational::str() const {
    if (im_.isZero()) return re_.str();
    const std::string imPart = im_.abs().str() + "*i";
    if (re_.isZero()) return (im_.sign() < 0 ? "-" : "") + imPart;
    return re_.str() + (im_.sign() < 0 ? "-" : "+") + imPart;
}

}  // namespace penlab
