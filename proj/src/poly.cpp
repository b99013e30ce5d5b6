#include "penlab/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace penlab {

Poly Poly::monomial(const GaussianRational& c, std::size_t k) {
    if (c.isZero()) return Poly();
    std::vector<GaussianRational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const GaussianRational& a, const GaussianRational& b) {
    return Poly(std::vector<GaussianRational>{a, b});
}

std::size_t Poly::valuationAtZero(std::size_t cap) const {
    for (std::size_t k = 0; k < coeff_.size(); ++k)
        if (!coeff_[k].isZero()) return std::min(k, cap);
    return cap;
}

Poly Poly::operator-() const {
    std::vector<GaussianRational> v(coeff_.size());
    for (std::size_t k = 0; k < coeff_.size(); ++k) v[k] = -coeff_[k];
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<GaussianRational> v(std::max(a.coeff_.size(), b.coeff_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a[k] + b[k];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<GaussianRational> v(std::max(a.coeff_.size(), b.coeff_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a[k] - b[k];
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.isZero() || b.isZero()) return Poly();
    std::vector<GaussianRational> v(a.coeff_.size() + b.coeff_.size() - 1);
    for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
        if (a.coeff_[i].isZero()) continue;
        for (std::size_t j = 0; j < b.coeff_.size(); ++j) v[i + j] += a.coeff_[i] * b.coeff_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::scaled(const GaussianRational& c) const {
    if (c.isZero()) return Poly();
    std::vector<GaussianRational> v(coeff_.size());
    for (std::size_t k = 0; k < coeff_.size(); ++k) v[k] = coeff_[k] * c;
    return Poly(std::move(v));
}

Poly Poly::conjCoeffs() const {
    std::vector<GaussianRational> v(coeff_.size());
    for (std::size_t k = 0; k < coeff_.size(); ++k) v[k] = coeff_[k].conj();
    return Poly(std::move(v));
}

Poly Poly::negateVariable() const {
    std::vector<GaussianRational> v(coeff_.size());
    for (std::size_t k = 0; k < coeff_.size(); ++k) v[k] = (k % 2 == 0) ? coeff_[k] : -coeff_[k];
    return Poly(std::move(v));
}

Poly Poly::shift(const GaussianRational& c) const {
    // Horner: p(x + c) built from the top coefficient down.
    Poly result;
    const Poly shifted = Poly::linear(c, GaussianRational(1));
    for (std::size_t k = coeff_.size(); k-- > 0;) result = result * shifted + Poly(coeff_[k]);
    return result;
}

Poly Poly::scaleVariable(const GaussianRational& c) const {
    std::vector<GaussianRational> v(coeff_.size());
    GaussianRational power(1);
    for (std::size_t k = 0; k < coeff_.size(); ++k) {
        v[k] = coeff_[k] * power;
        power *= c;
    }
    return Poly(std::move(v));
}

Poly Poly::reversed(std::size_t deg) const {
    if (degree() > static_cast<long>(deg)) throw std::invalid_argument("reversed: deg too small");
    std::vector<GaussianRational> v(deg + 1);
    for (std::size_t k = 0; k <= deg; ++k) v[deg - k] = (*this)[k];
    return Poly(std::move(v));
}

Poly Poly::truncated(std::size_t cap) const {
    if (coeff_.size() <= cap) return *this;
    return Poly(std::vector<GaussianRational>(coeff_.begin(), coeff_.begin() + cap));
}

Poly Poly::shiftedDown(std::size_t k) const {
    if (isZero()) return Poly();
    if (valuationAtZero(coeff_.size()) < k) throw std::domain_error("shiftedDown: valuation too small");
    return Poly(std::vector<GaussianRational>(coeff_.begin() + k, coeff_.end()));
}

GaussianRational Poly::eval(const GaussianRational& x) const {
    GaussianRational acc;
    for (std::size_t k = coeff_.size(); k-- > 0;) acc = acc * x + coeff_[k];
    return acc;
}

Poly Poly::derivative() const {
    if (coeff_.size() <= 1) return Poly();
    std::vector<GaussianRational> v(coeff_.size() - 1);
    for (std::size_t k = 1; k < coeff_.size(); ++k)
        v[k - 1] = coeff_[k] * GaussianRational(Rational(static_cast<long>(k)));
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.isZero()) throw DivisionByZero();
    Poly rem = *this;
    if (rem.degree() < divisor.degree()) return {Poly(), rem};
    std::vector<GaussianRational> q(rem.coeff_.size() - divisor.coeff_.size() + 1);
    const GaussianRational leadInv = divisor.lead().inverse();
    while (!rem.isZero() && rem.degree() >= divisor.degree()) {
        const std::size_t shift = rem.coeff_.size() - divisor.coeff_.size();
        const GaussianRational factor = rem.lead() * leadInv;
        q[shift] = factor;
        rem -= (divisor * Poly::monomial(factor, shift));
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::exactDiv(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.isZero()) throw std::domain_error("exactDiv: nonzero remainder");
    return q;
}

Poly Poly::monic() const {
    if (isZero()) return *this;
    return scaled(lead().inverse());
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.isZero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string Poly::str(const std::string& var) const {
    if (isZero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeff_.size(); ++k) {
        const GaussianRational& c = coeff_[k];
        if (c.isZero()) continue;
        std::string term;
        if (k == 0) {
            term = c.str();
        } else {
            const std::string power = (k == 1) ? var : var + "^" + std::to_string(k);
            if (c.isOne())
                term = power;
            else if (c == GaussianRational(-1))
                term = "-" + power;
            else if (c.isReal() || c.re().isZero())
                term = c.str() + "*" + power;
            else
                term = "(" + c.str() + ")*" + power;
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

Poly interpolate(const std::vector<std::pair<GaussianRational, GaussianRational>>& points) {
    // Newton's divided differences, computed in place and assembled exactly.
    const std::size_t n = points.size();
    std::vector<GaussianRational> coef(n);
    for (std::size_t i = 0; i < n; ++i) coef[i] = points[i].second;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n; i-- > j;) {
            coef[i] = (coef[i] - coef[i - 1]) / (points[i].first - points[i - j].first);
        }
    }
    Poly result;
    for (std::size_t k = n; k-- > 0;) {
        result = result * Poly::linear(-points[k].first, GaussianRational(1)) + Poly(coef[k]);
    }
    return result;
}

}  // namespace penlab
