#pragma once

// Dense univariate polynomials over the Gaussian rationals. Everything exact:
// Euclidean division, gcd (monic), derivative, evaluation, shift, interpolation.

#include "penlab/gaussian.hpp"

#include <string>
#include <utility>
#include <vector>

namespace penlab {

class Poly {
  public:
    Poly() = default;
    Poly(const GaussianRational& c) {
        if (!c.isZero()) coeff_ = {c};
    }
    explicit Poly(std::vector<GaussianRational> coeff) : coeff_(std::move(coeff)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(GaussianRational(1)); }
    // The monomial c * lambda^k.
    static Poly monomial(const GaussianRational& c, std::size_t k);
    // a + b*lambda.
    static Poly linear(const GaussianRational& a, const GaussianRational& b);

    bool isZero() const { return coeff_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeff_.size()) - 1; }

    const GaussianRational& operator[](std::size_t k) const {
        static const GaussianRational kZero;
        return k < coeff_.size() ? coeff_[k] : kZero;
    }
    const GaussianRational& lead() const { return coeff_.back(); }
    const std::vector<GaussianRational>& coefficients() const { return coeff_; }

    // Index of the lowest nonzero coefficient; `cap` for the zero polynomial.
    std::size_t valuationAtZero(std::size_t cap) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const GaussianRational& c) const;
    // Coefficient-wise complex conjugation (lambda untouched).
    Poly conjCoeffs() const;
    // p(-lambda).
    Poly negateVariable() const;
    // p(lambda + c).
    Poly shift(const GaussianRational& c) const;
    // p(c * lambda).
    Poly scaleVariable(const GaussianRational& c) const;
    // Coefficient list reversed against `deg`: lambda^deg * p(1/lambda),
    // padded to treat p as a degree-`deg` object. Requires deg >= degree().
    Poly reversed(std::size_t deg) const;
    // Truncation mod lambda^cap.
    Poly truncated(std::size_t cap) const;
    // Quotient by lambda^k; requires valuation >= k.
    Poly shiftedDown(std::size_t k) const;

    GaussianRational eval(const GaussianRational& x) const;
    Poly derivative() const;

    // Euclidean division: returns {quotient, remainder}, deg r < deg divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    // Exact division; throws std::domain_error when the remainder is nonzero.
    Poly exactDiv(const Poly& divisor) const;

    Poly monic() const;
    static Poly gcd(Poly a, Poly b);

    // Human-readable form, e.g. "1-2*x+x^2" with the given variable name.
    std::string str(const std::string& var = "x") const;

  private:
    void trim() {
        while (!coeff_.empty() && coeff_.back().isZero()) coeff_.pop_back();
    }

    std::vector<GaussianRational> coeff_;  // coeff_[k] multiplies lambda^k
};

// Unique interpolating polynomial of degree < points.size() through the given
// (x, y) pairs; the x values must be pairwise distinct.
Poly interpolate(const std::vector<std::pair<GaussianRational, GaussianRational>>& points);

}  // namespace penlab
