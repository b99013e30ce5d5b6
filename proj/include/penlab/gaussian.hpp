#pragma once

// Gaussian rationals: the field Q(i) = { re + im*i : re, im in Q } with exact
// arithmetic, conjugation, and a canonical text form "a/b+c/d*i".

#include "penlab/rational.hpp"

#include <string>

namespace penlab {

class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(const Rational& re) : re_(re) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    // Canonical text form; see str() for the exact grammar emitted.
    static GaussianRational parse(const std::string& text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool isZero() const { return re_.isZero() && im_.isZero(); }
    bool isOne() const { return re_.isOne() && im_.isZero(); }
    bool isReal() const { return im_.isZero(); }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    // |z|^2 = z * conj(z), a nonnegative rational; zero iff z == 0.
    Rational normSquared() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        const Rational r = re_ * o.re_ - im_ * o.im_;
        const Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = r;
        im_ = m;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.isZero()) throw DivisionByZero();
        const Rational n2 = o.normSquared();
        const GaussianRational num = *this * o.conj();
        re_ = num.re_ / n2;
        im_ = num.im_ / n2;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const {
        if (isZero()) throw DivisionByZero();
        const Rational n2 = normSquared();
        return GaussianRational(re_ / n2, -(im_ / n2));
    }

    // Canonical text form. Emits, in order of preference:
    //   "a"        when im == 0            (a rational, "n" or "n/d")
    //   "c*i"      when re == 0, im != 0
    //   "a+c*i" / "a-c*i" otherwise (the sign of im is folded into the joiner)
    std::string str() const;

  private:
    Rational re_;
    Rational im_;
};

}  // namespace penlab
