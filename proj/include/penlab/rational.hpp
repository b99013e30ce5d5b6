#pragma once

// Exact rational arithmetic. Thin wrapper over GMP's mpq_class that pins the
// representation invariants: always in lowest terms, denominator > 0, and
// division by zero reported as a dedicated error type instead of UB.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace penlab {

using BigInt = mpz_class;

// Thrown by any scalar or matrix inversion that hits a zero divisor.
struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

// Thrown on malformed textual input (scalars, polynomials, JSON payloads).
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) { requireNonzeroDen(); q_.canonicalize(); }
    Rational(const BigInt& n) : q_(n) {}
    Rational(const BigInt& n, const BigInt& d) : q_(n, d) { requireNonzeroDen(); q_.canonicalize(); }
    explicit Rational(const mpq_class& q) : q_(q) { requireNonzeroDen(); q_.canonicalize(); }

    // Parses "n" or "n/d" with optional sign, arbitrary precision.
    static Rational parse(const std::string& text);

    const BigInt& num() const { return q_.get_num(); }
    const BigInt& den() const { return q_.get_den(); }

    bool isZero() const { return sgn(q_) == 0; }
    bool isOne() const { return q_ == 1; }
    bool isInteger() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(wrap(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.isZero()) throw DivisionByZero();
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inverse() const {
        if (isZero()) throw DivisionByZero();
        return Rational(wrap(1 / q_));
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // Decimal numerator and denominator, "n" when the denominator is 1,
    // otherwise "n/d". Integers stay exact as decimal strings.
    std::string str() const;

  private:
    // Internal fast path: q is already canonical (results of mpq arithmetic are).
    struct Canonical {};
    Rational(const mpq_class& q, Canonical) : q_(q) {}
    static Rational wrap(const mpq_class& q) { return Rational(q, Canonical{}); }

    void requireNonzeroDen() const {
        if (sgn(q_.get_den()) == 0) throw DivisionByZero();
    }

    mpq_class q_;
};

}  // namespace penlab
