#pragma once

// Exact eigenstructure of regular pencils: characteristic polynomial by
// interpolation, partial multiplicities via a local Smith form over the
// discrete valuation ring at (lambda - lambda0), dominance, and the
// squarefree/perfect-square profile checks for newly created eigenvalues.

#include "penlab/pencil.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace penlab {

// A point of the extended spectrum: a finite Gaussian-rational value or infinity.
struct EigenvalueRef {
    bool infinite = false;
    GaussianRational value;

    static EigenvalueRef inf() { return EigenvalueRef{true, GaussianRational()}; }
    static EigenvalueRef finite(GaussianRational v) { return EigenvalueRef{false, std::move(v)}; }

    friend bool operator==(const EigenvalueRef& a, const EigenvalueRef& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator!=(const EigenvalueRef& a, const EigenvalueRef& b) { return !(a == b); }

    std::string str() const { return infinite ? "inf" : value.str(); }
    static EigenvalueRef parse(const std::string& text) {
        if (text == "inf" || text == "Inf" || text == "infinity") return inf();
        return finite(GaussianRational::parse(text));
    }
};

// Partial multiplicities are kept sorted non-increasing and compared as multisets.
using MultiplicityList = std::vector<std::size_t>;

std::string multiplicityListStr(const MultiplicityList& list);

// det(A + lambda*B) as an exact polynomial (degree <= n), via evaluation at
// lambda = 0, 1, ..., n and Newton interpolation.
Poly detPoly(const Pencil& p);

bool isRegular(const Pencil& p);

// Partial multiplicities of the (regular) pencil at the given eigenvalue,
// sorted non-increasing; empty when it is not an eigenvalue. Infinity is
// handled through the reversal. Throws std::domain_error on singular pencils.
MultiplicityList partialMultiplicities(const Pencil& p, const EigenvalueRef& eig);

struct AlgGeo {
    std::size_t algebraic = 0;
    std::size_t geometric = 0;
};
AlgGeo algGeoMultiplicity(const Pencil& p, const EigenvalueRef& eig);

// Number of distinct roots of p: deg p - deg gcd(p, p'), where deg gcd is
// read off as the rank deficiency of the Sylvester matrix S(p, p').
// Errors on the zero polynomial; a nonzero constant has zero roots.
std::size_t distinctRootCount(const Poly& p);

// Sylvester matrix of two nonzero polynomials, size (deg f + deg g).
Matrix sylvesterMatrix(const Poly& f, const Poly& g);

// True iff len(M) >= len(N) and M_j >= N_j for j = 1..len(N).
bool dominates(const MultiplicityList& m, const MultiplicityList& n);

// Profile of the eigenvalues of `perturbed` that `base` does not have: the
// characteristic polynomial of `perturbed` with every root shared with `base`
// divided out (at full multiplicity), plus degree-deficiency bookkeeping for a
// fresh eigenvalue at infinity. mu = 1 demands all new eigenvalues simple;
// mu = 2 demands residual = c * g^2 with g squarefree (and any new infinite
// eigenvalue of algebraic multiplicity exactly 2).
struct NewEigenvalueReport {
    bool pass = false;
    std::size_t newDistinctFinite = 0;
    std::size_t newInfiniteMult = 0;
    Poly residual;
    std::string note;
};

NewEigenvalueReport newEigenvalueProfile(const Pencil& base, const Pencil& perturbed, int mu);

}  // namespace penlab
