#pragma once

// Matrix pencils L(lambda) = A + lambda*B over Q(i), the thirteen structure
// classes, the reversal/adjoint/Cayley operations, structure transport between
// classes, and the exact normal rank over Q(i)[lambda].

#include "penlab/matrix.hpp"

#include <optional>
#include <string>

namespace penlab {

enum class StructureTag {
    Hermitian,
    Symmetric,
    SkewHermitian,
    SkewSymmetric,
    TEven,
    TOdd,
    TPalindromic,
    TAntiPalindromic,
    StarEven,
    StarOdd,
    StarPalindromic,
    StarAntiPalindromic,
    None,
};

// Canonical tag spellings, e.g. "hermitian", "t-even", "*-palindromic", "none".
std::string tagName(StructureTag tag);
StructureTag tagFromName(const std::string& name);

// True for the classes whose defining identity uses conjugate transpose; the
// remaining structured classes use plain transpose. None has no identity.
bool tagUsesConjTranspose(StructureTag tag);

struct Pencil {
    Matrix A;
    Matrix B;

    Pencil() = default;
    Pencil(Matrix a, Matrix b) : A(std::move(a)), B(std::move(b)) {
        if (A.rows() != B.rows() || A.cols() != B.cols())
            throw std::invalid_argument("pencil: coefficient shapes differ");
    }

    static Pencil zero(std::size_t rows, std::size_t cols) {
        return Pencil(Matrix(rows, cols), Matrix(rows, cols));
    }

    std::size_t rows() const { return A.rows(); }
    std::size_t cols() const { return A.cols(); }
    bool isSquare() const { return A.isSquare(); }

    friend bool operator==(const Pencil& a, const Pencil& b) { return a.A == b.A && a.B == b.B; }
    friend bool operator!=(const Pencil& a, const Pencil& b) { return !(a == b); }

    friend Pencil operator+(const Pencil& a, const Pencil& b) { return Pencil(a.A + b.A, a.B + b.B); }
    friend Pencil operator-(const Pencil& a, const Pencil& b) { return Pencil(a.A - b.A, a.B - b.B); }
    Pencil operator-() const { return Pencil(-A, -B); }
    Pencil scaled(const GaussianRational& c) const { return Pencil(A.scaled(c), B.scaled(c)); }

    Pencil directSum(const Pencil& other) const {
        return Pencil(A.directSum(other.A), B.directSum(other.B));
    }
};

// rev L: B + lambda*A.
Pencil reversal(const Pencil& p);
// Transpose / conjugate transpose of both coefficients (lambda untouched).
Pencil adjointT(const Pencil& p);
Pencil adjointStar(const Pencil& p);
// L(x) as a scalar matrix.
Matrix evaluate(const Pencil& p, const GaussianRational& x);
// Entries A_ij + lambda*B_ij.
PolyMatrix pencilToPolyMatrix(const Pencil& p);

// Defining identity check for the given class (None always passes).
bool checkStructure(const Pencil& p, StructureTag tag);

// Cayley transformations on the coefficient pair:
//   C_{-1}: (A, B) -> (A - B, A + B)      [lambda <- (lambda-1)/(lambda+1) scaled]
//   C_{+1}: (A, B) -> (A + B, -A + B)     [lambda <- (1+lambda)/(1-lambda) scaled]
// They compose to twice the identity: C_{-1}(C_{+1}(L)) = 2L.
Pencil cayleyMinus(const Pencil& p);
Pencil cayleyPlus(const Pencil& p);

// Structure transport: coefficient-level maps that carry one structure class
// onto another. The (tag, map) -> tag table is total where the image is again
// one of the thirteen classes and errors otherwise.
enum class TransportMap {
    TimesI,           // multiply the whole pencil by i
    TimesMinusI,      // multiply the whole pencil by -i
    LambdaTimesIB,    // A + lambda*B  ->  A + lambda*(iB)
    LambdaTimesMinusIB,
    Reversal,
    CayleyPlus,
    CayleyMinus,
};

StructureTag transportTag(StructureTag tag, TransportMap map);
Pencil transport(const Pencil& p, TransportMap map);

// Normal rank of the pencil as a matrix over Q(i)[lambda], computed by
// fraction-free (Bareiss) elimination with exact polynomial pivoting; pivot
// ties are broken by the lowest (row, column) index.
std::size_t normalRank(const Pencil& p);
std::size_t normalRank(PolyMatrix m);

// Degree <= 1 polynomial vectors w(lambda) = c0 + lambda*c1, the building
// blocks of rank-one decompositions and perturbation maps.
struct PolyVector {
    Vector c0;
    Vector c1;

    PolyVector() = default;
    explicit PolyVector(Vector constant)
        : c0(std::move(constant)), c1(c0.size()) {}
    PolyVector(Vector constant, Vector linear) : c0(std::move(constant)), c1(std::move(linear)) {
        if (c0.size() != c1.size()) throw std::invalid_argument("poly vector: length mismatch");
    }

    static PolyVector zero(std::size_t n) { return PolyVector(Vector(n), Vector(n)); }

    std::size_t size() const { return c0.size(); }
    bool isConstant() const;
    bool isZero() const;

    Vector eval(const GaussianRational& x) const;
    PolyVector conj() const;
    // w(-lambda).
    PolyVector negVar() const;
    // rev w = c1 + lambda*c0.
    PolyVector rev() const;
    PolyVector scaled(const GaussianRational& c) const;
    // (a + lambda*b) * w; throws when the product would exceed degree 1.
    PolyVector mulLinear(const GaussianRational& a, const GaussianRational& b) const;
    // Left multiplication by a scalar matrix.
    PolyVector apply(const Matrix& m) const;

    friend PolyVector operator+(const PolyVector& a, const PolyVector& b);
    friend bool operator==(const PolyVector& a, const PolyVector& b) {
        return a.c0 == b.c0 && a.c1 == b.c1;
    }
};

// v(lambda) * w(lambda)^T as a pencil (conjugate = true uses w^*). At least one
// of v, w must be constant so the product stays a pencil.
Pencil outerPencil(const PolyVector& v, const PolyVector& w, bool conjugate);

}  // namespace penlab
