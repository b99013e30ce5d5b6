#include "penlab/pencil.hpp"

#include <array>
#include <stdexcept>

namespace penlab {

namespace {

struct TagNameRow {
    StructureTag tag;
    const char* name;
};

constexpr std::array<TagNameRow, 13> kTagNames{{
    {StructureTag::Hermitian, "hermitian"},
    {StructureTag::Symmetric, "symmetric"},
    {StructureTag::SkewHermitian, "skew-hermitian"},
    {StructureTag::SkewSymmetric, "skew-symmetric"},
    {StructureTag::TEven, "t-even"},
    {StructureTag::TOdd, "t-odd"},
    {StructureTag::TPalindromic, "t-palindromic"},
    {StructureTag::TAntiPalindromic, "t-anti-palindromic"},
    {StructureTag::StarEven, "*-even"},
    {StructureTag::StarOdd, "*-odd"},
    {StructureTag::StarPalindromic, "*-palindromic"},
    {StructureTag::StarAntiPalindromic, "*-anti-palindromic"},
    {StructureTag::None, "none"},
}};

}  // namespace

std::string tagName(StructureTag tag) {
    for (const auto& row : kTagNames)
        if (row.tag == tag) return row.name;
    throw std::logic_error("unknown structure tag");
}

StructureTag tagFromName(const std::string& name) {
    for (const auto& row : kTagNames)
        if (name == row.name) return row.tag;
    throw ParseError("unknown structure tag: " + name);
}

bool tagUsesConjTranspose(StructureTag tag) {
    switch (tag) {
        case StructureTag::Hermitian:
        case StructureTag::SkewHermitian:
        case StructureTag::StarEven:
        case StructureTag::StarOdd:
        case StructureTag::StarPalindromic:
        case StructureTag::StarAntiPalindromic:
            return true;
        default:
            return false;
    }
}

Pencil reversal(const Pencil& p) { return Pencil(p.B, p.A); }

Pencil adjointT(const Pencil& p) { return Pencil(p.A.transpose(), p.B.transpose()); }

Pencil adjointStar(const Pencil& p) { return Pencil(conjTranspose(p.A), conjTranspose(p.B)); }

Matrix evaluate(const Pencil& p, const GaussianRational& x) { return p.A + p.B.scaled(x); }

PolyMatrix pencilToPolyMatrix(const Pencil& p) {
    PolyMatrix m(p.rows(), p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) m(i, j) = Poly::linear(p.A(i, j), p.B(i, j));
    return m;
}

bool checkStructure(const Pencil& p, StructureTag tag) {
    if (tag == StructureTag::None) return true;
    if (!p.isSquare()) return false;
    const Matrix at = p.A.transpose();
    const Matrix bt = p.B.transpose();
    const Matrix as = conjTranspose(p.A);
    const Matrix bs = conjTranspose(p.B);
    switch (tag) {
        case StructureTag::Hermitian: return as == p.A && bs == p.B;
        case StructureTag::Symmetric: return at == p.A && bt == p.B;
        case StructureTag::SkewHermitian: return as == -p.A && bs == -p.B;
        case StructureTag::SkewSymmetric: return at == -p.A && bt == -p.B;
        case StructureTag::TEven: return at == p.A && bt == -p.B;
        case StructureTag::TOdd: return at == -p.A && bt == p.B;
        case StructureTag::TPalindromic: return at == p.B;
        case StructureTag::TAntiPalindromic: return at == -p.B;
        case StructureTag::StarEven: return as == p.A && bs == -p.B;
        case StructureTag::StarOdd: return as == -p.A && bs == p.B;
        case StructureTag::StarPalindromic: return as == p.B;
        case StructureTag::StarAntiPalindromic: return as == -p.B;
        default: return false;
    }
}

Pencil cayleyMinus(const Pencil& p) { return Pencil(p.A - p.B, p.A + p.B); }

Pencil cayleyPlus(const Pencil& p) { return Pencil(p.A + p.B, p.B - p.A); }

StructureTag transportTag(StructureTag tag, TransportMap map) {
    using S = StructureTag;
    auto fail = [&]() -> S {
        throw std::invalid_argument("structure transport: no documented image for tag " + tagName(tag));
    };
    switch (map) {
        case TransportMap::TimesI:
        case TransportMap::TimesMinusI:
            switch (tag) {
                case S::Hermitian: return S::SkewHermitian;
                case S::SkewHermitian: return S::Hermitian;
                case S::StarEven: return S::StarOdd;
                case S::StarOdd: return S::StarEven;
                case S::StarPalindromic: return S::StarAntiPalindromic;
                case S::StarAntiPalindromic: return S::StarPalindromic;
                // A global unit scalar leaves every transpose-defined identity alone.
                default: return tag;
            }
        case TransportMap::LambdaTimesIB:
        case TransportMap::LambdaTimesMinusIB:
            switch (tag) {
                case S::Hermitian: return S::StarEven;
                case S::StarEven: return S::Hermitian;
                case S::SkewHermitian: return S::StarOdd;
                case S::StarOdd: return S::SkewHermitian;
                case S::Symmetric: return S::Symmetric;
                case S::SkewSymmetric: return S::SkewSymmetric;
                case S::TEven: return S::TEven;
                case S::TOdd: return S::TOdd;
                case S::None: return S::None;
                default: return fail();  // palindromic identities do not survive
            }
        case TransportMap::Reversal:
            switch (tag) {
                case S::TEven: return S::TOdd;
                case S::TOdd: return S::TEven;
                case S::StarEven: return S::StarOdd;
                case S::StarOdd: return S::StarEven;
                default: return tag;  // all remaining identities are reversal-invariant
            }
        case TransportMap::CayleyMinus:
            switch (tag) {
                case S::TEven: return S::TPalindromic;
                case S::TOdd: return S::TAntiPalindromic;
                case S::TPalindromic: return S::TOdd;
                case S::TAntiPalindromic: return S::TEven;
                case S::StarEven: return S::StarPalindromic;
                case S::StarOdd: return S::StarAntiPalindromic;
                case S::StarPalindromic: return S::StarOdd;
                case S::StarAntiPalindromic: return S::StarEven;
                case S::Hermitian: return S::Hermitian;
                case S::Symmetric: return S::Symmetric;
                case S::SkewHermitian: return S::SkewHermitian;
                case S::SkewSymmetric: return S::SkewSymmetric;
                case S::None: return S::None;
                default: return fail();
            }
        case TransportMap::CayleyPlus:
            switch (tag) {
                case S::TEven: return S::TAntiPalindromic;
                case S::TOdd: return S::TPalindromic;
                case S::TPalindromic: return S::TEven;
                case S::TAntiPalindromic: return S::TOdd;
                case S::StarEven: return S::StarAntiPalindromic;
                case S::StarOdd: return S::StarPalindromic;
                case S::StarPalindromic: return S::StarEven;
                case S::StarAntiPalindromic: return S::StarOdd;
                case S::Hermitian: return S::Hermitian;
                case S::Symmetric: return S::Symmetric;
                case S::SkewHermitian: return S::SkewHermitian;
                case S::SkewSymmetric: return S::SkewSymmetric;
                case S::None: return S::None;
                default: return fail();
            }
    }
    return fail();
}

Pencil transport(const Pencil& p, TransportMap map) {
    const GaussianRational i = GaussianRational::i();
    switch (map) {
        case TransportMap::TimesI: return p.scaled(i);
        case TransportMap::TimesMinusI: return p.scaled(-i);
        case TransportMap::LambdaTimesIB: return Pencil(p.A, p.B.scaled(i));
        case TransportMap::LambdaTimesMinusIB: return Pencil(p.A, p.B.scaled(-i));
        case TransportMap::Reversal: return reversal(p);
        case TransportMap::CayleyPlus: return cayleyPlus(p);
        case TransportMap::CayleyMinus: return cayleyMinus(p);
    }
    throw std::logic_error("unknown transport map");
}

std::size_t normalRank(const Pencil& p) { return normalRank(pencilToPolyMatrix(p)); }

std::size_t normalRank(PolyMatrix m) {
    // Fraction-free Bareiss elimination. Every intermediate entry is (up to
    // sign) a minor of the original matrix, so the division by the previous
    // pivot is exact; exactDiv() enforces this.
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Poly prev = Poly::one();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, col).isZero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m(i, j) = (m(r, col) * m(i, j) - m(i, col) * m(r, j)).exactDiv(prev);
            }
            m(i, col) = Poly();
        }
        prev = m(r, col);
        ++r;
    }
    return r;
}

bool PolyVector::isConstant() const {
    for (const auto& x : c1)
        if (!x.isZero()) return false;
    return true;
}

bool PolyVector::isZero() const {
    for (const auto& x : c0)
        if (!x.isZero()) return false;
    return isConstant();
}

Vector PolyVector::eval(const GaussianRational& x) const {
    Vector v(size());
    for (std::size_t k = 0; k < size(); ++k) v[k] = c0[k] + x * c1[k];
    return v;
}

PolyVector PolyVector::conj() const {
    PolyVector w = *this;
    for (auto& x : w.c0) x = x.conj();
    for (auto& x : w.c1) x = x.conj();
    return w;
}

PolyVector PolyVector::negVar() const {
    PolyVector w = *this;
    for (auto& x : w.c1) x = -x;
    return w;
}

PolyVector PolyVector::rev() const { return PolyVector(c1, c0); }

PolyVector PolyVector::scaled(const GaussianRational& c) const {
    PolyVector w = *this;
    for (auto& x : w.c0) x *= c;
    for (auto& x : w.c1) x *= c;
    return w;
}

PolyVector PolyVector::mulLinear(const GaussianRational& a, const GaussianRational& b) const {
    if (!b.isZero() && !isConstant())
        throw std::invalid_argument("poly vector: product would exceed degree 1");
    PolyVector w{Vector(size()), Vector(size())};
    for (std::size_t k = 0; k < size(); ++k) {
        w.c0[k] = a * c0[k];
        w.c1[k] = a * c1[k] + b * c0[k];
    }
    return w;
}

PolyVector PolyVector::apply(const Matrix& m) const {
    if (m.cols() != size()) throw std::invalid_argument("poly vector: matrix shape mismatch");
    PolyVector w(Vector(m.rows()), Vector(m.rows()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < size(); ++j) {
            w.c0[i] += m(i, j) * c0[j];
            w.c1[i] += m(i, j) * c1[j];
        }
    return w;
}

PolyVector operator+(const PolyVector& a, const PolyVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("poly vector: length mismatch");
    PolyVector w(Vector(a.size()), Vector(a.size()));
    for (std::size_t k = 0; k < a.size(); ++k) {
        w.c0[k] = a.c0[k] + b.c0[k];
        w.c1[k] = a.c1[k] + b.c1[k];
    }
    return w;
}

Pencil outerPencil(const PolyVector& v, const PolyVector& w, bool conjugate) {
    const PolyVector wt = conjugate ? w.conj() : w;
    // (v0 + lambda v1)(w0 + lambda w1)^T = v0 w0^T + lambda (v0 w1^T + v1 w0^T)
    // + lambda^2 v1 w1^T; the quadratic term must vanish.
    if (!v.isConstant() && !wt.isConstant())
        throw std::invalid_argument("outer pencil: both factors non-constant");
    Matrix a = outer(v.c0, wt.c0);
    Matrix b = outer(v.c0, wt.c1) + outer(v.c1, wt.c0);
    return Pencil(std::move(a), std::move(b));
}

}  // namespace penlab
