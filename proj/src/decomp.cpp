#include "penlab/decomp.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace penlab {

namespace {

Vector unitVec(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = GaussianRational(1);
    return v;
}

Vector addVec(const Vector& a, const Vector& b) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector subVec(const Vector& a, const Vector& b) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vector scaleVec(const Vector& a, const GaussianRational& c) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

Matrix outerBy(bool conj, const Vector& x, const Vector& y) {
    return conj ? outerConj(x, y) : outer(x, y);
}

enum class PairShape { PlusPlus, MinusMinus, PlusMinus, MinusPlus, PalMix, AntiPalMix };

PairShape pairShape(StructureTag tag) {
    switch (tag) {
        case StructureTag::Hermitian:
        case StructureTag::Symmetric:
            return PairShape::PlusPlus;
        case StructureTag::SkewHermitian:
        case StructureTag::SkewSymmetric:
            return PairShape::MinusMinus;
        case StructureTag::TEven:
        case StructureTag::StarEven:
            return PairShape::PlusMinus;
        case StructureTag::TOdd:
        case StructureTag::StarOdd:
            return PairShape::MinusPlus;
        case StructureTag::TPalindromic:
        case StructureTag::StarPalindromic:
            return PairShape::PalMix;
        case StructureTag::TAntiPalindromic:
        case StructureTag::StarAntiPalindromic:
            return PairShape::AntiPalMix;
        case StructureTag::None:
            break;
    }
    throw std::invalid_argument("pair terms are not defined for the unstructured tag");
}

}  // namespace

Pencil scalarTermPencil(StructureTag tag, const ScalarTerm& term) {
    Matrix base = outerBy(tagUsesConjTranspose(tag), term.u, term.u);
    return Pencil(base.scaled(term.a0), base.scaled(term.a1));
}

Pencil pairTermPencil(StructureTag tag, const PairTerm& term) {
    const bool cj = tagUsesConjTranspose(tag);
    const Vector& v = term.v;
    const Vector& w0 = term.w.c0;
    const Vector& w1 = term.w.c1;
    Matrix a, b;
    switch (pairShape(tag)) {
        case PairShape::PlusPlus:
            a = outerBy(cj, v, w0) + outerBy(cj, w0, v);
            b = outerBy(cj, v, w1) + outerBy(cj, w1, v);
            break;
        case PairShape::MinusMinus:
            a = outerBy(cj, v, w0) - outerBy(cj, w0, v);
            b = outerBy(cj, v, w1) - outerBy(cj, w1, v);
            break;
        case PairShape::PlusMinus:
            a = outerBy(cj, v, w0) + outerBy(cj, w0, v);
            b = outerBy(cj, v, w1) - outerBy(cj, w1, v);
            break;
        case PairShape::MinusPlus:
            a = outerBy(cj, v, w0) - outerBy(cj, w0, v);
            b = outerBy(cj, v, w1) + outerBy(cj, w1, v);
            break;
        case PairShape::PalMix:
            a = outerBy(cj, v, w0) + outerBy(cj, w1, v);
            b = outerBy(cj, v, w1) + outerBy(cj, w0, v);
            break;
        case PairShape::AntiPalMix:
            a = outerBy(cj, v, w0) - outerBy(cj, w1, v);
            b = outerBy(cj, v, w1) - outerBy(cj, w0, v);
            break;
    }
    return Pencil(std::move(a), std::move(b));
}

Pencil dyadTermPencil(const DyadTerm& term) { return outerPencil(term.v, term.w, false); }

Pencil reconstruct(const RankOneDecomposition& dec) {
    Pencil sum = Pencil::zero(dec.n, dec.n);
    for (const ScalarTerm& t : dec.scalars) sum = sum + scalarTermPencil(dec.tag, t);
    for (const PairTerm& t : dec.pairs) sum = sum + pairTermPencil(dec.tag, t);
    for (const DyadTerm& t : dec.dyads) sum = sum + dyadTermPencil(t);
    return sum;
}

namespace {

// ---- per-block term recipes, expressed in the block's own coordinates ----

struct BlockTerms {
    std::vector<ScalarTerm> scalars;
    std::vector<PairTerm> pairs;
    std::vector<DyadTerm> dyads;
};

// Shared pattern of the conjugate-transpose family blocks sign * R * J_k(a - lambda)
// and their infinite variants: one scalar term per odd block plus chained pairs.
BlockTerms hermStyleTerms(const GaussianRational& a, std::size_t k, int sign, bool infinite) {
    BlockTerms out;
    const GaussianRational s(sign);
    const GaussianRational half(Rational(1, 2), Rational(0));
    const std::size_t nPairs = k / 2;
    if (k % 2 == 1) {
        ScalarTerm sc;
        sc.u = unitVec(k, (k - 1) / 2);
        if (infinite) {
            sc.a0 = -s;
            sc.a1 = GaussianRational(0);
        } else {
            sc.a0 = s * a;
            sc.a1 = -s;
        }
        out.scalars.push_back(std::move(sc));
    }
    for (std::size_t i = 0; i < nPairs; ++i) {
        PairTerm p;
        p.v = scaleVec(unitVec(k, k - 1 - i), s);
        Vector w0(k), w1(k);
        // Even blocks halve the last chain entry so the middle of the
        // anti-diagonal is hit exactly once.
        GaussianRational c = (k % 2 == 0 && i + 1 == nPairs) ? half : GaussianRational(1);
        if (infinite) {
            w0[i] = GaussianRational(-1);
            w1[i + 1] = c;
        } else {
            w0[i] = a;
            w0[i + 1] = c;
            w1[i] = GaussianRational(-1);
        }
        p.w = PolyVector(std::move(w0), std::move(w1));
        out.pairs.push_back(std::move(p));
    }
    return out;
}

BlockTerms conjPairTerms(const GaussianRational& mu, std::size_t k) {
    BlockTerms out;
    const std::size_t n = 2 * k;
    for (std::size_t i = 0; i < k; ++i) {
        PairTerm p;
        p.v = unitVec(n, n - 1 - i);
        Vector w0(n), w1(n);
        w0[i] = mu;
        if (i + 1 < k) w0[i + 1] = GaussianRational(1);
        w1[i] = GaussianRational(-1);
        p.w = PolyVector(std::move(w0), std::move(w1));
        out.pairs.push_back(std::move(p));
    }
    return out;
}

// [[0, L_k^T], [L_k, 0]] with plus signs (Hermitian / symmetric families).
BlockTerms singularPairTerms(std::size_t k) {
    BlockTerms out;
    const std::size_t n = 2 * k + 1;
    for (std::size_t j = 0; j < k; ++j) {
        PairTerm p;
        p.v = unitVec(n, k + 1 + j);
        Vector w0(n), w1(n);
        w0[j + 1] = GaussianRational(1);
        w1[j] = GaussianRational(1);
        p.w = PolyVector(std::move(w0), std::move(w1));
        out.pairs.push_back(std::move(p));
    }
    return out;
}

BlockTerms tevenInfOddTerms(std::size_t k) {
    BlockTerms out;
    const std::size_t n = 2 * k + 1;
    ScalarTerm sc;
    sc.a0 = GaussianRational(1);
    sc.a1 = GaussianRational(0);
    sc.u = unitVec(n, k);
    out.scalars.push_back(std::move(sc));
    for (std::size_t i = 0; i < k; ++i) {
        PairTerm p;
        p.v = unitVec(n, 2 * k - i);
        Vector w0(n), w1(n);
        w0[i] = GaussianRational(1);
        w1[i + 1] = GaussianRational(-1);
        p.w = PolyVector(std::move(w0), std::move(w1));
        out.pairs.push_back(std::move(p));
    }
    return out;
}

BlockTerms tevenZeroOddPairTerms(std::size_t m) {
    BlockTerms out;
    const std::size_t n = 2 * m;
    for (std::size_t i = 0; i < m; ++i) {
        PairTerm p;
        p.v = unitVec(n, n - 1 - i);
        Vector w0(n), w1(n);
        if (i + 1 < m) w0[i + 1] = GaussianRational(1);
        w1[i] = GaussianRational(-1);
        p.w = PolyVector(std::move(w0), std::move(w1));
        out.pairs.push_back(std::move(p));
    }
    return out;
}

BlockTerms tevenZeroEvenTerms(std::size_t size) {
    BlockTerms out;
    const std::size_t half = size / 2;
    const GaussianRational halfC(Rational(1, 2), Rational(0));
    for (std::size_t i = 0; i < half; ++i) {
        PairTerm p;
        p.v = unitVec(size, size - 1 - i);
        Vector w0(size), w1(size);
        w0[i + 1] = (i + 1 == half) ? halfC : GaussianRational(1);
        w1[i] = GaussianRational(-1);
        p.w = PolyVector(std::move(w0), std::move(w1));
        out.pairs.push_back(std::move(p));
    }
    return out;
}

BlockTerms tevenNonzeroPairTerms(const GaussianRational& mu, std::size_t q) {
    BlockTerms out;
    const std::size_t n = 2 * q;
    for (std::size_t i = 0; i < q; ++i) {
        PairTerm p;
        p.v = unitVec(n, n - 1 - i);
        Vector w0(n), w1(n);
        w0[i] = mu;
        if (i + 1 < q) w0[i + 1] = GaussianRational(1);
        w1[i] = GaussianRational(-1);
        p.w = PolyVector(std::move(w0), std::move(w1));
        out.pairs.push_back(std::move(p));
    }
    return out;
}

BlockTerms tevenSingularPairTerms(std::size_t k) {
    BlockTerms out;
    const std::size_t n = 2 * k + 1;
    for (std::size_t j = 0; j < k; ++j) {
        PairTerm p;
        p.v = unitVec(n, k + 1 + j);
        Vector w0(n), w1(n);
        w0[j + 1] = GaussianRational(1);
        w1[j] = GaussianRational(-1);
        p.w = PolyVector(std::move(w0), std::move(w1));
        out.pairs.push_back(std::move(p));
    }
    return out;
}

BlockTerms toddUTerms(std::size_t k) {
    BlockTerms out;
    const std::size_t n = 2 * k + 1;
    ScalarTerm sc;
    sc.a0 = GaussianRational(0);
    sc.a1 = GaussianRational(1);
    sc.u = unitVec(n, k);
    out.scalars.push_back(std::move(sc));
    for (std::size_t i = 0; i < k; ++i) {
        PairTerm p;
        p.v = unitVec(n, 2 * k - i);
        Vector w0(n), w1(n);
        w0[i + 1] = GaussianRational(-1);
        w1[i] = GaussianRational(1);
        p.w = PolyVector(std::move(w0), std::move(w1));
        out.pairs.push_back(std::move(p));
    }
    return out;
}

BlockTerms toddZeroEvenPairTerms(std::size_t k) {
    BlockTerms out;
    const std::size_t n = 4 * k;
    for (std::size_t i = 0; i < 2 * k; ++i) {
        PairTerm p;
        p.v = unitVec(n, n - 1 - i);
        Vector w0(n), w1(n);
        if (i + 1 < 2 * k) w0[i + 1] = GaussianRational(1);
        w1[i] = GaussianRational(1);
        p.w = PolyVector(std::move(w0), std::move(w1));
        out.pairs.push_back(std::move(p));
    }
    return out;
}

BlockTerms skewPairTerms(const GaussianRational& a, std::size_t k, bool infinite) {
    BlockTerms out;
    const std::size_t n = 2 * k;
    for (std::size_t j = 0; j < k; ++j) {
        PairTerm p;
        p.v = unitVec(n, j);
        Vector w0(n), w1(n);
        if (infinite) {
            w0[k + j] = GaussianRational(-1);
            if (j + 1 < k) w1[k + j + 1] = GaussianRational(1);
        } else {
            w0[k + j] = a;
            if (j + 1 < k) w0[k + j + 1] = GaussianRational(1);
            w1[k + j] = GaussianRational(-1);
        }
        p.w = PolyVector(std::move(w0), std::move(w1));
        out.pairs.push_back(std::move(p));
    }
    return out;
}

BlockTerms plainJordanTerms(const GaussianRational& a, std::size_t k, bool infinite) {
    BlockTerms out;
    for (std::size_t i = 0; i < k; ++i) {
        DyadTerm d;
        d.v = PolyVector(unitVec(k, i));
        Vector w0(k), w1(k);
        if (infinite) {
            w0[i] = GaussianRational(-1);
            if (i + 1 < k) w1[i + 1] = GaussianRational(1);
        } else {
            w0[i] = a;
            if (i + 1 < k) w0[i + 1] = GaussianRational(1);
            w1[i] = GaussianRational(-1);
        }
        d.w = PolyVector(std::move(w0), std::move(w1));
        out.dyads.push_back(std::move(d));
    }
    return out;
}

BlockTerms transportBlockTerms(BlockTerms terms, StructureTag from, TransportMap map);

BlockTerms blockTerms(StructureTag seed, const BlockSpec& b) {
    switch (b.kind) {
        case BlockKind::HermReal:
            if (!b.eig.im().isZero())
                throw std::invalid_argument("herm_real: eigenvalue must be real");
            return hermStyleTerms(b.eig, b.size, b.sign, false);
        case BlockKind::HermInf:
            return hermStyleTerms(GaussianRational(0), b.size, b.sign, true);
        case BlockKind::ConjPair:
            return conjPairTerms(b.eig, b.size);
        case BlockKind::SingularPair:
            if (seed == StructureTag::None) {
                throw std::invalid_argument(
                    "decomposition of the unstructured singular pair block is not supported");
            }
            return singularPairTerms(b.size);
        case BlockKind::PlainJordan:
            return plainJordanTerms(b.eig, b.size, b.infinite);
        case BlockKind::TEvenInfOdd:
            return tevenInfOddTerms(b.size);
        case BlockKind::TEvenInfEvenPair:
            return transportBlockTerms(toddZeroEvenPairTerms(b.size), StructureTag::TOdd,
                                       TransportMap::Reversal);
        case BlockKind::TEvenZeroOddPair:
            if (b.size % 2 == 0)
                throw std::invalid_argument("teven_zero_odd_pair: size parameter must be odd");
            return tevenZeroOddPairTerms(b.size);
        case BlockKind::TEvenZeroEven:
            if (b.size % 2 != 0)
                throw std::invalid_argument("teven_zero_even: size must be even");
            return tevenZeroEvenTerms(b.size);
        case BlockKind::TEvenNonzeroPair:
            if (b.eig.isZero())
                throw std::invalid_argument("teven_nonzero_pair: eigenvalue must be nonzero");
            return tevenNonzeroPairTerms(b.eig, b.size);
        case BlockKind::TEvenSingularPair:
            return tevenSingularPairTerms(b.size);
        case BlockKind::ToddU:
            return toddUTerms(b.size);
        case BlockKind::ToddZeroEvenPair:
            return toddZeroEvenPairTerms(b.size);
        case BlockKind::SkewPair:
            return skewPairTerms(b.eig, b.size, b.infinite);
        case BlockKind::SymBlock:
            return hermStyleTerms(b.eig, b.size, 1, b.infinite);
    }
    throw std::logic_error("blockTerms: unhandled kind");
}

Vector embedVec(const Vector& v, std::size_t offset, std::size_t n) {
    Vector out(n);
    for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
    return out;
}

PolyVector embedPoly(const PolyVector& v, std::size_t offset, std::size_t n) {
    return PolyVector(embedVec(v.c0, offset, n), embedVec(v.c1, offset, n));
}

void appendEmbedded(RankOneDecomposition& dec, const BlockTerms& terms, std::size_t offset) {
    const std::size_t n = dec.n;
    for (const ScalarTerm& t : terms.scalars)
        dec.scalars.push_back(ScalarTerm{t.a0, t.a1, embedVec(t.u, offset, n)});
    for (const PairTerm& t : terms.pairs)
        dec.pairs.push_back(PairTerm{embedVec(t.v, offset, n), embedPoly(t.w, offset, n)});
    for (const DyadTerm& t : terms.dyads)
        dec.dyads.push_back(DyadTerm{embedPoly(t.v, offset, n), embedPoly(t.w, offset, n)});
}

// Merge the structure-constrained rank-one uu^T terms of the transpose family
// in pairs: with v = u1 + i*u2 and w = (u1 - i*u2)/2,
//   v w^T + w v^T = u1 u1^T + u2 u2^T,
// so two scalar terms with equal coefficients fuse into one pair term.
void mergeTransposeFamilyScalars(RankOneDecomposition& dec) {
    const GaussianRational iu = GaussianRational::i();
    const GaussianRational half(Rational(1, 2), Rational(0));
    std::vector<ScalarTerm> scalars = std::move(dec.scalars);
    dec.scalars.clear();
    std::size_t i = 0;
    while (i + 1 < scalars.size()) {
        const ScalarTerm& s1 = scalars[i];
        const ScalarTerm& s2 = scalars[i + 1];
        if (s1.a0 != s2.a0 || s1.a1 != s2.a1)
            throw std::logic_error("scalar merge requires equal coefficients");
        Vector v = addVec(s1.u, scaleVec(s2.u, iu));
        Vector wBase = scaleVec(subVec(s1.u, scaleVec(s2.u, iu)), half);
        PairTerm p;
        p.v = std::move(v);
        p.w = PolyVector(scaleVec(wBase, s1.a0), scaleVec(wBase, s1.a1));
        dec.pairs.push_back(std::move(p));
        i += 2;
    }
    if (i < scalars.size()) dec.scalars.push_back(std::move(scalars[i]));
}

BlockTerms transportBlockTerms(BlockTerms terms, StructureTag from, TransportMap map) {
    RankOneDecomposition tmp;
    tmp.tag = from;
    tmp.n = 0;  // unused by the transport maps
    tmp.scalars = std::move(terms.scalars);
    tmp.pairs = std::move(terms.pairs);
    tmp.dyads = std::move(terms.dyads);
    tmp = transportDecomposition(std::move(tmp), map);
    BlockTerms out;
    out.scalars = std::move(tmp.scalars);
    out.pairs = std::move(tmp.pairs);
    out.dyads = std::move(tmp.dyads);
    return out;
}

}  // namespace

RankOneDecomposition transportDecomposition(RankOneDecomposition dec, TransportMap map) {
    const bool cj = tagUsesConjTranspose(dec.tag);
    const GaussianRational iu = GaussianRational::i();
    StructureTag newTag = transportTag(dec.tag, map);
    for (ScalarTerm& t : dec.scalars) {
        switch (map) {
            case TransportMap::TimesI:
                t.a0 *= iu;
                t.a1 *= iu;
                break;
            case TransportMap::TimesMinusI:
                t.a0 *= -iu;
                t.a1 *= -iu;
                break;
            case TransportMap::LambdaTimesIB:
                t.a1 *= iu;
                break;
            case TransportMap::LambdaTimesMinusIB:
                t.a1 *= -iu;
                break;
            case TransportMap::Reversal:
                std::swap(t.a0, t.a1);
                break;
            case TransportMap::CayleyMinus: {
                GaussianRational a0 = t.a0 - t.a1;
                GaussianRational a1 = t.a0 + t.a1;
                t.a0 = std::move(a0);
                t.a1 = std::move(a1);
                break;
            }
            case TransportMap::CayleyPlus: {
                GaussianRational a0 = t.a0 + t.a1;
                GaussianRational a1 = t.a1 - t.a0;
                t.a0 = std::move(a0);
                t.a1 = std::move(a1);
                break;
            }
        }
    }
    for (PairTerm& t : dec.pairs) {
        switch (map) {
            case TransportMap::TimesI:
                t.v = scaleVec(t.v, iu);
                break;
            case TransportMap::TimesMinusI:
                t.v = scaleVec(t.v, -iu);
                break;
            case TransportMap::LambdaTimesIB:
                // For conjugating shapes the data twist is the conjugate of the
                // coefficient twist (the shape's sign flips absorb the rest).
                t.w.c1 = scaleVec(t.w.c1, cj ? -iu : iu);
                break;
            case TransportMap::LambdaTimesMinusIB:
                t.w.c1 = scaleVec(t.w.c1, cj ? iu : -iu);
                break;
            case TransportMap::Reversal:
                std::swap(t.w.c0, t.w.c1);
                break;
            case TransportMap::CayleyMinus: {
                Vector w0 = subVec(t.w.c0, t.w.c1);
                Vector w1 = addVec(t.w.c0, t.w.c1);
                t.w = PolyVector(std::move(w0), std::move(w1));
                break;
            }
            case TransportMap::CayleyPlus: {
                Vector w0 = addVec(t.w.c0, t.w.c1);
                Vector w1 = subVec(t.w.c1, t.w.c0);
                t.w = PolyVector(std::move(w0), std::move(w1));
                break;
            }
        }
    }
    for (DyadTerm& t : dec.dyads) {
        // Apply to the non-constant factor; fall back to w when both are constant.
        PolyVector& carrier = (!t.w.isConstant() || t.v.isConstant()) ? t.w : t.v;
        switch (map) {
            case TransportMap::TimesI:
                t.v = t.v.scaled(iu);
                break;
            case TransportMap::TimesMinusI:
                t.v = t.v.scaled(-iu);
                break;
            case TransportMap::LambdaTimesIB:
                carrier.c1 = scaleVec(carrier.c1, iu);
                break;
            case TransportMap::LambdaTimesMinusIB:
                carrier.c1 = scaleVec(carrier.c1, -iu);
                break;
            case TransportMap::Reversal:
                std::swap(carrier.c0, carrier.c1);
                break;
            case TransportMap::CayleyMinus: {
                Vector c0 = subVec(carrier.c0, carrier.c1);
                Vector c1 = addVec(carrier.c0, carrier.c1);
                carrier = PolyVector(std::move(c0), std::move(c1));
                break;
            }
            case TransportMap::CayleyPlus: {
                Vector c0 = addVec(carrier.c0, carrier.c1);
                Vector c1 = subVec(carrier.c1, carrier.c0);
                carrier = PolyVector(std::move(c0), std::move(c1));
                break;
            }
        }
    }
    dec.tag = newTag;
    return dec;
}

RankOneDecomposition conjugateDecomposition(RankOneDecomposition dec) {
    auto conjVec = [](Vector& v) {
        for (auto& x : v) x = x.conj();
    };
    for (ScalarTerm& t : dec.scalars) {
        t.a0 = t.a0.conj();
        t.a1 = t.a1.conj();
        conjVec(t.u);
    }
    for (PairTerm& t : dec.pairs) {
        conjVec(t.v);
        conjVec(t.w.c0);
        conjVec(t.w.c1);
    }
    for (DyadTerm& t : dec.dyads) {
        conjVec(t.v.c0);
        conjVec(t.v.c1);
        conjVec(t.w.c0);
        conjVec(t.w.c1);
    }
    return dec;
}

RankOneDecomposition decomposeCanonical(const SpectralSpec& spec) {
    StructureTag seed = seedTag(spec.tag);
    std::size_t n = 0;
    for (const BlockSpec& b : spec.blocks) n += blockDimension(b);
    RankOneDecomposition dec;
    dec.tag = seed;
    dec.n = n;
    std::size_t offset = 0;
    for (const BlockSpec& b : spec.blocks) {
        if (!blockKindAllowed(seed, b.kind))
            throw std::invalid_argument(std::string("block kind '") + blockKindName(b.kind) +
                                        "' is not valid for structure '" + tagName(spec.tag) +
                                        "'");
        appendEmbedded(dec, blockTerms(seed, b), offset);
        offset += blockDimension(b);
    }
    for (TransportMap map : transportChain(spec.tag)) dec = transportDecomposition(std::move(dec), map);
    if (dec.tag != spec.tag) throw std::logic_error("decomposeCanonical: transport chain mismatch");
    if (spec.tag == StructureTag::TEven || spec.tag == StructureTag::TOdd ||
        spec.tag == StructureTag::TPalindromic || spec.tag == StructureTag::TAntiPalindromic)
        mergeTransposeFamilyScalars(dec);
    if (spec.hasTransform || spec.hasSeedTransform) {
        Matrix p = spec.hasTransform ? spec.transform : congruenceFromSeed(n, spec.seedTransform);
        if (p.rows() != n || p.cols() != n)
            throw std::invalid_argument("decomposeCanonical: transform has wrong shape");
        auto applyMat = [&p](const Vector& v) {
            Vector out(p.rows());
            for (std::size_t i = 0; i < p.rows(); ++i) {
                GaussianRational acc;
                for (std::size_t j = 0; j < p.cols(); ++j) acc += p(i, j) * v[j];
                out[i] = std::move(acc);
            }
            return out;
        };
        for (ScalarTerm& t : dec.scalars) t.u = applyMat(t.u);
        for (PairTerm& t : dec.pairs) {
            t.v = applyMat(t.v);
            t.w = t.w.apply(p);
        }
        for (DyadTerm& t : dec.dyads) {
            t.v = t.v.apply(p);
            t.w = t.w.apply(p);
        }
    }
    return dec;
}

namespace {

EigenvalueRef inverseTransportEigenvalue(const EigenvalueRef& eig, TransportMap map) {
    switch (map) {
        case TransportMap::TimesI:
        case TransportMap::TimesMinusI:
            return eig;
        case TransportMap::LambdaTimesIB:
            return transportEigenvalue(eig, TransportMap::LambdaTimesMinusIB);
        case TransportMap::LambdaTimesMinusIB:
            return transportEigenvalue(eig, TransportMap::LambdaTimesIB);
        case TransportMap::Reversal:
            return transportEigenvalue(eig, TransportMap::Reversal);
        case TransportMap::CayleyMinus:
            return transportEigenvalue(eig, TransportMap::CayleyPlus);
        case TransportMap::CayleyPlus:
            return transportEigenvalue(eig, TransportMap::CayleyMinus);
    }
    throw std::logic_error("inverseTransportEigenvalue: unhandled map");
}

}  // namespace

long signSum(const SpectralSpec& spec, const EigenvalueRef& eig) {
    if (seedTag(spec.tag) != StructureTag::Hermitian)
        throw std::invalid_argument("signSum is defined for the Hermitian-seeded structures");
    EigenvalueRef seedEig = eig;
    std::vector<TransportMap> chain = transportChain(spec.tag);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        seedEig = inverseTransportEigenvalue(seedEig, *it);
    long sum = 0;
    for (const BlockSpec& b : spec.blocks) {
        if (b.size % 2 == 0) continue;
        if (b.kind == BlockKind::HermReal && !seedEig.infinite && b.eig == seedEig.value)
            sum += b.sign;
        else if (b.kind == BlockKind::HermInf && seedEig.infinite)
            sum += b.sign;
    }
    return sum;
}

std::size_t minimalEll(const SpectralSpec& spec) {
    if (seedTag(spec.tag) != StructureTag::Hermitian)
        throw std::invalid_argument("minimalEll is defined for the Hermitian-seeded structures");
    std::vector<std::pair<EigenvalueRef, long>> sums;
    for (const BlockSpec& b : spec.blocks) {
        if (b.size % 2 == 0) continue;
        EigenvalueRef e = EigenvalueRef::inf();
        if (b.kind == BlockKind::HermReal)
            e = EigenvalueRef::finite(b.eig);
        else if (b.kind != BlockKind::HermInf)
            continue;
        bool found = false;
        for (auto& entry : sums)
            if (entry.first == e) {
                entry.second += b.sign;
                found = true;
                break;
            }
        if (!found) sums.emplace_back(e, b.sign);
    }
    std::size_t total = 0;
    for (const auto& entry : sums) total += static_cast<std::size_t>(std::abs(entry.second));
    return total;
}

}  // namespace penlab
