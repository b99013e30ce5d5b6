#include "penlab/paramz.hpp"

#include <stdexcept>
#include <utility>

namespace penlab {

namespace {

bool isConjugateFamily(StructureTag tag) {
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

bool isTransposeAlternatingOrPalindromic(StructureTag tag) {
    switch (tag) {
        case StructureTag::TEven:
        case StructureTag::TOdd:
        case StructureTag::TPalindromic:
        case StructureTag::TAntiPalindromic:
            return true;
        default:
            return false;
    }
}

// Scalar-term coefficients (a0, a1) built from two real parameters so that
// a0 * u u^star + lambda * a1 * u u^star has the requested structure.
std::pair<GaussianRational, GaussianRational> scalarCoefficients(StructureTag tag,
                                                                 const Rational& a,
                                                                 const Rational& b) {
    const GaussianRational ra(a, Rational(0));
    const GaussianRational rb(b, Rational(0));
    const GaussianRational ia(Rational(0), a);
    const GaussianRational ib(Rational(0), b);
    switch (tag) {
        case StructureTag::Hermitian:
            return {ra, rb};
        case StructureTag::SkewHermitian:
            return {ia, ib};
        case StructureTag::StarEven:
            return {ra, ib};
        case StructureTag::StarOdd:
            return {ia, rb};
        case StructureTag::StarPalindromic:
            return {ra - ib, ra + ib};
        case StructureTag::StarAntiPalindromic:
            return {ra + ib, -ra + ib};
        default:
            throw std::invalid_argument("scalarCoefficients: tag does not take real scalar data");
    }
}

// Fixed scalar coefficients for the transpose alternating/palindromic family;
// the free coefficient is absorbed into u (every value has a square root over
// the complex field, and the parameter vector ranges over all complex u).
std::pair<GaussianRational, GaussianRational> fixedScalarCoefficients(StructureTag tag) {
    switch (tag) {
        case StructureTag::TEven:
            return {GaussianRational(1), GaussianRational(0)};
        case StructureTag::TOdd:
            return {GaussianRational(0), GaussianRational(1)};
        case StructureTag::TPalindromic:
            return {GaussianRational(1), GaussianRational(1)};
        case StructureTag::TAntiPalindromic:
            return {GaussianRational(1), GaussianRational(-1)};
        default:
            throw std::invalid_argument("fixedScalarCoefficients: unexpected tag");
    }
}

class ParamReader {
  public:
    explicit ParamReader(const ParamVector& params) : params_(params) {}

    Rational nextReal() {
        if (realPos_ >= params_.reals.size()) {
            throw std::invalid_argument("phi: real parameter vector too short");
        }
        return params_.reals[realPos_++];
    }

    GaussianRational nextComplex() {
        if (complexPos_ >= params_.complexes.size()) {
            throw std::invalid_argument("phi: complex parameter vector too short");
        }
        return params_.complexes[complexPos_++];
    }

    Vector nextVector(std::size_t n) {
        Vector v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = nextComplex();
        }
        return v;
    }

    std::vector<Vector> nextVectors(std::size_t count, std::size_t n) {
        std::vector<Vector> vs;
        vs.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            vs.push_back(nextVector(n));
        }
        return vs;
    }

    void checkExhausted() const {
        if (realPos_ != params_.reals.size() || complexPos_ != params_.complexes.size()) {
            throw std::invalid_argument("phi: parameter vector has trailing entries");
        }
    }

  private:
    const ParamVector& params_;
    std::size_t realPos_ = 0;
    std::size_t complexPos_ = 0;
};

}  // namespace

bool sAdmissible(StructureTag tag, std::size_t r, std::size_t s) {
    if (tag == StructureTag::None) {
        return s <= r;
    }
    if (isConjugateFamily(tag) || tag == StructureTag::Symmetric) {
        return 2 * s <= r;
    }
    if (isTransposeAlternatingOrPalindromic(tag)) {
        return s == r / 2;
    }
    if (tag == StructureTag::SkewSymmetric) {
        return r % 2 == 0 && s == r / 2;
    }
    throw std::invalid_argument("sAdmissible: unsupported structure tag");
}

std::vector<std::size_t> admissibleS(StructureTag tag, std::size_t r) {
    std::vector<std::size_t> out;
    if (tag == StructureTag::SkewSymmetric && r % 2 != 0) {
        return out;
    }
    for (std::size_t s = 0; s <= r; ++s) {
        if (sAdmissible(tag, r, s)) {
            out.push_back(s);
        }
    }
    return out;
}

PhiDimensions phiDimensions(StructureTag tag, std::size_t n, std::size_t r, std::size_t s) {
    if (!sAdmissible(tag, r, s)) {
        throw std::invalid_argument("phiDimensions: inadmissible pair count s for this structure");
    }
    PhiDimensions dims;
    if (tag == StructureTag::None) {
        dims.complexCount = 3 * r * n;
        return dims;
    }
    if (isConjugateFamily(tag)) {
        const std::size_t ell = r - 2 * s;
        dims.realCount = 2 * ell;
        dims.complexCount = (r + s) * n;
        return dims;
    }
    if (tag == StructureTag::Symmetric) {
        const std::size_t ell = r - 2 * s;
        dims.complexCount = 2 * ell + (r + s) * n;
        return dims;
    }
    // Transpose alternating/palindromic and skew-symmetric: s = floor(r/2).
    const std::size_t ell = r - 2 * s;
    dims.complexCount = (ell + 3 * s) * n;
    return dims;
}

ParamVector sampleParams(StructureTag tag, std::size_t n, std::size_t r, std::size_t s, Rng& rng,
                         long bound) {
    const PhiDimensions dims = phiDimensions(tag, n, r, s);
    ParamVector params;
    params.reals.reserve(dims.realCount);
    for (std::size_t i = 0; i < dims.realCount; ++i) {
        params.reals.push_back(randomScalar(rng, bound, true).re());
    }
    params.complexes.reserve(dims.complexCount);
    for (std::size_t i = 0; i < dims.complexCount; ++i) {
        params.complexes.push_back(randomScalar(rng, bound, false));
    }
    return params;
}

RankOneDecomposition phi(StructureTag tag, std::size_t n, std::size_t r, std::size_t s,
                         const ParamVector& params) {
    const PhiDimensions dims = phiDimensions(tag, n, r, s);
    if (params.reals.size() != dims.realCount || params.complexes.size() != dims.complexCount) {
        throw std::invalid_argument("phi: parameter vector sizes do not match the family");
    }
    ParamReader reader(params);
    RankOneDecomposition dec;
    dec.tag = tag;
    dec.n = n;

    if (tag == StructureTag::None) {
        // Segments: all v constant parts, v linear parts (terms s..r-1), all w
        // constant parts, w linear parts (terms 0..s-1).
        std::vector<Vector> vConst = reader.nextVectors(r, n);
        std::vector<Vector> vLin = reader.nextVectors(r - s, n);
        std::vector<Vector> wConst = reader.nextVectors(r, n);
        std::vector<Vector> wLin = reader.nextVectors(s, n);
        reader.checkExhausted();
        for (std::size_t i = 0; i < r; ++i) {
            DyadTerm term;
            if (i < s) {
                term.v = PolyVector(std::move(vConst[i]));
                term.w = PolyVector(std::move(wConst[i]), std::move(wLin[i]));
            } else {
                term.v = PolyVector(std::move(vConst[i]), std::move(vLin[i - s]));
                term.w = PolyVector(std::move(wConst[i]));
            }
            dec.dyads.push_back(std::move(term));
        }
        return dec;
    }

    const std::size_t ell = r - 2 * s;
    std::vector<std::pair<GaussianRational, GaussianRational>> coeffs;
    coeffs.reserve(ell);
    if (isConjugateFamily(tag)) {
        std::vector<Rational> as;
        std::vector<Rational> bs;
        for (std::size_t i = 0; i < ell; ++i) {
            as.push_back(reader.nextReal());
        }
        for (std::size_t i = 0; i < ell; ++i) {
            bs.push_back(reader.nextReal());
        }
        for (std::size_t i = 0; i < ell; ++i) {
            coeffs.push_back(scalarCoefficients(tag, as[i], bs[i]));
        }
    } else if (tag == StructureTag::Symmetric) {
        std::vector<GaussianRational> as;
        std::vector<GaussianRational> bs;
        for (std::size_t i = 0; i < ell; ++i) {
            as.push_back(reader.nextComplex());
        }
        for (std::size_t i = 0; i < ell; ++i) {
            bs.push_back(reader.nextComplex());
        }
        for (std::size_t i = 0; i < ell; ++i) {
            coeffs.emplace_back(as[i], bs[i]);
        }
    } else if (isTransposeAlternatingOrPalindromic(tag)) {
        for (std::size_t i = 0; i < ell; ++i) {
            coeffs.push_back(fixedScalarCoefficients(tag));
        }
    } else if (tag != StructureTag::SkewSymmetric) {
        throw std::invalid_argument("phi: unsupported structure tag");
    }

    std::vector<Vector> us = reader.nextVectors(ell, n);
    std::vector<Vector> vs = reader.nextVectors(s, n);
    std::vector<Vector> w0s = reader.nextVectors(s, n);
    std::vector<Vector> w1s = reader.nextVectors(s, n);
    reader.checkExhausted();

    for (std::size_t i = 0; i < ell; ++i) {
        ScalarTerm term;
        term.a0 = coeffs[i].first;
        term.a1 = coeffs[i].second;
        term.u = std::move(us[i]);
        dec.scalars.push_back(std::move(term));
    }
    for (std::size_t j = 0; j < s; ++j) {
        PairTerm term;
        term.v = std::move(vs[j]);
        term.w = PolyVector(std::move(w0s[j]), std::move(w1s[j]));
        dec.pairs.push_back(std::move(term));
    }
    return dec;
}

Pencil phiPencil(StructureTag tag, std::size_t n, std::size_t r, std::size_t s,
                 const ParamVector& params) {
    return reconstruct(phi(tag, n, r, s, params));
}

namespace {

// 1-based index within the frame, shifted by the offset; throws when it does
// not fit.
std::size_t placed(std::size_t oneBased, std::size_t n, std::size_t offset,
                   const char* recipeName) {
    if (oneBased == 0) {
        throw std::invalid_argument(std::string(recipeName) + ": index parameters are 1-based");
    }
    const std::size_t idx = offset + oneBased - 1;
    if (idx >= n) {
        throw std::invalid_argument(std::string(recipeName) +
                                    ": placement falls outside the frame");
    }
    return idx;
}

}  // namespace

Pencil namedPerturbation(const NamedPerturbation& recipe, std::size_t n, std::size_t offset) {
    Matrix a(n, n);
    Matrix b(n, n);
    const GaussianRational& c = recipe.coeff;
    const GaussianRational half(Rational(1, 2), Rational(0));
    switch (recipe.kind) {
        case RecipeKind::EntryDyad: {
            a(placed(recipe.p1, n, offset, "entry dyad"), placed(1, n, offset, "entry dyad")) = c;
            break;
        }
        case RecipeKind::CornerLoad: {
            a(placed(1, n, offset, "corner load"), placed(1, n, offset, "corner load")) = c;
            break;
        }
        case RecipeKind::CrossCouple: {
            const std::size_t i = placed(1, n, offset, "cross couple");
            const std::size_t j = placed(recipe.p2 + 1, n, offset, "cross couple");
            a(i, j) = c * half;
            a(j, i) = c.conj() * half;
            break;
        }
        case RecipeKind::PairedCornerLoad: {
            const Vector v = [&] {
                Vector out(n);
                out[placed(1, n, offset, "paired corner load")] = GaussianRational(1);
                out[placed(recipe.p1 + 1, n, offset, "paired corner load")] = GaussianRational(1);
                return out;
            }();
            a = outerConj(v, v).scaled(c);
            break;
        }
        case RecipeKind::PairedCrossCouple: {
            Vector v(n);
            v[placed(2 * recipe.p1 + 1, n, offset, "paired cross couple")] = GaussianRational(1);
            v[placed(2 * recipe.p1 + recipe.p2 + 1, n, offset, "paired cross couple")] =
                GaussianRational(1);
            Vector w(n);
            w[placed(1, n, offset, "paired cross couple")] = c * half;
            w[placed(recipe.p1 + 1, n, offset, "paired cross couple")] = c * half;
            a = outerConj(v, w) + outerConj(w, v);
            break;
        }
        case RecipeKind::SymCorner: {
            a(placed(1, n, offset, "corner"), placed(1, n, offset, "corner")) = c;
            break;
        }
        case RecipeKind::SymCornerLambda: {
            b(placed(1, n, offset, "lambda corner"), placed(1, n, offset, "lambda corner")) = c;
            break;
        }
        case RecipeKind::SymCornerPair:
        case RecipeKind::SymCornerPairLambda: {
            // Degenerate by design when the second index leaves the frame: the
            // out-of-range component is dropped and the coupling collapses to
            // the plain corner.
            Vector v(n);
            v[placed(1, n, offset, "corner pair")] = GaussianRational(1);
            const std::size_t second = offset + recipe.p1 + 2 - 1;
            if (second < n) {
                v[second] = GaussianRational(1);
            }
            if (recipe.kind == RecipeKind::SymCornerPair) {
                a = outer(v, v).scaled(c);
            } else {
                b = outer(v, v).scaled(c);
            }
            break;
        }
        case RecipeKind::OddBlockCouple: {
            const std::size_t i = placed(1, n, offset, "odd block couple");
            const std::size_t j = placed(2 * recipe.p1 + 1, n, offset, "odd block couple");
            a(i, j) = c;
            a(j, i) = -c;
            b(i, j) = GaussianRational(1);
            b(j, i) = GaussianRational(1);
            break;
        }
        case RecipeKind::SkewEntryPair: {
            const std::size_t i = placed(1, n, offset, "skew entry pair");
            const std::size_t j = placed(2 * recipe.p1 + 2, n, offset, "skew entry pair");
            a(i, j) = c;
            a(j, i) = -c;
            break;
        }
    }
    return Pencil(std::move(a), std::move(b));
}

}  // namespace penlab
