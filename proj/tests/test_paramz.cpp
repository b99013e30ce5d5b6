#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "penlab/paramz.hpp"

#include <string>
#include <vector>

using namespace penlab;

namespace {

GaussianRational g(long re, long im = 0) { return GaussianRational(Rational(re), Rational(im)); }

Vector unit(std::size_t n, std::size_t oneBased) {
    Vector v(n);
    v.at(oneBased - 1) = g(1);
    return v;
}

Vector addv(Vector a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] + b[i];
    return a;
}

Vector scalev(Vector a, const GaussianRational& c) {
    for (auto& x : a) x = x * c;
    return a;
}

ParamVector zeroParams(StructureTag tag, std::size_t n, std::size_t r, std::size_t s) {
    const PhiDimensions dims = phiDimensions(tag, n, r, s);
    ParamVector p;
    p.reals.assign(dims.realCount, Rational(0));
    p.complexes.assign(dims.complexCount, GaussianRational(0));
    return p;
}

const std::vector<StructureTag> kAllTags = {
    StructureTag::Hermitian,        StructureTag::Symmetric,
    StructureTag::SkewHermitian,    StructureTag::SkewSymmetric,
    StructureTag::TEven,            StructureTag::TOdd,
    StructureTag::TPalindromic,     StructureTag::TAntiPalindromic,
    StructureTag::StarEven,         StructureTag::StarOdd,
    StructureTag::StarPalindromic,  StructureTag::StarAntiPalindromic,
    StructureTag::None,
};

}  // namespace

TEST_CASE("admissible pair counts per structure") {
    CHECK(admissibleS(StructureTag::None, 3) == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(admissibleS(StructureTag::Hermitian, 4) == std::vector<std::size_t>{0, 1, 2});
    CHECK(admissibleS(StructureTag::Symmetric, 3) == std::vector<std::size_t>{0, 1});
    CHECK(admissibleS(StructureTag::TEven, 3) == std::vector<std::size_t>{1});
    CHECK(admissibleS(StructureTag::TPalindromic, 4) == std::vector<std::size_t>{2});
    CHECK(admissibleS(StructureTag::SkewSymmetric, 4) == std::vector<std::size_t>{2});
    CHECK(admissibleS(StructureTag::SkewSymmetric, 3).empty());
    CHECK(sAdmissible(StructureTag::Hermitian, 4, 2));
    CHECK_FALSE(sAdmissible(StructureTag::Hermitian, 4, 3));
    CHECK_FALSE(sAdmissible(StructureTag::TOdd, 4, 0));
    CHECK_THROWS_AS(phiDimensions(StructureTag::TOdd, 4, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(phiDimensions(StructureTag::SkewSymmetric, 4, 3, 1), std::invalid_argument);
}

TEST_CASE("parameter space dimensions") {
    // Hermitian, n = 4, r = 2, s = 1: no real slots, 12 complex ones.
    PhiDimensions d = phiDimensions(StructureTag::Hermitian, 4, 2, 1);
    CHECK(d.realCount == 0);
    CHECK(d.complexCount == 12);
    // Hermitian, r = 2, s = 0: two scalar terms -> 2 pairs of real coefficients.
    d = phiDimensions(StructureTag::Hermitian, 4, 2, 0);
    CHECK(d.realCount == 4);
    CHECK(d.complexCount == 8);
    // T-even, n = 4, r = 3 (s forced to 1): 16 complex.
    d = phiDimensions(StructureTag::TEven, 4, 3, 1);
    CHECK(d.realCount == 0);
    CHECK(d.complexCount == 16);
    // Unstructured, n = 2, r = 1, s = 0: 6 complex.
    d = phiDimensions(StructureTag::None, 2, 1, 0);
    CHECK(d.realCount == 0);
    CHECK(d.complexCount == 6);
    // Symmetric keeps its scalar coefficients complex.
    d = phiDimensions(StructureTag::Symmetric, 3, 2, 0);
    CHECK(d.realCount == 0);
    CHECK(d.complexCount == 4 + 6);
}

TEST_CASE("phi contract: structure, rank bound, zero maps to zero") {
    const std::size_t n = 4;
    for (StructureTag tag : kAllTags) {
        const std::string name = tagName(tag);
        CAPTURE(name);
        for (std::size_t r = 1; r <= 3; ++r) {
            for (std::size_t s : admissibleS(tag, r)) {
                CAPTURE(r);
                CAPTURE(s);
                // Zero parameters give the zero pencil.
                CHECK(phiPencil(tag, n, r, s, zeroParams(tag, n, r, s)) == Pencil::zero(n, n));
                for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                    Rng rng(seed * 977 + r * 31 + s);
                    const ParamVector params = sampleParams(tag, n, r, s, rng, 5);
                    const RankOneDecomposition dec = phi(tag, n, r, s, params);
                    CHECK(dec.rankBound() == r);
                    const Pencil p = reconstruct(dec);
                    CHECK(phiPencil(tag, n, r, s, params) == p);
                    if (tag != StructureTag::None) CHECK(checkStructure(p, tag));
                    CHECK(normalRank(p) <= r);
                }
            }
        }
    }
}

TEST_CASE("sampling is deterministic in the seed") {
    Rng a(42), b(42), c(43);
    const ParamVector pa = sampleParams(StructureTag::StarEven, 4, 2, 1, a, 5);
    const ParamVector pb = sampleParams(StructureTag::StarEven, 4, 2, 1, b, 5);
    const ParamVector pc = sampleParams(StructureTag::StarEven, 4, 2, 1, c, 5);
    CHECK(pa.reals == pb.reals);
    CHECK(pa.complexes == pb.complexes);
    CHECK(phiPencil(StructureTag::StarEven, 4, 2, 1, pa) == phiPencil(StructureTag::StarEven, 4, 2, 1, pb));
    CHECK(pa.complexes != pc.complexes);
}

TEST_CASE("phi rejects wrong parameter counts") {
    ParamVector p = zeroParams(StructureTag::Hermitian, 4, 2, 0);
    p.reals.pop_back();
    CHECK_THROWS_AS(phi(StructureTag::Hermitian, 4, 2, 0, p), std::invalid_argument);
    ParamVector q = zeroParams(StructureTag::None, 3, 2, 1);
    q.complexes.push_back(g(1));
    CHECK_THROWS_AS(phi(StructureTag::None, 3, 2, 1, q), std::invalid_argument);
}

TEST_CASE("named perturbations match explicit parameter images") {
    const std::size_t n = 8;

    SUBCASE("entry dyad (unstructured)") {
        NamedPerturbation rec;
        rec.kind = RecipeKind::EntryDyad;
        rec.coeff = g(3, 1);
        rec.p1 = 4;
        ParamVector params = zeroParams(StructureTag::None, n, 1, 0);
        // v constant part = coeff * e4, v linear part = 0, w constant = e1.
        const Vector vc = scalev(unit(n, 4), rec.coeff);
        const Vector wc = unit(n, 1);
        for (std::size_t i = 0; i < n; ++i) {
            params.complexes[i] = vc[i];
            params.complexes[2 * n + i] = wc[i];
        }
        CHECK(namedPerturbation(rec, n, 0) == phiPencil(StructureTag::None, n, 1, 0, params));
    }

    SUBCASE("corner load (Hermitian scalar)") {
        NamedPerturbation rec;
        rec.kind = RecipeKind::CornerLoad;
        rec.coeff = g(-2);
        ParamVector params = zeroParams(StructureTag::Hermitian, n, 1, 0);
        params.reals[0] = rec.coeff.re();
        const Vector u = unit(n, 1);
        for (std::size_t i = 0; i < n; ++i) params.complexes[i] = u[i];
        CHECK(namedPerturbation(rec, n, 0) == phiPencil(StructureTag::Hermitian, n, 1, 0, params));
    }

    SUBCASE("cross couple (Hermitian pair)") {
        NamedPerturbation rec;
        rec.kind = RecipeKind::CrossCouple;
        rec.coeff = g(1, 2);
        rec.p2 = 3;
        ParamVector params = zeroParams(StructureTag::Hermitian, n, 2, 1);
        const Vector v = unit(n, rec.p2 + 1);
        const Vector w0 = scalev(unit(n, 1), rec.coeff * GaussianRational(Rational(1, 2)));
        for (std::size_t i = 0; i < n; ++i) {
            params.complexes[i] = v[i];
            params.complexes[n + i] = w0[i];
        }
        CHECK(namedPerturbation(rec, n, 0) == phiPencil(StructureTag::Hermitian, n, 2, 1, params));
    }

    SUBCASE("paired corner load") {
        NamedPerturbation rec;
        rec.kind = RecipeKind::PairedCornerLoad;
        rec.coeff = g(5);
        rec.p1 = 3;
        ParamVector params = zeroParams(StructureTag::Hermitian, n, 1, 0);
        params.reals[0] = rec.coeff.re();
        const Vector u = addv(unit(n, 1), unit(n, rec.p1 + 1));
        for (std::size_t i = 0; i < n; ++i) params.complexes[i] = u[i];
        CHECK(namedPerturbation(rec, n, 0) == phiPencil(StructureTag::Hermitian, n, 1, 0, params));
    }

    SUBCASE("paired cross couple") {
        NamedPerturbation rec;
        rec.kind = RecipeKind::PairedCrossCouple;
        rec.coeff = g(0, 4);
        rec.p1 = 2;
        rec.p2 = 3;
        ParamVector params = zeroParams(StructureTag::Hermitian, n, 2, 1);
        const Vector v = addv(unit(n, 2 * rec.p1 + 1), unit(n, 2 * rec.p1 + rec.p2 + 1));
        const Vector w0 = scalev(addv(unit(n, 1), unit(n, rec.p1 + 1)),
                                 rec.coeff * GaussianRational(Rational(1, 2)));
        for (std::size_t i = 0; i < n; ++i) {
            params.complexes[i] = v[i];
            params.complexes[n + i] = w0[i];
        }
        CHECK(namedPerturbation(rec, n, 0) == phiPencil(StructureTag::Hermitian, n, 2, 1, params));
    }

    SUBCASE("symmetric corners via square coefficients") {
        // coeff = delta^2 so that the scalar term u u^T with u = delta * e1
        // reproduces it exactly.
        const GaussianRational delta = g(0, 1);  // delta^2 = -1
        NamedPerturbation rec;
        rec.kind = RecipeKind::SymCorner;
        rec.coeff = delta * delta;
        ParamVector params = zeroParams(StructureTag::TEven, n, 1, 0);
        for (std::size_t i = 0; i < n; ++i) params.complexes[i] = scalev(unit(n, 1), delta)[i];
        CHECK(namedPerturbation(rec, n, 0) == phiPencil(StructureTag::TEven, n, 1, 0, params));

        rec.kind = RecipeKind::SymCornerLambda;
        ParamVector podd = zeroParams(StructureTag::TOdd, n, 1, 0);
        for (std::size_t i = 0; i < n; ++i) podd.complexes[i] = scalev(unit(n, 1), delta)[i];
        CHECK(namedPerturbation(rec, n, 0) == phiPencil(StructureTag::TOdd, n, 1, 0, podd));
    }

    SUBCASE("paired symmetric corners") {
        const GaussianRational delta = g(2);  // coeff 4
        NamedPerturbation rec;
        rec.kind = RecipeKind::SymCornerPair;
        rec.coeff = delta * delta;
        rec.p1 = 3;
        const Vector u = scalev(addv(unit(n, 1), unit(n, rec.p1 + 2)), delta);
        ParamVector params = zeroParams(StructureTag::TEven, n, 1, 0);
        for (std::size_t i = 0; i < n; ++i) params.complexes[i] = u[i];
        CHECK(namedPerturbation(rec, n, 0) == phiPencil(StructureTag::TEven, n, 1, 0, params));

        rec.kind = RecipeKind::SymCornerPairLambda;
        ParamVector podd = zeroParams(StructureTag::TOdd, n, 1, 0);
        for (std::size_t i = 0; i < n; ++i) podd.complexes[i] = u[i];
        CHECK(namedPerturbation(rec, n, 0) == phiPencil(StructureTag::TOdd, n, 1, 0, podd));
    }

    SUBCASE("odd block couple (T-odd pair)") {
        NamedPerturbation rec;
        rec.kind = RecipeKind::OddBlockCouple;
        rec.coeff = g(7);
        rec.p1 = 2;
        ParamVector params = zeroParams(StructureTag::TOdd, n, 2, 1);
        const Vector v = unit(n, 1);
        const Vector w0 = scalev(unit(n, 2 * rec.p1 + 1), rec.coeff);
        const Vector w1 = unit(n, 2 * rec.p1 + 1);
        for (std::size_t i = 0; i < n; ++i) {
            params.complexes[i] = v[i];
            params.complexes[n + i] = w0[i];
            params.complexes[2 * n + i] = w1[i];
        }
        CHECK(namedPerturbation(rec, n, 0) == phiPencil(StructureTag::TOdd, n, 2, 1, params));
    }

    SUBCASE("skew entry pair") {
        NamedPerturbation rec;
        rec.kind = RecipeKind::SkewEntryPair;
        rec.coeff = g(3, -2);
        rec.p1 = 2;
        ParamVector params = zeroParams(StructureTag::TOdd, n, 2, 1);
        const Vector v = scalev(unit(n, 1), rec.coeff);
        const Vector w0 = unit(n, 2 * rec.p1 + 2);
        for (std::size_t i = 0; i < n; ++i) {
            params.complexes[i] = v[i];
            params.complexes[n + i] = w0[i];
        }
        CHECK(namedPerturbation(rec, n, 0) == phiPencil(StructureTag::TOdd, n, 2, 1, params));
    }
}

TEST_CASE("named perturbation placement") {
    // Offsets shift every index; out-of-frame placements error.
    NamedPerturbation rec;
    rec.kind = RecipeKind::EntryDyad;
    rec.coeff = g(9);
    rec.p1 = 2;
    const Pencil p = namedPerturbation(rec, 5, 2);
    CHECK(p.A(3, 2) == g(9));  // rows/cols shifted by the offset
    CHECK(p.B == Matrix(5, 5));
    CHECK_THROWS_AS(namedPerturbation(rec, 3, 2), std::invalid_argument);

    NamedPerturbation cross;
    cross.kind = RecipeKind::CrossCouple;
    cross.coeff = g(2, 2);
    cross.p2 = 3;
    const Pencil q = namedPerturbation(cross, 6, 1);
    CHECK(q.A(1, 4) == g(1, 1));
    CHECK(q.A(4, 1) == g(1, -1));
    CHECK_THROWS_AS(namedPerturbation(cross, 4, 1), std::invalid_argument);

    // Degenerate paired corner: second index out of frame drops that component.
    NamedPerturbation pair;
    pair.kind = RecipeKind::SymCornerPair;
    pair.coeff = g(4);
    pair.p1 = 5;
    const Pencil d = namedPerturbation(pair, 3, 0);
    Matrix expect(3, 3);
    expect(0, 0) = g(4);
    CHECK(d.A == expect);
    CHECK(d.B == Matrix(3, 3));
}
