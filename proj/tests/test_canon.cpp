#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "penlab/canon.hpp"
#include "penlab/smith.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace penlab;

namespace {

GaussianRational g(long re, long im = 0) { return GaussianRational(Rational(re), Rational(im)); }

BlockSpec block(BlockKind kind, GaussianRational eig, std::size_t size, int sign = 1) {
    BlockSpec b;
    b.kind = kind;
    b.eig = eig;
    b.size = size;
    b.sign = sign;
    return b;
}

BlockSpec infBlock(BlockKind kind, std::size_t size, int sign = 1) {
    BlockSpec b;
    b.kind = kind;
    b.infinite = true;
    b.size = size;
    b.sign = sign;
    return b;
}

// All block kinds with a representative spec, its seed family, and the
// expected contributions (eigenvalue, multiplicity list).
struct KindCase {
    StructureTag seed;
    BlockSpec spec;
    std::size_t dim;
    std::vector<EigenEntry> table;
    bool regular = true;
};

std::vector<KindCase> kindCases() {
    using K = BlockKind;
    using S = StructureTag;
    const EigenvalueRef inf = EigenvalueRef::inf();
    auto fin = [](GaussianRational v) { return EigenvalueRef::finite(v); };
    std::vector<KindCase> cases;
    cases.push_back({S::Hermitian, block(K::HermReal, g(2), 3, -1), 3, {{fin(g(2)), {3}}}});
    cases.push_back({S::Hermitian, infBlock(K::HermInf, 2, 1), 2, {{inf, {2}}}});
    cases.push_back({S::Hermitian, block(K::ConjPair, g(1, 2), 2), 4,
                     {{fin(g(1, 2)), {2}}, {fin(g(1, -2)), {2}}}});
    cases.push_back({S::Hermitian, block(K::SingularPair, g(0), 2), 5, {}, false});
    cases.push_back({S::None, block(K::PlainJordan, g(-3, 1), 3), 3, {{fin(g(-3, 1)), {3}}}});
    cases.push_back({S::None, infBlock(K::PlainJordan, 2), 2, {{inf, {2}}}});
    cases.push_back({S::TEven, infBlock(K::TEvenInfOdd, 1), 3, {{inf, {3}}}});
    cases.push_back({S::TEven, infBlock(K::TEvenInfEvenPair, 1), 4, {{inf, {2, 2}}}});
    cases.push_back({S::TEven, block(K::TEvenZeroOddPair, g(0), 3), 6, {{fin(g(0)), {3, 3}}}});
    cases.push_back({S::TEven, block(K::TEvenZeroEven, g(0), 4), 4, {{fin(g(0)), {4}}}});
    cases.push_back({S::TEven, block(K::TEvenNonzeroPair, g(5), 2), 4,
                     {{fin(g(5)), {2}}, {fin(g(-5)), {2}}}});
    cases.push_back({S::TEven, block(K::TEvenSingularPair, g(0), 1), 3, {}, false});
    cases.push_back({S::TOdd, block(K::ToddU, g(0), 2), 5, {{fin(g(0)), {5}}}});
    cases.push_back({S::TOdd, block(K::ToddZeroEvenPair, g(0), 1), 4, {{fin(g(0)), {2, 2}}}});
    cases.push_back({S::SkewSymmetric, block(K::SkewPair, g(4), 2), 4, {{fin(g(4)), {2, 2}}}});
    cases.push_back({S::SkewSymmetric, infBlock(K::SkewPair, 3), 6, {{inf, {3, 3}}}});
    cases.push_back({S::Symmetric, block(K::SymBlock, g(2, -1), 2), 2, {{fin(g(2, -1)), {2}}}});
    cases.push_back({S::Symmetric, infBlock(K::SymBlock, 3), 3, {{inf, {3}}}});
    return cases;
}

bool sameTable(std::vector<EigenEntry> got, std::vector<EigenEntry> want) {
    if (got.size() != want.size()) return false;
    auto find = [&](const EigenvalueRef& e) -> const EigenEntry* {
        for (const auto& entry : got)
            if (entry.eig == e) return &entry;
        return nullptr;
    };
    for (const auto& w : want) {
        const EigenEntry* hit = find(w.eig);
        if (hit == nullptr || hit->mults != w.mults) return false;
    }
    return true;
}

const std::vector<StructureTag> kAllStructured = {
    StructureTag::Hermitian,        StructureTag::Symmetric,
    StructureTag::SkewHermitian,    StructureTag::SkewSymmetric,
    StructureTag::TEven,            StructureTag::TOdd,
    StructureTag::TPalindromic,     StructureTag::TAntiPalindromic,
    StructureTag::StarEven,         StructureTag::StarOdd,
    StructureTag::StarPalindromic,  StructureTag::StarAntiPalindromic,
};

// A representative two-block spec in each structure's seed family.
SpectralSpec representativeSpec(StructureTag tag) {
    using K = BlockKind;
    SpectralSpec spec;
    spec.tag = tag;
    switch (seedTag(tag)) {
        case StructureTag::Hermitian:
            spec.blocks = {block(K::HermReal, g(1), 2, 1), block(K::HermReal, g(-2), 1, -1)};
            break;
        case StructureTag::Symmetric:
            spec.blocks = {block(K::SymBlock, g(1, 1), 2), block(K::SymBlock, g(3), 1)};
            break;
        case StructureTag::TEven:
            spec.blocks = {block(K::TEvenZeroEven, g(0), 2), block(K::TEvenNonzeroPair, g(2), 1)};
            break;
        case StructureTag::TOdd:
            spec.blocks = {block(K::ToddU, g(0), 1), block(K::ToddZeroEvenPair, g(0), 1)};
            break;
        case StructureTag::SkewSymmetric:
            spec.blocks = {block(K::SkewPair, g(2), 1), block(K::SkewPair, g(-1), 2)};
            break;
        default:
            spec.blocks = {block(K::PlainJordan, g(1, 2), 2), infBlock(K::PlainJordan, 1)};
            break;
    }
    return spec;
}

}  // namespace

TEST_CASE("block kind names round trip") {
    using K = BlockKind;
    const std::vector<BlockKind> kinds = {
        K::HermReal,         K::HermInf,          K::ConjPair,         K::SingularPair,
        K::PlainJordan,      K::TEvenInfOdd,      K::TEvenInfEvenPair, K::TEvenZeroOddPair,
        K::TEvenZeroEven,    K::TEvenNonzeroPair, K::TEvenSingularPair, K::ToddU,
        K::ToddZeroEvenPair, K::SkewPair,         K::SymBlock,
    };
    for (BlockKind k : kinds) {
        CHECK(blockKindFromName(blockKindName(k)) == k);
    }
    CHECK(std::string(blockKindName(K::HermReal)) == "herm_real");
    CHECK(std::string(blockKindName(K::PlainJordan)) == "jordan");
    CHECK_THROWS(blockKindFromName("no_such_kind"));
}

TEST_CASE("block dimensions follow the size parameter") {
    using K = BlockKind;
    CHECK(blockDimension(block(K::HermReal, g(1), 3)) == 3);
    CHECK(blockDimension(infBlock(K::HermInf, 4)) == 4);
    CHECK(blockDimension(block(K::ConjPair, g(0, 1), 3)) == 6);
    CHECK(blockDimension(block(K::SingularPair, g(0), 3)) == 7);
    CHECK(blockDimension(block(K::PlainJordan, g(1), 5)) == 5);
    CHECK(blockDimension(infBlock(K::TEvenInfOdd, 2)) == 5);
    CHECK(blockDimension(infBlock(K::TEvenInfEvenPair, 2)) == 8);
    CHECK(blockDimension(block(K::TEvenZeroOddPair, g(0), 5)) == 10);
    CHECK(blockDimension(block(K::TEvenZeroEven, g(0), 6)) == 6);
    CHECK(blockDimension(block(K::TEvenNonzeroPair, g(1), 3)) == 6);
    CHECK(blockDimension(block(K::TEvenSingularPair, g(0), 2)) == 5);
    CHECK(blockDimension(block(K::ToddU, g(0), 3)) == 7);
    CHECK(blockDimension(block(K::ToddZeroEvenPair, g(0), 2)) == 8);
    CHECK(blockDimension(block(K::SkewPair, g(1), 3)) == 6);
    CHECK(blockDimension(block(K::SymBlock, g(1), 4)) == 4);
}

TEST_CASE("single blocks have the advertised structure and spectrum") {
    for (const KindCase& kc : kindCases()) {
        const std::string name = blockKindName(kc.spec.kind);
        CAPTURE(name);
        const Pencil p = buildBlock(kc.seed, kc.spec);
        CHECK(p.rows() == kc.dim);
        CHECK(checkStructure(p, kc.seed));
        CHECK(isRegular(p) == kc.regular);
        if (!kc.regular) continue;
        SpectralSpec spec;
        spec.tag = kc.seed;
        spec.blocks = {kc.spec};
        CHECK(sameTable(eigenvalueTable(spec), kc.table));
        for (const auto& entry : kc.table) {
            const MultiplicityList got = partialMultiplicities(p, entry.eig);
            CHECK(got == entry.mults);
        }
    }
}

TEST_CASE("seed chains land on the target structure") {
    for (StructureTag tag : kAllStructured) {
        StructureTag cur = seedTag(tag);
        for (TransportMap map : transportChain(tag)) {
            cur = transportTag(cur, map);
        }
        CHECK(cur == tag);
    }
    CHECK(seedTag(StructureTag::None) == StructureTag::None);
    CHECK(transportChain(StructureTag::Hermitian).empty());
    CHECK(transportChain(StructureTag::TPalindromic) ==
          std::vector<TransportMap>{TransportMap::CayleyMinus});
}

TEST_CASE("eigenvalue transport images") {
    const EigenvalueRef two = EigenvalueRef::finite(g(2));
    const EigenvalueRef zero = EigenvalueRef::finite(g(0));
    const EigenvalueRef inf = EigenvalueRef::inf();
    using M = TransportMap;
    CHECK(transportEigenvalue(two, M::TimesI) == two);
    CHECK(transportEigenvalue(two, M::LambdaTimesIB) == EigenvalueRef::finite(g(0, -2)));
    CHECK(transportEigenvalue(two, M::LambdaTimesMinusIB) == EigenvalueRef::finite(g(0, 2)));
    CHECK(transportEigenvalue(inf, M::LambdaTimesIB) == inf);
    CHECK(transportEigenvalue(two, M::Reversal) == EigenvalueRef::finite(GaussianRational(Rational(1, 2))));
    CHECK(transportEigenvalue(zero, M::Reversal) == inf);
    CHECK(transportEigenvalue(inf, M::Reversal) == zero);
    // (1 + mu) / (1 - mu): 0 -> 1, 1 -> infinity, infinity -> -1.
    CHECK(transportEigenvalue(zero, M::CayleyMinus) == EigenvalueRef::finite(g(1)));
    CHECK(transportEigenvalue(EigenvalueRef::finite(g(1)), M::CayleyMinus) == inf);
    CHECK(transportEigenvalue(inf, M::CayleyMinus) == EigenvalueRef::finite(g(-1)));
    // (mu - 1) / (mu + 1): 0 -> -1, -1 -> infinity, infinity -> 1.
    CHECK(transportEigenvalue(zero, M::CayleyPlus) == EigenvalueRef::finite(g(-1)));
    CHECK(transportEigenvalue(EigenvalueRef::finite(g(-1)), M::CayleyPlus) == inf);
    CHECK(transportEigenvalue(inf, M::CayleyPlus) == EigenvalueRef::finite(g(1)));
}

TEST_CASE("built pencils carry structure, regularity, and spectrum") {
    for (StructureTag tag : kAllStructured) {
        const std::string name = tagName(tag);
        CAPTURE(name);
        for (int variant = 0; variant < 2; ++variant) {
            SpectralSpec spec = representativeSpec(tag);
            if (variant == 1) {
                spec.hasSeedTransform = true;
                spec.seedTransform = 99;
            }
            const Pencil p = buildPencil(spec);
            CHECK(checkStructure(p, tag));
            CHECK(isRegular(p));
            const auto table = eigenvalueTable(spec);
            CHECK_FALSE(table.empty());
            for (const auto& entry : table) {
                CHECK(partialMultiplicities(p, entry.eig) == entry.mults);
            }
        }
    }
}

TEST_CASE("eigenvalue table is independent of the congruence") {
    SpectralSpec spec = representativeSpec(StructureTag::StarPalindromic);
    const auto plain = eigenvalueTable(spec);
    spec.hasSeedTransform = true;
    spec.seedTransform = 7;
    const auto congruenced = eigenvalueTable(spec);
    CHECK(sameTable(plain, congruenced));
    // And the built pencils really differ while sharing the spectrum.
    SpectralSpec bare = representativeSpec(StructureTag::StarPalindromic);
    CHECK(buildPencil(bare) != buildPencil(spec));
}

TEST_CASE("explicit congruence transform") {
    SpectralSpec spec = representativeSpec(StructureTag::Hermitian);
    std::size_t n = 0;
    for (const auto& b : spec.blocks) n += blockDimension(b);
    spec.hasTransform = true;
    spec.transform = congruenceFromSeed(n, 5);
    const Pencil p = buildPencil(spec);
    CHECK(checkStructure(p, StructureTag::Hermitian));
    for (const auto& entry : eigenvalueTable(spec)) {
        CHECK(partialMultiplicities(p, entry.eig) == entry.mults);
    }
    spec.transform = Matrix(n + 1, n + 1);
    CHECK_THROWS_AS(buildPencil(spec), std::invalid_argument);
}

TEST_CASE("congruence factors are unimodular") {
    for (std::uint64_t seed : {1u, 2u, 77u}) {
        const Matrix p = congruenceFromSeed(5, seed);
        const GaussianRational d = det(p);
        CHECK((d == GaussianRational(1) || d == GaussianRational(-1)));
    }
    CHECK(congruenceFromSeed(4, 9) == congruenceFromSeed(4, 9));
    CHECK(congruenceFromSeed(4, 9) != congruenceFromSeed(4, 10));
}

TEST_CASE("kind and tag compatibility is enforced") {
    using K = BlockKind;
    // Wrong family.
    CHECK_THROWS_AS(buildBlock(StructureTag::Hermitian, block(K::SymBlock, g(1), 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(buildBlock(StructureTag::TEven, block(K::HermReal, g(1), 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(buildBlock(StructureTag::None, block(K::HermReal, g(1), 2)),
                    std::invalid_argument);
    // Parameter constraints.
    CHECK_THROWS_AS(buildBlock(StructureTag::Hermitian, block(K::HermReal, g(1, 1), 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(buildBlock(StructureTag::Hermitian, block(K::ConjPair, g(3), 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(buildBlock(StructureTag::TEven, block(K::TEvenZeroEven, g(0), 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(buildBlock(StructureTag::TEven, block(K::TEvenZeroOddPair, g(0), 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(buildBlock(StructureTag::TEven, block(K::TEvenNonzeroPair, g(0), 2)),
                    std::invalid_argument);
    BlockSpec zeroSize = block(K::HermReal, g(1), 1);
    zeroSize.size = 0;
    CHECK_THROWS_AS(buildBlock(StructureTag::Hermitian, zeroSize), std::invalid_argument);
    BlockSpec badSign = block(K::HermReal, g(1), 1);
    badSign.sign = 2;
    CHECK_THROWS_AS(buildBlock(StructureTag::Hermitian, badSign), std::invalid_argument);
    SpectralSpec empty;
    empty.tag = StructureTag::Hermitian;
    CHECK_THROWS_AS(buildPencil(empty), std::invalid_argument);
    // Derived families admit exactly their seed's kinds.
    CHECK(blockKindAllowed(StructureTag::Hermitian, K::ConjPair));
    CHECK_FALSE(blockKindAllowed(StructureTag::Hermitian, K::SkewPair));
    CHECK(blockKindAllowed(StructureTag::TEven, K::TEvenSingularPair));
    CHECK_FALSE(blockKindAllowed(StructureTag::SkewSymmetric, K::PlainJordan));
}

TEST_CASE("derived-family spectra follow the eigenvalue transports") {
    // A t-palindromic pencil built from a zero-eigenvalue seed block lands at +1.
    SpectralSpec spec;
    spec.tag = StructureTag::TPalindromic;
    spec.blocks = {block(BlockKind::TEvenZeroOddPair, g(0), 3)};
    const Pencil p = buildPencil(spec);
    CHECK(checkStructure(p, StructureTag::TPalindromic));
    CHECK(partialMultiplicities(p, EigenvalueRef::finite(g(1))) == MultiplicityList{3, 3});

    // A *-even pencil from a real Hermitian block at a = 2 lands at 2i.
    SpectralSpec even;
    even.tag = StructureTag::StarEven;
    even.blocks = {block(BlockKind::HermReal, g(2), 2)};
    const Pencil q = buildPencil(even);
    CHECK(checkStructure(q, StructureTag::StarEven));
    CHECK(partialMultiplicities(q, EigenvalueRef::finite(g(0, 2))) == MultiplicityList{2});
}
