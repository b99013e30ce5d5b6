#include "penlab/canon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace penlab {

namespace {

struct KindName {
    BlockKind kind;
    const char* name;
};

constexpr KindName kKindNames[] = {
    {BlockKind::HermReal, "herm_real"},
    {BlockKind::HermInf, "herm_inf"},
    {BlockKind::ConjPair, "conj_pair"},
    {BlockKind::SingularPair, "singular_pair"},
    {BlockKind::PlainJordan, "jordan"},
    {BlockKind::TEvenInfOdd, "teven_inf_odd"},
    {BlockKind::TEvenInfEvenPair, "teven_inf_even_pair"},
    {BlockKind::TEvenZeroOddPair, "teven_zero_odd_pair"},
    {BlockKind::TEvenZeroEven, "teven_zero_even"},
    {BlockKind::TEvenNonzeroPair, "teven_nonzero_pair"},
    {BlockKind::TEvenSingularPair, "teven_singular_pair"},
    {BlockKind::ToddU, "todd_u"},
    {BlockKind::ToddZeroEvenPair, "todd_zero_even_pair"},
    {BlockKind::SkewPair, "skew_pair"},
    {BlockKind::SymBlock, "sym_block"},
};

// J_k(c): c on the diagonal, 1 on the superdiagonal.
Matrix jordanMat(std::size_t k, const GaussianRational& c) {
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        m(i, i) = c;
        if (i + 1 < k) m(i, i + 1) = GaussianRational(1);
    }
    return m;
}

Matrix nilpotentMat(std::size_t k) { return jordanMat(k, GaussianRational(0)); }

Matrix minusIdentity(std::size_t k) { return Matrix::identity(k).scaled(GaussianRational(-1)); }

// J_k(a - lambda) as a pencil: A = J_k(a), B = -I.
Pencil jordanPencil(const GaussianRational& a, std::size_t k) {
    return Pencil(jordanMat(k, a), minusIdentity(k));
}

// The rectangular singular block L_k(lambda) = lambda*[I 0] + [0 I], k x (k+1).
Pencil singularRect(std::size_t k) {
    Matrix a(k, k + 1), b(k, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        a(i, i + 1) = GaussianRational(1);
        b(i, i) = GaussianRational(1);
    }
    return Pencil(std::move(a), std::move(b));
}

Pencil leftMul(const Matrix& p, const Pencil& k) { return Pencil(p * k.A, p * k.B); }

// [[0, X], [Y, 0]] from blocks X (r1 x c2) and Y (r2 x c1).
Pencil antiBlock(const Pencil& x, const Pencil& y) {
    const std::size_t r1 = x.rows(), c2 = x.cols();
    const std::size_t r2 = y.rows(), c1 = y.cols();
    Pencil out = Pencil::zero(r1 + r2, c1 + c2);
    for (std::size_t i = 0; i < r1; ++i)
        for (std::size_t j = 0; j < c2; ++j) {
            out.A(i, c1 + j) = x.A(i, j);
            out.B(i, c1 + j) = x.B(i, j);
        }
    for (std::size_t i = 0; i < r2; ++i)
        for (std::size_t j = 0; j < c1; ++j) {
            out.A(r1 + i, j) = y.A(i, j);
            out.B(r1 + i, j) = y.B(i, j);
        }
    return out;
}

GaussianRational signScalar(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("block sign must be +1 or -1");
    return GaussianRational(sign);
}

void requirePositive(std::size_t size) {
    if (size == 0) throw std::invalid_argument("block size parameter must be positive");
}

// Native block of the seed family for the given kind.
Pencil buildSeedBlock(const BlockSpec& b) {
    requirePositive(b.size);
    const std::size_t k = b.size;
    switch (b.kind) {
        case BlockKind::HermReal: {
            if (b.infinite) throw std::invalid_argument("herm_real: use herm_inf for infinity");
            if (!b.eig.im().isZero())
                throw std::invalid_argument("herm_real: eigenvalue must be real");
            Matrix r = Matrix::reverseIdentity(k);
            GaussianRational s = signScalar(b.sign);
            Pencil p = leftMul(r, jordanPencil(b.eig, k));
            return p.scaled(s);
        }
        case BlockKind::HermInf: {
            Matrix r = Matrix::reverseIdentity(k);
            GaussianRational s = signScalar(b.sign);
            return reversal(leftMul(r, jordanPencil(GaussianRational(0), k)).scaled(s));
        }
        case BlockKind::ConjPair: {
            if (b.infinite || b.eig.im().isZero())
                throw std::invalid_argument("conj_pair: eigenvalue must be finite and non-real");
            Pencil d = jordanPencil(b.eig.conj(), k).directSum(jordanPencil(b.eig, k));
            return leftMul(Matrix::reverseIdentity(2 * k), d);
        }
        case BlockKind::SingularPair: {
            Pencil l = singularRect(k);
            return antiBlock(adjointT(l), l);
        }
        case BlockKind::PlainJordan: {
            if (b.infinite) return reversal(jordanPencil(GaussianRational(0), k));
            return jordanPencil(b.eig, k);
        }
        case BlockKind::TEvenInfOdd: {
            const std::size_t n = 2 * k + 1;
            Pencil p = Pencil::zero(n, n);
            for (std::size_t i = 1; i <= n; ++i) p.A(i - 1, n - i) = GaussianRational(1);
            // lambda entries sit on the anti-diagonal i + j = 2k + 3 (1-based).
            for (std::size_t i = 2; i <= n; ++i) {
                int s = (i <= k + 1) ? 1 : -1;
                p.B(i - 1, (2 * k + 3 - i) - 1) = GaussianRational(s);
            }
            return p;
        }
        case BlockKind::TEvenInfEvenPair: {
            BlockSpec inner;
            inner.kind = BlockKind::ToddZeroEvenPair;
            inner.size = k;
            return reversal(buildSeedBlock(inner));
        }
        case BlockKind::TEvenZeroOddPair: {
            if (k % 2 == 0)
                throw std::invalid_argument("teven_zero_odd_pair: size parameter must be odd");
            // J_m(-lambda) = J_m(0) - lambda I; J_m(lambda) = J_m(0) + lambda I.
            Pencil d = jordanPencil(GaussianRational(0), k);
            Pencil plus(nilpotentMat(k), Matrix::identity(k));
            Pencil stacked = d.directSum(plus);
            return leftMul(Matrix::reverseIdentity(2 * k), stacked);
        }
        case BlockKind::TEvenZeroEven: {
            if (k % 2 != 0)
                throw std::invalid_argument("teven_zero_even: size must be even");
            const std::size_t n = k;
            Pencil p = Pencil::zero(n, n);
            for (std::size_t i = 1; i <= n; ++i) {
                int s = (i <= n / 2) ? 1 : -1;
                p.B(i - 1, (n + 1 - i) - 1) = GaussianRational(s);
            }
            for (std::size_t i = 2; i <= n; ++i) p.A(i - 1, (n + 2 - i) - 1) = GaussianRational(1);
            return p;
        }
        case BlockKind::TEvenNonzeroPair: {
            if (b.infinite || b.eig.isZero())
                throw std::invalid_argument("teven_nonzero_pair: eigenvalue must be finite and nonzero");
            Matrix r = Matrix::reverseIdentity(k);
            // J_q(mu + lambda) and J_q(mu - lambda).
            Pencil upper = leftMul(r, Pencil(jordanMat(k, b.eig), Matrix::identity(k)));
            Pencil lower = leftMul(r, Pencil(jordanMat(k, b.eig), minusIdentity(k)));
            return antiBlock(upper, lower);
        }
        case BlockKind::TEvenSingularPair: {
            Pencil l = singularRect(k);
            Pencil lneg(l.A, -l.B);  // L_k(-lambda)
            return antiBlock(adjointT(l), lneg);
        }
        case BlockKind::ToddU: {
            BlockSpec inner;
            inner.kind = BlockKind::TEvenInfOdd;
            inner.size = k;
            return reversal(buildSeedBlock(inner));
        }
        case BlockKind::ToddZeroEvenPair: {
            const std::size_t m = 2 * k;
            // R * diag(J_2k(lambda), -J_2k(-lambda)).
            Pencil plus(nilpotentMat(m), Matrix::identity(m));
            Pencil minusNeg(-nilpotentMat(m), Matrix::identity(m));
            Pencil stacked = plus.directSum(minusNeg);
            return leftMul(Matrix::reverseIdentity(2 * m), stacked);
        }
        case BlockKind::SkewPair: {
            Pencil inner = b.infinite ? reversal(jordanPencil(GaussianRational(0), k))
                                      : jordanPencil(b.eig, k);
            return antiBlock(inner, -adjointT(inner));
        }
        case BlockKind::SymBlock: {
            Matrix r = Matrix::reverseIdentity(k);
            Pencil inner = b.infinite ? reversal(jordanPencil(GaussianRational(0), k))
                                      : jordanPencil(b.eig, k);
            return leftMul(r, inner);
        }
    }
    throw std::logic_error("buildSeedBlock: unhandled kind");
}

}  // namespace

bool blockKindAllowed(StructureTag seed, BlockKind kind) {
    switch (seed) {
        case StructureTag::Hermitian:
            return kind == BlockKind::HermReal || kind == BlockKind::HermInf ||
                   kind == BlockKind::ConjPair || kind == BlockKind::SingularPair;
        case StructureTag::Symmetric:
            return kind == BlockKind::SymBlock || kind == BlockKind::SingularPair;
        case StructureTag::TEven:
            return kind == BlockKind::TEvenInfOdd || kind == BlockKind::TEvenInfEvenPair ||
                   kind == BlockKind::TEvenZeroOddPair || kind == BlockKind::TEvenZeroEven ||
                   kind == BlockKind::TEvenNonzeroPair || kind == BlockKind::TEvenSingularPair;
        case StructureTag::TOdd:
            return kind == BlockKind::ToddU || kind == BlockKind::ToddZeroEvenPair;
        case StructureTag::SkewSymmetric:
            return kind == BlockKind::SkewPair;
        case StructureTag::None:
            return kind == BlockKind::PlainJordan || kind == BlockKind::SingularPair;
        default:
            return false;
    }
}

const char* blockKindName(BlockKind kind) {
    for (const auto& e : kKindNames)
        if (e.kind == kind) return e.name;
    throw std::logic_error("blockKindName: unknown kind");
}

BlockKind blockKindFromName(const std::string& name) {
    for (const auto& e : kKindNames)
        if (name == e.name) return e.kind;
    throw std::invalid_argument("unknown block kind: " + name);
}

StructureTag seedTag(StructureTag tag) {
    switch (tag) {
        case StructureTag::SkewHermitian:
        case StructureTag::StarEven:
        case StructureTag::StarOdd:
        case StructureTag::StarPalindromic:
        case StructureTag::StarAntiPalindromic:
            return StructureTag::Hermitian;
        case StructureTag::TPalindromic:
        case StructureTag::TAntiPalindromic:
            return StructureTag::TEven;
        default:
            return tag;
    }
}

std::vector<TransportMap> transportChain(StructureTag tag) {
    switch (tag) {
        case StructureTag::SkewHermitian:
            return {TransportMap::TimesI};
        case StructureTag::StarEven:
            return {TransportMap::LambdaTimesMinusIB};
        case StructureTag::StarOdd:
            return {TransportMap::LambdaTimesMinusIB, TransportMap::Reversal};
        case StructureTag::TPalindromic:
            return {TransportMap::CayleyMinus};
        case StructureTag::TAntiPalindromic:
            return {TransportMap::CayleyPlus};
        case StructureTag::StarPalindromic:
            return {TransportMap::LambdaTimesMinusIB, TransportMap::CayleyMinus};
        case StructureTag::StarAntiPalindromic:
            return {TransportMap::LambdaTimesMinusIB, TransportMap::CayleyPlus};
        default:
            return {};
    }
}

EigenvalueRef transportEigenvalue(const EigenvalueRef& eig, TransportMap map) {
    const GaussianRational one(1);
    switch (map) {
        case TransportMap::TimesI:
        case TransportMap::TimesMinusI:
            return eig;
        case TransportMap::LambdaTimesIB:
            // A + lambda*(i B) is singular at lambda = mu / i = -i*mu.
            if (eig.infinite) return eig;
            return EigenvalueRef::finite(-GaussianRational::i() * eig.value);
        case TransportMap::LambdaTimesMinusIB:
            if (eig.infinite) return eig;
            return EigenvalueRef::finite(GaussianRational::i() * eig.value);
        case TransportMap::Reversal:
            if (eig.infinite) return EigenvalueRef::finite(GaussianRational(0));
            if (eig.value.isZero()) return EigenvalueRef::inf();
            return EigenvalueRef::finite(eig.value.inverse());
        case TransportMap::CayleyMinus: {
            // mu -> (1 + mu) / (1 - mu); infinity -> -1; 1 -> infinity.
            if (eig.infinite) return EigenvalueRef::finite(-one);
            if (eig.value == one) return EigenvalueRef::inf();
            return EigenvalueRef::finite((one + eig.value) / (one - eig.value));
        }
        case TransportMap::CayleyPlus: {
            // mu -> (mu - 1) / (mu + 1); infinity -> +1; -1 -> infinity.
            if (eig.infinite) return EigenvalueRef::finite(one);
            if (eig.value == -one) return EigenvalueRef::inf();
            return EigenvalueRef::finite((eig.value - one) / (eig.value + one));
        }
    }
    throw std::logic_error("transportEigenvalue: unhandled map");
}

Pencil buildBlock(StructureTag tag, const BlockSpec& block) {
    StructureTag seed = seedTag(tag);
    if (!blockKindAllowed(seed, block.kind))
        throw std::invalid_argument(std::string("block kind '") + blockKindName(block.kind) +
                                    "' is not valid for structure '" + tagName(tag) + "'");
    return buildSeedBlock(block);
}

Matrix congruenceFromSeed(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Matrix lower = Matrix::identity(n);
    Matrix upper = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            lower(i, j) = GaussianRational(static_cast<long>(rng.uniformInt(-2, 2)));
            upper(j, i) = GaussianRational(static_cast<long>(rng.uniformInt(-2, 2)));
        }
    return lower * upper;
}

Pencil buildPencil(const SpectralSpec& spec) {
    if (spec.blocks.empty()) throw std::invalid_argument("buildPencil: no blocks");
    StructureTag seed = seedTag(spec.tag);
    Pencil sum = buildBlock(spec.tag, spec.blocks[0]);
    for (std::size_t i = 1; i < spec.blocks.size(); ++i)
        sum = sum.directSum(buildBlock(spec.tag, spec.blocks[i]));
    if (sum.isSquare() && !checkStructure(sum, seed))
        throw std::logic_error("buildPencil: seed structure identity failed");
    for (TransportMap map : transportChain(spec.tag)) sum = transport(sum, map);
    if (sum.isSquare() && !checkStructure(sum, spec.tag))
        throw std::logic_error("buildPencil: target structure identity failed");
    if (spec.hasTransform || spec.hasSeedTransform) {
        if (!sum.isSquare())
            throw std::invalid_argument("buildPencil: congruence requires a square pencil");
        Matrix p = spec.hasTransform ? spec.transform : congruenceFromSeed(sum.rows(), spec.seedTransform);
        if (p.rows() != sum.rows() || p.cols() != sum.cols())
            throw std::invalid_argument("buildPencil: transform has wrong shape");
        Matrix pj = tagUsesConjTranspose(spec.tag) ? conjTranspose(p) : p.transpose();
        sum = Pencil(p * sum.A * pj, p * sum.B * pj);
        if (!checkStructure(sum, spec.tag))
            throw std::logic_error("buildPencil: congruence broke the structure");
    }
    return sum;
}

std::size_t blockDimension(const BlockSpec& block) {
    requirePositive(block.size);
    switch (block.kind) {
        case BlockKind::HermReal:
        case BlockKind::HermInf:
        case BlockKind::PlainJordan:
        case BlockKind::SymBlock:
            return block.size;
        case BlockKind::ConjPair:
        case BlockKind::TEvenNonzeroPair:
        case BlockKind::SkewPair:
        case BlockKind::TEvenZeroOddPair:
            return 2 * block.size;
        case BlockKind::TEvenZeroEven:
            return block.size;
        case BlockKind::SingularPair:
        case BlockKind::TEvenSingularPair:
        case BlockKind::TEvenInfOdd:
        case BlockKind::ToddU:
            return 2 * block.size + 1;
        case BlockKind::TEvenInfEvenPair:
        case BlockKind::ToddZeroEvenPair:
            return 4 * block.size;
    }
    throw std::logic_error("blockDimension: unhandled kind");
}

namespace {

// Eigenvalue contributions of one block, in the seed family.
std::vector<EigenEntry> seedEigenvalues(const BlockSpec& b) {
    std::vector<EigenEntry> out;
    auto add = [&out](EigenvalueRef eig, MultiplicityList mults) {
        out.push_back(EigenEntry{std::move(eig), std::move(mults)});
    };
    const std::size_t k = b.size;
    switch (b.kind) {
        case BlockKind::HermReal:
            add(EigenvalueRef::finite(b.eig), {k});
            break;
        case BlockKind::HermInf:
            add(EigenvalueRef::inf(), {k});
            break;
        case BlockKind::ConjPair:
            add(EigenvalueRef::finite(b.eig), {k});
            add(EigenvalueRef::finite(b.eig.conj()), {k});
            break;
        case BlockKind::PlainJordan:
        case BlockKind::SymBlock:
            add(b.infinite ? EigenvalueRef::inf() : EigenvalueRef::finite(b.eig), {k});
            break;
        case BlockKind::TEvenInfOdd:
            add(EigenvalueRef::inf(), {2 * k + 1});
            break;
        case BlockKind::TEvenInfEvenPair:
            add(EigenvalueRef::inf(), {2 * k, 2 * k});
            break;
        case BlockKind::TEvenZeroOddPair:
            add(EigenvalueRef::finite(GaussianRational(0)), {k, k});
            break;
        case BlockKind::TEvenZeroEven:
            add(EigenvalueRef::finite(GaussianRational(0)), {k});
            break;
        case BlockKind::TEvenNonzeroPair:
            add(EigenvalueRef::finite(b.eig), {k});
            add(EigenvalueRef::finite(-b.eig), {k});
            break;
        case BlockKind::ToddU:
            add(EigenvalueRef::finite(GaussianRational(0)), {2 * k + 1});
            break;
        case BlockKind::ToddZeroEvenPair:
            add(EigenvalueRef::finite(GaussianRational(0)), {2 * k, 2 * k});
            break;
        case BlockKind::SkewPair:
            add(b.infinite ? EigenvalueRef::inf() : EigenvalueRef::finite(b.eig), {k, k});
            break;
        case BlockKind::SingularPair:
        case BlockKind::TEvenSingularPair:
            break;
    }
    return out;
}

}  // namespace

std::vector<EigenEntry> eigenvalueTable(const SpectralSpec& spec) {
    std::vector<EigenEntry> merged;
    auto fold = [&merged](const EigenEntry& e) {
        for (auto& existing : merged)
            if (existing.eig == e.eig) {
                existing.mults.insert(existing.mults.end(), e.mults.begin(), e.mults.end());
                return;
            }
        merged.push_back(e);
    };
    std::vector<TransportMap> chain = transportChain(spec.tag);
    for (const BlockSpec& b : spec.blocks) {
        for (EigenEntry e : seedEigenvalues(b)) {
            for (TransportMap map : chain) e.eig = transportEigenvalue(e.eig, map);
            fold(e);
        }
    }
    for (auto& e : merged) std::sort(e.mults.begin(), e.mults.end(), std::greater<>());
    return merged;
}

}  // namespace penlab
