#pragma once

// Construction of structured pencils from block descriptors. Each structure
// family has a set of canonical building blocks; derived families are built in
// a seed family and carried over by the coefficient transports (scalar twists,
// reversal, Moebius maps), optionally followed by a structure-preserving
// congruence.

#include "penlab/pencil.hpp"
#include "penlab/rng.hpp"
#include "penlab/smith.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace penlab {

enum class BlockKind {
    HermReal,           // sign * R * J_k(a - lambda), real a
    HermInf,            // reversal of the above at a = 0
    ConjPair,           // R * diag(J_k(conj(mu) - lambda), J_k(mu - lambda)), non-real mu
    SingularPair,       // [[0, L_k(lambda)^T], [L_k(lambda), 0]], size 2k+1
    PlainJordan,        // J_k(a - lambda) or its reversal for an infinite eigenvalue
    TEvenInfOdd,        // single odd block of size 2k+1 at infinity
    TEvenInfEvenPair,   // paired even blocks (2l, 2l) at infinity, size 4l
    TEvenZeroOddPair,   // R * diag(J_m(-lambda), J_m(lambda)), odd m, blocks (m, m) at zero
    TEvenZeroEven,      // single even block at zero, size = the given (even) size
    TEvenNonzeroPair,   // eigenvalues +mu and -mu, blocks (q, q), size 2q
    TEvenSingularPair,  // [[0, L_k(lambda)^T], [L_k(-lambda), 0]], size 2k+1
    ToddU,              // single odd block of size 2k+1 at zero
    ToddZeroEvenPair,   // R * diag(J_2k(lambda), -J_2k(-lambda)), blocks (2k, 2k) at zero
    SkewPair,           // [[0, J_k(a - lambda)], [-J_k(a - lambda)^T, 0]] or infinite variant
    SymBlock,           // R * J_k(a - lambda), arbitrary complex a, or infinite variant
};

const char* blockKindName(BlockKind kind);
BlockKind blockKindFromName(const std::string& name);

struct BlockSpec {
    BlockKind kind = BlockKind::PlainJordan;
    bool infinite = false;   // eigenvalue at infinity (kinds that take an eig field)
    GaussianRational eig;    // finite eigenvalue, where applicable
    std::size_t size = 1;    // the block's size parameter (see BlockKind comments)
    int sign = 1;            // +1 / -1, Hermitian-family real and infinite blocks only
};

struct SpectralSpec {
    StructureTag tag = StructureTag::None;
    std::vector<BlockSpec> blocks;
    bool hasTransform = false;
    Matrix transform;  // explicit congruence factor P (applied as P * K * P^star)
    bool hasSeedTransform = false;
    std::uint64_t seedTransform = 0;  // generate P deterministically instead
};

// The family a structure's blocks are natively built in.
StructureTag seedTag(StructureTag tag);
// Coefficient transports carrying the seed family to the target family.
std::vector<TransportMap> transportChain(StructureTag tag);
// The image of an eigenvalue under one transport.
EigenvalueRef transportEigenvalue(const EigenvalueRef& eig, TransportMap map);

// Whether a block kind belongs to the given seed family.
bool blockKindAllowed(StructureTag seed, BlockKind kind);

// One canonical block, in the seed family of `tag`. Validates kind/tag
// compatibility and the kind's parameter constraints.
Pencil buildBlock(StructureTag tag, const BlockSpec& block);

// Direct sum of the blocks, transported to the target family, then optionally
// congruenced. The result carries the structure identities of spec.tag.
Pencil buildPencil(const SpectralSpec& spec);

// Unimodular integer congruence factor generated from a seed (unit lower
// triangular times unit upper triangular, entries in [-2, 2]).
Matrix congruenceFromSeed(std::size_t n, std::uint64_t seed);

// The eigenvalues the built pencil has, with partial multiplicity lists
// (sorted non-increasing), after all transports. Singular blocks contribute
// nothing. Entries are unique per eigenvalue.
struct EigenEntry {
    EigenvalueRef eig;
    MultiplicityList mults;
};
std::vector<EigenEntry> eigenvalueTable(const SpectralSpec& spec);

// Matrix size contributed by one block.
std::size_t blockDimension(const BlockSpec& block);

}  // namespace penlab
