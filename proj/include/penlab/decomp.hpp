#pragma once

// Structured rank-one decompositions of canonical pencils. A decomposition is
// a sum of three kinds of terms:
//   scalar terms  (a0 + lambda*a1) * u u^star        (rank 1, structure-shaped)
//   pair terms    built from a constant v and w(lambda) = w0 + lambda*w1,
//                 combined with the sign/mix pattern of the structure (rank 2)
//   dyad terms    v(lambda) w(lambda)^T with one constant factor (rank 1,
//                 unstructured)
// Reconstruction is exact; transports carry a decomposition along the same
// coefficient maps that carry the pencils.

#include "penlab/canon.hpp"
#include "penlab/pencil.hpp"

#include <cstdint>
#include <vector>

namespace penlab {

struct ScalarTerm {
    GaussianRational a0;  // coefficient of u u^star in A
    GaussianRational a1;  // coefficient of u u^star in B
    Vector u;
};

struct PairTerm {
    Vector v;      // constant factor
    PolyVector w;  // w0 + lambda*w1
};

struct DyadTerm {
    PolyVector v;
    PolyVector w;
};

struct RankOneDecomposition {
    StructureTag tag = StructureTag::None;
    std::size_t n = 0;
    std::vector<ScalarTerm> scalars;
    std::vector<PairTerm> pairs;
    std::vector<DyadTerm> dyads;

    std::size_t rankBound() const { return scalars.size() + 2 * pairs.size() + dyads.size(); }
    std::size_t ell() const { return scalars.size(); }
};

// The pencil of a single term under the given structure's combination shape.
Pencil scalarTermPencil(StructureTag tag, const ScalarTerm& term);
Pencil pairTermPencil(StructureTag tag, const PairTerm& term);
Pencil dyadTermPencil(const DyadTerm& term);

Pencil reconstruct(const RankOneDecomposition& dec);

// Exact structured decomposition of the canonical pencil described by `spec`,
// with reconstruct(result) == buildPencil(spec). The number of scalar terms is
// the number of odd-sized blocks at real/infinite eigenvalues for the
// conjugate-transpose families; for the T-even/T-odd/palindromic families the
// scalar terms are merged in pairs, leaving rank mod 2 of them.
RankOneDecomposition decomposeCanonical(const SpectralSpec& spec);

// Carry a decomposition along a coefficient transport (the decomposition's tag
// moves by transportTag).
RankOneDecomposition transportDecomposition(RankOneDecomposition dec, TransportMap map);

// Entry-wise conjugation: a decomposition of the coefficient-conjugated pencil.
RankOneDecomposition conjugateDecomposition(RankOneDecomposition dec);

// Sum of the signs of the odd-sized blocks at the given eigenvalue (stated in
// the built pencil's coordinates). Hermitian-seeded structures only.
long signSum(const SpectralSpec& spec, const EigenvalueRef& eig);

// Minimal number of scalar terms over all structured decompositions:
// sum over eigenvalues of |signSum|. Hermitian-seeded structures only.
std::size_t minimalEll(const SpectralSpec& spec);

}  // namespace penlab
