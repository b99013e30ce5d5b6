#pragma once

// Structure-preserving low-rank perturbation families. For every structure the
// map phi sends a flat parameter vector (real parameters first, then complex
// ones) to a rank <= r pencil built from scalar and pair terms; the
// unstructured family uses plain dyads with the degree split controlled by s.
//
// Parameter layout (segment-ordered; every vector segment holds n entries per
// listed vector):
//   unstructured: complexes = [v const parts (r vectors) | v linear parts for
//                 the last r-s terms | w const parts (r vectors) | w linear
//                 parts for the first s terms]; term i < s has constant v and
//                 linear w, term i >= s has linear v and constant w
//   conjugate-transpose family (Hermitian, skew-Hermitian, *-even/odd/pal/anti):
//                 reals = [a_1..a_l | b_1..b_l] with l = r - 2s;
//                 complexes = [u_1..u_l | v_1..v_s | w0_1..w0_s | w1_1..w1_s]
//   symmetric:    complexes = [a_1..a_l | b_1..b_l | u's | v's | w0's | w1's]
//   T-even/T-odd/T-pal/T-anti-pal: s = floor(r/2) forced; complexes =
//                 [u (only if r odd) | v's | w0's | w1's]
//   skew-symmetric: r even, s = r/2; complexes = [v's | w0's | w1's]

#include "penlab/decomp.hpp"
#include "penlab/rng.hpp"

#include <cstddef>
#include <vector>

namespace penlab {

struct PhiDimensions {
    std::size_t realCount = 0;
    std::size_t complexCount = 0;
};

// Whether the pair count s is a valid choice for rank r under this structure.
bool sAdmissible(StructureTag tag, std::size_t r, std::size_t s);
std::vector<std::size_t> admissibleS(StructureTag tag, std::size_t r);

PhiDimensions phiDimensions(StructureTag tag, std::size_t n, std::size_t r, std::size_t s);

struct ParamVector {
    std::vector<Rational> reals;
    std::vector<GaussianRational> complexes;
};

ParamVector sampleParams(StructureTag tag, std::size_t n, std::size_t r, std::size_t s, Rng& rng,
                         long bound);

// The structured perturbation for the given parameters. The result's
// reconstruction has the structure of `tag` and normal rank at most r; the
// zero parameter vector maps to the zero pencil.
RankOneDecomposition phi(StructureTag tag, std::size_t n, std::size_t r, std::size_t s,
                         const ParamVector& params);

Pencil phiPencil(StructureTag tag, std::size_t n, std::size_t r, std::size_t s,
                 const ParamVector& params);

// Named low-rank perturbations with closed forms (the witnesses used to show
// that the generic predictions are attained). Index parameters are 1-based
// positions within the frame, before the placement offset is added.
enum class RecipeKind {
    EntryDyad,           // coeff at entry (p1, 1); unstructured, constant
    CornerLoad,          // coeff * e1 e1^star; Hermitian, constant
    CrossCouple,         // (coeff/2)(e1 e_{p2+1}^star + e_{p2+1} e1^star); Hermitian
    PairedCornerLoad,    // coeff * (e1+e_{p1+1})(e1+e_{p1+1})^star; Hermitian
    PairedCrossCouple,   // coupling of (e_{2p1+1}+e_{2p1+p2+1}) with (e1+e_{p1+1})/2
    SymCorner,           // coeff * e1 e1^T; symmetric constant coefficient
    SymCornerLambda,     // coeff * lambda * e1 e1^T
    SymCornerPair,       // coeff * (e1+e_{p1+2})(e1+e_{p1+2})^T; degenerate when
                         //   the second index leaves the frame (component dropped)
    SymCornerPairLambda, // lambda-scaled variant of the above
    OddBlockCouple,      // (lambda+coeff) e1 e_{2p1+1}^T + (lambda-coeff) e_{2p1+1} e1^T
    SkewEntryPair,       // coeff * (e1 e_{2p1+2}^T - e_{2p1+2} e1^T)
};

struct NamedPerturbation {
    RecipeKind kind = RecipeKind::CornerLoad;
    GaussianRational coeff;
    std::size_t p1 = 0;
    std::size_t p2 = 0;
};

// The recipe's pencil embedded in an n-by-n frame with its indices shifted by
// `offset`. Throws std::invalid_argument when an index falls outside the
// frame (except for the documented degenerate corner-pair case).
Pencil namedPerturbation(const NamedPerturbation& recipe, std::size_t n, std::size_t offset);

}  // namespace penlab
