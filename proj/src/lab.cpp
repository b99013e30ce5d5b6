#include "penlab/lab.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace penlab {

namespace {

bool isTransposeAlternating(StructureTag tag) {
    return tag == StructureTag::TEven || tag == StructureTag::TOdd;
}

bool isTransposePalindromic(StructureTag tag) {
    return tag == StructureTag::TPalindromic || tag == StructureTag::TAntiPalindromic;
}

MultiplicityList truncateList(const MultiplicityList& list, std::size_t r) {
    if (r >= list.size()) {
        return {};
    }
    return MultiplicityList(list.begin() + static_cast<std::ptrdiff_t>(r), list.end());
}

MultiplicityList normalized(MultiplicityList list) {
    list.erase(std::remove(list.begin(), list.end(), std::size_t{0}), list.end());
    std::sort(list.rbegin(), list.rend());
    return list;
}

// The two special prediction rows share one skeleton: keep the tail of the
// list, possibly growing its leading entry by one when the parity condition
// and the interaction predicate hold, and possibly appending a fresh size-1
// entry. Zero-type rows trigger on an odd leading tail entry and never
// append; infinity-type rows trigger on an even entry and append a size-1
// entry whenever r is odd (even when the kept tail is empty).
MultiplicityList specialRow(const MultiplicityList& list, std::size_t r, bool bumpOnOdd,
                            bool appendOne) {
    MultiplicityList out;
    if (r < list.size()) {
        const bool parityOk = bumpOnOdd ? (list[r] % 2 == 1) : (list[r] % 2 == 0);
        if (parityOk && propertyP(list, r)) {
            out.push_back(list[r] + 1);
            out.insert(out.end(), list.begin() + static_cast<std::ptrdiff_t>(r) + 1, list.end());
        } else {
            out = truncateList(list, r);
        }
    }
    if (appendOne) {
        out.push_back(1);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

enum class TableMode { ZeroType, InfinityType, Default };

TableMode tableMode(StructureTag tag, EigClass cls) {
    switch (tag) {
        case StructureTag::TEven:
            if (cls == EigClass::Zero) return TableMode::ZeroType;
            if (cls == EigClass::Infinity) return TableMode::InfinityType;
            return TableMode::Default;
        case StructureTag::TOdd:
            if (cls == EigClass::Zero) return TableMode::InfinityType;
            if (cls == EigClass::Infinity) return TableMode::ZeroType;
            return TableMode::Default;
        case StructureTag::TPalindromic:
            if (cls == EigClass::PlusOne) return TableMode::ZeroType;
            if (cls == EigClass::MinusOne) return TableMode::InfinityType;
            return TableMode::Default;
        case StructureTag::TAntiPalindromic:
            if (cls == EigClass::PlusOne) return TableMode::InfinityType;
            if (cls == EigClass::MinusOne) return TableMode::ZeroType;
            return TableMode::Default;
        default:
            return TableMode::Default;
    }
}

bool isPairedList(const MultiplicityList& list) {
    if (list.size() % 2 != 0) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < list.size(); i += 2) {
        if (list[i] != list[i + 1]) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::string eigClassName(EigClass cls) {
    switch (cls) {
        case EigClass::Zero:
            return "zero";
        case EigClass::Infinity:
            return "infinity";
        case EigClass::PlusOne:
            return "plus_one";
        case EigClass::MinusOne:
            return "minus_one";
        case EigClass::Generic:
            return "generic";
    }
    throw std::logic_error("eigClassName: unknown class");
}

EigClass eigClassFromName(const std::string& name) {
    if (name == "zero") return EigClass::Zero;
    if (name == "infinity" || name == "inf") return EigClass::Infinity;
    if (name == "plus_one") return EigClass::PlusOne;
    if (name == "minus_one") return EigClass::MinusOne;
    if (name == "generic" || name == "other") return EigClass::Generic;
    throw std::invalid_argument("eigClassFromName: unknown class '" + name + "'");
}

EigClass classifyFor(StructureTag tag, const EigenvalueRef& eig) {
    if (isTransposeAlternating(tag)) {
        if (eig.infinite) return EigClass::Infinity;
        if (eig.value.isZero()) return EigClass::Zero;
        return EigClass::Generic;
    }
    if (isTransposePalindromic(tag)) {
        if (eig.infinite) return EigClass::Infinity;
        if (eig.value.isZero()) return EigClass::Zero;
        if (eig.value == GaussianRational(1)) return EigClass::PlusOne;
        if (eig.value == GaussianRational(-1)) return EigClass::MinusOne;
        return EigClass::Generic;
    }
    return EigClass::Generic;
}

bool propertyP(const MultiplicityList& list, std::size_t r) {
    if (r == 0 || r >= list.size()) {
        return false;
    }
    if (list[r - 1] != list[r]) {
        return false;
    }
    std::size_t d = 0;
    for (std::size_t j = r; j < list.size(); ++j) {
        if (list[j] == list[r]) {
            ++d;
        }
    }
    return d % 2 == 1;
}

MultiplicityList predict(StructureTag tag, EigClass cls, MultiplicityList list, std::size_t r) {
    list = normalized(std::move(list));
    if (isTransposeAlternating(tag) && (cls == EigClass::PlusOne || cls == EigClass::MinusOne)) {
        throw std::invalid_argument(
            "predict: the alternating family has no special rows at plus/minus one; classify "
            "those eigenvalues as generic");
    }
    if (isTransposePalindromic(tag) && (cls == EigClass::Zero || cls == EigClass::Infinity)) {
        throw std::invalid_argument(
            "predict: no prediction is defined for the palindromic family at zero/infinity");
    }
    if (tag == StructureTag::SkewSymmetric) {
        if (r % 2 != 0) {
            throw std::invalid_argument(
                "predict: skew-symmetric perturbations have even normal rank");
        }
        if (isPairedList(list)) {
            return truncateList(list, r);
        }
        return truncateList(list, r / 2);
    }
    if (r == 0) {
        return list;
    }
    switch (tableMode(tag, cls)) {
        case TableMode::ZeroType:
            return specialRow(list, r, /*bumpOnOdd=*/true, /*appendOne=*/false);
        case TableMode::InfinityType:
            return specialRow(list, r, /*bumpOnOdd=*/false, /*appendOne=*/r % 2 == 1);
        case TableMode::Default:
            return truncateList(list, r);
    }
    throw std::logic_error("predict: unreachable");
}

std::size_t muFor(StructureTag tag) {
    return tag == StructureTag::SkewSymmetric ? 2 : 1;
}

ExperimentReport runExperiment(const Scenario& scenario) {
    ExperimentReport rep;
    rep.scenario = scenario;
    const StructureTag tag = scenario.spec.tag;
    const Pencil base = buildPencil(scenario.spec);
    rep.n = base.rows();
    if (!isRegular(base)) {
        throw std::invalid_argument("runExperiment: base pencil is singular");
    }
    const std::vector<EigenEntry> table = eigenvalueTable(scenario.spec);
    for (const EigenEntry& entry : table) {
        if (partialMultiplicities(base, entry.eig) != entry.mults) {
            throw std::logic_error(
                "runExperiment: descriptor eigenvalue table disagrees with the built pencil");
        }
        EigPrediction pred;
        pred.eig = entry.eig;
        pred.base = entry.mults;
        pred.truncation = truncateList(entry.mults, scenario.rank);
        pred.predicted = predict(tag, classifyFor(tag, entry.eig), entry.mults, scenario.rank);
        rep.predictions.push_back(std::move(pred));
    }

    const int mu = static_cast<int>(muFor(tag));
    for (std::size_t t = 0; t < scenario.trials; ++t) {
        Rng rng = Rng::forTrial(scenario.seed, t);
        const ParamVector params =
            sampleParams(tag, rep.n, scenario.rank, scenario.s, rng, scenario.bound);
        const RankOneDecomposition dec = phi(tag, rep.n, scenario.rank, scenario.s, params);
        const Pencil pert = reconstruct(dec);
        if (tag != StructureTag::None && !checkStructure(pert, tag)) {
            throw std::logic_error("runExperiment: sampled perturbation lost its structure");
        }
        TrialRecord rec;
        rec.index = t;
        rec.perturbationRank = normalRank(pert);
        if (rec.perturbationRank > scenario.rank) {
            throw std::logic_error("runExperiment: sampled perturbation exceeds the rank bound");
        }
        const Pencil shifted = base + pert;
        rec.regular = isRegular(shifted);
        if (rec.regular) {
            ++rep.regularTrials;
            bool allMatch = true;
            for (EigPrediction& pred : rep.predictions) {
                TrialEig te;
                te.observed = partialMultiplicities(shifted, pred.eig);
                te.matched = te.observed == pred.predicted;
                te.dominated = dominates(te.observed, pred.truncation);
                if (te.matched) {
                    ++pred.matches;
                } else {
                    allMatch = false;
                }
                if (!te.dominated) {
                    ++rep.dominanceFailures;
                }
                rec.eigs.push_back(std::move(te));
            }
            rec.newEig = newEigenvalueProfile(base, shifted, mu);
            if (!rec.newEig.pass) {
                ++rep.newEigFailures;
            }
            if (allMatch) {
                ++rep.allMatchTrials;
            }
        }
        rep.trials.push_back(std::move(rec));
        ++rep.trialsRun;
    }
    rep.genericityConfirmed = rep.regularTrials == rep.trialsRun &&
                              rep.allMatchTrials == rep.trialsRun && rep.dominanceFailures == 0 &&
                              rep.newEigFailures == 0;
    return rep;
}

namespace {

Matrix nilpotentUpper(std::size_t k) {
    Matrix m(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        m(i, i + 1) = GaussianRational(1);
    }
    return m;
}

Vector cornerVector(std::size_t n, std::size_t secondIndex) {
    Vector v(n);
    v[0] = GaussianRational(1);
    if (secondIndex < n) {
        v[secondIndex] = GaussianRational(1);
    }
    return v;
}

// Flip times a paired odd-size zero block, with a constant rank-one corner
// coupling the two halves: gamma * (e_1 + e_{m+2})(e_1 + e_{m+2})^T.
Pencil oddPairWithCorner(std::size_t m, const GaussianRational& gamma) {
    const std::size_t n = 2 * m;
    const Matrix flip = Matrix::reverseIdentity(n);
    const Matrix nil = nilpotentUpper(m).directSum(nilpotentUpper(m));
    Matrix diag(n, n);
    for (std::size_t i = 0; i < m; ++i) {
        diag(i, i) = GaussianRational(-1);
        diag(m + i, m + i) = GaussianRational(1);
    }
    Matrix a = flip * nil;
    const Matrix b = flip * diag;
    const Vector v = cornerVector(n, m + 1);
    a = a + outer(v, v).scaled(gamma);
    return Pencil(a, b);
}

// Flip times a paired even-size zero block, with the corner coupling carried
// by the degree-one coefficient: gamma * lambda * (e_1 + e_{h+2})(...)^T.
Pencil evenPairWithLambdaCorner(std::size_t k, const GaussianRational& gamma) {
    const std::size_t half = 2 * k;
    const std::size_t n = 4 * k;
    const Matrix flip = Matrix::reverseIdentity(n);
    const Matrix nil = (-nilpotentUpper(half)).directSum(nilpotentUpper(half));
    const Matrix a = flip * nil;
    Matrix b = flip;
    const Vector v = cornerVector(n, half + 1);
    b = b + outer(v, v).scaled(gamma);
    return Pencil(a, b);
}

AppendixCheck detCheck(const std::string& name, const Pencil& pencil, const Poly& expected) {
    AppendixCheck check;
    check.name = name;
    const Poly actual = detPoly(pencil);
    check.passed = actual == expected;
    std::ostringstream os;
    os << "det = " << actual.str() << (check.passed ? " == " : " != ") << expected.str();
    check.detail = os.str();
    return check;
}

}  // namespace

AppendixReport verifyAppendix() {
    AppendixReport report;
    const std::vector<GaussianRational> gammas = {
        GaussianRational(1),
        GaussianRational(-2),
        GaussianRational(Rational(3, 5), Rational(0)),
    };
    for (std::size_t k = 1; k <= 4; ++k) {
        const std::size_t m = 2 * k + 1;
        for (const GaussianRational& gamma : gammas) {
            std::ostringstream name;
            name << "odd-pair corner k=" << k << " gamma=" << gamma.str();
            const Poly expected = Poly::monomial(GaussianRational(1), 2 * m) +
                                  Poly::monomial(-(gamma + gamma), m + 1);
            report.checks.push_back(detCheck(name.str(), oddPairWithCorner(m, gamma), expected));
        }
    }
    for (std::size_t k = 1; k <= 4; ++k) {
        for (const GaussianRational& gamma : gammas) {
            std::ostringstream name;
            name << "even-pair lambda corner k=" << k << " gamma=" << gamma.str();
            const Poly expected = Poly::monomial(GaussianRational(1), 4 * k) +
                                  Poly::monomial(gamma + gamma, 2 * k + 2);
            report.checks.push_back(
                detCheck(name.str(), evenPairWithLambdaCorner(k, gamma), expected));
        }
    }
    // Degenerate smallest odd pair (m = 1): the second corner index falls
    // outside the block, the coupling reduces to gamma * e_1 e_1^T, and the
    // determinant collapses to lambda^2 independently of gamma.
    for (const GaussianRational& gamma : gammas) {
        std::ostringstream name;
        name << "size-2 degenerate corner gamma=" << gamma.str();
        const Poly expected = Poly::monomial(GaussianRational(1), 2);
        report.checks.push_back(detCheck(name.str(), oddPairWithCorner(1, gamma), expected));
    }
    report.allPassed = true;
    for (const AppendixCheck& check : report.checks) {
        report.allPassed = report.allPassed && check.passed;
    }
    return report;
}

}  // namespace penlab
