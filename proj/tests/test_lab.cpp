#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "penlab/json_io.hpp"
#include "penlab/lab.hpp"

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

}  // namespace

TEST_CASE("eigenvalue classes per structure") {
    const EigenvalueRef zero = EigenvalueRef::finite(g(0));
    const EigenvalueRef one = EigenvalueRef::finite(g(1));
    const EigenvalueRef minusOne = EigenvalueRef::finite(g(-1));
    const EigenvalueRef inf = EigenvalueRef::inf();
    const EigenvalueRef other = EigenvalueRef::finite(g(5, 2));

    CHECK(classifyFor(StructureTag::TEven, zero) == EigClass::Zero);
    CHECK(classifyFor(StructureTag::TEven, inf) == EigClass::Infinity);
    CHECK(classifyFor(StructureTag::TEven, one) == EigClass::Generic);
    CHECK(classifyFor(StructureTag::TOdd, zero) == EigClass::Zero);
    CHECK(classifyFor(StructureTag::TPalindromic, one) == EigClass::PlusOne);
    CHECK(classifyFor(StructureTag::TPalindromic, minusOne) == EigClass::MinusOne);
    CHECK(classifyFor(StructureTag::TPalindromic, zero) == EigClass::Zero);
    CHECK(classifyFor(StructureTag::TAntiPalindromic, one) == EigClass::PlusOne);
    CHECK(classifyFor(StructureTag::Hermitian, zero) == EigClass::Generic);
    CHECK(classifyFor(StructureTag::SkewSymmetric, inf) == EigClass::Generic);
    CHECK(classifyFor(StructureTag::None, other) == EigClass::Generic);

    CHECK(eigClassFromName("zero") == EigClass::Zero);
    CHECK(eigClassFromName("inf") == EigClass::Infinity);
    CHECK(eigClassFromName("generic") == EigClass::Generic);
    CHECK(eigClassName(EigClass::PlusOne) == "plus_one");
    CHECK_THROWS(eigClassFromName("sideways"));
}

TEST_CASE("parity interaction predicate") {
    // list[r] == list[r+1] (1-based) and an odd count of later equal entries.
    CHECK(propertyP({3, 3}, 1));
    CHECK_FALSE(propertyP({3, 2}, 1));
    CHECK_FALSE(propertyP({3, 3, 3}, 1));  // two later equal entries
    CHECK(propertyP({3, 3, 3}, 2));
    CHECK(propertyP({4, 3, 3, 1}, 2));
    CHECK_FALSE(propertyP({4, 3, 3, 3}, 2));
    CHECK_FALSE(propertyP({3}, 1));        // no (r+1)-th entry
    CHECK_FALSE(propertyP({2, 2}, 2));
}

TEST_CASE("generic predictions: plain truncation") {
    CHECK(predict(StructureTag::Hermitian, EigClass::Generic, {3, 2, 2, 1}, 2) ==
          MultiplicityList{2, 1});
    CHECK(predict(StructureTag::None, EigClass::Generic, {5, 1}, 1) == MultiplicityList{1});
    CHECK(predict(StructureTag::Symmetric, EigClass::Generic, {2, 2}, 3) == MultiplicityList{});
    CHECK(predict(StructureTag::Hermitian, EigClass::Generic, {3, 1}, 0) ==
          MultiplicityList{3, 1});
    // Unsorted or zero-padded input is normalized first.
    CHECK(predict(StructureTag::None, EigClass::Generic, {1, 3, 0, 2}, 1) ==
          MultiplicityList{2, 1});
}

TEST_CASE("generic predictions: alternating family corrections") {
    using S = StructureTag;
    // Zero-type rows bump when the pivot entry is odd and the parity predicate
    // holds; infinity-type rows bump when it is even. An odd perturbation rank
    // appends a fresh simple eigenvalue.
    CHECK(predict(S::TEven, EigClass::Zero, {3, 3}, 1) == MultiplicityList{4});
    CHECK(predict(S::TOdd, EigClass::Zero, {2, 2}, 1) == MultiplicityList{3, 1});
    CHECK(predict(S::TEven, EigClass::Infinity, {2, 1}, 1) == MultiplicityList{1, 1});
    CHECK(predict(S::TEven, EigClass::Infinity, {2, 2}, 1) == MultiplicityList{3, 1});
    CHECK(predict(S::TEven, EigClass::Infinity, {3, 2, 2}, 1) == MultiplicityList{2, 2, 1});
    CHECK(predict(S::TOdd, EigClass::Infinity, {3, 3}, 1) == MultiplicityList{4});
    // Infinity-type rows append a simple entry for odd rank even when the
    // truncation empties; zero-type rows never append.
    CHECK(predict(S::TEven, EigClass::Infinity, {1}, 1) == MultiplicityList{1});
    CHECK(predict(S::TEven, EigClass::Infinity, {2}, 1) == MultiplicityList{1});
    CHECK(predict(S::TEven, EigClass::Zero, {1}, 1) == MultiplicityList{});
    CHECK(predict(S::TEven, EigClass::Zero, {2}, 1) == MultiplicityList{});
    // Even rank: no appended entry.
    CHECK(predict(S::TEven, EigClass::Zero, {3, 3, 2}, 2) == MultiplicityList{2});
    // Generic locations truncate regardless of structure.
    CHECK(predict(S::TEven, EigClass::Generic, {3, 2}, 1) == MultiplicityList{2});
}

TEST_CASE("generic predictions: palindromic family corrections") {
    using S = StructureTag;
    CHECK(predict(S::TPalindromic, EigClass::PlusOne, {3, 3}, 1) == MultiplicityList{4});
    CHECK(predict(S::TPalindromic, EigClass::MinusOne, {2, 2}, 1) == MultiplicityList{3, 1});
    CHECK(predict(S::TAntiPalindromic, EigClass::MinusOne, {3, 3}, 1) == MultiplicityList{4});
    CHECK(predict(S::TAntiPalindromic, EigClass::PlusOne, {2, 2}, 1) == MultiplicityList{3, 1});
    // The tables do not define zero/infinity rows for the palindromic family.
    CHECK_THROWS_AS(predict(S::TPalindromic, EigClass::Zero, {2, 2}, 1), std::invalid_argument);
    // Nor plus/minus-one rows for the alternating family.
    CHECK_THROWS_AS(predict(S::TEven, EigClass::PlusOne, {2, 2}, 1), std::invalid_argument);
}

TEST_CASE("generic predictions: skew-symmetric pairing") {
    using S = StructureTag;
    // Fully paired list: plain truncation of the paired form.
    CHECK(predict(S::SkewSymmetric, EigClass::Generic, {4, 4, 2, 2}, 2) ==
          MultiplicityList{2, 2});
    // Condensed half form: truncate r/2 entries.
    CHECK(predict(S::SkewSymmetric, EigClass::Generic, {4, 2}, 2) == MultiplicityList{2});
    // A fully paired list is always read as the full form, never condensed.
    CHECK(predict(S::SkewSymmetric, EigClass::Generic, {3, 3}, 2) == MultiplicityList{});
    CHECK_THROWS_AS(predict(S::SkewSymmetric, EigClass::Generic, {4, 4}, 1),
                    std::invalid_argument);
    CHECK(muFor(S::SkewSymmetric) == 2);
    CHECK(muFor(S::Hermitian) == 1);
    CHECK(muFor(S::TEven) == 1);
}

TEST_CASE("appendix identities hold for every tabulated size and coefficient") {
    const AppendixReport report = verifyAppendix();
    CHECK(report.allPassed);
    CHECK(report.checks.size() == 27);
    for (const AppendixCheck& c : report.checks) {
        CAPTURE(c.name);
        CHECK(c.passed);
    }
}

TEST_CASE("experiment runner confirms a small generic scenario") {
    Scenario sc;
    sc.spec.tag = StructureTag::Hermitian;
    sc.spec.blocks = {block(BlockKind::HermReal, g(2), 2, 1), block(BlockKind::HermReal, g(2), 1, -1),
                      block(BlockKind::HermReal, g(7), 1, 1)};
    sc.rank = 1;
    sc.s = 0;
    sc.trials = 12;
    sc.seed = 5;
    sc.paperRow = "unit-smoke";

    const ExperimentReport rep = runExperiment(sc);
    CHECK(rep.n == 4);
    CHECK(rep.trialsRun == 12);
    CHECK(rep.regularTrials == 12);
    CHECK(rep.genericityConfirmed);
    CHECK(rep.predictions.size() == 2);
    for (const EigPrediction& p : rep.predictions) {
        CHECK(p.matches == 12);
        if (p.eig == EigenvalueRef::finite(g(2))) {
            CHECK(p.base == MultiplicityList{2, 1});
            CHECK(p.predicted == MultiplicityList{1});
        } else {
            CHECK(p.eig == EigenvalueRef::finite(g(7)));
            CHECK(p.predicted == MultiplicityList{});
        }
    }
    for (const TrialRecord& t : rep.trials) {
        CHECK(t.regular);
        CHECK(t.perturbationRank <= 1);
        CHECK(t.newEig.pass);
        for (const TrialEig& e : t.eigs) CHECK(e.dominated);
    }

    // Determinism: the same scenario serializes to the same report.
    const ExperimentReport again = runExperiment(sc);
    CHECK(toJson(rep).dump() == toJson(again).dump());
}

TEST_CASE("experiment runner validates its inputs") {
    Scenario sc;
    sc.spec.tag = StructureTag::Hermitian;
    sc.spec.blocks = {block(BlockKind::SingularPair, g(0), 1)};
    sc.trials = 1;
    CHECK_THROWS(runExperiment(sc));  // singular base pencil

    Scenario bad;
    bad.spec.tag = StructureTag::SkewSymmetric;
    bad.spec.blocks = {block(BlockKind::SkewPair, g(1), 1)};
    bad.rank = 3;  // odd rank is not admissible for the skew family
    bad.s = 1;
    bad.trials = 1;
    CHECK_THROWS(runExperiment(bad));
}

TEST_CASE("scenario and report JSON round trips") {
    Scenario sc;
    sc.spec.tag = StructureTag::TEven;
    sc.spec.blocks = {block(BlockKind::TEvenZeroOddPair, g(0), 3), infBlock(BlockKind::TEvenInfOdd, 1)};
    sc.spec.hasSeedTransform = true;
    sc.spec.seedTransform = 11;
    sc.rank = 1;
    sc.s = 0;
    sc.trials = 3;
    sc.seed = 9;
    sc.bound = 7;
    sc.paperRow = "row-check";

    const Json j = toJson(sc);
    const Scenario back = scenarioFromJson(j);
    CHECK(toJson(back).dump() == j.dump());
    CHECK(back.spec.blocks.size() == 2);
    CHECK(back.trials == 3);
    CHECK(back.paperRow == "row-check");

    // Pencil round trip, including the structure tag.
    const Pencil p = buildPencil(sc.spec);
    StructureTag tag = StructureTag::None;
    const Pencil q = pencilFromJson(toJson(p, StructureTag::TEven), &tag);
    CHECK(q == p);
    CHECK(tag == StructureTag::TEven);

    // Experiment reports carry the row label at the top level.
    const ExperimentReport rep = runExperiment(sc);
    const Json rj = toJson(rep);
    CHECK(rj.begin().key() == "paper_row");
    CHECK(rj["paper_row"] == "row-check");
    CHECK(rj["trials_run"] == 3);

    // Decomposition JSON reports the term counts.
    const RankOneDecomposition dec = decomposeCanonical(sc.spec);
    const Json dj = toJson(dec);
    CHECK(dj["structure"] == "t-even");
    CHECK(dj["ell"] == dec.ell());
    CHECK(dj["rank_bound"] == dec.rankBound());
}

TEST_CASE("multiplicity list text forms") {
    CHECK(multiplicityListStr({3, 1}) == "(3,1)");
    CHECK(multiplicityListStr({}) == "()");
    CHECK(multiplicityListFromText("(3,1)") == MultiplicityList{3, 1});
    CHECK(multiplicityListFromText("4, 2, 2") == MultiplicityList{4, 2, 2});
    CHECK(multiplicityListFromText("()") == MultiplicityList{});
    CHECK_THROWS(multiplicityListFromText("(3,0)"));
    CHECK_THROWS(multiplicityListFromText("(3,x)"));
}

TEST_CASE("experiment CSV layout") {
    Scenario sc;
    sc.spec.tag = StructureTag::Hermitian;
    sc.spec.blocks = {block(BlockKind::HermReal, g(1), 2)};
    sc.trials = 2;
    sc.rank = 1;
    const ExperimentReport rep = runExperiment(sc);
    const std::string csv = experimentCsv(rep);
    CHECK(csv.rfind("trial,eigenvalue,observed,predicted,match,new_eig_profile,regular\n", 0) == 0);
    // One line per trial and eigenvalue plus the header.
    const std::size_t lines = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
    CHECK(lines == 1 + rep.trials.size() * rep.predictions.size());
}
