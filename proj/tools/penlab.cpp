// Command-line front end: build structured pencils from block descriptors,
// decompose them into structured rank-one terms, sample structure-preserving
// low-rank perturbations, compute partial multiplicities, evaluate generic
// predictions, and run randomized perturbation experiments.
//
// Exit codes: 0 success, 1 a semantic check failed (experiment not confirmed,
// identity violated, internal contract broken), 2 invalid input or usage.

#include <CLI11.hpp>

#include "penlab/canon.hpp"
#include "penlab/decomp.hpp"
#include "penlab/json_io.hpp"
#include "penlab/lab.hpp"
#include "penlab/paramz.hpp"
#include "penlab/smith.hpp"

#include <iostream>
#include <string>

namespace {

using namespace penlab;

void emitJson(const Json& j, const std::string& outPath) {
    const std::string text = j.dump(2) + "\n";
    if (outPath.empty()) {
        std::cout << text;
    } else {
        writeTextFile(outPath, text);
    }
}

std::string joinList(const MultiplicityList& list) {
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(list[i]);
    }
    return out;
}

std::size_t defaultPairCount(StructureTag tag, std::size_t rank) {
    const std::vector<std::size_t> options = admissibleS(tag, rank);
    if (options.empty()) {
        throw std::invalid_argument("no admissible pair count for this structure and rank");
    }
    return options.front();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact structured matrix pencils: construction, rank-one decomposition, and "
        "low-rank perturbation experiments"};
    app.require_subcommand(1);

    std::string buildSpecPath;
    std::string buildOut;
    CLI::App* build = app.add_subcommand("build", "build a pencil from a block descriptor file");
    build->add_option("--spec", buildSpecPath, "block descriptor JSON file")->required();
    build->add_option("--out", buildOut, "output JSON file (default: stdout)");

    std::string decSpecPath;
    std::string decOut;
    CLI::App* decompose = app.add_subcommand(
        "decompose", "decompose a descriptor-built pencil into structured rank-one terms");
    decompose->add_option("--spec", decSpecPath, "block descriptor JSON file")->required();
    decompose->add_option("--out", decOut, "output JSON file (default: stdout)");

    std::string signSpecPath;
    std::string signEig;
    CLI::App* signsum = app.add_subcommand(
        "signsum", "sign sum at one eigenvalue, or the minimal scalar-term count");
    signsum->add_option("--spec", signSpecPath, "block descriptor JSON file")->required();
    signsum->add_option("--eig", signEig,
                        "eigenvalue (finite value or 'inf'); omit for the minimal "
                        "scalar-term count over all decompositions");

    std::string perturbStructure;
    std::size_t perturbN = 0;
    std::size_t perturbRank = 1;
    long perturbPairs = -1;
    std::uint64_t perturbSeed = kDefaultSeed;
    long perturbBound = 5;
    bool perturbAsPencil = false;
    std::string perturbOut;
    CLI::App* perturb = app.add_subcommand(
        "perturb", "sample a structure-preserving perturbation of bounded normal rank");
    perturb->add_option("--structure", perturbStructure, "structure tag name")->required();
    perturb->add_option("--size", perturbN, "matrix size n")->required();
    perturb->add_option("--rank", perturbRank, "normal rank bound r");
    perturb->add_option("--pairs", perturbPairs,
                        "pair-term count s (default: the smallest admissible value)");
    perturb->add_option("--seed", perturbSeed, "random seed");
    perturb->add_option("--bound", perturbBound, "numerator/denominator bound for entries");
    perturb->add_flag("--as-pencil", perturbAsPencil, "emit the pencil instead of the terms");
    perturb->add_option("--out", perturbOut, "output JSON file (default: stdout)");

    std::string multPencilPath;
    std::string multEig;
    CLI::App* multiplicities = app.add_subcommand(
        "multiplicities", "partial multiplicities of a pencil at one eigenvalue");
    multiplicities->add_option("--pencil", multPencilPath, "pencil JSON file")->required();
    multiplicities->add_option("--eig", multEig, "eigenvalue (finite value or 'inf')")->required();

    std::string predictStructure;
    std::string predictClass = "generic";
    std::string predictList;
    std::size_t predictRank = 1;
    CLI::App* predictCmd = app.add_subcommand(
        "predict", "generic partial multiplicities after a structured rank-r perturbation");
    predictCmd->add_option("--structure", predictStructure, "structure tag name")->required();
    predictCmd->add_option("--class", predictClass,
                           "eigenvalue class: zero, infinity, plus_one, minus_one, generic");
    predictCmd->add_option("--list", predictList, "multiplicity list, e.g. \"(3,3)\" or \"3,3\"")
        ->required();
    predictCmd->add_option("--rank", predictRank, "perturbation normal rank r");

    std::string expScenarioPath;
    std::string expReportPath;
    std::string expCsvPath;
    CLI::App* experiment = app.add_subcommand(
        "experiment", "run the randomized structured perturbation experiment");
    experiment->add_option("--scenario", expScenarioPath, "scenario JSON file")->required();
    experiment->add_option("--report", expReportPath, "write the full JSON report here");
    experiment->add_option("--csv", expCsvPath, "write the per-trial CSV here");

    std::string appendixReportPath;
    CLI::App* verifyAppendixCmd = app.add_subcommand(
        "verify-appendix", "check the closed-form corner-perturbation determinant identities");
    verifyAppendixCmd->add_option("--report", appendixReportPath, "write a JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) {
            const SpectralSpec spec = spectralSpecFromJson(readJsonFile(buildSpecPath));
            const Pencil p = buildPencil(spec);
            emitJson(toJson(p, spec.tag), buildOut);
            return 0;
        }
        if (decompose->parsed()) {
            const SpectralSpec spec = spectralSpecFromJson(readJsonFile(decSpecPath));
            const RankOneDecomposition dec = decomposeCanonical(spec);
            if (!(reconstruct(dec) == buildPencil(spec))) {
                throw std::logic_error("decomposition does not reconstruct the pencil");
            }
            emitJson(toJson(dec), decOut);
            std::cerr << "reconstruction exact; rank bound " << dec.rankBound()
                      << ", scalar terms " << dec.ell() << "\n";
            return 0;
        }
        if (signsum->parsed()) {
            const SpectralSpec spec = spectralSpecFromJson(readJsonFile(signSpecPath));
            if (signEig.empty()) {
                std::cout << minimalEll(spec) << "\n";
            } else {
                std::cout << signSum(spec, EigenvalueRef::parse(signEig)) << "\n";
            }
            return 0;
        }
        if (perturb->parsed()) {
            const StructureTag tag = tagFromName(perturbStructure);
            const std::size_t s = perturbPairs < 0
                                      ? defaultPairCount(tag, perturbRank)
                                      : static_cast<std::size_t>(perturbPairs);
            Rng rng(perturbSeed);
            const ParamVector params =
                sampleParams(tag, perturbN, perturbRank, s, rng, perturbBound);
            const RankOneDecomposition dec = phi(tag, perturbN, perturbRank, s, params);
            if (perturbAsPencil) {
                emitJson(toJson(reconstruct(dec), tag), perturbOut);
            } else {
                emitJson(toJson(dec), perturbOut);
            }
            return 0;
        }
        if (multiplicities->parsed()) {
            const Pencil p = pencilFromJson(readJsonFile(multPencilPath));
            const MultiplicityList list =
                partialMultiplicities(p, EigenvalueRef::parse(multEig));
            std::cout << multiplicityListStr(list) << "\n";
            return 0;
        }
        if (predictCmd->parsed()) {
            const MultiplicityList list = multiplicityListFromText(predictList);
            const MultiplicityList out = predict(tagFromName(predictStructure),
                                                 eigClassFromName(predictClass), list, predictRank);
            std::cout << joinList(out) << "\n";
            return 0;
        }
        if (experiment->parsed()) {
            const Scenario scenario = scenarioFromJson(readJsonFile(expScenarioPath));
            const ExperimentReport report = runExperiment(scenario);
            if (!expReportPath.empty()) {
                writeTextFile(expReportPath, toJson(report).dump(2) + "\n");
            }
            if (!expCsvPath.empty()) {
                writeTextFile(expCsvPath, experimentCsv(report));
            }
            std::cout << "pencil size " << report.n << ", trials " << report.trialsRun
                      << ", regular " << report.regularTrials << "\n";
            for (const EigPrediction& pred : report.predictions) {
                std::cout << "eigenvalue " << pred.eig.str() << ": base "
                          << multiplicityListStr(pred.base) << ", predicted "
                          << multiplicityListStr(pred.predicted) << ", matched " << pred.matches
                          << "/" << report.regularTrials << "\n";
            }
            std::cout << "dominance failures " << report.dominanceFailures
                      << ", new-eigenvalue failures " << report.newEigFailures << "\n";
            std::cout << "genericity confirmed: " << (report.genericityConfirmed ? "yes" : "no")
                      << "\n";
            return report.genericityConfirmed ? 0 : 1;
        }
        if (verifyAppendixCmd->parsed()) {
            const AppendixReport report = verifyAppendix();
            for (const AppendixCheck& check : report.checks) {
                std::cout << (check.passed ? "pass  " : "FAIL  ") << check.name;
                if (!check.passed) {
                    std::cout << "  [" << check.detail << "]";
                }
                std::cout << "\n";
            }
            if (!appendixReportPath.empty()) {
                writeTextFile(appendixReportPath, toJson(report).dump(2) + "\n");
            }
            std::cout << (report.allPassed ? "all identities verified" : "identity check failed")
                      << "\n";
            return report.allPassed ? 0 : 1;
        }
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
