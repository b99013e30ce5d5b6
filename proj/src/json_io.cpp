#include "penlab/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace penlab {

namespace {

Json scalarToJson(const GaussianRational& x) { return Json(x.str()); }

GaussianRational scalarFromJson(const Json& j) {
    if (j.is_number_integer()) {
        return GaussianRational(j.get<long>());
    }
    if (j.is_string()) {
        return GaussianRational::parse(j.get<std::string>());
    }
    throw std::invalid_argument("scalar entries must be strings or integers");
}

Json vectorToJson(const Vector& v) {
    Json out = Json::array();
    for (const GaussianRational& x : v) {
        out.push_back(scalarToJson(x));
    }
    return out;
}

Json multListToJson(const MultiplicityList& list) {
    Json out = Json::array();
    for (std::size_t m : list) {
        out.push_back(m);
    }
    return out;
}

std::string csvEscape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) {
        return cell;
    }
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out += c;
        }
    }
    out += "\"";
    return out;
}

}  // namespace

Json toJson(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(scalarToJson(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json toJson(const Pencil& p, StructureTag tag) {
    Json j;
    j["n"] = p.rows();
    j["A"] = toJson(p.A);
    j["B"] = toJson(p.B);
    j["structure"] = tagName(tag);
    return j;
}

Json toJson(const BlockSpec& block) {
    Json j;
    j["kind"] = blockKindName(block.kind);
    j["eig"] = block.infinite ? "inf" : block.eig.str();
    j["size"] = block.size;
    j["sign"] = block.sign;
    return j;
}

Json toJson(const SpectralSpec& spec) {
    Json j;
    j["structure"] = tagName(spec.tag);
    Json blocks = Json::array();
    for (const BlockSpec& block : spec.blocks) {
        blocks.push_back(toJson(block));
    }
    j["blocks"] = std::move(blocks);
    if (spec.hasTransform) {
        j["transform"] = toJson(spec.transform);
    }
    if (spec.hasSeedTransform) {
        j["seed_transform"] = spec.seedTransform;
    }
    return j;
}

Json toJson(const RankOneDecomposition& dec) {
    Json j;
    j["structure"] = tagName(dec.tag);
    j["n"] = dec.n;
    j["rank_bound"] = dec.rankBound();
    j["ell"] = dec.ell();
    Json scalars = Json::array();
    for (const ScalarTerm& term : dec.scalars) {
        Json t;
        t["a0"] = scalarToJson(term.a0);
        t["a1"] = scalarToJson(term.a1);
        t["u"] = vectorToJson(term.u);
        scalars.push_back(std::move(t));
    }
    j["scalars"] = std::move(scalars);
    Json pairs = Json::array();
    for (const PairTerm& term : dec.pairs) {
        Json t;
        t["v"] = vectorToJson(term.v);
        t["w0"] = vectorToJson(term.w.c0);
        t["w1"] = vectorToJson(term.w.c1);
        pairs.push_back(std::move(t));
    }
    j["pairs"] = std::move(pairs);
    Json dyads = Json::array();
    for (const DyadTerm& term : dec.dyads) {
        Json t;
        t["v0"] = vectorToJson(term.v.c0);
        t["v1"] = vectorToJson(term.v.c1);
        t["w0"] = vectorToJson(term.w.c0);
        t["w1"] = vectorToJson(term.w.c1);
        dyads.push_back(std::move(t));
    }
    j["dyads"] = std::move(dyads);
    return j;
}

Json toJson(const Scenario& scenario) {
    Json j;
    j["spec"] = toJson(scenario.spec);
    j["rank"] = scenario.rank;
    j["s"] = scenario.s;
    j["trials"] = scenario.trials;
    j["seed"] = scenario.seed;
    j["bound"] = scenario.bound;
    j["paper_row"] = scenario.paperRow;
    return j;
}

Json toJson(const ExperimentReport& report) {
    Json j;
    j["paper_row"] = report.scenario.paperRow;
    j["scenario"] = toJson(report.scenario);
    j["n"] = report.n;
    j["trials_run"] = report.trialsRun;
    j["regular_trials"] = report.regularTrials;
    j["all_match_trials"] = report.allMatchTrials;
    j["dominance_failures"] = report.dominanceFailures;
    j["new_eig_failures"] = report.newEigFailures;
    j["genericity_confirmed"] = report.genericityConfirmed;
    Json eigs = Json::array();
    for (const EigPrediction& pred : report.predictions) {
        Json e;
        e["eigenvalue"] = pred.eig.str();
        e["base"] = multListToJson(pred.base);
        e["truncation"] = multListToJson(pred.truncation);
        e["predicted"] = multListToJson(pred.predicted);
        e["matches"] = pred.matches;
        eigs.push_back(std::move(e));
    }
    j["eigenvalues"] = std::move(eigs);
    Json trials = Json::array();
    for (const TrialRecord& rec : report.trials) {
        Json t;
        t["trial"] = rec.index;
        t["regular"] = rec.regular;
        t["perturbation_rank"] = rec.perturbationRank;
        Json eigRows = Json::array();
        for (const TrialEig& te : rec.eigs) {
            Json row;
            row["observed"] = multListToJson(te.observed);
            row["matched"] = te.matched;
            row["dominated"] = te.dominated;
            eigRows.push_back(std::move(row));
        }
        t["eigs"] = std::move(eigRows);
        Json ne;
        ne["pass"] = rec.newEig.pass;
        ne["new_distinct_finite"] = rec.newEig.newDistinctFinite;
        ne["new_infinite_mult"] = rec.newEig.newInfiniteMult;
        ne["residual"] = rec.newEig.residual.str("lambda");
        ne["note"] = rec.newEig.note;
        t["new_eig"] = std::move(ne);
        trials.push_back(std::move(t));
    }
    j["trials"] = std::move(trials);
    return j;
}

Json toJson(const AppendixReport& report) {
    Json j;
    j["all_passed"] = report.allPassed;
    Json checks = Json::array();
    for (const AppendixCheck& check : report.checks) {
        Json c;
        c["name"] = check.name;
        c["passed"] = check.passed;
        c["detail"] = check.detail;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    return j;
}

Matrix matrixFromJson(const Json& j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("matrix must be a non-empty JSON array of rows");
    }
    const std::size_t rows = j.size();
    const std::size_t cols = j.at(0).size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j.at(i);
        if (!row.is_array() || row.size() != cols) {
            throw std::invalid_argument("matrix rows must be arrays of equal length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(i, c) = scalarFromJson(row.at(c));
        }
    }
    return m;
}

Pencil pencilFromJson(const Json& j, StructureTag* tagOut) {
    Pencil p(matrixFromJson(j.at("A")), matrixFromJson(j.at("B")));
    if (j.contains("n") && j.at("n").get<std::size_t>() != p.rows()) {
        throw std::invalid_argument("pencil: declared size does not match the matrices");
    }
    if (tagOut != nullptr) {
        *tagOut = j.contains("structure") ? tagFromName(j.at("structure").get<std::string>())
                                          : StructureTag::None;
    }
    return p;
}

BlockSpec blockSpecFromJson(const Json& j) {
    BlockSpec block;
    block.kind = blockKindFromName(j.at("kind").get<std::string>());
    if (j.contains("eig")) {
        const Json& e = j.at("eig");
        if (e.is_string() &&
            (e.get<std::string>() == "inf" || e.get<std::string>() == "infinity")) {
            block.infinite = true;
        } else {
            block.eig = scalarFromJson(e);
        }
    }
    if (j.contains("size")) {
        block.size = j.at("size").get<std::size_t>();
    }
    if (j.contains("sign")) {
        block.sign = j.at("sign").get<int>();
        if (block.sign != 1 && block.sign != -1) {
            throw std::invalid_argument("block sign must be +1 or -1");
        }
    }
    return block;
}

SpectralSpec spectralSpecFromJson(const Json& j) {
    SpectralSpec spec;
    spec.tag = tagFromName(j.at("structure").get<std::string>());
    for (const Json& b : j.at("blocks")) {
        spec.blocks.push_back(blockSpecFromJson(b));
    }
    if (j.contains("transform")) {
        spec.hasTransform = true;
        spec.transform = matrixFromJson(j.at("transform"));
    }
    if (j.contains("seed_transform")) {
        spec.hasSeedTransform = true;
        spec.seedTransform = j.at("seed_transform").get<std::uint64_t>();
    }
    return spec;
}

Scenario scenarioFromJson(const Json& j) {
    Scenario sc;
    sc.spec = spectralSpecFromJson(j.at("spec"));
    if (j.contains("rank")) sc.rank = j.at("rank").get<std::size_t>();
    if (j.contains("s")) sc.s = j.at("s").get<std::size_t>();
    if (j.contains("trials")) sc.trials = j.at("trials").get<std::size_t>();
    if (j.contains("seed")) sc.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("bound")) sc.bound = j.at("bound").get<long>();
    if (j.contains("paper_row")) sc.paperRow = j.at("paper_row").get<std::string>();
    return sc;
}

std::string multiplicityListCsvCell(const MultiplicityList& list) {
    return multiplicityListStr(list);
}

MultiplicityList multiplicityListFromText(const std::string& text) {
    std::string body;
    for (char c : text) {
        if (c == '(' || c == ')' || c == ' ') {
            continue;
        }
        body += c;
    }
    MultiplicityList list;
    if (body.empty()) {
        return list;
    }
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            throw std::invalid_argument("multiplicity list: empty entry");
        }
        std::size_t pos = 0;
        const unsigned long value = std::stoul(item, &pos);
        if (pos != item.size() || value == 0) {
            throw std::invalid_argument("multiplicity list: entries must be positive integers");
        }
        list.push_back(static_cast<std::size_t>(value));
    }
    return list;
}

std::string experimentCsv(const ExperimentReport& report) {
    std::ostringstream os;
    os << "trial,eigenvalue,observed,predicted,match,new_eig_profile,regular\n";
    for (const TrialRecord& rec : report.trials) {
        std::string profile;
        if (rec.regular) {
            std::ostringstream ps;
            ps << (rec.newEig.pass ? "pass" : "fail") << ";finite=" << rec.newEig.newDistinctFinite
               << ";inf=" << rec.newEig.newInfiniteMult;
            profile = ps.str();
        }
        for (std::size_t i = 0; i < report.predictions.size(); ++i) {
            os << rec.index << ',';
            os << csvEscape(report.predictions[i].eig.str()) << ',';
            if (rec.regular && i < rec.eigs.size()) {
                os << csvEscape(multiplicityListCsvCell(rec.eigs[i].observed)) << ','
                   << csvEscape(multiplicityListCsvCell(report.predictions[i].predicted)) << ','
                   << (rec.eigs[i].matched ? "true" : "false") << ',';
            } else {
                os << ',' << csvEscape(multiplicityListCsvCell(report.predictions[i].predicted))
                   << ",,";
            }
            os << csvEscape(profile) << ',' << (rec.regular ? "true" : "false") << '\n';
        }
    }
    return os.str();
}

Json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    return Json::parse(in);
}

void writeTextFile(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path);
    }
    out << content;
}

}  // namespace penlab
