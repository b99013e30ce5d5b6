#pragma once

// JSON (de)serialization for pencils, block descriptors, decompositions,
// experiment scenarios and reports, plus the per-trial CSV rendering. Field
// order is fixed so repeated runs produce byte-identical output.

#include "penlab/decomp.hpp"
#include "penlab/lab.hpp"

#include <json.hpp>

#include <string>

namespace penlab {

using Json = nlohmann::ordered_json;

Json toJson(const Matrix& m);
Json toJson(const Pencil& p, StructureTag tag);
Json toJson(const BlockSpec& block);
Json toJson(const SpectralSpec& spec);
Json toJson(const RankOneDecomposition& dec);
Json toJson(const Scenario& scenario);
Json toJson(const ExperimentReport& report);
Json toJson(const AppendixReport& report);

Matrix matrixFromJson(const Json& j);
// Reads {"n","A","B","structure"}; when tagOut is non-null it receives the
// declared structure tag.
Pencil pencilFromJson(const Json& j, StructureTag* tagOut = nullptr);
BlockSpec blockSpecFromJson(const Json& j);
SpectralSpec spectralSpecFromJson(const Json& j);
Scenario scenarioFromJson(const Json& j);

// Multiplicity lists as text: "(3,1)" parses and prints; "3,1" also parses.
std::string multiplicityListCsvCell(const MultiplicityList& list);
MultiplicityList multiplicityListFromText(const std::string& text);

// One row per (trial, eigenvalue) with the columns
// trial,eigenvalue,observed,predicted,match,new_eig_profile,regular.
std::string experimentCsv(const ExperimentReport& report);

Json readJsonFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& content);

}  // namespace penlab
