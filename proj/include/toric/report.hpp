#pragma once

#include <string>

#include "json.hpp"
#include "toric/checks.hpp"
#include "toric/matrix.hpp"
#include "toric/move.hpp"
#include "toric/robust.hpp"
#include "toric/search.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

// Machine reports: fixed key order, schema report_version 1, every move
// entry a decimal string, no timestamps. A fixed input and seed therefore
// produces byte-identical output across runs.

Json moves_json(const std::string& kind, const GraverSet& set);
Json structure_json(const StructureReport& report);
Json robustness_json(const RobustnessReport& report);
Json analysis_json(const std::string& input_kind, const ToricMatrix& A,
                   const GraverSet& graver, const GraverSet& circuit_set,
                   const RobustnessReport& robustness);
Json search_json(const SearchSpec& spec, const SearchResult& result);

// dump with two-space indent and a trailing newline
std::string render_report(const Json& report);

// Human tables, binomials rendered through render_binomial.
std::string human_moves(const std::string& title, const GraverSet& set);
std::string human_structure(const StructureReport& report);
std::string human_robustness(const RobustnessReport& report);
std::string human_analysis(const std::string& input_kind, const ToricMatrix& A,
                           const GraverSet& graver, const GraverSet& circuit_set,
                           const RobustnessReport& robustness);
std::string human_search(const SearchSpec& spec, const SearchResult& result);

} // namespace toric
