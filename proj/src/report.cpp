#include "toric/report.hpp"

#include <sstream>

#include "toric/graph.hpp"

namespace toric {

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

Json move_json(const Move& v) {
    Json arr = Json::array();
    for (const Int& x : v) arr.push_back(x.get_str());
    return arr;
}

Json moves_array(const std::vector<Move>& moves) {
    Json arr = Json::array();
    for (const Move& v : moves) arr.push_back(move_json(v));
    return arr;
}

Json binomials_array(const std::vector<Move>& moves) {
    Json arr = Json::array();
    if (moves.empty()) return arr;
    auto names = edge_names(moves.front().size());
    for (const Move& v : moves) arr.push_back(render_binomial(v, names));
    return arr;
}

Json caps_json(const Caps& caps) {
    Json j;
    j["cycles"] = caps.cycles;
    j["paths"] = caps.paths;
    j["fiber"] = caps.fiber;
    j["fiber_nodes"] = caps.fiber_nodes;
    j["graver_working_set"] = caps.graver_working_set;
    j["brute_force"] = caps.brute_force;
    j["subsets"] = caps.subsets;
    j["spanning_trees"] = caps.spanning_trees;
    return j;
}

Json witness_json(const Witness& w) {
    Json j;
    j["condition"] = w.condition;
    j["edges"] = w.edges;
    j["cycles"] = w.cycles;
    return j;
}

Json structure_body(const StructureReport& r) {
    Json j;
    j["every_edge_meets_degree2"] = r.every_edge_meets_degree2;
    j["cycles_share_single_vertex"] = r.cycles_share_single_vertex;
    j["no_two_cycles_share_path"] = r.no_two_cycles_share_path;
    j["main_theorem_hypothesis"] = r.main_theorem_hypothesis;
    j["connecting_path_rule"] = r.connecting_path_rule;
    Json ws = Json::array();
    for (const Witness& w : r.witnesses) ws.push_back(witness_json(w));
    j["witnesses"] = ws;
    return j;
}

Json set_body(const GraverSet& set) {
    Json j;
    j["move_count"] = set.moves.size();
    j["moves"] = moves_array(set.moves);
    j["binomials"] = binomials_array(set.moves);
    return j;
}

Json robustness_body(const RobustnessReport& r) {
    Json j;
    j["status"] = r.status;
    j["cap_hit"] = r.cap_hit;
    j["strongly_robust"] = r.strongly_robust;
    j["minimal_generating"] = r.minimal_generating;
    j["graver_size"] = r.graver_size;
    j["indispensable_size"] = r.indispensable_size;
    j["dispensable_witnesses"] = moves_array(r.dispensable_witnesses);
    j["dispensable_binomials"] = binomials_array(r.dispensable_witnesses);
    j["hypothesis_results"] =
        r.hypothesis_results ? structure_body(*r.hypothesis_results) : Json(nullptr);
    j["caps"] = caps_json(r.caps_used);
    return j;
}

std::string moves_block(const std::vector<Move>& moves) {
    std::ostringstream out;
    if (moves.empty()) return out.str();
    auto names = edge_names(moves.front().size());
    for (const Move& v : moves) out << "  " << render_binomial(v, names) << "\n";
    return out.str();
}

} // namespace

Json moves_json(const std::string& kind, const GraverSet& set) {
    Json j;
    j["report_version"] = 1;
    j["kind"] = kind;
    j["matrix_fingerprint"] = std::to_string(set.matrix_fingerprint);
    Json body = set_body(set);
    for (auto& [key, value] : body.items()) j[key] = value;
    return j;
}

Json structure_json(const StructureReport& report) {
    Json j;
    j["report_version"] = 1;
    j["kind"] = "hypotheses";
    Json body = structure_body(report);
    for (auto& [key, value] : body.items()) j[key] = value;
    return j;
}

Json robustness_json(const RobustnessReport& report) {
    Json j;
    j["report_version"] = 1;
    j["kind"] = "robustness";
    Json body = robustness_body(report);
    for (auto& [key, value] : body.items()) j[key] = value;
    return j;
}

Json analysis_json(const std::string& input_kind, const ToricMatrix& A,
                   const GraverSet& graver, const GraverSet& circuit_set,
                   const RobustnessReport& robustness) {
    Json j;
    j["report_version"] = 1;
    j["kind"] = "analysis";
    j["input"] = input_kind;
    j["rows"] = A.rows;
    j["cols"] = A.cols;
    j["rank"] = rank(A);
    j["null_dim"] = null_dim(A);
    j["matrix_fingerprint"] = std::to_string(fingerprint(A));
    j["graver"] = set_body(graver);
    j["circuits"] = set_body(circuit_set);
    j["robustness"] = robustness_body(robustness);
    return j;
}

Json search_json(const SearchSpec& spec, const SearchResult& result) {
    Json j;
    j["report_version"] = 1;
    j["kind"] = "search";
    j["family"] = spec.family;
    j["max_edges"] = spec.max_edges;
    j["max_weight"] = spec.max_weight;
    j["budget"] = spec.budget;
    j["seed"] = spec.seed;
    j["found"] = result.found;
    j["instances_tried"] = result.instances_tried;
    j["instance"] = result.instance ? Json(emit_wog(*result.instance)) : Json(nullptr);
    j["robustness"] = result.report ? robustness_body(*result.report) : Json(nullptr);
    return j;
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

std::string human_moves(const std::string& title, const GraverSet& set) {
    std::ostringstream out;
    out << title << ": " << set.moves.size()
        << (set.moves.size() == 1 ? " move\n" : " moves\n");
    out << moves_block(set.moves);
    return out.str();
}

std::string human_structure(const StructureReport& report) {
    std::ostringstream out;
    out << "hypotheses\n";
    out << "  every_edge_meets_degree2    " << yn(report.every_edge_meets_degree2) << "\n";
    out << "  cycles_share_single_vertex  " << yn(report.cycles_share_single_vertex) << "\n";
    out << "  no_two_cycles_share_path    " << yn(report.no_two_cycles_share_path) << "\n";
    out << "  main_theorem_hypothesis     " << yn(report.main_theorem_hypothesis) << "\n";
    for (const Witness& w : report.witnesses) {
        out << "  witness: " << w.condition;
        if (!w.edges.empty()) {
            out << ", edges";
            for (std::size_t e : w.edges) out << " e" << e + 1;
        }
        if (!w.cycles.empty()) {
            out << ", cycles";
            for (std::size_t c : w.cycles) out << " " << c;
        }
        out << "\n";
    }
    return out.str();
}

std::string human_robustness(const RobustnessReport& report) {
    std::ostringstream out;
    if (report.status != "ok")
        out << "robustness: inconclusive (" << report.cap_hit << ")\n";
    else
        out << "robustness: "
            << (report.strongly_robust ? "strongly robust" : "not strongly robust") << "\n";
    out << "  graver_size         " << report.graver_size << "\n";
    out << "  indispensable_size  " << report.indispensable_size << "\n";
    out << "  minimal_generating  " << yn(report.minimal_generating) << "\n";
    if (!report.dispensable_witnesses.empty()) {
        out << "  dispensable witnesses\n";
        auto names = edge_names(report.dispensable_witnesses.front().size());
        for (const Move& v : report.dispensable_witnesses)
            out << "    " << render_binomial(v, names) << "\n";
    }
    if (report.hypothesis_results) out << human_structure(*report.hypothesis_results);
    return out.str();
}

std::string human_analysis(const std::string& input_kind, const ToricMatrix& A,
                           const GraverSet& graver, const GraverSet& circuit_set,
                           const RobustnessReport& robustness) {
    std::ostringstream out;
    out << "input: " << input_kind << ", " << A.rows << " x " << A.cols
        << ", rank " << rank(A) << ", kernel dimension " << null_dim(A) << "\n";
    out << human_moves("graver", graver);
    out << human_moves("circuits", circuit_set);
    out << human_robustness(robustness);
    return out.str();
}

std::string human_search(const SearchSpec& spec, const SearchResult& result) {
    std::ostringstream out;
    out << "search: family " << spec.family << ", max_edges " << spec.max_edges
        << ", max_weight " << spec.max_weight << ", seed " << spec.seed << "\n";
    if (!result.found) {
        out << "no counterexample found, " << result.instances_tried
            << " instances tried\n";
        return out.str();
    }
    out << "counterexample found after " << result.instances_tried << " instances\n";
    out << emit_wog(*result.instance);
    out << human_robustness(*result.report);
    return out.str();
}

} // namespace toric
