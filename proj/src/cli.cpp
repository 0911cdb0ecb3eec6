#include "toric/cli.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "toric/families.hpp"
#include "toric/fiber.hpp"
#include "toric/graph.hpp"
#include "toric/graver.hpp"
#include "toric/lineio.hpp"
#include "toric/monomial.hpp"
#include "toric/report.hpp"
#include "toric/rng.hpp"
#include "toric/robust.hpp"
#include "toric/search.hpp"

namespace toric {

namespace {

struct Options {
    std::string input;
    std::string out;
    std::string format = "human";
    std::uint64_t cap_fiber = 0;
    std::uint64_t cap_cycles = 0;
    std::uint64_t seed = 0;
    std::uint64_t count = 0;
    std::size_t max_edges = 13;
    long max_weight = 3;

    Caps caps() const {
        Caps c;
        if (cap_fiber > 0) c.fiber = cap_fiber;
        if (cap_cycles > 0) c.cycles = cap_cycles;
        return c;
    }
};

struct LoadedInput {
    std::string kind;
    std::optional<WeightedOrientedGraph> graph;
    ToricMatrix matrix;
};

LoadedInput load_input(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string text = buffer.str();

    std::istringstream probe(text);
    auto lines = tokenized_lines(probe);
    if (lines.empty()) throw ParseError(path + ": empty input");
    const std::string& tag = lines.front().tokens.front();

    LoadedInput loaded;
    std::istringstream data(text);
    if (tag == "wog") {
        loaded.kind = "wog";
        loaded.graph = parse_wog(data);
        loaded.matrix = incidence_matrix(*loaded.graph);
    } else if (tag == "matrix") {
        loaded.kind = "matrix";
        loaded.matrix = parse_matrix(data);
    } else if (tag == "monomials") {
        loaded.kind = "monomials";
        loaded.matrix = toric_matrix(parse_monomials(data));
    } else {
        throw ParseError(path + ": unknown input tag '" + tag + "'");
    }
    return loaded;
}

int emit(const Options& opt, const Json& machine, const std::string& human) {
    if (opt.format == "machine")
        std::cout << render_report(machine);
    else
        std::cout << human;
    if (!opt.out.empty()) {
        std::ofstream out(opt.out, std::ios::binary);
        if (!out) throw ParseError("cannot write '" + opt.out + "'");
        out << render_report(machine);
    }
    return 0;
}

int run_moves(const Options& opt, const std::string& kind) {
    LoadedInput in = load_input(opt.input);
    Caps caps = opt.caps();
    GraverSet set;
    if (kind == "graver")
        set = graver_basis(in.matrix, caps);
    else if (kind == "circuits")
        set = circuits(in.matrix, caps);
    else
        set = indispensable(in.matrix, caps);
    return emit(opt, moves_json(kind, set), human_moves(kind, set));
}

int run_check_robust(const Options& opt) {
    LoadedInput in = load_input(opt.input);
    Caps caps = opt.caps();
    RobustnessReport report =
        in.graph ? strongly_robust(*in.graph, caps) : strongly_robust(in.matrix, caps);
    emit(opt, robustness_json(report), human_robustness(report));
    return report.status == "ok" ? 0 : 2;
}

int run_check_hypotheses(const Options& opt) {
    LoadedInput in = load_input(opt.input);
    if (!in.graph)
        throw ParseError(opt.input + ": check-hypotheses needs a wog input");
    StructureReport report = main_theorem_hypothesis(*in.graph, opt.caps());
    return emit(opt, structure_json(report), human_structure(report));
}

int run_analyze(const Options& opt) {
    LoadedInput in = load_input(opt.input);
    Caps caps = opt.caps();
    GraverSet graver = graver_basis(in.matrix, caps);
    GraverSet circuit_set = circuits(in.matrix, caps);
    RobustnessReport robustness =
        in.graph ? strongly_robust(*in.graph, caps) : strongly_robust(in.matrix, caps);
    emit(opt, analysis_json(in.kind, in.matrix, graver, circuit_set, robustness),
         human_analysis(in.kind, in.matrix, graver, circuit_set, robustness));
    return robustness.status == "ok" ? 0 : 2;
}

ToricMatrix random_matrix(Rng& rng) {
    std::size_t n = 1 + rng.below(4);
    std::size_t m = 2 + rng.below(4);
    ToricMatrix A(n, m);
    for (std::size_t j = 0; j < m; ++j) {
        bool zero = true;
        while (zero) {
            for (std::size_t i = 0; i < n; ++i) {
                A.at(i, j) = Int(static_cast<long>(rng.below(4)));
                if (sgn(A.at(i, j)) != 0) zero = false;
            }
        }
    }
    return A;
}

int run_oracle_verify(const Options& opt) {
    if (opt.input != "random")
        throw ParseError("oracle-verify: unknown mode '" + opt.input + "'");
    const std::uint64_t count = opt.count > 0 ? opt.count : 100;
    Caps caps = opt.caps();
    Rng rng(opt.seed);
    for (std::uint64_t i = 0; i < count; ++i) {
        ToricMatrix A = random_matrix(rng);
        GraverSet G = graver_basis(A, caps);
        long box = 1;
        for (const Move& g : G.moves)
            for (const Int& x : g) {
                Int a = abs(x);
                if (a > box) box = a.get_si();
            }
        GraverSet B = brute_force_graver(A, box + 2, caps);
        Certificate cert = certificate_check(A, G);
        if (G.moves != B.moves || !cert.ok) {
            std::cerr << "oracle-verify: mismatch at instance " << i << "\n"
                      << emit_matrix(A);
            if (!cert.ok) std::cerr << "certificate: " << cert.reason << "\n";
            return 1;
        }
    }
    Json j;
    j["report_version"] = 1;
    j["kind"] = "oracle-verify";
    j["mode"] = "random";
    j["seed"] = opt.seed;
    j["count"] = count;
    j["matches"] = count;
    std::ostringstream human;
    human << "oracle-verify: " << count << " oracle matches, seed " << opt.seed << "\n";
    return emit(opt, j, human.str());
}

int run_search(const Options& opt) {
    SearchSpec spec;
    spec.family = opt.input;
    spec.max_edges = opt.max_edges;
    spec.max_weight = opt.max_weight;
    if (opt.count > 0) spec.budget = opt.count;
    spec.seed = opt.seed;
    SearchResult result = search_counterexample(spec, opt.caps());
    emit(opt, search_json(spec, result), human_search(spec, result));
    return result.found ? 0 : 4;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--out", opt.out, "write the machine report to this path");
    cmd->add_option("--format", opt.format, "stdout format")
        ->check(CLI::IsMember({"human", "machine"}));
    cmd->add_option("--cap-fiber", opt.cap_fiber, "fiber point cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cap-cycles", opt.cap_cycles, "cycle enumeration cap")
        ->check(CLI::PositiveNumber);
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"toric ideal invariants of weighted oriented graphs"};
    app.name("toric");
    app.require_subcommand(1);

    Options opt;
    std::function<int()> action;

    auto simple = [&](const std::string& verb, const std::string& help,
                      std::function<int()> fn) {
        CLI::App* cmd = app.add_subcommand(verb, help);
        cmd->add_option("input", opt.input, "input file (wog, matrix or monomials)")
            ->required();
        add_common(cmd, opt);
        cmd->callback([&action, fn] { action = fn; });
        return cmd;
    };

    simple("analyze", "full report: kernel, graver, circuits, robustness",
           [&] { return run_analyze(opt); });
    simple("graver", "graver basis", [&] { return run_moves(opt, "graver"); });
    simple("circuits", "circuits", [&] { return run_moves(opt, "circuits"); });
    simple("indispensable", "indispensable binomials",
           [&] { return run_moves(opt, "indispensable"); });
    simple("check-robust", "strong robustness verdict", [&] { return run_check_robust(opt); });
    simple("check-hypotheses", "structural hypotheses of the graph",
           [&] { return run_check_hypotheses(opt); });

    CLI::App* oracle = app.add_subcommand("oracle-verify",
                                          "replay the completion against the exhaustive oracle");
    oracle->add_option("mode", opt.input, "only 'random'")->required();
    oracle->add_option("--seed", opt.seed, "generator seed");
    oracle->add_option("--count", opt.count, "instances to verify")->check(CLI::PositiveNumber);
    add_common(oracle, opt);
    oracle->callback([&] { action = [&] { return run_oracle_verify(opt); }; });

    CLI::App* search = app.add_subcommand("search-counterexample",
                                          "smallest family member that is not strongly robust");
    search->add_option("family", opt.input,
                       "cycle, bouquet, theta (alias cycle-with-chord-path) or bouquet-tail")
        ->required();
    search->add_option("--seed", opt.seed, "weight draw seed");
    search->add_option("--count", opt.count, "instance budget")->check(CLI::PositiveNumber);
    search->add_option("--max-edges", opt.max_edges, "largest instance searched")
        ->check(CLI::PositiveNumber);
    search->add_option("--max-weight", opt.max_weight, "largest vertex weight drawn")
        ->check(CLI::PositiveNumber);
    add_common(search, opt);
    search->callback([&] { action = [&] { return run_search(opt); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        return action ? action() : 3;
    } catch (const CapExceeded& e) {
        std::cout << "inconclusive (" << e.what() << ")\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace toric
