/* Copyright 2026 The emitgen authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. */

#include <CLI11.hpp>
#include <algorithm>
#include <bit>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "emitgen/bounds.hpp"
#include "emitgen/io.hpp"
#include "emitgen/search.hpp"
#include "emitgen/solver.hpp"

namespace {

using namespace emitgen;
namespace fs = std::filesystem;

constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;
constexpr int kExitBudget = 4;

struct GlobalOpts {
    std::uint64_t seed = 0x5eed;
    int workers = int(std::thread::hardware_concurrency());
    std::string output_dir = ".";
    std::string format = "text";

    bool structured() const { return format == "structured"; }
    fs::path out(const std::string& name) const {
        fs::create_directories(output_dir);
        return fs::path(output_dir) / name;
    }
};

struct VerifyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit_manifest(const GlobalOpts& g, const std::string& command,
                   const std::string& arguments, const std::string& graph_hash,
                   std::chrono::steady_clock::time_point started) {
    RunManifest m;
    m.command = command;
    m.arguments = arguments;
    m.seed = g.seed;
    m.graph_hash = graph_hash;
    m.tool_version = kToolVersion;
    m.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    spill(g.out("manifest-" + command + ".json").string(), manifest_json(m));
}

Ordering load_ordering(const std::string& inline_text, const std::string& path,
                       int n) {
    if (!inline_text.empty() && !path.empty())
        throw ParseError("give --ordering or --ordering-file, not both");
    if (inline_text.empty() && path.empty())
        throw ParseError("an ordering is required (--ordering or --ordering-file)");
    Ordering o = parse_ordering(inline_text.empty() ? slurp(path) : inline_text);
    if (!is_valid_ordering(o, n))
        throw ParseError("ordering is not a permutation of 1.." + std::to_string(n));
    return o;
}

// --- graph ---------------------------------------------------------------

int cmd_graph(const GlobalOpts& g, const std::string& kind,
              const std::string& arg, std::string out_name,
              const std::string& args_line) {
    auto t0 = std::chrono::steady_clock::now();
    Graph graph;
    if (kind == "file") {
        graph = read_graph_file(arg);
    } else {
        int n = 0;
        try {
            n = std::stoi(arg);
        } catch (...) {
            throw ParseError("graph: size must be an integer, got '" + arg + "'");
        }
        if (kind == "ring")
            graph = ring(n);
        else if (kind == "shor22")
            graph = shor_encode_22(ring(n));
        else if (kind == "core")
            graph = truncate_leaves(shor_encode_22(ring(n)));
        else
            throw ParseError("graph: unknown kind '" + kind + "'");
    }
    if (out_name.empty()) out_name = kind + (kind == "file" ? "" : arg) + ".graph";
    write_graph_file(g.out(out_name).string(), graph);
    if (g.structured())
        spill(g.out(out_name + ".json").string(), graph_json(graph));
    int leaves = 0;
    for (int v : graph.leaf_of)
        if (v >= 0) ++leaves;
    std::cout << "graph " << out_name << "\n"
              << "vertices " << graph.n << "\n"
              << "edges " << graph.edge_count() << "\n"
              << "hadamards " << std::popcount(graph.hadamards) << "\n"
              << "leaves " << leaves << "\n"
              << "hash " << graph_hash_hex(graph) << "\n";
    emit_manifest(g, "graph", args_line, graph_hash_hex(graph), t0);
    return 0;
}

// --- solve ---------------------------------------------------------------

int cmd_solve(const GlobalOpts& g, const std::string& graph_path,
              const std::string& ordering_text, const std::string& ordering_path,
              std::string out_name, const std::string& args_line) {
    auto t0 = std::chrono::steady_clock::now();
    Graph graph = read_graph_file(graph_path);
    Ordering o = load_ordering(ordering_text, ordering_path, graph.n);
    SolveResult r;
    try {
        r = solve(graph, o);
    } catch (const std::logic_error& e) {
        throw VerifyFailure(e.what());
    }
    if (out_name.empty()) out_name = "circuit.txt";
    write_circuit_file(g.out(out_name).string(), r.circuit);
    if (g.structured())
        spill(g.out(out_name + ".json").string(), circuit_json(r.circuit));
    BoundReport b = total_bound(graph.n, r.stats.n_emitters, r.stats.n_trm);
    std::ostringstream doc;
    doc << "solve " << graph_path << "\n";
    doc << "ordering ";
    for (std::size_t i = 0; i < o.size(); ++i) doc << (i ? " " : "") << o[i] + 1;
    doc << "\n";
    doc << "emitters " << r.stats.n_emitters << "\n"
        << "cnots " << r.stats.cnot_count << "\n"
        << "trm " << r.stats.n_trm << "\n"
        << "cnot_absorb " << r.stats.cnot_absorb << " bound " << b.a_bound << "\n"
        << "cnot_trm " << r.stats.cnot_trm << " bound " << b.m_bound << "\n"
        << "cnot_end " << r.stats.cnot_end << " bound " << b.e_bound << "\n"
        << "cnot_total " << r.stats.cnot_count << " bound " << b.total << "\n"
        << "verified ok\n"
        << "circuit " << out_name << "\n";
    std::cout << doc.str();
    emit_manifest(g, "solve", args_line, graph_hash_hex(graph), t0);
    return 0;
}

// --- search --------------------------------------------------------------

std::function<bool(int, int)> cell_selector(const std::vector<std::string>& specs) {
    if (specs.empty()) return nullptr;  // Pareto cells of the core histogram
    std::vector<Cell> cells;
    for (const auto& s : specs) {
        std::string cleaned;
        for (char ch : s) cleaned += (ch == ',' ? ' ' : ch);
        std::istringstream ss(cleaned);
        Cell c;
        if (!(ss >> c.first >> c.second))
            throw ParseError("search: bad --select-cell '" + s + "'");
        cells.push_back(c);
    }
    return [cells](int e, int c) {
        return std::find(cells.begin(), cells.end(), Cell{e, c}) != cells.end();
    };
}

int cmd_search(const GlobalOpts& g, const std::string& graph_path,
               const std::string& mode, std::uint64_t samples,
               std::uint64_t budget, int reps, const std::string& checkpoint,
               const std::vector<std::string>& cell_specs,
               const std::string& plot_path, const std::string& args_line) {
    auto t0 = std::chrono::steady_clock::now();
    Graph graph = read_graph_file(graph_path);
    SearchOptions opts;
    opts.workers = g.workers;
    opts.budget = budget;
    opts.reps_per_cell = reps;
    opts.checkpoint_path = checkpoint;
    Histogram h;
    if (mode == "exhaustive") {
        h = exhaustive_search(graph, opts);
    } else if (mode == "random") {
        h = random_search(graph, samples, g.seed, opts);
    } else if (mode == "lifted") {
        Histogram core;
        h = lifted_search(graph, cell_selector(cell_specs), opts, &core);
        write_histogram_file(g.out("core_histogram.txt").string(), core);
        if (h.cells.empty())
            std::cout << "notice: selected core cells matched no orderings\n";
    } else {
        throw ParseError("search: unknown mode '" + mode + "'");
    }
    write_histogram_file(g.out("histogram.txt").string(), h);
    if (g.structured())
        spill(g.out("histogram.json").string(), histogram_json(h, graph));
    if (!plot_path.empty()) {
        std::ostringstream plot;
        for (const auto& [cell, data] : h.cells)
            plot << cell.first << " " << cell.second << " " << data.count << "\n";
        spill(g.out(plot_path).string(), plot.str());
    }
    std::cout << "search " << mode << " " << graph_path << "\n"
              << "orderings " << h.total() << "\n"
              << "cells " << h.cells.size() << "\n";
    std::cout << "pareto";
    for (auto [e, c] : h.pareto()) std::cout << " (" << e << "," << c << ")";
    std::cout << "\n";
    emit_manifest(g, "search", args_line, graph_hash_hex(graph), t0);
    return 0;
}

// --- verify --------------------------------------------------------------

// Simulates the circuit over several outcome streams; requires the emitters
// to finish disentangled in |0> and the photonic state to be stream
// independent.  Returns the photon-only state.
Tableau photon_state(const GenerationCircuit& c, std::uint64_t seed) {
    const int n = c.n_photons + c.n_emitters;
    const std::uint64_t photon_mask = (std::uint64_t{1} << c.n_photons) - 1;
    std::optional<Tableau> photons;
    auto run = [&](const std::function<int()>& src, const std::string& name) {
        Tableau t = simulate(c, src);
        for (int e = c.n_photons; e < n; ++e) {
            auto ph = t.phase_in_group(PauliString::single_z(e));
            if (!ph || *ph != 0)
                throw VerifyFailure("stream " + name + ": emitter " +
                                    std::to_string(e + 1) + " not reset to |0>");
        }
        Tableau p = t.restricted_to(photon_mask);
        if (!photons)
            photons = p;
        else if (!photons->state_equals(p))
            throw VerifyFailure("stream " + name +
                                ": photonic state depends on outcomes");
    };
    run([] { return 0; }, "zeros");
    run([] { return 1; }, "ones");
    for (int k = 0; k < 8; ++k) {
        std::mt19937_64 rng(seed + std::uint64_t(k) * 0x9e3779b97f4a7c15ull);
        run([&] { return int(rng() & 1); }, "rng" + std::to_string(k));
    }
    return *photons;
}

int cmd_verify(const GlobalOpts& g, const std::string& circuit_path,
               const std::string& graph_path, const std::string& ordering_text,
               const std::string& ordering_path, bool up_to_iso,
               const std::string& args_line) {
    auto t0 = std::chrono::steady_clock::now();
    GenerationCircuit c = read_circuit_file(circuit_path);
    Graph graph = read_graph_file(graph_path);
    if (up_to_iso) {
        Tableau photons = photon_state(c, g.seed);
        ExtractedGraph ex = extract_graph(photons);
        Graph observed = ex.graph;
        observed.hadamards = ex.hadamard_set;
        auto iso = isomorphic(observed, graph);
        if (!iso)
            throw VerifyFailure(
                "extracted photonic graph is not isomorphic to the target");
        std::cout << "verify " << circuit_path << " vs " << graph_path << "\n"
                  << "isomorphic yes\n"
                  << "emitters " << c.n_emitters << "\n"
                  << "cnots " << c.cnot_count() << "\n"
                  << "measurements " << c.measurement_count() << "\n"
                  << "verified ok\n";
    } else {
        Ordering o = load_ordering(ordering_text, ordering_path, graph.n);
        VerifyReport rep = verify(c, graph, o, 8, g.seed);
        if (!rep.ok) throw VerifyFailure(rep.detail);
        std::cout << "verify " << circuit_path << " vs " << graph_path << "\n"
                  << "emitters " << c.n_emitters << "\n"
                  << "cnots " << c.cnot_count() << "\n"
                  << "verified ok\n";
    }
    emit_manifest(g, "verify", args_line, graph_hash_hex(graph), t0);
    return 0;
}

// --- bounds --------------------------------------------------------------

int cmd_bounds(const GlobalOpts& g, int np, int ne, std::optional<int> n_trm,
               const std::string& args_line) {
    auto t0 = std::chrono::steady_clock::now();
    BoundReport r = total_bound(np, ne, n_trm);
    std::cout << "bounds np " << np << " ne " << ne;
    if (n_trm) std::cout << " n_trm " << *n_trm;
    std::cout << "\n"
              << "mode " << (r.trm_exact ? "trm_exact" : "trm_agnostic") << "\n"
              << "absorption " << r.a_bound << "\n"
              << "trm " << r.m_bound << "\n"
              << "end " << r.e_bound << "\n"
              << "total " << r.total << "\n";
    if (g.structured())
        spill(g.out("bounds.json").string(), bound_report_json(r));
    emit_manifest(g, "bounds", args_line, "", t0);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generation circuits for photonic graph states"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--seed", g.seed, "RNG seed for sampling and verification");
    app.add_option("--workers", g.workers, "worker threads for searches");
    app.add_option("--output-dir", g.output_dir, "directory for output artifacts");
    app.add_option("--format", g.format, "text or structured (adds JSON documents)")
        ->check(CLI::IsMember({"text", "structured"}));

    std::string kind, size_or_path, out_name;
    auto* sc_graph = app.add_subcommand("graph", "generate or import a graph");
    sc_graph->add_option("kind", kind, "ring | shor22 | core | file")->required();
    sc_graph->add_option("arg", size_or_path, "ring size or input path")->required();
    sc_graph->add_option("-o,--out", out_name, "output file name");

    std::string graph_path, ordering_text, ordering_path, circuit_out;
    auto* sc_solve = app.add_subcommand("solve", "solve one emission ordering");
    sc_solve->add_option("graph", graph_path, "graph file")->required();
    sc_solve->add_option("--ordering", ordering_text, "inline ordering, 1-based");
    sc_solve->add_option("--ordering-file", ordering_path, "file with ordering");
    sc_solve->add_option("-o,--out", circuit_out, "circuit file name");

    std::string mode = "exhaustive", checkpoint, plot_path;
    std::uint64_t samples = 10000, budget = 10'000'000;
    int reps = 16;
    std::vector<std::string> cell_specs;
    auto* sc_search = app.add_subcommand("search", "search emission orderings");
    sc_search->add_option("graph", graph_path, "graph file")->required();
    sc_search->add_option("--mode", mode, "exhaustive | random | lifted")
        ->check(CLI::IsMember({"exhaustive", "random", "lifted"}));
    sc_search->add_option("--samples", samples, "sample count for random mode");
    sc_search->add_option("--budget", budget, "max orderings for exhaustive mode");
    sc_search->add_option("--reps", reps, "representatives kept per cell");
    sc_search->add_option("--checkpoint", checkpoint, "checkpoint file path");
    sc_search->add_option("--select-cell", cell_specs,
                          "core cell e,c for lifted mode (repeatable; default "
                          "Pareto frontier)");
    sc_search->add_option("--emit-plot-data", plot_path,
                          "write (emitters cnots count) triples to this file");

    std::string circuit_path;
    bool up_to_iso = false;
    auto* sc_verify = app.add_subcommand("verify", "verify a circuit against a graph");
    sc_verify->add_option("circuit", circuit_path, "circuit file")->required();
    sc_verify->add_option("graph", graph_path, "graph file")->required();
    sc_verify->add_option("--ordering", ordering_text, "inline ordering, 1-based");
    sc_verify->add_option("--ordering-file", ordering_path, "file with ordering");
    sc_verify->add_flag("--up-to-isomorphism", up_to_iso,
                        "compare the extracted photonic graph up to colored "
                        "isomorphism instead of a fixed ordering");

    int np = 0, ne = 0;
    int n_trm_flag = -1;
    auto* sc_bounds = app.add_subcommand("bounds", "closed-form CNOT bounds");
    sc_bounds->add_option("np", np, "photon count")->required();
    sc_bounds->add_option("ne", ne, "emitter count")->required();
    sc_bounds->add_option("--n-trm", n_trm_flag, "observed TRM count (exact mode)");

    CLI11_PARSE(app, argc, argv);

    std::ostringstream args_line;
    for (int i = 1; i < argc; ++i) args_line << (i > 1 ? " " : "") << argv[i];

    try {
        if (*sc_graph)
            return cmd_graph(g, kind, size_or_path, out_name, args_line.str());
        if (*sc_solve)
            return cmd_solve(g, graph_path, ordering_text, ordering_path,
                             circuit_out, args_line.str());
        if (*sc_search)
            return cmd_search(g, graph_path, mode, samples, budget, reps,
                              checkpoint, cell_specs, plot_path, args_line.str());
        if (*sc_verify)
            return cmd_verify(g, circuit_path, graph_path, ordering_text,
                              ordering_path, up_to_iso, args_line.str());
        if (*sc_bounds)
            return cmd_bounds(g, np, ne,
                              n_trm_flag >= 0 ? std::optional<int>(n_trm_flag)
                                              : std::nullopt,
                              args_line.str());
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const VerifyFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerify;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "hint: use --mode random or --mode lifted\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
