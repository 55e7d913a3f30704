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

#include "emitgen/io.hpp"

#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "emitgen/pauli.hpp"

namespace emitgen {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

// Splits a line into its keyword and an int stream over the rest.
struct Line {
    std::string key;
    std::istringstream rest;
};

bool next_line(std::istream& in, Line& l) {
    std::string raw;
    while (std::getline(in, raw)) {
        if (raw.empty() || raw[0] == '#') continue;
        std::istringstream ss(raw);
        ss >> l.key;
        std::string tail;
        std::getline(ss, tail);
        l.rest = std::istringstream(tail);
        return true;
    }
    return false;
}

int read_int(std::istringstream& ss, const std::string& ctx) {
    int v;
    if (!(ss >> v)) fail("expected integer after '" + ctx + "'");
    return v;
}

}  // namespace

void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << g.n << "\n";
    for (auto [u, v] : g.edges()) out << "edge " << u + 1 << " " << v + 1 << "\n";
    if (g.hadamards) {
        out << "hadamard";
        for (int v = 0; v < g.n; ++v)
            if ((g.hadamards >> v) & 1) out << " " << v + 1;
        out << "\n";
    }
    if (g.has_leaf_map())
        for (int v = 0; v < g.n; ++v)
            if (g.leaf_of[v] >= 0)
                out << "leaf " << v + 1 << " " << g.leaf_of[v] + 1 << "\n";
}

Graph read_graph(std::istream& in) {
    Line l;
    if (!next_line(in, l) || l.key != "graph") fail("graph file must start with 'graph <n>'");
    const int n = read_int(l.rest, "graph");
    if (n < 1 || n > 64) fail("graph: vertex count out of range");
    Graph g;
    g.n = n;
    g.adj.assign(n, 0);
    bool has_leaves = false;
    std::vector<int> leaf_of(n, -1);
    auto check = [&](int v) {
        if (v < 1 || v > n) fail("graph: vertex index out of range");
        return v - 1;
    };
    while (next_line(in, l)) {
        if (l.key == "edge") {
            const int u = check(read_int(l.rest, "edge"));
            const int v = check(read_int(l.rest, "edge"));
            g.add_edge(u, v);
        } else if (l.key == "hadamard") {
            int v;
            while (l.rest >> v) g.hadamards |= std::uint64_t{1} << check(v);
        } else if (l.key == "leaf") {
            const int core = check(read_int(l.rest, "leaf"));
            const int leaf = check(read_int(l.rest, "leaf"));
            leaf_of[core] = leaf;
            has_leaves = true;
        } else {
            fail("graph: unknown keyword '" + l.key + "'");
        }
    }
    if (has_leaves) g.leaf_of = std::move(leaf_of);
    return g;
}

void write_circuit(std::ostream& out, const GenerationCircuit& c) {
    out << "circuit photons " << c.n_photons << " emitters " << c.n_emitters << "\n";
    for (const auto& gate : c.gates) {
        out << gate_kind_name(gate.kind) << " " << gate.a + 1;
        if (gate.b >= 0) out << " " << gate.b + 1;
        out << "\n";
    }
}

GenerationCircuit read_circuit(std::istream& in) {
    Line l;
    if (!next_line(in, l) || l.key != "circuit")
        fail("circuit file must start with 'circuit photons <p> emitters <e>'");
    std::string word;
    GenerationCircuit c;
    if (!(l.rest >> word) || word != "photons") fail("circuit: expected 'photons'");
    c.n_photons = read_int(l.rest, "photons");
    if (!(l.rest >> word) || word != "emitters") fail("circuit: expected 'emitters'");
    c.n_emitters = read_int(l.rest, "emitters");
    if (c.n_photons < 1 || c.n_emitters < 1 ||
        c.n_photons + c.n_emitters > kMaxQubits)
        fail("circuit: bad qubit counts");
    const int n = c.n_photons + c.n_emitters;
    auto check = [&](int v) {
        if (v < 1 || v > n) fail("circuit: qubit index out of range");
        return v - 1;
    };
    while (next_line(in, l)) {
        GateRecord g;
        bool two = true;
        if (l.key == "H") {
            g.kind = GateKind::H;
            two = false;
        } else if (l.key == "S") {
            g.kind = GateKind::S;
            two = false;
        } else if (l.key == "X") {
            g.kind = GateKind::X;
            two = false;
        } else if (l.key == "Z") {
            g.kind = GateKind::Z;
            two = false;
        } else if (l.key == "CZ") {
            g.kind = GateKind::CZ;
        } else if (l.key == "CNOT") {
            g.kind = GateKind::CNOT;
        } else if (l.key == "E") {
            g.kind = GateKind::E;
        } else if (l.key == "M") {
            g.kind = GateKind::M;
        } else {
            fail("circuit: unknown gate '" + l.key + "'");
        }
        g.a = check(read_int(l.rest, l.key));
        if (two) g.b = check(read_int(l.rest, l.key));
        c.gates.push_back(g);
    }
    return c;
}

void write_histogram(std::ostream& out, const Histogram& h) {
    out << "histogram mode " << h.mode << " seed " << h.seed << " samples "
        << h.sample_count << " reps " << h.reps_per_cell << "\n";
    out << "# emitters cnots count\n";
    for (const auto& [cell, data] : h.cells) {
        out << "cell " << cell.first << " " << cell.second << " " << data.count
            << "\n";
        for (const auto& o : data.representatives) {
            out << "rep";
            for (int v : o) out << " " << v + 1;
            out << "\n";
        }
    }
}

Histogram read_histogram(std::istream& in) {
    Line l;
    if (!next_line(in, l) || l.key != "histogram")
        fail("histogram file must start with 'histogram'");
    Histogram h;
    std::string word;
    while (l.rest >> word) {
        if (word == "mode")
            l.rest >> h.mode;
        else if (word == "seed")
            l.rest >> h.seed;
        else if (word == "samples")
            l.rest >> h.sample_count;
        else if (word == "reps")
            l.rest >> h.reps_per_cell;
        else
            fail("histogram: unknown header field '" + word + "'");
    }
    HistogramCell* current = nullptr;
    while (next_line(in, l)) {
        if (l.key == "cell") {
            Cell cell;
            cell.first = read_int(l.rest, "cell");
            cell.second = read_int(l.rest, "cell");
            current = &h.cells[cell];
            std::uint64_t count;
            if (!(l.rest >> count)) fail("histogram: cell without count");
            current->count = count;
        } else if (l.key == "rep") {
            if (!current) fail("histogram: rep before cell");
            Ordering o;
            int v;
            while (l.rest >> v) o.push_back(v - 1);
            current->representatives.push_back(std::move(o));
        } else {
            fail("histogram: unknown keyword '" + l.key + "'");
        }
    }
    return h;
}

void write_ordering(std::ostream& out, const Ordering& o) {
    for (std::size_t i = 0; i < o.size(); ++i)
        out << (i ? " " : "") << o[i] + 1;
    out << "\n";
}

Ordering parse_ordering(const std::string& text) {
    std::string cleaned;
    for (char c : text)
        cleaned += (c == '[' || c == ']' || c == ',') ? ' ' : c;
    std::istringstream ss(cleaned);
    Ordering o;
    int v;
    while (ss >> v) o.push_back(v - 1);
    if (o.empty()) fail("ordering: no vertices parsed from '" + text + "'");
    return o;
}

std::string graph_hash_hex(const Graph& g) {
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << graph_fingerprint(g);
    return ss.str();
}

namespace {

ordered_json graph_doc(const Graph& g) {
    ordered_json j;
    j["format"] = "emitgen-graph";
    j["version"] = kToolVersion;
    j["n"] = g.n;
    auto edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
    j["edges"] = edges;
    auto had = json::array();
    for (int v = 0; v < g.n; ++v)
        if ((g.hadamards >> v) & 1) had.push_back(v + 1);
    j["hadamards"] = had;
    if (g.has_leaf_map()) {
        auto leaves = json::array();
        for (int v = 0; v < g.n; ++v)
            if (g.leaf_of[v] >= 0) leaves.push_back({v + 1, g.leaf_of[v] + 1});
        j["leaves"] = leaves;
    }
    j["hash"] = graph_hash_hex(g);
    return j;
}

json ordering_doc(const Ordering& o) {
    auto arr = json::array();
    for (int v : o) arr.push_back(v + 1);
    return arr;
}

}  // namespace

std::string graph_json(const Graph& g) { return graph_doc(g).dump(2) + "\n"; }

std::string circuit_json(const GenerationCircuit& c) {
    ordered_json j;
    j["format"] = "emitgen-circuit";
    j["version"] = kToolVersion;
    j["photons"] = c.n_photons;
    j["emitters"] = c.n_emitters;
    auto gates = json::array();
    for (const auto& g : c.gates) {
        json e;
        e["gate"] = gate_kind_name(g.kind);
        e["a"] = g.a + 1;
        if (g.b >= 0) e["b"] = g.b + 1;
        gates.push_back(e);
    }
    j["gates"] = gates;
    j["cnot_count"] = c.cnot_count();
    j["measurement_count"] = c.measurement_count();
    return j.dump(2) + "\n";
}

std::string histogram_json(const Histogram& h, const Graph& g) {
    ordered_json j;
    j["format"] = "emitgen-histogram";
    j["version"] = kToolVersion;
    j["provenance"] = {{"mode", h.mode},
                       {"seed", h.seed},
                       {"sample_count", h.sample_count},
                       {"graph_hash", graph_hash_hex(g)},
                       {"reps_per_cell", h.reps_per_cell}};
    auto cells = json::array();
    for (const auto& [cell, data] : h.cells) {
        json c;
        c["emitters"] = cell.first;
        c["cnots"] = cell.second;
        c["count"] = data.count;
        auto reps = json::array();
        for (const auto& o : data.representatives) reps.push_back(ordering_doc(o));
        c["representatives"] = reps;
        cells.push_back(c);
    }
    j["cells"] = cells;
    return j.dump(2) + "\n";
}

std::string bound_report_json(const BoundReport& r) {
    ordered_json j;
    j["format"] = "emitgen-bounds";
    j["version"] = kToolVersion;
    j["np"] = r.np;
    j["ne"] = r.ne;
    j["m_mode"] = r.trm_exact ? "trm_exact" : "trm_agnostic";
    if (r.n_trm) j["n_trm"] = *r.n_trm;
    j["absorption_bound"] = r.a_bound;
    j["trm_bound"] = r.m_bound;
    j["end_bound"] = r.e_bound;
    j["total"] = r.total;
    return j.dump(2) + "\n";
}

std::string manifest_json(const RunManifest& m) {
    ordered_json j;
    j["format"] = "emitgen-manifest";
    j["version"] = m.tool_version;
    j["command"] = m.command;
    j["arguments"] = m.arguments;
    j["seed"] = m.seed;
    j["graph_hash"] = m.graph_hash;
    j["duration_seconds"] = m.duration_seconds;
    return j.dump(2) + "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

namespace {

template <class Reader>
auto from_file(const std::string& path, Reader reader) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return reader(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

template <class Writer>
void to_file(const std::string& path, Writer writer) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    writer(out);
}

}  // namespace

Graph read_graph_file(const std::string& path) {
    return from_file(path, [](std::istream& in) { return read_graph(in); });
}
GenerationCircuit read_circuit_file(const std::string& path) {
    return from_file(path, [](std::istream& in) { return read_circuit(in); });
}
Histogram read_histogram_file(const std::string& path) {
    return from_file(path, [](std::istream& in) { return read_histogram(in); });
}
void write_graph_file(const std::string& path, const Graph& g) {
    to_file(path, [&](std::ostream& out) { write_graph(out, g); });
}
void write_circuit_file(const std::string& path, const GenerationCircuit& c) {
    to_file(path, [&](std::ostream& out) { write_circuit(out, c); });
}
void write_histogram_file(const std::string& path, const Histogram& h) {
    to_file(path, [&](std::ostream& out) { write_histogram(out, h); });
}

}  // namespace emitgen
