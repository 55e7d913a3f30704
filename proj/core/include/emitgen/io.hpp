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

#ifndef EMITGEN_IO_HPP
#define EMITGEN_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "emitgen/bounds.hpp"
#include "emitgen/circuit.hpp"
#include "emitgen/graph.hpp"
#include "emitgen/search.hpp"

namespace emitgen {

// Line-oriented text formats.  All vertex, qubit, and ordering indices are
// 1-based on disk.  write(read(x)) == x and read(write(v)) == v hold
// exactly.

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

void write_circuit(std::ostream& out, const GenerationCircuit& c);
GenerationCircuit read_circuit(std::istream& in);

void write_histogram(std::ostream& out, const Histogram& h);
Histogram read_histogram(std::istream& in);

void write_ordering(std::ostream& out, const Ordering& o);
// Parses "1 2 3" or "[1,2,3]"; values are 1-based vertices.
Ordering parse_ordering(const std::string& text);

std::string graph_hash_hex(const Graph& g);

// Structured (JSON) variants, each embedding format and tool versioning.
std::string graph_json(const Graph& g);
std::string circuit_json(const GenerationCircuit& c);
std::string histogram_json(const Histogram& h, const Graph& g);
std::string bound_report_json(const BoundReport& r);

struct RunManifest {
    std::string command;
    std::string arguments;
    std::uint64_t seed = 0;
    std::string graph_hash;
    std::string tool_version;
    double duration_seconds = 0;
};

// The duration field varies run to run; determinism checks compare
// manifests with it zeroed.
std::string manifest_json(const RunManifest& m);

// File helpers; throw ParseError / std::runtime_error on failure.
std::string slurp(const std::string& path);
void spill(const std::string& path, const std::string& content);

Graph read_graph_file(const std::string& path);
GenerationCircuit read_circuit_file(const std::string& path);
Histogram read_histogram_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);
void write_circuit_file(const std::string& path, const GenerationCircuit& c);
void write_histogram_file(const std::string& path, const Histogram& h);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace emitgen

#endif
