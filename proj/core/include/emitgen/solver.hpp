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

#ifndef EMITGEN_SOLVER_HPP
#define EMITGEN_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "emitgen/circuit.hpp"
#include "emitgen/graph.hpp"
#include "emitgen/tableau.hpp"

namespace emitgen {

struct SolveStats {
    int n_emitters = 0;
    int cnot_count = 0;  // emitter-emitter CNOTs only
    int n_trm = 0;       // time-reversed measurements (M records)
    int cnot_absorb = 0;
    int cnot_trm = 0;
    int cnot_end = 0;
    bool operator==(const SolveStats&) const = default;
};

struct SolveResult {
    GenerationCircuit circuit;
    SolveStats stats;
};

// Target tableau in emission coordinates: qubit k is the photon emitted at
// time k+1 (graph vertex ordering[k]); emitters occupy the trailing
// n_emitters qubits in |0>.
Tableau target_tableau(const Graph& g, const Ordering& ordering, int n_emitters);

// Maximum of the height function over the emission ordering; the minimum
// emitter count for generating the state photon-by-photon.
int min_emitters(const Graph& g, const Ordering& ordering);

// Solves the generation circuit by working backward from the target state:
// per photon (last emitted first) an optional time-reversed measurement,
// weight-minimized emitter CNOT reduction, and a time-reversed emission;
// finally the residual emitter state is disentangled.  The result is the
// forward circuit with measurement feedforward.  Verified before returning.
SolveResult solve(const Graph& g, const Ordering& ordering);

// Applies the circuit on |0...0>.  M records measure the emitter and, on
// outcome 1, apply X to the feedforward photon and reset the emitter.
Tableau simulate(const GenerationCircuit& c,
                 const std::function<int()>& outcome_source);
Tableau simulate_fixed(const GenerationCircuit& c, std::uint64_t outcome_bits);

struct VerifyReport {
    bool ok = false;
    std::string detail;
};

// Checks the circuit against the target over several outcome streams
// (all-zeros, all-ones, and seeded random ones), by canonical-tableau
// equality, plus a dense-state comparison when small enough.
VerifyReport verify(const GenerationCircuit& c, const Graph& g,
                    const Ordering& ordering, int random_streams = 8,
                    std::uint64_t seed = 0x5eed);

// Reduces a photon-only stabilizer state to graph form: applies H on a
// minimal qubit set to make the X block invertible, Gaussian-reduces to an
// adjacency matrix, and returns the graph plus the H set.
struct ExtractedGraph {
    Graph graph;
    std::uint64_t hadamard_set = 0;
};
ExtractedGraph extract_graph(const Tableau& t);

}  // namespace emitgen

#endif
