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

#ifndef EMITGEN_CIRCUIT_HPP
#define EMITGEN_CIRCUIT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace emitgen {

enum class GateKind { H, S, X, Z, CZ, CNOT, E, M };

// One circuit operation.  Qubits are 0-based: photons 0..n_p-1 (in emission
// order), emitters n_p..n_p+n_e-1.
//   H/S/X/Z: a = qubit.
//   CZ: a, b = qubits.  CNOT: a = control, b = target (both emitters).
//   E: a = emitter, b = photon.  M: a = measured emitter, b = feedforward
//   photon (X on b, and reset of a, when the outcome is 1).
struct GateRecord {
    GateKind kind;
    int a = 0;
    int b = -1;
    bool operator==(const GateRecord&) const = default;
};

struct GenerationCircuit {
    int n_photons = 0;
    int n_emitters = 0;
    std::vector<GateRecord> gates;

    int cnot_count() const;
    int measurement_count() const;
    bool operator==(const GenerationCircuit&) const = default;
};

const char* gate_kind_name(GateKind k);
std::string gate_str(const GateRecord& g);

}  // namespace emitgen

#endif
