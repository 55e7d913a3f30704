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

#ifndef EMITGEN_TABLEAU_HPP
#define EMITGEN_TABLEAU_HPP

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "emitgen/pauli.hpp"

namespace emitgen {

struct MeasureResult {
    int outcome = 0;
    bool deterministic = false;
};

// Stabilizer state on n qubits, represented by n independent commuting
// generators with +-1 phases.
class Tableau {
  public:
    Tableau() = default;
    explicit Tableau(int n);  // |0...0>, generators +Z_q

    int num_qubits() const { return n_; }
    const std::vector<PauliString>& rows() const { return rows_; }
    std::vector<PauliString>& rows() { return rows_; }

    void apply_h(int q);
    void apply_s(int q);
    void apply_sdg(int q);
    void apply_x(int q);
    void apply_z(int q);
    void apply_cnot(int control, int target);
    void apply_cz(int a, int b);

    // Emission of a fresh photon: requires +Z_photon in the group
    // (photon disentangled in |0>), then acts as CNOT(emitter -> photon).
    void emit(int emitter, int photon);

    // Z-basis measurement.  `forced` is honored only when the outcome is
    // random; deterministic outcomes ignore it and leave the state unchanged.
    MeasureResult measure_z(int q, std::optional<int> forced,
                            const std::function<int()>& random_bit);

    // Row-reduced echelon gauge over the given qubit order (a permutation of
    // 0..n-1).  Leading indices are non-decreasing in that order, at most two
    // rows share a leading index, and when two do, their leading single-qubit
    // Paulis differ (X-type row placed before Z-type).
    Tableau rref(std::span<const int> qubit_order) const;
    Tableau rref() const;  // natural order
    // Same elimination with the z column before the x column per qubit.
    Tableau rref_zx(std::span<const int> qubit_order) const;

    // h(0..n): h(x) = (n - x) - |{rows with leading index beyond the first x
    // qubits of `qubit_order`}|.  Equals the bipartite entanglement entropy.
    std::vector<int> heights(std::span<const int> qubit_order) const;
    std::vector<int> heights() const;

    // Unique generator set per state: full Gaussian elimination over the
    // symplectic columns (x_0, z_0, x_1, z_1, ...) with phases carried along.
    Tableau canonical() const;

    // If p (ignoring its phase) lies in the stabilizer group, returns the
    // i-exponent of the group element with p's bit pattern; else nullopt.
    std::optional<int> phase_in_group(const PauliString& p) const;

    bool state_equals(const Tableau& other) const;

    // Drops qubits outside `keep_mask`; throws if any kept generator after
    // canonicalization straddles the cut (state entangled across it).
    Tableau restricted_to(std::uint64_t keep_mask) const;

    // Generators mutually commute and are independent.
    bool invariants_ok() const;

  private:
    int n_ = 0;
    std::vector<PauliString> rows_;
};

}  // namespace emitgen

#endif
