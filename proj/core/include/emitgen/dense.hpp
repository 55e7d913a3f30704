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

#ifndef EMITGEN_DENSE_HPP
#define EMITGEN_DENSE_HPP

#include <complex>
#include <vector>

#include "emitgen/tableau.hpp"

namespace emitgen {

inline constexpr int kMaxDenseQubits = 14;

// The unique +1 eigenvector of all generators, 2^n amplitudes, global phase
// fixed so the first nonzero amplitude is positive real.  Qubit 0 is the
// least significant bit of the basis index.
std::vector<std::complex<double>> dense_oracle(const Tableau& t);

// Applies p to v in place.
void apply_pauli_dense(const PauliString& p, int n,
                       std::vector<std::complex<double>>& v);

// log2 of the Schmidt rank across the cut (first `cut` qubits | rest).
int dense_entanglement_entropy(const std::vector<std::complex<double>>& v,
                               int n, int cut);

// |<a|b>| == 1 up to tolerance.
bool dense_equal_up_to_phase(const std::vector<std::complex<double>>& a,
                             const std::vector<std::complex<double>>& b,
                             double tol = 1e-9);

}  // namespace emitgen

#endif
