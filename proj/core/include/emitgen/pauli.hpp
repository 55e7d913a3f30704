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

#ifndef EMITGEN_PAULI_HPP
#define EMITGEN_PAULI_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace emitgen {

// All states in scope fit in 64 qubits (graphs are capped near 32 vertices,
// plus a handful of emitters), so a Pauli string is a pair of words.
inline constexpr int kMaxQubits = 64;

// i^phase * product over qubits of {I, X, Y, Z}, where qubit q carries
// X iff x bit q is set, Z iff z bit q is set, Y iff both.
struct PauliString {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    std::uint8_t phase = 0;  // exponent of i, mod 4

    static PauliString single_z(int q, bool minus = false) {
        PauliString p;
        p.z = std::uint64_t{1} << q;
        p.phase = minus ? 2 : 0;
        return p;
    }
    static PauliString single_x(int q) {
        PauliString p;
        p.x = std::uint64_t{1} << q;
        return p;
    }

    bool identity() const { return x == 0 && z == 0; }

    int weight() const { return std::popcount(x | z); }
    int weight_in(std::uint64_t mask) const { return std::popcount((x | z) & mask); }
    std::uint64_t support() const { return x | z; }

    // Leftmost nontrivial qubit, -1 for the identity string.
    int leading() const {
        std::uint64_t s = x | z;
        return s ? std::countr_zero(s) : -1;
    }

    // 0=I, 1=X, 2=Z, 3=Y at qubit q.
    int code(int q) const {
        return int((x >> q) & 1) | (int((z >> q) & 1) << 1);
    }

    bool commutes(const PauliString& o) const {
        return (std::popcount(x & o.z) + std::popcount(z & o.x)) % 2 == 0;
    }

    PauliString& operator*=(const PauliString& o) {
        // Product phase: i exponents of the single-qubit products.
        // Codes: 0=I 1=X 2=Z 3=Y.  XZ=-iY, ZX=iY, XY=iZ, YX=-iZ, ZY=-iX, YZ=iX.
        static constexpr std::uint8_t kTbl[4][4] = {
            {0, 0, 0, 0},
            {0, 0, 3, 1},
            {0, 1, 0, 3},
            {0, 3, 1, 0},
        };
        unsigned ph = unsigned(phase) + unsigned(o.phase);
        std::uint64_t both = (x | z) & (o.x | o.z);
        while (both) {
            int q = std::countr_zero(both);
            both &= both - 1;
            ph += kTbl[code(q)][o.code(q)];
        }
        phase = std::uint8_t(ph & 3);
        x ^= o.x;
        z ^= o.z;
        return *this;
    }

    friend PauliString operator*(PauliString a, const PauliString& b) {
        a *= b;
        return a;
    }

    bool operator==(const PauliString&) const = default;

    std::string str(int n) const;
};

}  // namespace emitgen

#endif
