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

#include "emitgen/dense.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace emitgen {

namespace {
using cd = std::complex<double>;
}

void apply_pauli_dense(const PauliString& p, int n, std::vector<cd>& v) {
    const std::uint64_t flip = p.x;
    static constexpr cd kI{0.0, 1.0};
    for (std::uint64_t b = 0; b < v.size(); ++b) {
        const std::uint64_t src = b ^ flip;
        if (src < b) continue;  // handle each swap pair once
        // Phase picked up mapping |src> -> |b> and |b> -> |src>.
        auto amp = [&](std::uint64_t in) {
            cd ph{1.0, 0.0};
            for (int q = 0; q < n; ++q) {
                const bool bit = (in >> q) & 1;
                switch (p.code(q)) {
                    case 2:  // Z
                        if (bit) ph = -ph;
                        break;
                    case 3:  // Y: |0> -> i|1>, |1> -> -i|0>
                        ph *= bit ? -kI : kI;
                        break;
                    default:
                        break;
                }
            }
            for (int k = 0; k < (p.phase & 3); ++k) ph *= kI;
            return ph;
        };
        if (src == b) {
            v[b] *= amp(b);
        } else {
            const cd vb = v[b], vs = v[src];
            v[b] = amp(src) * vs;
            v[src] = amp(b) * vb;
        }
    }
}

std::vector<cd> dense_oracle(const Tableau& t) {
    const int n = t.num_qubits();
    if (n > kMaxDenseQubits)
        throw std::invalid_argument("dense_oracle: too many qubits");
    const std::size_t dim = std::size_t{1} << n;
    for (std::uint64_t seed = 0; seed < dim; ++seed) {
        std::vector<cd> v(dim, cd{0.0, 0.0});
        v[seed] = 1.0;
        bool dead = false;
        for (const auto& g : t.rows()) {
            // Project onto the +1 eigenspace: v <- (v + g v) / 2.
            std::vector<cd> gv = v;
            apply_pauli_dense(g, n, gv);
            double norm2 = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                v[i] = 0.5 * (v[i] + gv[i]);
                norm2 += std::norm(v[i]);
            }
            if (norm2 < 1e-18) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        double norm2 = 0.0;
        for (const auto& a : v) norm2 += std::norm(a);
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& a : v) a *= inv;
        for (const auto& a : v)
            if (std::abs(a) > 1e-9) {
                const cd fix = std::conj(a) / std::abs(a);
                for (auto& b : v) b *= fix;
                return v;
            }
    }
    throw std::logic_error("dense_oracle: inconsistent generators");
}

int dense_entanglement_entropy(const std::vector<cd>& v, int n, int cut) {
    if (cut < 0 || cut > n) throw std::invalid_argument("bad cut");
    const std::size_t rows = std::size_t{1} << cut;
    const std::size_t cols = std::size_t{1} << (n - cut);
    // Amplitude matrix M[a][b] = v[a | (b << cut)]; rank by elimination.
    std::vector<std::vector<cd>> m(rows, std::vector<cd>(cols));
    for (std::size_t a = 0; a < rows; ++a)
        for (std::size_t b = 0; b < cols; ++b) m[a][b] = v[a | (b << cut)];
    int rank = 0;
    std::size_t col = 0;
    for (std::size_t r = 0; r < rows && col < cols; ++col) {
        std::size_t best = r;
        for (std::size_t i = r; i < rows; ++i)
            if (std::abs(m[i][col]) > std::abs(m[best][col])) best = i;
        if (std::abs(m[best][col]) < 1e-9) continue;
        std::swap(m[r], m[best]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const cd f = m[i][col] / m[r][col];
            if (std::abs(f) < 1e-12) continue;
            for (std::size_t c2 = col; c2 < cols; ++c2) m[i][c2] -= f * m[r][c2];
        }
        ++r;
        ++rank;
    }
    // Stabilizer states have power-of-two Schmidt rank.
    int ent = 0;
    while ((1 << ent) < rank) ++ent;
    if ((1 << ent) != rank)
        throw std::logic_error("dense_entanglement_entropy: rank not a power of two");
    return ent;
}

bool dense_equal_up_to_phase(const std::vector<cd>& a, const std::vector<cd>& b,
                             double tol) {
    if (a.size() != b.size()) return false;
    cd ov{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) ov += std::conj(a[i]) * b[i];
    return std::abs(std::abs(ov) - 1.0) < tol;
}

}  // namespace emitgen
