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

#include "emitgen/tableau.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace emitgen {

std::string PauliString::str(int n) const {
    static constexpr const char* kSign[4] = {"+", "+i", "-", "-i"};
    std::string s = kSign[phase];
    static constexpr char kPauli[4] = {'I', 'X', 'Z', 'Y'};
    for (int q = 0; q < n; ++q) s += kPauli[code(q)];
    return s;
}

Tableau::Tableau(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits)
        throw std::invalid_argument("Tableau: qubit count must be in [1, 64]");
    rows_.reserve(n);
    for (int q = 0; q < n; ++q) rows_.push_back(PauliString::single_z(q));
}

namespace {

void check_index(int q, int n) {
    if (q < 0 || q >= n) throw std::out_of_range("Tableau: qubit index out of range");
}

}  // namespace

void Tableau::apply_h(int q) {
    check_index(q, n_);
    const std::uint64_t m = std::uint64_t{1} << q;
    for (auto& r : rows_) {
        const std::uint64_t xb = r.x & m, zb = r.z & m;
        if (xb && zb) r.phase = std::uint8_t((r.phase + 2) & 3);
        r.x = (r.x & ~m) | (zb ? m : 0);
        r.z = (r.z & ~m) | (xb ? m : 0);
    }
}

void Tableau::apply_s(int q) {
    check_index(q, n_);
    const std::uint64_t m = std::uint64_t{1} << q;
    for (auto& r : rows_) {
        if ((r.x & m) && (r.z & m)) r.phase = std::uint8_t((r.phase + 2) & 3);
        r.z ^= r.x & m;
    }
}

void Tableau::apply_sdg(int q) {
    check_index(q, n_);
    const std::uint64_t m = std::uint64_t{1} << q;
    for (auto& r : rows_) {
        if ((r.x & m) && !(r.z & m)) r.phase = std::uint8_t((r.phase + 2) & 3);
        r.z ^= r.x & m;
    }
}

void Tableau::apply_x(int q) {
    check_index(q, n_);
    const std::uint64_t m = std::uint64_t{1} << q;
    for (auto& r : rows_)
        if (r.z & m) r.phase = std::uint8_t((r.phase + 2) & 3);
}

void Tableau::apply_z(int q) {
    check_index(q, n_);
    const std::uint64_t m = std::uint64_t{1} << q;
    for (auto& r : rows_)
        if (r.x & m) r.phase = std::uint8_t((r.phase + 2) & 3);
}

void Tableau::apply_cnot(int control, int target) {
    check_index(control, n_);
    check_index(target, n_);
    if (control == target)
        throw std::invalid_argument("Tableau: CNOT needs distinct qubits");
    const std::uint64_t mc = std::uint64_t{1} << control;
    const std::uint64_t mt = std::uint64_t{1} << target;
    for (auto& r : rows_) {
        const bool xc = r.x & mc, zc = r.z & mc;
        const bool xt = r.x & mt, zt = r.z & mt;
        if (xc && zt && (xt == zc)) r.phase = std::uint8_t((r.phase + 2) & 3);
        if (xc) r.x ^= mt;
        if (zt) r.z ^= mc;
    }
}

void Tableau::apply_cz(int a, int b) {
    if (a == b) throw std::invalid_argument("Tableau: CZ needs distinct qubits");
    apply_h(b);
    apply_cnot(a, b);
    apply_h(b);
}

void Tableau::emit(int emitter, int photon) {
    check_index(photon, n_);
    const std::uint64_t m = std::uint64_t{1} << photon;
    // Fast path for an untouched photon: its column appears in exactly one
    // row, which is +Z_photon.
    int touching = 0;
    bool pinned = false;
    for (const auto& r : rows_)
        if (r.support() & m) {
            ++touching;
            pinned = (r == PauliString::single_z(photon));
        }
    if (touching != 1 || !pinned) {
        auto ph = phase_in_group(PauliString::single_z(photon));
        if (!ph || *ph != 0)
            throw std::logic_error("Tableau: emission target photon is not in |0>");
    }
    apply_cnot(emitter, photon);
}

MeasureResult Tableau::measure_z(int q, std::optional<int> forced,
                                 const std::function<int()>& random_bit) {
    check_index(q, n_);
    const std::uint64_t m = std::uint64_t{1} << q;
    int pivot = -1;
    for (int i = 0; i < n_; ++i)
        if (rows_[i].x & m) {
            pivot = i;
            break;
        }
    if (pivot < 0) {
        auto ph = phase_in_group(PauliString::single_z(q));
        if (!ph) throw std::logic_error("Tableau: inconsistent generators");
        return {*ph == 2 ? 1 : 0, true};
    }
    const int outcome = forced ? (*forced & 1) : (random_bit() & 1);
    for (int i = 0; i < n_; ++i)
        if (i != pivot && (rows_[i].x & m)) rows_[i] *= rows_[pivot];
    rows_[pivot] = PauliString::single_z(q, outcome == 1);
    return {outcome, false};
}

namespace {

// Full Gaussian elimination over symplectic columns in the order
// (x_{ord[0]}, z_{ord[0]}, x_{ord[1]}, z_{ord[1]}, ...).  Clearing every
// non-pivot row makes the basis unique; the echelon structure doubles as
// the RREF gauge (X-type row before Z-type at a shared leading index).
void reduce_rows(std::vector<PauliString>& rows, std::span<const int> ord,
                 bool z_first = false) {
    int r = 0;
    const int n = int(rows.size());
    for (int q : ord) {
        const std::uint64_t m = std::uint64_t{1} << q;
        for (int pass = 0; pass < 2 && r < n; ++pass) {
            auto bit = [&](const PauliString& p) -> std::uint64_t {
                return (pass == 0) != z_first ? (p.x & m) : (p.z & m);
            };
            int pivot = -1;
            for (int i = r; i < n; ++i)
                if (bit(rows[i])) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(rows[r], rows[pivot]);
            for (int i = 0; i < n; ++i)
                if (i != r && bit(rows[i])) rows[i] *= rows[r];
            ++r;
        }
    }
}

std::vector<int> natural_order(int n) {
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    return ord;
}

}  // namespace

Tableau Tableau::rref(std::span<const int> qubit_order) const {
    if (int(qubit_order.size()) != n_)
        throw std::invalid_argument("Tableau: qubit order must be a full permutation");
    Tableau out = *this;
    reduce_rows(out.rows_, qubit_order);
    return out;
}

Tableau Tableau::rref_zx(std::span<const int> qubit_order) const {
    if (int(qubit_order.size()) != n_)
        throw std::invalid_argument("Tableau: qubit order must be a full permutation");
    Tableau out = *this;
    reduce_rows(out.rows_, qubit_order, true);
    return out;
}

Tableau Tableau::rref() const {
    auto ord = natural_order(n_);
    return rref(ord);
}

std::vector<int> Tableau::heights(std::span<const int> qubit_order) const {
    Tableau g = rref(qubit_order);
    // Position of each qubit in the order.
    std::vector<int> pos(n_);
    for (int p = 0; p < n_; ++p) pos[qubit_order[p]] = p;
    std::vector<int> lead(n_);
    for (int i = 0; i < n_; ++i) {
        std::uint64_t s = g.rows_[i].support();
        int best = n_;
        while (s) {
            int q = std::countr_zero(s);
            s &= s - 1;
            best = std::min(best, pos[q]);
        }
        lead[i] = best;
    }
    std::vector<int> h(n_ + 1);
    for (int x = 0; x <= n_; ++x) {
        int beyond = 0;
        for (int l : lead)
            if (l >= x) ++beyond;
        h[x] = (n_ - x) - beyond;
    }
    return h;
}

std::vector<int> Tableau::heights() const {
    auto ord = natural_order(n_);
    return heights(ord);
}

Tableau Tableau::canonical() const { return rref(); }

std::optional<int> Tableau::phase_in_group(const PauliString& p) const {
    Tableau c = canonical();
    PauliString acc = p;
    acc.phase = 0;
    // Rows are in echelon order over (x_0, z_0, x_1, z_1, ...); peel acc
    // front to back.
    for (const auto& row : c.rows_) {
        if (acc.identity()) break;
        // Symplectic column index of the row's pivot.
        int q = row.leading();
        bool xlead = (row.x >> q) & 1;
        bool hit = xlead ? ((acc.x >> q) & 1) : ((acc.z >> q) & 1);
        if (hit) acc *= row;
    }
    if (!acc.identity()) return std::nullopt;
    return acc.phase & 3;
}

bool Tableau::state_equals(const Tableau& other) const {
    if (n_ != other.n_) return false;
    return canonical().rows_ == other.canonical().rows_;
}

Tableau Tableau::restricted_to(std::uint64_t keep_mask) const {
    Tableau c = canonical();
    const int kept = std::popcount(keep_mask);
    std::vector<int> newidx(n_, -1);
    int j = 0;
    for (int q = 0; q < n_; ++q)
        if ((keep_mask >> q) & 1) newidx[q] = j++;
    Tableau out;
    out.n_ = kept;
    for (const auto& row : c.rows_) {
        std::uint64_t s = row.support();
        if (!(s & keep_mask)) continue;
        if (s & ~keep_mask)
            throw std::logic_error("Tableau: state entangled across restriction cut");
        PauliString p;
        p.phase = row.phase;
        std::uint64_t bits = s;
        while (bits) {
            int q = std::countr_zero(bits);
            bits &= bits - 1;
            if ((row.x >> q) & 1) p.x |= std::uint64_t{1} << newidx[q];
            if ((row.z >> q) & 1) p.z |= std::uint64_t{1} << newidx[q];
        }
        out.rows_.push_back(p);
    }
    if (int(out.rows_.size()) != kept)
        throw std::logic_error("Tableau: restriction lost generators");
    return out;
}

bool Tableau::invariants_ok() const {
    for (int i = 0; i < n_; ++i) {
        if (rows_[i].phase & 1) return false;
        for (int k = i + 1; k < n_; ++k)
            if (!rows_[i].commutes(rows_[k])) return false;
    }
    // Independence: n nonzero rows survive elimination.
    std::vector<PauliString> copy = rows_;
    auto ord = natural_order(n_);
    reduce_rows(copy, ord);
    for (const auto& r : copy)
        if (r.identity()) return false;
    return true;
}

}  // namespace emitgen
