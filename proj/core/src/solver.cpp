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

#include "emitgen/solver.hpp"

#include <cstdlib>

#include <algorithm>
#include <bit>
#include <random>

#include "emitgen/dense.hpp"

namespace emitgen {

int GenerationCircuit::cnot_count() const {
    int c = 0;
    for (const auto& g : gates)
        if (g.kind == GateKind::CNOT) ++c;
    return c;
}

int GenerationCircuit::measurement_count() const {
    int c = 0;
    for (const auto& g : gates)
        if (g.kind == GateKind::M) ++c;
    return c;
}

const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::CZ: return "CZ";
        case GateKind::CNOT: return "CNOT";
        case GateKind::E: return "E";
        case GateKind::M: return "M";
    }
    return "?";
}

std::string gate_str(const GateRecord& g) {
    std::string s = gate_kind_name(g.kind);
    s += " " + std::to_string(g.a + 1);
    if (g.b >= 0) s += " " + std::to_string(g.b + 1);
    return s;
}

Tableau target_tableau(const Graph& g, const Ordering& ordering, int n_emitters) {
    if (!is_valid_ordering(ordering, g.n))
        throw std::invalid_argument("target_tableau: invalid ordering");
    if (n_emitters < 0) throw std::invalid_argument("target_tableau: bad emitter count");
    std::vector<int> pos(g.n);
    for (int k = 0; k < g.n; ++k) pos[ordering[k]] = k;
    Tableau t(g.n + std::max(n_emitters, 0));
    for (int k = 0; k < g.n; ++k) t.apply_h(k);
    for (auto [u, v] : g.edges()) t.apply_cz(pos[u], pos[v]);
    for (int v = 0; v < g.n; ++v)
        if ((g.hadamards >> v) & 1) t.apply_h(pos[v]);
    return t;
}

int min_emitters(const Graph& g, const Ordering& ordering) {
    Tableau t = target_tableau(g, ordering, 0);
    auto h = t.heights();
    return *std::max_element(h.begin(), h.end());
}

namespace {

enum class Stage { absorb, trm, end };

// Builds the circuit backward from the target; records every operation it
// applies to the tableau so the list can be reversed into the forward
// circuit (TRMs become M records, time-reversed emissions become E records).
class ReverseSolver {
  public:
    ReverseSolver(const Graph& g, const Ordering& ordering)
        : np_(g.n),
          ne_(std::max(1, min_emitters(g, ordering))),
          n_(np_ + ne_),
          photon_mask_((std::uint64_t{1} << np_) - 1),
          emitter_mask_(((n_ < 64 ? (std::uint64_t{1} << n_) : 0) - 1) & ~photon_mask_),
          t_(target_tableau(g, ordering, ne_)) {
        stats_.n_emitters = ne_;
    }

    SolveResult run() {
        for (int j = np_ - 1; j >= 0; --j) step(j);
        disentangle_emitters();
        stats_.cnot_count = stats_.cnot_absorb + stats_.cnot_trm + stats_.cnot_end;
        check_stage_bounds();
        return {forward_circuit(), stats_};
    }

  private:
    // -- recorded reverse-time operations ------------------------------

    void rec(GateKind kind, int a, int b, Stage stage) {
        switch (kind) {
            case GateKind::H: t_.apply_h(a); break;
            case GateKind::S: t_.apply_s(a); break;
            case GateKind::X: t_.apply_x(a); break;
            case GateKind::Z: t_.apply_z(a); break;
            case GateKind::CNOT:
                t_.apply_cnot(a, b);
                switch (stage) {
                    case Stage::absorb: ++stats_.cnot_absorb; break;
                    case Stage::trm: ++stats_.cnot_trm; break;
                    case Stage::end: ++stats_.cnot_end; break;
                }
                break;
            case GateKind::E:
                t_.apply_cnot(a, b);  // time-reversed emission
                break;
            case GateKind::M:
                // Time-reversed measurement: re-entangles the freed emitter
                // with the feedforward photon.
                t_.apply_h(a);
                t_.apply_cnot(a, b);
                break;
            default:
                throw std::logic_error("solver: unexpected reverse gate");
        }
        if (ops_.size() > std::size_t(64) * n_ * n_ + 1024)
            throw std::logic_error("solver: runaway gate count");
        ops_.push_back({kind, a, b});
    }

    // -- gauge helpers (row multiplications, not circuit gates) --------

    std::vector<int> emitter_only_rows(int exclude = -1) const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i) {
            if (i == exclude) continue;
            const auto& r = t_.rows()[i];
            if (!r.identity() && (r.support() & ~emitter_mask_) == 0) out.push_back(i);
        }
        return out;
    }

    // Greedy weight minimization: repeatedly multiply rows[target] by the
    // single other generator that lowers its total weight the most (lowest
    // row index on ties), until no multiplication helps.
    // Only generators whose photon support fits in `photon_allow` are used,
    // so the minimized row keeps its absorbable form.
    void greedy_minimize(int target, std::uint64_t photon_allow) {
        auto& rows = t_.rows();
        for (;;) {
            int best_i = -1, best_w = rows[target].weight();
            for (int i = 0; i < n_; ++i) {
                if (i == target) continue;
                if (rows[i].support() & photon_mask_ & ~photon_allow) continue;
                PauliString p = rows[target];
                p *= rows[i];
                const int w = p.weight();
                if (w < best_w) {
                    best_w = w;
                    best_i = i;
                }
            }
            if (best_i < 0) return;
            rows[target] *= rows[best_i];
        }
    }

    // Exact weight minimization of rows[target] over products with the given
    // helper rows (weight counted on emitter qubits).  Helper lists stay
    // small (at most a few emitters), so all subsets are scanned.
    void minimize_row(int target, const std::vector<int>& helpers) {
        const std::size_t k = helpers.size();
        if (k == 0 || k > 20) return;
        const auto& rows = t_.rows();
        int best_w = rows[target].weight_in(emitter_mask_);
        std::uint64_t best_subset = 0;
        for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << k); ++sub) {
            PauliString p = rows[target];
            for (std::size_t i = 0; i < k; ++i)
                if ((sub >> i) & 1) p *= rows[helpers[i]];
            const int w = p.weight_in(emitter_mask_);
            if (w < best_w) {
                best_w = w;
                best_subset = sub;
            }
        }
        for (std::size_t i = 0; i < k; ++i)
            if ((best_subset >> i) & 1) t_.rows()[target] *= t_.rows()[helpers[i]];
    }

    // -- circuit-building primitives -----------------------------------

    // Turns every Pauli of rows[row] within `mask` into Z using free
    // single-qubit gates, then collapses the support onto its lowest qubit
    // with CNOTs, and fixes the sign.  Returns the surviving qubit.
    int reduce_to_single_z(int row, std::uint64_t mask, Stage stage,
                           int sign_fix_qubit = -1) {
        auto& rows = t_.rows();
        std::uint64_t sup = rows[row].support() & mask;
        if (sup == 0) throw std::logic_error("solver: empty support to reduce");
        std::uint64_t bits = sup;
        while (bits) {
            const int q = std::countr_zero(bits);
            bits &= bits - 1;
            switch (rows[row].code(q)) {
                case 1:  // X
                    rec(GateKind::H, q, -1, stage);
                    break;
                case 3:  // Y
                    rec(GateKind::S, q, -1, stage);
                    rec(GateKind::H, q, -1, stage);
                    break;
                default:
                    break;
            }
        }
        const int target = (policy() & 256) ? 63 - std::countl_zero(sup)
                                            : std::countr_zero(sup);
        bits = sup & ~(std::uint64_t{1} << target);
        while (bits) {
            const int q = std::countr_zero(bits);
            bits &= bits - 1;
            rec(GateKind::CNOT, q, target, stage);
        }
        if (rows[row].phase & 2)
            rec(GateKind::X, sign_fix_qubit >= 0 ? sign_fix_qubit : target, -1, stage);
        return target;
    }

    std::vector<int> candidate_rows(int j) const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i) {
            const auto& r = t_.rows()[i];
            if ((r.support() & photon_mask_) != (std::uint64_t{1} << j)) continue;
            // The absorption generator must be of the form (Z_j | emitter
            // part); an X- or Y-form row alone does not trigger absorption.
            if ((policy() & 2048) && r.code(j) != 2) continue;
            out.push_back(i);
        }
        return out;
    }

    void bookkeeping_check(int j) const {
        // At step j (1-based j+1 photons still attached), the number a of
        // generators leading in the first j+1 photons satisfies
        // j+1 <= a <= min{2(j+1), (j+1)+ne}.
        int a = 0;
        for (const auto& r : t_.rows()) {
            const int l = r.leading();
            if (l >= 0 && l <= j) ++a;
        }
        const int step = j + 1;
        if (a < step || a > std::min(2 * step, step + ne_))
            throw std::logic_error("solver: RREF bookkeeping bound violated");
    }

    // Forward-only elimination (clear below pivots, keep rows above as-is),
    // as opposed to the fully reduced gauge of Tableau::rref.
    void echelon() {
        auto& rows = t_.rows();
        int r = 0;
        for (int q = 0; q < n_ && r < n_; ++q) {
            const std::uint64_t m = std::uint64_t{1} << q;
            for (int pass = 0; pass < 2 && r < n_; ++pass) {
                auto bit = [&](const PauliString& p) -> std::uint64_t {
                    return pass == 0 ? (p.x & m) : (p.z & m);
                };
                int pivot = -1;
                for (int i = r; i < n_; ++i)
                    if (bit(rows[i])) {
                        pivot = i;
                        break;
                    }
                if (pivot < 0) continue;
                std::swap(rows[r], rows[pivot]);
                for (int i = r + 1; i < n_; ++i)
                    if (bit(rows[i])) rows[i] *= rows[r];
                ++r;
            }
        }
        // Detached photons sit in exact |0>; clear their stale Z factors
        // from every other row so support tests see the true entanglement.
        for (int i = 0; i < n_; ++i) {
            const auto& zi = rows[i];
            if (zi.x != 0 || std::popcount(zi.z) != 1 ||
                (zi.z & photon_mask_) == 0)
                continue;
            for (int k = 0; k < n_; ++k)
                if (k != i && (rows[k].z & zi.z)) rows[k] *= zi;
        }
    }

    void gauge() {
        if (policy() & 4096) {
            echelon();
            return;
        }
        std::vector<int> ord(n_);
        if (policy() & 16384) {
            int k = 0;
            for (int q = np_; q < n_; ++q) ord[k++] = q;
            for (int q = 0; q < np_; ++q) ord[k++] = q;
        } else {
            for (int q = 0; q < n_; ++q) ord[q] = q;
        }
        t_ = (policy() & 8192) ? t_.rref_zx(ord) : t_.rref(ord);
    }

    void step(int j) {
        gauge();
        dump("step j=" + std::to_string(j) + " rref");
        bookkeeping_check(j);
        auto cands = candidate_rows(j);
        if (cands.empty()) {
            time_reversed_measurement(j);
            gauge();
            dump("after TRM rref");
            cands = candidate_rows(j);
            if (cands.empty())
                throw std::logic_error("solver: photon not absorbable after TRM");
        }
        absorb_photon(j, cands);
        dump("after absorb j=" + std::to_string(j));
    }

    static bool trace() {
        static const bool on = std::getenv("EMITGEN_SOLVER_TRACE") != nullptr;
        return on;
    }

    void dump(const std::string& label) const {
        if (!trace()) return;
        std::fprintf(stderr, "-- %s\n", label.c_str());
        for (int i = 0; i < n_; ++i)
            std::fprintf(stderr, "   %s\n", t_.rows()[i].str(n_).c_str());
    }

    static int policy() {
        const char* s = std::getenv("EMITGEN_SOLVER_POLICY");
        return s ? std::atoi(s) : 0;
    }

    void time_reversed_measurement(int j) {
        auto eos = emitter_only_rows();
        if (eos.empty())
            throw std::logic_error("solver: TRM needed but no emitter-only generator");
        // Choose the lowest-weight emitter-only generator.
        int best_row = -1, best_w = n_ + 1;
        for (int i : eos) {
            const int w = t_.rows()[i].weight_in(emitter_mask_);
            if (w < best_w || (w == best_w && (policy() & 512))) {
                best_w = w;
                best_row = i;
            }
        }
        if (policy() & 1) {
            std::vector<int> others;
            for (int m : eos)
                if (m != best_row) others.push_back(m);
            minimize_row(best_row, others);
        }
        const int e = reduce_to_single_z(best_row, emitter_mask_, Stage::trm);
        rec(GateKind::M, e, j, Stage::trm);
        ++stats_.n_trm;
    }

    void absorb_photon(int j, const std::vector<int>& cands) {
        // The absorption generator has the form (Z_j | emitter part).  With
        // two rows leading at j their leading Paulis anticommute, so exactly
        // one of r1, r2, r1*r2 carries Z at j; with one row the photon Pauli
        // is normalized by free single-photon gates.
        const auto eos = emitter_only_rows();
        int row = cands[0];
        if (cands.size() == 2 && !(policy() & 128)) {
            if (policy() & 32) {
                // Cheapest candidate by emitter weight, first row on ties.
                const int w0 = t_.rows()[cands[0]].weight_in(emitter_mask_);
                const int w1 = t_.rows()[cands[1]].weight_in(emitter_mask_);
                if (policy() & 64) {
                    PauliString p = t_.rows()[cands[0]];
                    p *= t_.rows()[cands[1]];
                    const int wp = p.weight_in(emitter_mask_);
                    if (wp < w0 && wp < w1) {
                        t_.rows()[cands[0]] *= t_.rows()[cands[1]];
                        row = cands[0];
                    } else {
                        row = w1 < w0 ? cands[1] : cands[0];
                    }
                } else {
                    row = w1 < w0 ? cands[1] : cands[0];
                }
            } else if (t_.rows()[cands[0]].code(j) == 2) {
                row = cands[0];
            } else if (t_.rows()[cands[1]].code(j) == 2) {
                row = cands[1];
            } else {
                t_.rows()[cands[0]] *= t_.rows()[cands[1]];
                row = cands[0];
            }
        }
        if (policy() & 1024) {
            // Minimize the Z-form generator over products with the emitter
            // block and optionally the partner generator leading at j.
            row = cands.back();
            if (t_.rows()[row].code(j) != 2 && cands.size() == 2 &&
                t_.rows()[cands[0]].code(j) == 2)
                row = cands[0];
            int best_w = t_.rows()[row].weight_in(emitter_mask_);
            bool best_partner = false;
            std::uint64_t best_sub = 0;
            const std::size_t k = eos.size();
            for (int partner = 0; partner < 2; ++partner) {
                if (partner && cands.size() < 2) continue;
                PauliString p = t_.rows()[row];
                if (partner) p *= t_.rows()[cands[cands[0] == row ? 1 : 0]];
                for (std::uint64_t sub = 0;
                     k <= 20 && sub < (std::uint64_t{1} << k); ++sub) {
                    PauliString q = p;
                    for (std::size_t idx = 0; idx < k; ++idx)
                        if ((sub >> idx) & 1) q *= t_.rows()[eos[idx]];
                    const int w = q.weight_in(emitter_mask_);
                    if (w < best_w) {
                        best_w = w;
                        best_partner = partner;
                        best_sub = sub;
                    }
                }
            }
            if (best_partner)
                t_.rows()[row] *= t_.rows()[cands[cands[0] == row ? 1 : 0]];
            for (std::size_t idx = 0; idx < k; ++idx)
                if ((best_sub >> idx) & 1) t_.rows()[row] *= t_.rows()[eos[idx]];
        } else if (policy() & 2) {
            // Over-optimizing variant: scan all gauge choices.
            int best_w = n_ + 1, best_row = -1;
            bool best_partner = false;
            for (std::size_t ci = 0; ci < cands.size(); ++ci) {
                for (int partner = 0; partner < 2; ++partner) {
                    if (partner && cands.size() < 2) continue;
                    PauliString p = t_.rows()[cands[ci]];
                    if (partner) p *= t_.rows()[cands[1 - ci]];
                    int w = p.weight_in(emitter_mask_);
                    const std::size_t k = eos.size();
                    for (std::uint64_t sub = 1;
                         k <= 20 && sub < (std::uint64_t{1} << k); ++sub) {
                        PauliString q = p;
                        for (std::size_t idx = 0; idx < k; ++idx)
                            if ((sub >> idx) & 1) q *= t_.rows()[eos[idx]];
                        w = std::min(w, q.weight_in(emitter_mask_));
                    }
                    if (w < best_w) {
                        best_w = w;
                        best_row = int(ci);
                        best_partner = partner;
                    }
                }
            }
            row = cands[best_row];
            if (best_partner) t_.rows()[row] *= t_.rows()[cands[1 - best_row]];
        }
        if (policy() & 16)
            greedy_minimize(row, std::uint64_t{1} << j);
        else if (!(policy() & 4))
            minimize_row(row, eos);

        auto& r = t_.rows()[row];
        // Free single-photon Clifford: photon part -> Z_j.
        switch (r.code(j)) {
            case 1:
                rec(GateKind::H, j, -1, Stage::absorb);
                break;
            case 3:
                rec(GateKind::S, j, -1, Stage::absorb);
                rec(GateKind::H, j, -1, Stage::absorb);
                break;
            default:
                break;
        }
        const std::uint64_t esup = r.support() & emitter_mask_;
        int emitter;
        if (esup == 0) {
            // Photon already disentangled; emit from an emitter resting in a
            // Z eigenstate.
            emitter = -1;
            for (int e = np_; e < n_; ++e) {
                auto ph = t_.phase_in_group(PauliString::single_z(e));
                if (ph) {
                    if (*ph == 2) rec(GateKind::X, e, -1, Stage::absorb);
                    emitter = e;
                    break;
                }
            }
            if (emitter < 0)
                throw std::logic_error("solver: no free emitter for detached photon");
            if (r.phase & 2) rec(GateKind::X, j, -1, Stage::absorb);
        } else {
            emitter = reduce_to_single_z(row, emitter_mask_, Stage::absorb, j);
        }
        rec(GateKind::E, emitter, j, Stage::absorb);
        if (t_.rows()[row].support() != (std::uint64_t{1} << j) ||
            (t_.rows()[row].phase & 3) != 0) {
            // Detached-photon path: the row may still carry the helper
            // emitter's Z; gauge it away.
            auto ph = t_.phase_in_group(PauliString::single_z(j));
            if (!ph || *ph != 0)
                throw std::logic_error("solver: photon not in |0> after absorption");
        }
    }

    void disentangle_emitters() {
        for (;;) {
            gauge();
            int row = -1;
            for (int i = 0; i < n_; ++i) {
                const auto& r = t_.rows()[i];
                if ((r.support() & ~emitter_mask_) != 0) continue;
                if (r.weight() == 1 && r.code(r.leading()) == 2 && r.phase == 0)
                    continue;  // emitter already parked in |0>
                if (row < 0 || r.leading() < t_.rows()[row].leading()) row = i;
            }
            if (row < 0) return;
            if (!(policy() & 8)) minimize_row(row, emitter_only_rows(row));
            reduce_to_single_z(row, emitter_mask_, Stage::end);
        }
    }

    void check_stage_bounds() const {
        const int a_bound = (np_ * ne_) / 2;
        const int m_bound = stats_.n_trm * (ne_ / 2);
        const int e_bound = ne_ * (ne_ + 1) / 2 - (ne_ + 1) * (ne_ + 1) / 4;
        if (stats_.cnot_absorb > a_bound || stats_.cnot_trm > m_bound ||
            stats_.cnot_end > e_bound)
            throw std::logic_error("solver: per-stage CNOT tally exceeds bound");
        if (stats_.n_trm > np_)
            throw std::logic_error("solver: TRM count exceeds photon count");
    }

    GenerationCircuit forward_circuit() const {
        GenerationCircuit c;
        c.n_photons = np_;
        c.n_emitters = ne_;
        c.gates.reserve(ops_.size() + 8);
        for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
            switch (it->kind) {
                case GateKind::S:
                    // S^{-1} = Z S
                    c.gates.push_back({GateKind::S, it->a, -1});
                    c.gates.push_back({GateKind::Z, it->a, -1});
                    break;
                default:
                    c.gates.push_back(*it);
                    break;
            }
        }
        return c;
    }

    const int np_;
    const int ne_;
    const int n_;
    const std::uint64_t photon_mask_;
    const std::uint64_t emitter_mask_;
    Tableau t_;
    std::vector<GateRecord> ops_;
    SolveStats stats_;
};

}  // namespace

SolveResult solve(const Graph& g, const Ordering& ordering) {
    ReverseSolver solver(g, ordering);
    SolveResult result = solver.run();
    auto report = verify(result.circuit, g, ordering);
    if (!report.ok)
        throw std::logic_error("solver: produced circuit failed verification: " +
                               report.detail);
    return result;
}

Tableau simulate(const GenerationCircuit& c,
                 const std::function<int()>& outcome_source) {
    const int n = c.n_photons + c.n_emitters;
    Tableau t(n);
    for (const auto& g : c.gates) {
        switch (g.kind) {
            case GateKind::H: t.apply_h(g.a); break;
            case GateKind::S: t.apply_s(g.a); break;
            case GateKind::X: t.apply_x(g.a); break;
            case GateKind::Z: t.apply_z(g.a); break;
            case GateKind::CZ: t.apply_cz(g.a, g.b); break;
            case GateKind::CNOT: t.apply_cnot(g.a, g.b); break;
            case GateKind::E: t.emit(g.a, g.b); break;
            case GateKind::M: {
                auto res = t.measure_z(g.a, std::nullopt, outcome_source);
                if (res.outcome == 1) {
                    t.apply_x(g.b);  // feedforward
                    t.apply_x(g.a);  // emitter reset to |0>
                }
                break;
            }
        }
    }
    return t;
}

Tableau simulate_fixed(const GenerationCircuit& c, std::uint64_t outcome_bits) {
    int i = 0;
    return simulate(c, [&]() { return int((outcome_bits >> (i++ & 63)) & 1); });
}

VerifyReport verify(const GenerationCircuit& c, const Graph& g,
                    const Ordering& ordering, int random_streams,
                    std::uint64_t seed) {
    if (!is_valid_ordering(ordering, g.n))
        return {false, "invalid ordering"};
    if (c.n_photons != g.n)
        return {false, "photon count mismatch"};
    const Tableau target = target_tableau(g, ordering, c.n_emitters);
    const int total = c.n_photons + c.n_emitters;

    auto run_stream = [&](const std::function<int()>& src,
                          const std::string& name) -> VerifyReport {
        Tableau out = simulate(c, src);
        if (!out.state_equals(target)) {
            // Report the first target generator the simulated state misses.
            for (const auto& row : out.canonical().rows()) {
                auto ph = target.phase_in_group(row);
                if (!ph || *ph != row.phase)
                    return {false, "stream " + name + ": generator " +
                                       row.str(total) + " not stabilized by target"};
            }
            return {false, "stream " + name + ": state mismatch"};
        }
        if (total <= kMaxDenseQubits) {
            auto a = dense_oracle(out);
            auto b = dense_oracle(target);
            if (!dense_equal_up_to_phase(a, b))
                return {false, "stream " + name + ": dense state mismatch"};
        }
        return {true, ""};
    };

    auto rep = run_stream([] { return 0; }, "zeros");
    if (!rep.ok) return rep;
    rep = run_stream([] { return 1; }, "ones");
    if (!rep.ok) return rep;
    for (int k = 0; k < random_streams; ++k) {
        std::mt19937_64 rng(seed + std::uint64_t(k) * 0x9e3779b97f4a7c15ull);
        rep = run_stream([&] { return int(rng() & 1); }, "rng" + std::to_string(k));
        if (!rep.ok) return rep;
    }
    return {true, "verified"};
}

ExtractedGraph extract_graph(const Tableau& t) {
    const int n = t.num_qubits();
    Tableau w = t.canonical();
    std::uint64_t hset = 0;
    auto& rows = w.rows();
    for (int col = 0; col < n; ++col) {
        const std::uint64_t m = std::uint64_t{1} << col;
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (rows[i].x & m) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            bool any_z = false;
            for (int i = col; i < n; ++i)
                if (rows[i].z & m) {
                    any_z = true;
                    break;
                }
            if (!any_z)
                throw std::logic_error("extract_graph: state not reducible");
            w.apply_h(col);
            hset |= m;
            for (int i = col; i < n; ++i)
                if (rows[i].x & m) {
                    pivot = i;
                    break;
                }
        }
        std::swap(rows[col], rows[pivot]);
        for (int i = 0; i < n; ++i)
            if (i != col && (rows[i].x & m)) rows[i] *= rows[col];
    }
    // X block is the identity; Z block must be a graph adjacency matrix.
    Graph g;
    g.n = n;
    g.adj.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        const auto& r = rows[i];
        if (r.phase != 0)
            throw std::logic_error("extract_graph: residual sign, not a graph state");
        if ((r.z >> i) & 1)
            throw std::logic_error("extract_graph: residual Y, not a graph state");
        g.adj[i] = r.z;
    }
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (((g.adj[i] >> k) & 1) != ((g.adj[k] >> i) & 1))
                throw std::logic_error("extract_graph: asymmetric adjacency");
    return {g, hset};
}

}  // namespace emitgen
