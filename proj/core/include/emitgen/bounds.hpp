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

#ifndef EMITGEN_BOUNDS_HPP
#define EMITGEN_BOUNDS_HPP

#include <optional>
#include <stdexcept>

namespace emitgen {

// Closed-form upper bounds on the emitter-emitter CNOT budget of the
// circuit construction, split into photon-absorption, time-reversed
// measurement, and end-of-circuit contributions.

struct BoundReport {
    int np = 0;
    int ne = 0;
    std::optional<int> n_trm;
    int a_bound = 0;
    int m_bound = 0;
    int e_bound = 0;
    int total = 0;
    bool trm_exact = false;
};

inline int absorption_bound(int np, int ne) {
    if (np < 1 || ne < 1) throw std::invalid_argument("absorption_bound: need np, ne >= 1");
    return (np * ne) / 2;
}

// Exact mode uses the observed TRM count; the agnostic mode replaces it by
// the photon count.
inline int trm_bound(int ne, std::optional<int> n_trm, std::optional<int> np = {}) {
    if (ne < 1) throw std::invalid_argument("trm_bound: need ne >= 1");
    if (n_trm) {
        if (*n_trm < 0) throw std::invalid_argument("trm_bound: negative TRM count");
        return *n_trm * (ne / 2);
    }
    if (!np) throw std::invalid_argument("trm_bound: need n_trm or np");
    if (*np < 1) throw std::invalid_argument("trm_bound: need np >= 1");
    return *np * (ne / 2);
}

inline int end_bound(int ne) {
    if (ne < 1) throw std::invalid_argument("end_bound: need ne >= 1");
    return ne * (ne + 1) / 2 - (ne + 1) * (ne + 1) / 4;
}

inline BoundReport total_bound(int np, int ne, std::optional<int> n_trm = {}) {
    BoundReport r;
    r.np = np;
    r.ne = ne;
    r.n_trm = n_trm;
    r.trm_exact = n_trm.has_value();
    r.a_bound = absorption_bound(np, ne);
    r.m_bound = trm_bound(ne, n_trm, np);
    r.e_bound = end_bound(ne);
    r.total = r.a_bound + r.m_bound + r.e_bound;
    return r;
}

}  // namespace emitgen

#endif
