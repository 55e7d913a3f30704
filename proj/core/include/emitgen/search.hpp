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

#ifndef EMITGEN_SEARCH_HPP
#define EMITGEN_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "emitgen/graph.hpp"
#include "emitgen/solver.hpp"

namespace emitgen {

struct SearchRecord {
    Ordering ordering;
    SolveStats stats;
};

// (emitters, cnots) cell key.
using Cell = std::pair<int, int>;

struct HistogramCell {
    std::uint64_t count = 0;
    // Lexicographically smallest orderings seen, capped per options.
    std::vector<Ordering> representatives;
};

struct Histogram {
    std::map<Cell, HistogramCell> cells;
    std::string mode;            // exhaustive | random | lifted
    std::uint64_t seed = 0;
    std::uint64_t sample_count = 0;
    int reps_per_cell = 16;

    std::uint64_t total() const;
    void add(const SearchRecord& rec);
    void merge(const Histogram& other);
    // Cells not dominated in both coordinates, sorted by emitter count.
    std::vector<Cell> pareto() const;
    bool operator==(const Histogram&) const = default;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchOptions {
    int workers = 1;
    std::uint64_t budget = 10'000'000;  // exhaustive cap on orderings
    int reps_per_cell = 16;
    std::string checkpoint_path;              // empty: no checkpointing
    std::uint64_t checkpoint_interval = 50'000;  // orderings per checkpoint round
};

// Solves every canonical ordering of g.  Throws BudgetExceeded when the
// orbit count exceeds the budget.  When `all_records` is non-null it also
// receives one record per ordering.
Histogram exhaustive_search(const Graph& g, const SearchOptions& opts = {},
                            std::vector<SearchRecord>* all_records = nullptr);

// Uniform raw permutations (no canonicalization), reproducible by seed.
Histogram random_search(const Graph& g, std::uint64_t n_samples,
                        std::uint64_t seed, const SearchOptions& opts = {});

// The truncation-lift pipeline: exhaustive search on the leaf-truncated
// core, selection of core cells, and both lift modes solved on the full
// encoded graph.  A null selector keeps the Pareto-minimal core cells.
Histogram lifted_search(const Graph& g_encoded,
                        const std::function<bool(int emitters, int cnots)>& select,
                        const SearchOptions& opts = {},
                        Histogram* core_histogram = nullptr);

// Selector keeping exactly the Pareto-minimal cells of `core`.
std::function<bool(int, int)> select_pareto_cells(const Histogram& core);

}  // namespace emitgen

#endif
