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

#include "emitgen/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace emitgen {

std::uint64_t Histogram::total() const {
    std::uint64_t t = 0;
    for (const auto& [cell, data] : cells) t += data.count;
    return t;
}

void Histogram::add(const SearchRecord& rec) {
    auto& c = cells[{rec.stats.n_emitters, rec.stats.cnot_count}];
    ++c.count;
    auto it = std::lower_bound(c.representatives.begin(), c.representatives.end(),
                               rec.ordering);
    if (it != c.representatives.end() && *it == rec.ordering) return;
    if (int(c.representatives.size()) < reps_per_cell) {
        c.representatives.insert(it, rec.ordering);
    } else if (it != c.representatives.end()) {
        c.representatives.insert(it, rec.ordering);
        c.representatives.pop_back();
    }
}

void Histogram::merge(const Histogram& other) {
    for (const auto& [cell, data] : other.cells) {
        auto& mine = cells[cell];
        mine.count += data.count;
        std::vector<Ordering> merged;
        std::merge(mine.representatives.begin(), mine.representatives.end(),
                   data.representatives.begin(), data.representatives.end(),
                   std::back_inserter(merged));
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        if (int(merged.size()) > reps_per_cell) merged.resize(reps_per_cell);
        mine.representatives = std::move(merged);
    }
    sample_count += other.sample_count;
}

std::vector<Cell> Histogram::pareto() const {
    std::vector<Cell> out;
    for (const auto& [cell, data] : cells) {
        bool dominated = false;
        for (const auto& [other, od] : cells) {
            if (other == cell) continue;
            if (other.first <= cell.first && other.second <= cell.second) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(cell);
    }
    return out;
}

namespace {

// Dispatches [0, count) to worker threads in chunks; the first exception
// wins and is rethrown on the caller.
void parallel_for(std::uint64_t count, int workers,
                  const std::function<void(int, std::uint64_t)>& body) {
    workers = std::max(1, workers);
    if (workers == 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) body(0, i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    constexpr std::uint64_t kChunk = 64;
    auto run = [&](int worker) {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::uint64_t start = next.fetch_add(kChunk);
            if (start >= count) return;
            const std::uint64_t stop = std::min(count, start + kChunk);
            try {
                for (std::uint64_t i = start; i < stop; ++i) body(worker, i);
            } catch (...) {
                std::lock_guard lk(error_mu);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

// Solves a slice of orderings in parallel; merge order does not affect the
// result because cell counts are additive and representatives are the
// lexicographically smallest set.
void solve_range(const Graph& g, const std::vector<Ordering>& orderings,
                 std::uint64_t begin, std::uint64_t end, const SearchOptions& opts,
                 Histogram& out, std::vector<SearchRecord>* all_records) {
    const int workers = std::max(1, opts.workers);
    std::vector<Histogram> local(workers);
    for (auto& h : local) h.reps_per_cell = opts.reps_per_cell;
    std::vector<SearchRecord> records;
    if (all_records) records.resize(end - begin);
    parallel_for(end - begin, workers, [&](int worker, std::uint64_t i) {
        const Ordering& o = orderings[begin + i];
        SolveResult r = solve(g, o);
        SearchRecord rec{o, r.stats};
        local[worker].add(rec);
        if (all_records) records[i] = std::move(rec);
    });
    for (auto& h : local) {
        h.sample_count = 0;
        out.merge(h);
    }
    out.sample_count += end - begin;
    if (all_records)
        all_records->insert(all_records->end(),
                            std::make_move_iterator(records.begin()),
                            std::make_move_iterator(records.end()));
}

constexpr const char* kCheckpointMagic = "emitgen-checkpoint v1";

void save_checkpoint(const std::string& path, std::uint64_t fingerprint,
                     std::uint64_t next_index, const Histogram& h) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("search: cannot write checkpoint " + tmp);
        out << kCheckpointMagic << "\n";
        out << "graph " << fingerprint << "\n";
        out << "mode " << h.mode << "\n";
        out << "reps " << h.reps_per_cell << "\n";
        out << "next " << next_index << "\n";
        for (const auto& [cell, data] : h.cells) {
            out << "cell " << cell.first << " " << cell.second << " " << data.count
                << " " << data.representatives.size() << "\n";
            for (const auto& o : data.representatives) {
                out << "rep";
                for (int v : o) out << " " << v;
                out << "\n";
            }
        }
    }
    std::filesystem::rename(tmp, path);
}

// Returns the resume index, or nullopt if no usable checkpoint exists.
std::optional<std::uint64_t> load_checkpoint(const std::string& path,
                                             std::uint64_t fingerprint,
                                             Histogram& h) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != kCheckpointMagic)
        throw std::runtime_error("search: unrecognized checkpoint " + path);
    std::uint64_t fp = 0, next_index = 0;
    std::string mode;
    int reps = 0;
    Histogram loaded;
    std::string word;
    while (in >> word) {
        if (word == "graph") {
            in >> fp;
        } else if (word == "mode") {
            in >> mode;
        } else if (word == "reps") {
            in >> reps;
        } else if (word == "next") {
            in >> next_index;
        } else if (word == "cell") {
            Cell cell;
            std::uint64_t count = 0;
            std::size_t nreps = 0;
            in >> cell.first >> cell.second >> count >> nreps;
            auto& data = loaded.cells[cell];
            data.count = count;
            for (std::size_t r = 0; r < nreps; ++r) {
                in >> word;
                if (word != "rep")
                    throw std::runtime_error("search: corrupt checkpoint " + path);
                std::getline(in, line);
                std::istringstream ls(line);
                Ordering o;
                int v;
                while (ls >> v) o.push_back(v);
                data.representatives.push_back(std::move(o));
            }
        } else {
            throw std::runtime_error("search: corrupt checkpoint " + path);
        }
    }
    if (fp != fingerprint || mode != h.mode || reps != h.reps_per_cell)
        throw std::runtime_error(
            "search: checkpoint does not match this search: " + path);
    h.cells = std::move(loaded.cells);
    h.sample_count = next_index;
    return next_index;
}

}  // namespace

Histogram exhaustive_search(const Graph& g, const SearchOptions& opts,
                            std::vector<SearchRecord>* all_records) {
    BigInt orbit = count_canonical_orderings(g);
    if (orbit > BigInt(opts.budget))
        throw BudgetExceeded("exhaustive search budget exceeded: " +
                             orbit.str() + " orderings, budget " +
                             std::to_string(opts.budget));
    Histogram h;
    h.mode = "exhaustive";
    h.reps_per_cell = opts.reps_per_cell;
    std::vector<Ordering> orderings = canonical_orderings(g);
    const std::uint64_t total = orderings.size();
    std::uint64_t start = 0;
    const std::uint64_t fp = graph_fingerprint(g);
    if (!opts.checkpoint_path.empty()) {
        if (auto resume = load_checkpoint(opts.checkpoint_path, fp, h)) {
            start = std::min(*resume, total);
            if (all_records) {
                // Records cannot be reconstructed from a checkpoint; redo the
                // finished prefix (lifted searches run without checkpoints).
                start = 0;
                h.cells.clear();
                h.sample_count = 0;
            }
        }
    }
    const std::uint64_t round = opts.checkpoint_path.empty() || opts.checkpoint_interval == 0
                                    ? total
                                    : opts.checkpoint_interval;
    for (std::uint64_t i = start; i < total;) {
        const std::uint64_t stop = std::min(total, i + round);
        solve_range(g, orderings, i, stop, opts, h, all_records);
        i = stop;
        if (!opts.checkpoint_path.empty() && i < total)
            save_checkpoint(opts.checkpoint_path, fp, i, h);
    }
    if (!opts.checkpoint_path.empty())
        std::filesystem::remove(opts.checkpoint_path);
    return h;
}

namespace {

// Fisher-Yates with the raw engine; std::shuffle is not specified
// bit-for-bit across standard libraries.
Ordering random_permutation(int n, std::mt19937_64& rng) {
    Ordering o(n);
    std::iota(o.begin(), o.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(o[i], o[rng() % std::uint64_t(i + 1)]);
    return o;
}

}  // namespace

Histogram random_search(const Graph& g, std::uint64_t n_samples,
                        std::uint64_t seed, const SearchOptions& opts) {
    Histogram h;
    h.mode = "random";
    h.seed = seed;
    h.reps_per_cell = opts.reps_per_cell;
    // Samples are drawn serially so the result is independent of the worker
    // count.
    std::mt19937_64 rng(seed);
    std::vector<Ordering> orderings;
    orderings.reserve(n_samples);
    for (std::uint64_t i = 0; i < n_samples; ++i)
        orderings.push_back(random_permutation(g.n, rng));
    solve_range(g, orderings, 0, n_samples, opts, h, nullptr);
    return h;
}

std::function<bool(int, int)> select_pareto_cells(const Histogram& core) {
    auto cells = core.pareto();
    return [cells](int e, int c) {
        return std::find(cells.begin(), cells.end(), Cell{e, c}) != cells.end();
    };
}

Histogram lifted_search(const Graph& g_encoded,
                        const std::function<bool(int, int)>& select,
                        const SearchOptions& opts, Histogram* core_histogram) {
    if (!g_encoded.has_leaf_map())
        throw std::invalid_argument("lifted_search: graph has no leaf map");
    Graph core = truncate_leaves(g_encoded);
    SearchOptions core_opts = opts;
    core_opts.checkpoint_path.clear();
    std::vector<SearchRecord> core_records;
    Histogram ch = exhaustive_search(core, core_opts, &core_records);
    if (core_histogram) *core_histogram = ch;
    const auto keep = select ? select : select_pareto_cells(ch);
    std::vector<Ordering> lifted;
    for (const auto& rec : core_records) {
        if (!keep(rec.stats.n_emitters, rec.stats.cnot_count)) continue;
        lifted.push_back(lift_ordering(rec.ordering, g_encoded, LiftMode::leaves_after));
        lifted.push_back(lift_ordering(rec.ordering, g_encoded, LiftMode::leaves_before));
    }
    Histogram h;
    h.mode = "lifted";
    h.reps_per_cell = opts.reps_per_cell;
    solve_range(g_encoded, lifted, 0, lifted.size(), opts, h, nullptr);
    return h;
}

}  // namespace emitgen
