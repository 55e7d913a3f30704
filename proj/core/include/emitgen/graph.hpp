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

#ifndef EMITGEN_GRAPH_HPP
#define EMITGEN_GRAPH_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace emitgen {

using BigInt = boost::multiprecision::cpp_int;

// order[k] is the (0-based) vertex emitted at time k+1.
using Ordering = std::vector<int>;

// Labeled simple graph with an optional Hadamard vertex set (local H in the
// target state) and an optional core->leaf map from (2,2) Shor encoding.
struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;  // neighbor bitmask per vertex
    std::uint64_t hadamards = 0;
    std::vector<int> leaf_of;  // per vertex: its leaf, or -1; empty if no map

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    void add_edge(int u, int v);
    int degree(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
    bool has_leaf_map() const { return !leaf_of.empty(); }
    bool operator==(const Graph&) const = default;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// FNV-1a over vertex count, adjacency, Hadamard set, and leaf map; stable
// across runs and platforms, used for checkpoint and manifest identity.
std::uint64_t graph_fingerprint(const Graph& g);

// Cycle 0-1-...-(n-1)-0.  Requires n >= 3.
Graph ring(int n);

// (2,2) Shor encoding: logical vertex v becomes core pair (2v, 2v+1) and
// leaves (2n + 2v, 2n + 2v+1); each logical edge becomes the K_{2,2} between
// the core pairs; leaves carry Hadamards and populate the leaf map.
Graph shor_encode_22(const Graph& g);

// Core-only induced subgraph of an encoded graph.  Core vertices already
// occupy indices 0..2n-1, so labels carry over unchanged.
Graph truncate_leaves(const Graph& g);

struct AutomorphismGroup {
    std::vector<std::vector<int>> elements;  // includes identity
    std::size_t size() const { return elements.size(); }
};

// Full automorphism group, with the Hadamard set as a vertex color.
// Backtracking search; graphs in scope stay near 32 vertices.
AutomorphismGroup automorphisms(const Graph& g);

// Color-preserving isomorphism g1 -> g2, or nullopt.
std::optional<std::vector<int>> isomorphic(const Graph& g1, const Graph& g2);

// Streams exactly one representative per orbit of orderings under
// o -> sigma o (sigma an automorphism): the lexicographically smallest
// member.  Total count is n! / |Aut|.
void enumerate_canonical_orderings(const Graph& g, const AutomorphismGroup& aut,
                                   const std::function<void(const Ordering&)>& yield);
std::vector<Ordering> canonical_orderings(const Graph& g);
BigInt count_canonical_orderings(const Graph& g);

// Closed-form orbit counts: (n-1)!/2, (4n)!/(2n 2^n), (2n)!/(n 2^{n+1}).
BigInt orbit_count_ring(int n);
BigInt orbit_count_encoded(int n);
BigInt orbit_count_core(int n);

enum class LiftMode { leaves_after, leaves_before };

// Expands a core ordering to the full encoded graph, inserting each core
// vertex's leaf immediately after (or before) it.
Ordering lift_ordering(const Ordering& core_ordering, const Graph& g_full,
                       LiftMode mode);

bool is_valid_ordering(const Ordering& o, int n);
Ordering compose(const std::vector<int>& sigma, const Ordering& o);
bool orderings_equivalent(const Ordering& a, const Ordering& b,
                          const AutomorphismGroup& aut);

}  // namespace emitgen

#endif
