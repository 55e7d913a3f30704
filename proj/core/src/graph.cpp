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

#include "emitgen/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace emitgen {

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::out_of_range("Graph: vertex out of range");
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
}

int Graph::degree(int v) const { return std::popcount(adj[v]); }

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& a : adj) twice += std::popcount(a);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1 || n > 64) throw std::invalid_argument("Graph: bad vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, 0);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::uint64_t graph_fingerprint(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(std::uint64_t(g.n));
    for (auto a : g.adj) mix(a);
    mix(g.hadamards);
    for (int l : g.leaf_of) mix(std::uint64_t(std::int64_t(l)));
    return h;
}

Graph ring(int n) {
    if (n < 3) throw std::invalid_argument("ring: need n >= 3");
    Graph g;
    g.n = n;
    g.adj.assign(n, 0);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph shor_encode_22(const Graph& g) {
    if (g.hadamards != 0 || g.has_leaf_map())
        throw std::invalid_argument("shor_encode_22: input already encoded");
    const int n = g.n;
    if (4 * n > 64) throw std::invalid_argument("shor_encode_22: too large");
    Graph e;
    e.n = 4 * n;
    e.adj.assign(e.n, 0);
    e.leaf_of.assign(e.n, -1);
    for (int v = 0; v < n; ++v) {
        for (int half = 0; half < 2; ++half) {
            const int core = 2 * v + half;
            const int leaf = 2 * n + core;
            e.add_edge(core, leaf);
            e.hadamards |= std::uint64_t{1} << leaf;
            e.leaf_of[core] = leaf;
        }
    }
    for (auto [u, v] : g.edges())
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) e.add_edge(2 * u + a, 2 * v + b);
    return e;
}

Graph truncate_leaves(const Graph& g) {
    if (!g.has_leaf_map())
        throw std::invalid_argument("truncate_leaves: no leaf map");
    const int half = g.n / 2;
    Graph core;
    core.n = half;
    core.adj.assign(half, 0);
    const std::uint64_t mask = (std::uint64_t{1} << half) - 1;
    for (int v = 0; v < half; ++v) core.adj[v] = g.adj[v] & mask;
    return core;
}

namespace {

struct MatchState {
    const Graph* g1;
    const Graph* g2;
    std::vector<int> map;       // g1 vertex -> g2 vertex, -1 unset
    std::vector<bool> used;     // g2 vertex taken
    std::vector<int> order;     // vertex assignment order in g1
};

bool compatible(const MatchState& st, int v1, int v2) {
    if (st.g1->degree(v1) != st.g2->degree(v2)) return false;
    const bool h1 = (st.g1->hadamards >> v1) & 1;
    const bool h2 = (st.g2->hadamards >> v2) & 1;
    if (h1 != h2) return false;
    for (int u = 0; u < st.g1->n; ++u) {
        if (st.map[u] < 0) continue;
        if (st.g1->has_edge(v1, u) != st.g2->has_edge(v2, st.map[u])) return false;
    }
    return true;
}

void search(MatchState& st, std::size_t depth,
            const std::function<bool(const std::vector<int>&)>& found) {
    if (depth == st.order.size()) {
        found(st.map);
        return;
    }
    const int v1 = st.order[depth];
    for (int v2 = 0; v2 < st.g2->n; ++v2) {
        if (st.used[v2] || !compatible(st, v1, v2)) continue;
        st.map[v1] = v2;
        st.used[v2] = true;
        search(st, depth + 1, found);
        st.map[v1] = -1;
        st.used[v2] = false;
    }
}

std::vector<int> assignment_order(const Graph& g) {
    // Visit high-degree vertices first, then neighbors of placed vertices,
    // to fail early.
    std::vector<int> order;
    std::vector<bool> placed(g.n, false);
    while (int(order.size()) < g.n) {
        int best = -1, best_score = -1;
        for (int v = 0; v < g.n; ++v) {
            if (placed[v]) continue;
            int attached = 0;
            for (int u : order)
                if (g.has_edge(v, u)) ++attached;
            const int score = attached * 100 + g.degree(v);
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        order.push_back(best);
        placed[best] = true;
    }
    return order;
}

void match_all(const Graph& g1, const Graph& g2,
               const std::function<bool(const std::vector<int>&)>& found) {
    if (g1.n != g2.n || g1.edge_count() != g2.edge_count()) return;
    if (std::popcount(g1.hadamards) != std::popcount(g2.hadamards)) return;
    MatchState st{&g1, &g2, std::vector<int>(g1.n, -1),
                  std::vector<bool>(g2.n, false), assignment_order(g1)};
    search(st, 0, found);
}

}  // namespace

AutomorphismGroup automorphisms(const Graph& g) {
    AutomorphismGroup group;
    match_all(g, g, [&](const std::vector<int>& perm) {
        group.elements.push_back(perm);
        return true;
    });
    return group;
}

std::optional<std::vector<int>> isomorphic(const Graph& g1, const Graph& g2) {
    std::optional<std::vector<int>> result;
    struct Stop {};
    try {
        match_all(g1, g2, [&](const std::vector<int>& perm) -> bool {
            result = perm;
            throw Stop{};
        });
    } catch (const Stop&) {
    }
    return result;
}

void enumerate_canonical_orderings(const Graph& g, const AutomorphismGroup& aut,
                                   const std::function<void(const Ordering&)>& yield) {
    const int n = g.n;
    Ordering order;
    order.reserve(n);
    std::vector<bool> used(n, false);
    // active[d] = automorphisms still agreeing with identity on the prefix.
    // An ordering o is its orbit's lex minimum iff no sigma gives
    // sigma(o) < o; prune as soon as any active sigma maps the next vertex
    // below it.
    std::vector<std::vector<const std::vector<int>*>> active(n + 1);
    active[0].reserve(aut.size());
    for (const auto& s : aut.elements) active[0].push_back(&s);

    std::function<void(int)> descend = [&](int depth) {
        if (depth == n) {
            yield(order);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool pruned = false;
            auto& next = active[depth + 1];
            next.clear();
            for (const auto* s : active[depth]) {
                const int w = (*s)[v];
                if (w < v) {
                    pruned = true;
                    break;
                }
                if (w == v) next.push_back(s);
            }
            if (pruned) continue;
            used[v] = true;
            order.push_back(v);
            descend(depth + 1);
            order.pop_back();
            used[v] = false;
        }
    };
    descend(0);
}

std::vector<Ordering> canonical_orderings(const Graph& g) {
    auto aut = automorphisms(g);
    std::vector<Ordering> out;
    enumerate_canonical_orderings(g, aut, [&](const Ordering& o) { out.push_back(o); });
    return out;
}

BigInt count_canonical_orderings(const Graph& g) {
    auto aut = automorphisms(g);
    BigInt fact = 1;
    for (int i = 2; i <= g.n; ++i) fact *= i;
    return fact / BigInt(aut.size());
}

namespace {
BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}
}  // namespace

BigInt orbit_count_ring(int n) {
    if (n < 3) throw std::invalid_argument("orbit_count_ring: need n >= 3");
    return factorial(n) / (2 * n);
}

BigInt orbit_count_encoded(int n) {
    if (n < 3) throw std::invalid_argument("orbit_count_encoded: need n >= 3");
    return factorial(4 * n) / (BigInt(2 * n) << n);
}

BigInt orbit_count_core(int n) {
    if (n < 3) throw std::invalid_argument("orbit_count_core: need n >= 3");
    return factorial(2 * n) / (BigInt(n) << (n + 1));
}

Ordering lift_ordering(const Ordering& core_ordering, const Graph& g_full,
                       LiftMode mode) {
    if (!g_full.has_leaf_map())
        throw std::invalid_argument("lift_ordering: graph has no leaf map");
    const int half = g_full.n / 2;
    if (!is_valid_ordering(core_ordering, half))
        throw std::invalid_argument("lift_ordering: ordering does not match core");
    Ordering full;
    full.reserve(g_full.n);
    for (int c : core_ordering) {
        const int leaf = g_full.leaf_of[c];
        if (leaf < 0) throw std::invalid_argument("lift_ordering: core vertex without leaf");
        if (mode == LiftMode::leaves_after) {
            full.push_back(c);
            full.push_back(leaf);
        } else {
            full.push_back(leaf);
            full.push_back(c);
        }
    }
    return full;
}

bool is_valid_ordering(const Ordering& o, int n) {
    if (int(o.size()) != n) return false;
    std::uint64_t seen = 0;
    for (int v : o) {
        if (v < 0 || v >= n) return false;
        const std::uint64_t m = std::uint64_t{1} << v;
        if (seen & m) return false;
        seen |= m;
    }
    return true;
}

Ordering compose(const std::vector<int>& sigma, const Ordering& o) {
    Ordering out(o.size());
    for (std::size_t k = 0; k < o.size(); ++k) out[k] = sigma[o[k]];
    return out;
}

bool orderings_equivalent(const Ordering& a, const Ordering& b,
                          const AutomorphismGroup& aut) {
    for (const auto& s : aut.elements)
        if (compose(s, a) == b) return true;
    return false;
}

}  // namespace emitgen
