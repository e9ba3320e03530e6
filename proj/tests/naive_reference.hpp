#pragma once

// Definition-level reference implementations over adjacency sets, written
// independently of the library's bitset code paths. Everything here trades
// speed for being a direct transcription of the definitions; only suitable
// for small n.

#include <array>
#include <set>
#include <utility>
#include <vector>

#include "raagprobe/graph.hpp"

namespace naive {

struct AdjGraph {
    int n = 0;
    std::vector<std::set<int>> adj;
};

inline AdjGraph from(const raagprobe::Graph& g) {
    AdjGraph a;
    a.n = g.vertex_count();
    a.adj.resize(static_cast<std::size_t>(a.n));
    for (const auto& [u, v] : g.edges()) {
        a.adj[static_cast<std::size_t>(u)].insert(v);
        a.adj[static_cast<std::size_t>(v)].insert(u);
    }
    return a;
}

inline bool adjacent(const AdjGraph& g, int u, int v) {
    return g.adj[static_cast<std::size_t>(u)].count(v) > 0;
}

// link(b) subset of star(a), elementwise.
inline bool dominates(const AdjGraph& g, int a, int b) {
    for (int y : g.adj[static_cast<std::size_t>(b)])
        if (y != a && !adjacent(g, a, y)) return false;
    return true;
}

struct PairCounts {
    int adjacent = 0;
    int nonadjacent = 0;
};

inline PairCounts domination_pairs(const AdjGraph& g) {
    PairCounts c;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            if (a == b || !dominates(g, a, b)) continue;
            if (adjacent(g, a, b)) ++c.adjacent;
            else ++c.nonadjacent;
        }
    return c;
}

// Ordered quadruples (a,b,c,d): a~b~c~d~a, a-/-c, b-/-d, a dominates c.
inline std::vector<std::array<int, 4>> diamonds(const AdjGraph& g) {
    std::vector<std::array<int, 4>> out;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c)
                for (int d = 0; d < g.n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (!adjacent(g, a, b) || !adjacent(g, b, c) || !adjacent(g, c, d) ||
                        !adjacent(g, d, a))
                        continue;
                    if (adjacent(g, a, c) || adjacent(g, b, d)) continue;
                    if (!dominates(g, a, c)) continue;
                    out.push_back({a, b, c, d});
                }
    return out;
}

inline std::vector<int> component_of(const AdjGraph& g, int start, const std::set<int>& allowed) {
    std::vector<int> stack{start};
    std::set<int> seen{start};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.adj[static_cast<std::size_t>(v)])
            if (allowed.count(w) && !seen.count(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return std::vector<int>(seen.begin(), seen.end());
}

inline int component_count(const AdjGraph& g, const std::set<int>& allowed) {
    std::set<int> left = allowed;
    int comps = 0;
    while (!left.empty()) {
        ++comps;
        for (int v : component_of(g, *left.begin(), left)) left.erase(v);
    }
    return comps;
}

inline std::set<int> star_complement(const AdjGraph& g, int a) {
    std::set<int> rest;
    for (int v = 0; v < g.n; ++v)
        if (v != a && !adjacent(g, a, v)) rest.insert(v);
    return rest;
}

inline bool is_star_cut_vertex(const AdjGraph& g, int a) {
    return component_count(g, star_complement(g, a)) >= 2;
}

// S separates the subgraph induced on `world`: nonempty, proper, no edges out.
inline bool separates_within(const AdjGraph& g, const std::set<int>& s, const std::set<int>& world) {
    if (s.empty() || s.size() >= world.size()) return false;
    for (int v : s)
        for (int w : g.adj[static_cast<std::size_t>(v)])
            if (world.count(w) && !s.count(w)) return false;
    return true;
}

inline std::set<int> all_vertices(const AdjGraph& g) {
    std::set<int> out;
    for (int v = 0; v < g.n; ++v) out.insert(v);
    return out;
}

// Direct subset enumeration of the definition: S subset of the star
// complement of a, |S| = k, S separates the star complement, S does not
// separate the whole graph.
inline std::vector<std::pair<int, std::set<int>>> proper_star_k_separations(const AdjGraph& g,
                                                                            int k) {
    std::vector<std::pair<int, std::set<int>>> out;
    const std::set<int> everything = all_vertices(g);
    for (int a = 0; a < g.n; ++a) {
        const std::set<int> world = star_complement(g, a);
        const std::vector<int> pool(world.begin(), world.end());
        if (static_cast<std::size_t>(k) > pool.size()) continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
            std::set<int> s;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (mask >> i & 1) s.insert(pool[i]);
            if (s.size() != static_cast<std::size_t>(k)) continue;
            if (!separates_within(g, s, world)) continue;
            if (separates_within(g, s, everything)) continue;
            out.emplace_back(a, std::move(s));
        }
    }
    return out;
}

inline bool out_finite(const AdjGraph& g) {
    for (int a = 0; a < g.n; ++a) {
        if (is_star_cut_vertex(g, a)) return false;
        for (int b = 0; b < g.n; ++b)
            if (a != b && dominates(g, a, b)) return false;
    }
    return true;
}

}  // namespace naive
