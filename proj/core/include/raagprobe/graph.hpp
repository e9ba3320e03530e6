#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace raagprobe {

// Subset of a fixed vertex universe {0, ..., universe-1}, packed into 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);

    static VertexSet full(int universe);
    static VertexSet of(int universe, std::initializer_list<int> vertices);

    int universe() const { return universe_; }

    bool test(int v) const { return (words_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u; }
    void set(int v) { words_[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words_[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const;
    bool empty() const;
    int first() const;  // smallest member, -1 if empty

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& subtract(const VertexSet& other);  // this \ other

    std::vector<int> to_vector() const;  // ascending

    bool operator==(const VertexSet&) const = default;

    std::uint64_t* data() { return words_.data(); }
    const std::uint64_t* data() const { return words_.data(); }
    int word_count() const { return static_cast<int>(words_.size()); }

private:
    void check_member(int v) const;

    int universe_ = 0;
    std::vector<std::uint64_t> words_;

    friend class Graph;
};

struct InducedSubgraph;

// Immutable simple graph on n labeled vertices {0, ..., n-1}.
// Adjacency is stored as one packed bit row per vertex so that subset tests
// (the inner loop of domination checks) run word-parallel.
class Graph {
public:
    Graph() = default;

    // Validates endpoints, rejects self-loops, tolerates duplicate edges.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    // rows must hold n * words_per_row(n) words describing a symmetric,
    // loop-free adjacency matrix (checked in debug builds only).
    static Graph from_rows(int n, std::vector<std::uint64_t> rows);

    static int words_per_row(int n) { return n == 0 ? 1 : (n + 63) / 64; }

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }
    int words_per_row() const { return wpr_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;

    const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * wpr_; }

    VertexSet link(int v) const;  // neighbors of v
    VertexSet star(int v) const;  // link(v) plus v itself
    VertexSet vertices() const { return VertexSet::full(n_); }

    Graph complement() const;

    using Induced = InducedSubgraph;
    Induced induced_delete(const VertexSet& drop) const;

    // Connected components, ordered by smallest member.
    std::vector<VertexSet> components() const;
    bool is_connected() const;  // true iff at most one component

    // Components of the subgraph induced on `allowed`.
    std::vector<VertexSet> components_within(const VertexSet& allowed) const;
    // Component count of the induced subgraph, stopping early once `stop_at` is reached.
    int count_components_within(const VertexSet& allowed, int stop_at) const;

    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    // Full structural invariant check (symmetry, no loops, edge count). Test hook.
    bool check_invariants() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int wpr_ = 1;
    std::int64_t m_ = 0;
    std::vector<std::uint64_t> rows_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> new_to_old;  // ascending: order-preserving relabeling
    std::vector<int> old_to_new;  // -1 for dropped vertices
};

}
