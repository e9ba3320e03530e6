#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raagprobe/graph.hpp"

namespace raagprobe {

// Vertex a dominates vertex b when link(b) is contained in star(a). Ordered,
// and a == b is rejected. Pairs are tagged adjacent / non-adjacent by the
// a-b edge.
bool dominates(const Graph& g, int a, int b);

struct DominationCounts {
    std::uint64_t adjacent = 0;
    std::uint64_t nonadjacent = 0;
    std::uint64_t total() const { return adjacent + nonadjacent; }
};
DominationCounts count_domination_pairs(const Graph& g);
bool has_domination_pair(const Graph& g);

// Domination diamonds: ordered quadruples (a, b, c, d) of distinct vertices
// with a~b~c~d~a, a-/-c, b-/-d, and a dominating c.
std::uint64_t count_diamonds(const Graph& g);
// Ordered pairs (x, y), x != y, x -/- y, with both x, y in link(a) ∩ link(c).
// Nonzero exactly when some diamond has first entry a and third entry c.
std::uint64_t count_diamonds_through(const Graph& g, int a, int c);

inline constexpr std::size_t kNoWitnessCap = std::numeric_limits<std::size_t>::max();

// Counts are always exact; witness lists are sorted lexicographically and
// truncated at witness_cap entries each.
struct DominationReport {
    std::uint64_t adjacent_count = 0;
    std::uint64_t nonadjacent_count = 0;
    std::uint64_t diamond_count = 0;
    std::vector<std::pair<int, int>> adjacent_pairs;
    std::vector<std::pair<int, int>> nonadjacent_pairs;
    std::vector<std::array<int, 4>> diamonds;
    bool witnesses_capped = false;
};
DominationReport domination_report(const Graph& g, std::size_t witness_cap = kNoWitnessCap);

// Star cut: g minus the closed star of a falls into at least two components.
bool is_star_cut_vertex(const Graph& g, int a);
VertexSet star_cut_vertices(const Graph& g);
bool has_star_cut_vertex(const Graph& g);
bool is_star_two_connected(const Graph& g);  // no star-cut vertex

// Proper star k-separations (a, S): S is a union of components of g minus
// star(a), nonempty, not all of them, |S| = k, and S has at least one edge
// into link(a) (otherwise S would already separate g itself).
std::vector<std::pair<int, VertexSet>> proper_star_k_separations(
    const Graph& g, int k, std::size_t witness_cap = kNoWitnessCap);

// Count without materializing witnesses. Exact while below 2^53.
double proper_star_k_separation_count(const Graph& g, int k);

struct StarSeparationReport {
    VertexSet star_cut_vertices;
    // components of g minus star(a), per vertex a, each sorted ascending
    std::vector<std::vector<std::vector<int>>> per_vertex_components;
    std::map<int, double> proper_k_separation_counts;  // k -> count, nonzero entries only
    bool reducible = false;
};
StarSeparationReport star_separation_report(const Graph& g);

// Every star-cut vertex leaves at most one component with two or more vertices.
bool transvection_reducible(const Graph& g);

VertexSet isolated_vertices(const Graph& g);
VertexSet valence_one_vertices(const Graph& g);
std::vector<std::pair<int, int>> isolated_edges(const Graph& g);  // u < v, both valence 1
VertexSet valence_one_not_on_isolated_edge(const Graph& g);

enum class FinitenessLabel { Finite, InfiniteByDomination, InfiniteByStarCut, InfiniteByBoth };
const char* to_string(FinitenessLabel label);

// Finite iff the graph is star 2-connected and has no domination pair.
// Witnesses are the lexicographically smallest of their kind.
struct FinitenessVerdict {
    FinitenessLabel label = FinitenessLabel::Finite;
    std::optional<std::pair<int, int>> domination_witness;
    std::optional<int> star_cut_witness;
};
FinitenessVerdict finiteness_verdict(const Graph& g);

}
