#include "raagprobe/detectors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace raagprobe {

namespace {

void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.vertex_count())
        throw std::out_of_range(std::string(what) + " out of range");
}

// link(b) AND NOT star(a) == 0, word-parallel.
bool dominates_unchecked(const Graph& g, int a, int b) {
    const std::uint64_t* la = g.row(a);
    const std::uint64_t* lb = g.row(b);
    const int aw = a >> 6;
    const std::uint64_t abit = std::uint64_t{1} << (a & 63);
    const int wpr = g.words_per_row();
    for (int w = 0; w < wpr; ++w) {
        std::uint64_t extra = lb[w] & ~la[w];
        if (w == aw) extra &= ~abit;
        if (extra) return false;
    }
    return true;
}

template <typename F>
void for_each_neighbor(const Graph& g, int v, F&& f) {
    const std::uint64_t* r = g.row(v);
    const int wpr = g.words_per_row();
    for (int w = 0; w < wpr; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            f((w << 6) + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
}

int sole_neighbor(const Graph& g, int v) {
    const std::uint64_t* r = g.row(v);
    for (int w = 0; w < g.words_per_row(); ++w)
        if (r[w]) return (w << 6) + std::countr_zero(r[w]);
    return -1;
}

// Ordered non-adjacent (b, d) pairs with both in link(a) ∩ link(c).
std::uint64_t ordered_nonedges_in_common_link(const Graph& g, int a, int c,
                                              std::vector<std::uint64_t>& common) {
    const std::uint64_t* ra = g.row(a);
    const std::uint64_t* rc = g.row(c);
    const int wpr = g.words_per_row();
    std::uint64_t size = 0;
    for (int w = 0; w < wpr; ++w) {
        common[static_cast<std::size_t>(w)] = ra[w] & rc[w];
        size += static_cast<std::uint64_t>(std::popcount(common[static_cast<std::size_t>(w)]));
    }
    if (size < 2) return 0;
    std::uint64_t total = 0;
    for (int w = 0; w < wpr; ++w) {
        std::uint64_t bits = common[static_cast<std::size_t>(w)];
        while (bits) {
            const int b = (w << 6) + std::countr_zero(bits);
            bits &= bits - 1;
            const std::uint64_t* rb = g.row(b);
            std::uint64_t inside = 0;
            for (int w2 = 0; w2 < wpr; ++w2)
                inside += static_cast<std::uint64_t>(
                    std::popcount(rb[w2] & common[static_cast<std::size_t>(w2)]));
            total += size - 1 - inside;
        }
    }
    return total;
}

struct StarComplement {
    std::vector<VertexSet> components;
    std::vector<int> sizes;
    std::vector<char> attached;  // component has an edge into link(a)
    int total = 0;
    bool any_attached = false;
};

StarComplement star_complement(const Graph& g, int a) {
    VertexSet allowed = g.vertices();
    allowed.subtract(g.star(a));
    StarComplement out;
    out.components = g.components_within(allowed);
    const std::uint64_t* ra = g.row(a);
    const int wpr = g.words_per_row();
    for (const VertexSet& comp : out.components) {
        out.sizes.push_back(comp.count());
        out.total += out.sizes.back();
        bool att = false;
        for (int w = 0; w < wpr && !att; ++w) {
            std::uint64_t bits = comp.data()[w];
            while (bits) {
                const int v = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                const std::uint64_t* rv = g.row(v);
                for (int w2 = 0; w2 < wpr; ++w2)
                    if (rv[w2] & ra[w2]) { att = true; break; }
                if (att) break;
            }
        }
        out.attached.push_back(att);
        out.any_attached = out.any_attached || att;
    }
    return out;
}

// dp[j] = number of component subsets with total size j; exact below 2^53.
std::vector<double> subset_size_counts(const std::vector<int>& sizes,
                                       const std::vector<char>* keep_only_unattached,
                                       const std::vector<char>& attached, int kmax) {
    std::vector<double> dp(static_cast<std::size_t>(kmax) + 1, 0.0);
    dp[0] = 1.0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (keep_only_unattached && attached[i]) continue;
        const int s = sizes[i];
        for (int j = kmax; j >= s; --j) dp[static_cast<std::size_t>(j)] += dp[static_cast<std::size_t>(j - s)];
    }
    return dp;
}

double proper_count_for_vertex(const StarComplement& sc, int k) {
    if (k < 1 || k > sc.total) return 0.0;
    const std::vector<double> all = subset_size_counts(sc.sizes, nullptr, sc.attached, k);
    const std::vector<double> free_only = subset_size_counts(sc.sizes, &sc.attached, sc.attached, k);
    double count = all[static_cast<std::size_t>(k)] - free_only[static_cast<std::size_t>(k)];
    if (k == sc.total && sc.any_attached) count -= 1.0;  // S must not be all of Γ∖st(a)
    return count;
}

}  // namespace

bool dominates(const Graph& g, int a, int b) {
    check_vertex(g, a, "vertex a");
    check_vertex(g, b, "vertex b");
    if (a == b) throw std::invalid_argument("domination requires a != b");
    return dominates_unchecked(g, a, b);
}

DominationCounts count_domination_pairs(const Graph& g) {
    DominationCounts counts;
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a || !dominates_unchecked(g, a, b)) continue;
            if (g.has_edge(a, b)) ++counts.adjacent;
            else ++counts.nonadjacent;
        }
    return counts;
}

bool has_domination_pair(const Graph& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (b != a && dominates_unchecked(g, a, b)) return true;
    return false;
}

std::uint64_t count_diamonds(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> common(static_cast<std::size_t>(g.words_per_row()));
    std::uint64_t total = 0;
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            if (c == a || g.has_edge(a, c) || !dominates_unchecked(g, a, c)) continue;
            total += ordered_nonedges_in_common_link(g, a, c, common);
        }
    return total;
}

std::uint64_t count_diamonds_through(const Graph& g, int a, int c) {
    check_vertex(g, a, "vertex a");
    check_vertex(g, c, "vertex c");
    if (a == c) throw std::invalid_argument("diamond endpoints must differ");
    if (g.has_edge(a, c) || !dominates_unchecked(g, a, c)) return 0;
    std::vector<std::uint64_t> common(static_cast<std::size_t>(g.words_per_row()));
    return ordered_nonedges_in_common_link(g, a, c, common);
}

DominationReport domination_report(const Graph& g, std::size_t witness_cap) {
    DominationReport rep;
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a || !dominates_unchecked(g, a, b)) continue;
            const bool adj = g.has_edge(a, b);
            std::uint64_t& count = adj ? rep.adjacent_count : rep.nonadjacent_count;
            std::vector<std::pair<int, int>>& list = adj ? rep.adjacent_pairs : rep.nonadjacent_pairs;
            ++count;
            if (list.size() < witness_cap) list.emplace_back(a, b);
            else rep.witnesses_capped = true;
        }
    rep.diamond_count = count_diamonds(g);

    // Witnesses in lexicographic (a, b, c, d) order.
    bool capped = false;
    for (int a = 0; a < n && !capped; ++a) {
        std::vector<int> la;
        for_each_neighbor(g, a, [&](int v) { la.push_back(v); });
        for (std::size_t bi = 0; bi < la.size() && !capped; ++bi) {
            const int b = la[bi];
            for_each_neighbor(g, b, [&](int c) {
                if (capped || c == a || g.has_edge(a, c) || !dominates_unchecked(g, a, c)) return;
                for (int d : la) {
                    if (d == b || !g.has_edge(c, d) || g.has_edge(b, d)) continue;
                    if (rep.diamonds.size() >= witness_cap) { capped = true; return; }
                    rep.diamonds.push_back({a, b, c, d});
                }
            });
        }
    }
    if (capped) rep.witnesses_capped = true;
    return rep;
}

bool is_star_cut_vertex(const Graph& g, int a) {
    check_vertex(g, a, "vertex");
    VertexSet allowed = g.vertices();
    allowed.subtract(g.star(a));
    return g.count_components_within(allowed, 2) >= 2;
}

VertexSet star_cut_vertices(const Graph& g) {
    VertexSet out(g.vertex_count());
    for (int a = 0; a < g.vertex_count(); ++a)
        if (is_star_cut_vertex(g, a)) out.set(a);
    return out;
}

bool has_star_cut_vertex(const Graph& g) {
    for (int a = 0; a < g.vertex_count(); ++a)
        if (is_star_cut_vertex(g, a)) return true;
    return false;
}

bool is_star_two_connected(const Graph& g) { return !has_star_cut_vertex(g); }

std::vector<std::pair<int, VertexSet>> proper_star_k_separations(const Graph& g, int k,
                                                                 std::size_t witness_cap) {
    const int n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("separation size out of range");
    std::vector<std::pair<int, VertexSet>> out;
    for (int a = 0; a < n; ++a) {
        const StarComplement sc = star_complement(g, a);
        if (k >= sc.total || !sc.any_attached) continue;  // S must leave a remainder
        const std::size_t m = sc.components.size();
        std::vector<int> suffix_size(m + 1, 0);
        std::vector<char> suffix_attached(m + 1, 0);
        for (std::size_t i = m; i-- > 0;) {
            suffix_size[i] = suffix_size[i + 1] + sc.sizes[i];
            suffix_attached[i] = suffix_attached[i + 1] || sc.attached[i];
        }
        std::vector<std::size_t> chosen;
        // Include-first DFS emits S sets in ascending vertex-list order because
        // components are indexed by smallest member.
        auto dfs = [&](auto&& self, std::size_t idx, int size, bool attached) -> bool {
            if (size == k) {
                if (!attached) return true;
                if (out.size() >= witness_cap) return false;
                VertexSet s(n);
                for (std::size_t i : chosen) s |= sc.components[i];
                out.emplace_back(a, std::move(s));
                return true;
            }
            if (idx == m || size + suffix_size[idx] < k) return true;
            if (!attached && !suffix_attached[idx]) return true;
            if (size + sc.sizes[idx] <= k) {
                chosen.push_back(idx);
                const bool keep = self(self, idx + 1, size + sc.sizes[idx],
                                       attached || sc.attached[idx]);
                chosen.pop_back();
                if (!keep) return false;
            }
            return self(self, idx + 1, size, attached);
        };
        if (!dfs(dfs, 0, 0, false)) break;
    }
    return out;
}

double proper_star_k_separation_count(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("separation size out of range");
    double total = 0.0;
    for (int a = 0; a < n; ++a) total += proper_count_for_vertex(star_complement(g, a), k);
    return total;
}

StarSeparationReport star_separation_report(const Graph& g) {
    const int n = g.vertex_count();
    StarSeparationReport rep;
    rep.star_cut_vertices = VertexSet(n);
    rep.per_vertex_components.resize(static_cast<std::size_t>(n));
    rep.reducible = true;
    for (int a = 0; a < n; ++a) {
        const StarComplement sc = star_complement(g, a);
        auto& comps = rep.per_vertex_components[static_cast<std::size_t>(a)];
        int multi = 0;
        for (const VertexSet& comp : sc.components) {
            comps.push_back(comp.to_vector());
            if (comps.back().size() >= 2) ++multi;
        }
        if (sc.components.size() >= 2) {
            rep.star_cut_vertices.set(a);
            if (multi >= 2) rep.reducible = false;
        }
        for (int k = 1; k <= sc.total; ++k) {
            const double c = proper_count_for_vertex(sc, k);
            if (c > 0.0) rep.proper_k_separation_counts[k] += c;
        }
    }
    return rep;
}

bool transvection_reducible(const Graph& g) {
    for (int a = 0; a < g.vertex_count(); ++a) {
        VertexSet allowed = g.vertices();
        allowed.subtract(g.star(a));
        const std::vector<VertexSet> comps = g.components_within(allowed);
        if (comps.size() < 2) continue;
        int multi = 0;
        for (const VertexSet& comp : comps)
            if (comp.count() >= 2 && ++multi >= 2) return false;
    }
    return true;
}

VertexSet isolated_vertices(const Graph& g) {
    VertexSet out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out.set(v);
    return out;
}

VertexSet valence_one_vertices(const Graph& g) {
    VertexSet out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.set(v);
    return out;
}

std::vector<std::pair<int, int>> isolated_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 1) continue;
        const int u = sole_neighbor(g, v);
        if (u > v && g.degree(u) == 1) out.emplace_back(v, u);
    }
    return out;
}

VertexSet valence_one_not_on_isolated_edge(const Graph& g) {
    VertexSet out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 1) continue;
        if (g.degree(sole_neighbor(g, v)) >= 2) out.set(v);
    }
    return out;
}

const char* to_string(FinitenessLabel label) {
    switch (label) {
        case FinitenessLabel::Finite: return "Finite";
        case FinitenessLabel::InfiniteByDomination: return "InfiniteByDomination";
        case FinitenessLabel::InfiniteByStarCut: return "InfiniteByStarCut";
        case FinitenessLabel::InfiniteByBoth: return "InfiniteByBoth";
    }
    return "?";
}

FinitenessVerdict finiteness_verdict(const Graph& g) {
    FinitenessVerdict v;
    const int n = g.vertex_count();
    for (int a = 0; a < n && !v.domination_witness; ++a)
        for (int b = 0; b < n; ++b)
            if (b != a && dominates_unchecked(g, a, b)) {
                v.domination_witness = {a, b};
                break;
            }
    for (int a = 0; a < n; ++a)
        if (is_star_cut_vertex(g, a)) {
            v.star_cut_witness = a;
            break;
        }
    if (v.domination_witness && v.star_cut_witness) v.label = FinitenessLabel::InfiniteByBoth;
    else if (v.domination_witness) v.label = FinitenessLabel::InfiniteByDomination;
    else if (v.star_cut_witness) v.label = FinitenessLabel::InfiniteByStarCut;
    else v.label = FinitenessLabel::Finite;
    return v;
}

}
