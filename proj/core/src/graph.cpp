#include "raagprobe/graph.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

namespace raagprobe {

namespace {

std::string vertex_range_message(int v, int universe) {
    return "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(universe) + ")";
}

}  // namespace

VertexSet::VertexSet(int universe) {
    if (universe < 0) throw std::invalid_argument("VertexSet universe must be non-negative");
    universe_ = universe;
    words_.assign(universe == 0 ? 1 : static_cast<std::size_t>((universe + 63) / 64), 0);
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.set(v);
    return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> vertices) {
    VertexSet s(universe);
    for (int v : vertices) {
        s.check_member(v);
        s.set(v);
    }
    return s;
}

void VertexSet::check_member(int v) const {
    if (v < 0 || v >= universe_) throw std::out_of_range(vertex_range_message(v, universe_));
}

int VertexSet::count() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool VertexSet::empty() const {
    for (std::uint64_t w : words_) {
        if (w != 0) return false;
    }
    return true;
}

int VertexSet::first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] != 0) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    }
    return -1;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & other.words_[i]) return true;
    }
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    n_ = n;
    wpr_ = words_per_row(n);
    rows_.assign(static_cast<std::size_t>(n_ == 0 ? 1 : n_) * wpr_, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n) throw std::out_of_range(vertex_range_message(u, n));
        if (v < 0 || v >= n) throw std::out_of_range(vertex_range_message(v, n));
        if (u == v) {
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") not allowed");
        }
        rows_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        rows_[static_cast<std::size_t>(v) * wpr_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
    std::int64_t bits = 0;
    for (std::uint64_t w : rows_) bits += std::popcount(w);
    m_ = bits / 2;
}

Graph Graph::from_rows(int n, std::vector<std::uint64_t> rows) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.wpr_ = words_per_row(n);
    if (rows.size() != static_cast<std::size_t>(n == 0 ? 1 : n) * g.wpr_) {
        throw std::invalid_argument("row storage has wrong size");
    }
    g.rows_ = std::move(rows);
    std::int64_t bits = 0;
    for (std::uint64_t w : g.rows_) bits += std::popcount(w);
    g.m_ = bits / 2;
    assert(g.check_invariants());
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range(vertex_range_message(v, n_));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
}

int Graph::degree(int v) const {
    check_vertex(v);
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < wpr_; ++w) d += std::popcount(r[w]);
    return d;
}

VertexSet Graph::link(int v) const {
    check_vertex(v);
    VertexSet s(n_);
    const std::uint64_t* r = row(v);
    for (int w = 0; w < wpr_; ++w) s.words_[static_cast<std::size_t>(w)] = r[w];
    return s;
}

VertexSet Graph::star(int v) const {
    VertexSet s = link(v);
    s.set(v);
    return s;
}

Graph Graph::complement() const {
    Graph g;
    g.n_ = n_;
    g.wpr_ = wpr_;
    g.rows_.assign(rows_.size(), 0);
    if (n_ == 0) return g;
    // Mask of valid vertex bits in the last word.
    std::uint64_t last_mask = (n_ & 63) == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n_ & 63)) - 1);
    for (int v = 0; v < n_; ++v) {
        const std::uint64_t* src = row(v);
        std::uint64_t* dst = g.rows_.data() + static_cast<std::size_t>(v) * wpr_;
        for (int w = 0; w < wpr_; ++w) dst[w] = ~src[w];
        dst[wpr_ - 1] &= last_mask;
        dst[v >> 6] &= ~(std::uint64_t{1} << (v & 63));  // keep it loop-free
    }
    std::int64_t bits = 0;
    for (std::uint64_t w : g.rows_) bits += std::popcount(w);
    g.m_ = bits / 2;
    return g;
}

Graph::Induced Graph::induced_delete(const VertexSet& drop) const {
    if (drop.universe() != n_) throw std::invalid_argument("drop set universe mismatch");
    Induced result;
    result.old_to_new.assign(static_cast<std::size_t>(n_), -1);
    for (int v = 0; v < n_; ++v) {
        if (!drop.test(v)) {
            result.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(result.new_to_old.size());
            result.new_to_old.push_back(v);
        }
    }
    int nn = static_cast<int>(result.new_to_old.size());
    Graph g;
    g.n_ = nn;
    g.wpr_ = words_per_row(nn);
    g.rows_.assign(static_cast<std::size_t>(nn == 0 ? 1 : nn) * g.wpr_, 0);
    for (int nu = 0; nu < nn; ++nu) {
        const std::uint64_t* src = row(result.new_to_old[static_cast<std::size_t>(nu)]);
        std::uint64_t* dst = g.rows_.data() + static_cast<std::size_t>(nu) * g.wpr_;
        for (int w = 0; w < wpr_; ++w) {
            std::uint64_t bits = src[w];
            while (bits) {
                int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                int nv = result.old_to_new[static_cast<std::size_t>(v)];
                if (nv >= 0) dst[nv >> 6] |= std::uint64_t{1} << (nv & 63);
            }
        }
    }
    std::int64_t bits = 0;
    for (std::uint64_t w : g.rows_) bits += std::popcount(w);
    g.m_ = bits / 2;
    result.graph = std::move(g);
    return result;
}

std::vector<VertexSet> Graph::components() const {
    return components_within(VertexSet::full(n_));
}

bool Graph::is_connected() const {
    return count_components_within(VertexSet::full(n_), 2) <= 1;
}

std::vector<VertexSet> Graph::components_within(const VertexSet& allowed) const {
    if (allowed.universe() != n_) throw std::invalid_argument("allowed set universe mismatch");
    std::vector<VertexSet> result;
    VertexSet remaining = allowed;
    std::vector<int> stack;
    int seed;
    while ((seed = remaining.first()) >= 0) {
        VertexSet comp(n_);
        comp.set(seed);
        remaining.reset(seed);
        stack.assign(1, seed);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            const std::uint64_t* r = row(u);
            for (int w = 0; w < wpr_; ++w) {
                std::uint64_t cand = r[w] & remaining.data()[w];
                if (!cand) continue;
                remaining.data()[w] &= ~cand;
                comp.data()[w] |= cand;
                while (cand) {
                    stack.push_back(w * 64 + std::countr_zero(cand));
                    cand &= cand - 1;
                }
            }
        }
        result.push_back(std::move(comp));
    }
    return result;
}

int Graph::count_components_within(const VertexSet& allowed, int stop_at) const {
    if (allowed.universe() != n_) throw std::invalid_argument("allowed set universe mismatch");
    VertexSet remaining = allowed;
    std::vector<int> stack;
    int count = 0;
    int seed;
    while (count < stop_at && (seed = remaining.first()) >= 0) {
        ++count;
        remaining.reset(seed);
        stack.assign(1, seed);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            const std::uint64_t* r = row(u);
            for (int w = 0; w < wpr_; ++w) {
                std::uint64_t cand = r[w] & remaining.data()[w];
                if (!cand) continue;
                remaining.data()[w] &= ~cand;
                while (cand) {
                    stack.push_back(w * 64 + std::countr_zero(cand));
                    cand &= cand - 1;
                }
            }
        }
    }
    return count;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        const std::uint64_t* r = row(u);
        for (int w = (u + 1) >> 6; w < wpr_; ++w) {
            std::uint64_t bits = r[w];
            if (w == (u >> 6)) bits &= ~((std::uint64_t{2} << (u & 63)) - 1);  // keep v > u only
            while (bits) {
                out.emplace_back(u, w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }
    return out;
}

bool Graph::check_invariants() const {
    std::uint64_t last_mask = (n_ & 63) == 0 && n_ > 0 ? ~std::uint64_t{0}
                                                       : ((std::uint64_t{1} << (n_ & 63)) - 1);
    std::int64_t bits = 0;
    for (int u = 0; u < n_; ++u) {
        const std::uint64_t* r = row(u);
        if ((r[u >> 6] >> (u & 63)) & 1u) return false;           // loop
        if (n_ > 0 && (r[wpr_ - 1] & ~last_mask) != 0) return false;  // stray bits
        for (int w = 0; w < wpr_; ++w) bits += std::popcount(r[w]);
        for (int w = 0; w < wpr_; ++w) {
            std::uint64_t b = r[w];
            while (b) {
                int v = w * 64 + std::countr_zero(b);
                b &= b - 1;
                if (v >= n_) return false;
                if (((row(v)[u >> 6] >> (u & 63)) & 1u) == 0) return false;  // asymmetry
            }
        }
    }
    return bits == 2 * m_;
}

}
