#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace planted {

// Simple undirected graph over vertices 0..n-1 with bitset adjacency rows.
// No self-loops; add_edge is idempotent.
class Graph {
public:
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return edge_count_; }
    int row_words() const { return words_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (has_edge(u, v)) return;
        mutable_row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
        mutable_row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
        ++edge_count_;
    }

    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }

    // Visits edges as (u, v) with u < v, ascending lexicographically.
    template <typename F>
    void for_each_edge(F&& f) const {
        for (int u = 0; u < n_; ++u) {
            const std::uint64_t* r = row(u);
            for (int w = u >> 6; w < words_; ++w) {
                std::uint64_t bits = r[w];
                if (w == (u >> 6)) bits &= ~((std::uint64_t{2} << (u & 63)) - 1);
                while (bits) {
                    const int v = (w << 6) + std::countr_zero(bits);
                    bits &= bits - 1;
                    f(u, v);
                }
            }
        }
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex id out of range");
    }

    static Graph path(int n) {
        Graph g(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    std::uint64_t* mutable_row(int u) { return bits_.data() + static_cast<std::size_t>(u) * words_; }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
    std::int64_t edge_count_ = 0;
};

// True iff no edge of g has both endpoints in candidate.
bool verify_independent(const Graph& g, std::span<const int> candidate);

}  // namespace planted
