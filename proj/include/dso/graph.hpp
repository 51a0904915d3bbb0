#ifndef DSO_GRAPH_HPP
#define DSO_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dso {

/// Simple undirected graph on at most 62 vertices (the graph6 single-byte
/// range). Adjacency is stored as one 64-bit neighbor mask per vertex;
/// vertices are 0..n-1, self-loops are rejected. Logically immutable once
/// built: every query is const and safe to call concurrently.
class Graph {
public:
    static constexpr int max_order = 62;

    Graph() = default;

    explicit Graph(int n) {
        if (n < 0 || n > max_order)
            throw std::invalid_argument("Graph: order must be in [0, 62], got " +
                                        std::to_string(n));
        n_ = n;
        adj_.assign(static_cast<std::size_t>(n), 0);
    }

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }

    /// Edge count (popcount over the neighbor masks).
    int size() const {
        int twice = 0;
        for (std::uint64_t row : adj_) twice += __builtin_popcountll(row);
        return twice / 2;
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    std::uint64_t neighbors(int u) const {
        check_vertex(u);
        return adj_[static_cast<std::size_t>(u)];
    }

    int degree(int u) const {
        check_vertex(u);
        return __builtin_popcountll(adj_[static_cast<std::size_t>(u)]);
    }

    /// Visits each edge once as (u, v) with u < v, in ascending order.
    template <typename F>
    void for_each_edge(F&& f) const {
        for (int u = 0; u < n_; ++u) {
            std::uint64_t rest = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
            while (rest) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                f(u, v);
            }
        }
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for_each_edge([&](int u, int v) { out.emplace_back(u, v); });
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

struct DegreeSummary {
    std::vector<int> degrees;
    int min_degree = 0;  // delta; 0 when the graph is edgeless or empty
    int max_degree = 0;  // Delta
};

DegreeSummary degree_summary(const Graph& g);

/// True iff g has exactly one connected component. The empty graph (n = 0)
/// counts as connected; an edgeless graph with n > 1 does not.
bool is_connected(const Graph& g);

/// Strongest applicable structural label, checked in this order.
enum class DegreeProfile {
    Empty,                 // m = 0
    Matching,              // every degree <= 1, m >= 1
    Regular,               // delta = Delta >= 1
    AllComponentsRegular,  // d_u = d_v on every edge, but not globally regular
    Other,
};

DegreeProfile degree_profile(const Graph& g);

std::string to_string(DegreeProfile p);

}  // namespace dso

#endif
