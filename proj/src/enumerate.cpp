#include "dso/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

#include "dso/graph6.hpp"

namespace dso {

namespace {

// Minimizes the column-major upper-triangle bit string over all vertex
// orderings whose degree sequence is ascending. Column j (position j vs
// positions 0..j-1) is packed into a uint64 with the bit for position 0
// most significant, so per-column numeric order equals bit-string order.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : n_(g.order()) {
        for (int v = 0; v < n_; ++v) {
            adj_[v] = g.neighbors(v);
            deg_[v] = g.degree(v);
        }
        std::array<int, Graph::max_order> order{};
        for (int v = 0; v < n_; ++v) order[v] = v;
        std::sort(order.begin(), order.begin() + n_,
                  [&](int a, int b) { return deg_[a] < deg_[b]; });
        for (int i = 0; i < n_; ++i) target_deg_[i] = deg_[order[i]];

        // Twin classes: vertices whose neighborhoods agree outside the pair
        // are interchangeable by an automorphism, so only one per class is
        // tried at any search position.
        for (int v = 0; v < n_; ++v) twin_class_[v] = v;
        for (int u = 0; u < n_; ++u) {
            if (twin_class_[u] != u) continue;
            for (int v = u + 1; v < n_; ++v) {
                if (twin_class_[v] != v || deg_[u] != deg_[v]) continue;
                const std::uint64_t pair_bits =
                    (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
                if (((adj_[u] ^ adj_[v]) & ~pair_bits) == 0) twin_class_[v] = u;
            }
        }
    }

    std::array<int, Graph::max_order> run() {
        have_best_ = false;
        descend(0);
        return best_perm_;
    }

private:
    enum class Cmp { Equal, Less };

    void descend(int j) { descend(j, Cmp::Equal); }

    void descend(int j, Cmp cmp) {
        if (j == n_) {
            if (!have_best_ || cmp == Cmp::Less) {
                best_cols_ = cur_cols_;
                best_perm_ = perm_;
                have_best_ = true;
            }
            return;
        }

        // Candidates of the required degree, one per twin class, cheapest
        // column first so the search reaches small bit strings early.
        std::array<std::pair<std::uint64_t, int>, Graph::max_order> cand{};
        int ncand = 0;
        std::uint64_t seen_classes = 0;
        for (int v = 0; v < n_; ++v) {
            if ((used_ >> v) & 1) continue;
            if (deg_[v] != target_deg_[j]) continue;
            const std::uint64_t cls = std::uint64_t{1} << twin_class_[v];
            if (seen_classes & cls) continue;
            seen_classes |= cls;
            std::uint64_t col = 0;
            for (int i = 0; i < j; ++i)
                col = (col << 1) | ((adj_[v] >> perm_[i]) & 1);
            cand[static_cast<std::size_t>(ncand++)] = {col, v};
        }
        std::sort(cand.begin(), cand.begin() + ncand);

        for (int k = 0; k < ncand; ++k) {
            const auto [col, v] = cand[static_cast<std::size_t>(k)];
            Cmp next = cmp;
            if (have_best_ && cmp == Cmp::Equal) {
                if (col > best_cols_[j]) break;  // sorted: the rest only grow
                if (col < best_cols_[j]) next = Cmp::Less;
            }
            perm_[j] = v;
            cur_cols_[j] = col;
            used_ |= std::uint64_t{1} << v;
            descend(j + 1, next);
            used_ &= ~(std::uint64_t{1} << v);
        }
    }

    int n_;
    std::array<std::uint64_t, Graph::max_order> adj_{};
    std::array<int, Graph::max_order> deg_{};
    std::array<int, Graph::max_order> target_deg_{};
    std::array<int, Graph::max_order> twin_class_{};
    std::array<int, Graph::max_order> perm_{};
    std::array<int, Graph::max_order> best_perm_{};
    std::array<std::uint64_t, Graph::max_order> cur_cols_{};
    std::array<std::uint64_t, Graph::max_order> best_cols_{};
    std::uint64_t used_ = 0;
    bool have_best_ = false;
};

Graph relabel(const Graph& g, const std::array<int, Graph::max_order>& perm) {
    const int n = g.order();
    Graph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(perm[i], perm[j])) out.add_edge(i, j);
    return out;
}

Graph graph_from_mask(int n, std::uint64_t mask, int total_bits) {
    Graph g(n);
    int p = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++p)
            if ((mask >> (total_bits - 1 - p)) & 1) g.add_edge(i, j);
    return g;
}

std::uint64_t mask_from_graph(const Graph& g, int total_bits) {
    std::uint64_t mask = 0;
    int p = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i, ++p)
            if (g.adjacent(i, j)) mask |= std::uint64_t{1} << (total_bits - 1 - p);
    return mask;
}

}  // namespace

Graph canonical_form(const Graph& g) {
    if (g.order() <= 1) return g;
    CanonicalSearch search(g);
    return relabel(g, search.run());
}

std::string canonical_code(const Graph& g) { return write_graph6(canonical_form(g)); }

void enumerate_graphs(const EnumerationSpec& spec,
                      const std::function<void(const Graph&)>& yield) {
    if (spec.n < 1 || spec.n > 8)
        throw std::invalid_argument("enumerate_graphs: n must be in [1, 8]");

    const int n = spec.n;
    const int total_bits = n * (n - 1) / 2;

    // Pair-participation masks: deg(v) of a labeled mask via one popcount.
    std::array<std::uint64_t, 8> vmask{};
    {
        int p = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++p) {
                const std::uint64_t bit = std::uint64_t{1} << (total_bits - 1 - p);
                vmask[static_cast<std::size_t>(i)] |= bit;
                vmask[static_cast<std::size_t>(j)] |= bit;
            }
    }

    // A canonical representative always carries an ascending degree
    // sequence, so everything else can be skipped before the full search.
    std::vector<std::uint64_t> reps;
    const std::uint64_t end = std::uint64_t{1} << total_bits;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        bool ascending = true;
        int prev = 0;
        for (int v = 0; v < n; ++v) {
            const int d = __builtin_popcountll(mask & vmask[static_cast<std::size_t>(v)]);
            if (d < prev) {
                ascending = false;
                break;
            }
            prev = d;
        }
        if (!ascending) continue;
        const Graph g = graph_from_mask(n, mask, total_bits);
        if (mask_from_graph(canonical_form(g), total_bits) == mask) reps.push_back(mask);
    }

    std::sort(reps.begin(), reps.end());
    for (std::uint64_t mask : reps) {
        const Graph g = graph_from_mask(n, mask, total_bits);
        if (spec.connected_only && !is_connected(g)) continue;
        yield(g);
    }
}

std::vector<Graph> enumerate_graphs_vec(const EnumerationSpec& spec) {
    std::vector<Graph> out;
    enumerate_graphs(spec, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace dso
