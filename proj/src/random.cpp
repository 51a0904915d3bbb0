#include "dso/random.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dso {

Graph random_gnp(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("random_gnp: p must lie in [0, 1]");
    Graph g(n);
    SplitMix64 rng(seed);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < p) g.add_edge(i, j);
    return g;
}

Graph random_regular(int n, int d, std::uint64_t seed) {
    if (n < 0 || n > Graph::max_order)
        throw std::invalid_argument("random_regular: n out of range");
    if (d < 0 || d >= std::max(n, 1) || (static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular: infeasible degree spec (need n*d even, d < n)");

    SplitMix64 rng(seed);
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs.push_back(v);

    for (;;) {
        for (std::size_t i = stubs.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
            std::swap(stubs[i - 1], stubs[j]);
        }
        Graph g(n);
        bool ok = true;
        for (std::size_t k = 0; ok && k + 1 < stubs.size(); k += 2) {
            const int u = stubs[k], v = stubs[k + 1];
            if (u == v || g.adjacent(u, v))
                ok = false;
            else
                g.add_edge(u, v);
        }
        if (ok) return g;
    }
}

}  // namespace dso
