#include "dso/graph.hpp"

#include <algorithm>

namespace dso {

DegreeSummary degree_summary(const Graph& g) {
    DegreeSummary s;
    s.degrees.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) s.degrees.push_back(g.degree(v));
    if (!s.degrees.empty()) {
        auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
        s.min_degree = *lo;
        s.max_degree = *hi;
    }
    return s;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n == 0) return true;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = __builtin_ctzll(f);
            f &= f - 1;
            next |= g.neighbors(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return seen == all;
}

DegreeProfile degree_profile(const Graph& g) {
    const DegreeSummary s = degree_summary(g);
    if (g.size() == 0) return DegreeProfile::Empty;
    if (s.max_degree <= 1) return DegreeProfile::Matching;
    if (s.min_degree == s.max_degree) return DegreeProfile::Regular;
    // Per-component regularity is equivalent to d_u = d_v across every edge.
    bool edge_local = true;
    g.for_each_edge([&](int u, int v) {
        if (s.degrees[static_cast<std::size_t>(u)] != s.degrees[static_cast<std::size_t>(v)])
            edge_local = false;
    });
    return edge_local ? DegreeProfile::AllComponentsRegular : DegreeProfile::Other;
}

std::string to_string(DegreeProfile p) {
    switch (p) {
        case DegreeProfile::Empty: return "empty";
        case DegreeProfile::Matching: return "matching";
        case DegreeProfile::Regular: return "regular";
        case DegreeProfile::AllComponentsRegular: return "all-components-regular";
        case DegreeProfile::Other: return "other";
    }
    return "other";
}

}  // namespace dso
