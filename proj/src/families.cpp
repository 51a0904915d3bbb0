#include "dso/families.hpp"

#include <stdexcept>
#include <string>

namespace dso {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("make_family: " + what);
}

}  // namespace

Graph complete_graph(int n) {
    require(n >= 0, "complete graph needs n >= 0");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) {
    require(n >= 0, "empty graph needs n >= 0");
    return Graph(n);
}

Graph star(int n) {
    require(n >= 1, "star needs n >= 1");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph path(int n) {
    require(n >= 1, "path needs n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "complete bipartite needs a, b >= 1");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph matching(int m) {
    require(m >= 1, "matching needs m >= 1");
    Graph g(2 * m);
    for (int k = 0; k < m; ++k) g.add_edge(2 * k, 2 * k + 1);
    return g;
}

Graph hypercube(int d) {
    require(d >= 0 && d <= 5, "hypercube needs 0 <= d <= 5 (order <= 62)");
    const int n = 1 << d;
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int k = 0; k < d; ++k) {
            const int v = u ^ (1 << k);
            if (u < v) g.add_edge(u, v);
        }
    return g;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    for (const Graph& p : parts) n += p.order();
    Graph g(n);
    int offset = 0;
    for (const Graph& p : parts) {
        p.for_each_edge([&](int u, int v) { g.add_edge(offset + u, offset + v); });
        offset += p.order();
    }
    return g;
}

Graph make_family(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    switch (spec.kind) {
        case K::Complete: return complete_graph(spec.n);
        case K::Empty: return empty_graph(spec.n);
        case K::Star: return star(spec.n);
        case K::Path: return path(spec.n);
        case K::Cycle: return cycle(spec.n);
        case K::CompleteBipartite: return complete_bipartite(spec.a, spec.b);
        case K::Matching: return matching(spec.m);
        case K::Hypercube: return hypercube(spec.d);
        case K::DisjointUnion: {
            std::vector<Graph> parts;
            parts.reserve(spec.parts.size());
            for (const FamilySpec& p : spec.parts) parts.push_back(make_family(p));
            return disjoint_union(parts);
        }
    }
    throw std::invalid_argument("make_family: unknown family kind");
}

}  // namespace dso
