#ifndef DSO_FAMILIES_HPP
#define DSO_FAMILIES_HPP

#include <vector>

#include "dso/graph.hpp"

namespace dso {

// Named equality-case graphs with canonical vertex orderings: star centers
// at vertex 0, paths and cycles in index order.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph star(int n);                       // K_{1,n-1}, n >= 1
Graph path(int n);                       // n >= 1
Graph cycle(int n);                      // n >= 3
Graph complete_bipartite(int a, int b);  // a, b >= 1; part A first
Graph matching(int m);                   // mK_2, m >= 1, 2m vertices
Graph hypercube(int d);                  // Q_d, 0 <= d <= 5

Graph disjoint_union(const std::vector<Graph>& parts);

struct FamilySpec {
    enum class Kind {
        Complete,
        Empty,
        Star,
        Path,
        Cycle,
        CompleteBipartite,
        Matching,
        Hypercube,
        DisjointUnion,
    };

    Kind kind = Kind::Complete;
    int n = 0;  // order for Complete/Empty/Star/Path/Cycle
    int a = 0, b = 0;  // CompleteBipartite parts
    int m = 0;  // Matching edge count
    int d = 0;  // Hypercube dimension
    std::vector<FamilySpec> parts;  // DisjointUnion
};

/// Builds the named graph; throws std::invalid_argument on parameter
/// combinations that do not describe a simple graph.
Graph make_family(const FamilySpec& spec);

}  // namespace dso

#endif
