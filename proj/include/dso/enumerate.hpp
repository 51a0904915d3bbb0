#ifndef DSO_ENUMERATE_HPP
#define DSO_ENUMERATE_HPP

#include <functional>
#include <string>
#include <vector>

#include "dso/graph.hpp"

namespace dso {

/// Canonically relabeled copy of g: vertices ordered by ascending degree,
/// ties broken by a permutation search minimizing the upper-triangle
/// adjacency bit string (graph6 bit order). Isomorphic graphs map to equal
/// results. Intended for n <= 8; larger orders work but may be slow.
Graph canonical_form(const Graph& g);

/// graph6 encoding of canonical_form(g); equal iff the graphs are
/// isomorphic, and lexicographic order on codes is the enumeration order.
std::string canonical_code(const Graph& g);

struct EnumerationSpec {
    int n = 1;                   // 1..8
    bool connected_only = false;
};

/// Streams exactly one representative per isomorphism class of simple
/// graphs on spec.n vertices, sorted by canonical code. Implemented as a
/// scan of all labeled upper-triangle bitmasks with canonical-form dedup.
void enumerate_graphs(const EnumerationSpec& spec,
                      const std::function<void(const Graph&)>& yield);

std::vector<Graph> enumerate_graphs_vec(const EnumerationSpec& spec);

}  // namespace dso

#endif
