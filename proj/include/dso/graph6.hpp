#ifndef DSO_GRAPH6_HPP
#define DSO_GRAPH6_HPP

#include <cstddef>
#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dso/graph.hpp"

namespace dso {

/// Parse/encode failure; offset is the byte position within the line.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(std::size_t offset, const std::string& what)
        : std::runtime_error("graph6: byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parses one headerless graph6 line (single-byte order, n <= 62).
Graph parse_graph6(std::string_view line);

/// Encodes a graph as a headerless graph6 string.
std::string write_graph6(const Graph& g);

/// Reads graph6 lines from a stream, tolerating an optional ">>graph6<<"
/// header prefix and skipping blank lines. Calls f(line_number, graph6_text)
/// for each graph line; parsing is left to the caller.
void for_each_graph6_line(std::istream& in,
                          const std::function<void(std::size_t, std::string_view)>& f);

}  // namespace dso

#endif
