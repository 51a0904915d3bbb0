#include "dso/graph6.hpp"

namespace dso {

namespace {
constexpr int kBias = 63;
constexpr int kMaxByte = 126;
}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw Graph6Error(0, "empty string");

    const unsigned char size_byte = static_cast<unsigned char>(line[0]);
    if (size_byte < kBias || size_byte > kMaxByte)
        throw Graph6Error(0, "size byte out of printable range");
    if (size_byte == kMaxByte)
        throw Graph6Error(0, "multi-byte order encoding is not supported (n > 62)");

    const int n = size_byte - kBias;
    Graph g(n);

    const std::size_t pair_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body_bytes = (pair_bits + 5) / 6;
    if (line.size() < 1 + body_bytes)
        throw Graph6Error(line.size(), "truncated: expected " +
                                           std::to_string(1 + body_bytes) + " bytes");
    if (line.size() > 1 + body_bytes)
        throw Graph6Error(1 + body_bytes, "trailing garbage after adjacency data");

    // Bits run column-major over the upper triangle: x(0,1), x(0,2), x(1,2),
    // x(0,3), ... with the first bit of each byte in the 32s place.
    std::size_t bit = 0;
    int col_i = 0, col_j = 1;
    for (std::size_t b = 0; b < body_bytes; ++b) {
        const unsigned char c = static_cast<unsigned char>(line[1 + b]);
        if (c < kBias || c > kMaxByte)
            throw Graph6Error(1 + b, "adjacency byte out of printable range");
        const int v = c - kBias;
        for (int k = 5; k >= 0; --k, ++bit) {
            const bool set = (v >> k) & 1;
            if (bit < pair_bits) {
                if (set) g.add_edge(col_i, col_j);
                if (++col_i == col_j) {
                    col_i = 0;
                    ++col_j;
                }
            } else if (set) {
                throw Graph6Error(1 + b, "nonzero padding bits");
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > Graph::max_order)
        throw std::invalid_argument("write_graph6: order " + std::to_string(n) +
                                    " exceeds the single-byte graph6 range");
    std::string out;
    out.push_back(static_cast<char>(n + kBias));

    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

void for_each_graph6_line(std::istream& in,
                          const std::function<void(std::size_t, std::string_view)>& f) {
    static constexpr std::string_view header = ">>graph6<<";
    std::string line;
    std::size_t lineno = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view v(line);
        if (!v.empty() && v.back() == '\r') v.remove_suffix(1);
        if (first && v.substr(0, header.size()) == header) v.remove_prefix(header.size());
        first = false;
        if (v.empty()) continue;
        f(lineno, v);
    }
}

}  // namespace dso
