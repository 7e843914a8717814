#include "recon/graph6.hpp"

#include <fstream>
#include <istream>

#include "recon/errors.hpp"

namespace recon {

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.reserve(1 + (n * (n - 1) / 2 + 5) / 6);
    out.push_back(static_cast<char>(n + 63));
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_graph6(std::string_view line) {
    if (line.empty()) fail(ErrorKind::TruncatedBits, "empty graph6 line");
    for (char c : line) {
        const auto byte = static_cast<unsigned char>(c);
        if (byte < 63 || byte > 126) {
            fail(ErrorKind::BadChar, "graph6 byte " + std::to_string(byte) + " outside 63..126");
        }
    }
    const int n = static_cast<unsigned char>(line[0]) - 63;
    if (n == 63) fail(ErrorKind::OversizeGraph, "graph6 orders above 62 are not supported");
    if (n > kMaxVertices) {
        fail(ErrorKind::OversizeGraph, "graph order " + std::to_string(n) + " exceeds " +
                                           std::to_string(kMaxVertices));
    }
    const int bits = n * (n - 1) / 2;
    const std::size_t need = 1 + static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() < need) fail(ErrorKind::TruncatedBits, "graph6 line too short for order " + std::to_string(n));
    if (line.size() > need) fail(ErrorKind::TrailingGarbage, "graph6 line has trailing bytes");

    Graph g(n);
    int k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = static_cast<unsigned char>(line[1 + k / 6]) - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (k % 6 != 0) {
        const int byte = static_cast<unsigned char>(line.back()) - 63;
        if ((byte & ((1 << (6 - k % 6)) - 1)) != 0) {
            fail(ErrorKind::TrailingGarbage, "graph6 padding bits are not zero");
        }
    }
    return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (first && line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        first = false;
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    return read_graph6_stream(in);
}

}  // namespace recon
