#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

// graph6: byte n+63, then the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ...
// packed six bits per byte (most significant first), each byte offset by 63.
std::string emit_graph6(const Graph& g);

// Strict decoder. Throws BadChar, TruncatedBits, TrailingGarbage or
// OversizeGraph.
Graph parse_graph6(std::string_view line);

// One graph per non-empty line; a leading ">>graph6<<" header is accepted.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace recon
