#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

// graph6 bytes of the canonically relabeled graph. Equal certificates mean
// isomorphic graphs and vice versa.
class CanonicalCert {
public:
    CanonicalCert() = default;
    explicit CanonicalCert(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const { return bytes_; }
    int order() const { return bytes_.empty() ? 0 : static_cast<unsigned char>(bytes_[0]) - 63; }
    Graph graph() const;  // the canonical representative

    friend bool operator==(const CanonicalCert&, const CanonicalCert&) = default;
    friend auto operator<=>(const CanonicalCert&, const CanonicalCert&) = default;

private:
    std::string bytes_;
};

struct CanonicalLabeling {
    std::vector<Vertex> order;  // canonical position -> original vertex
    Graph graph;                // graph.adjacent(i, j) == g.adjacent(order[i], order[j])
    CanonicalCert cert;
};

// Equitable partition refinement with individualization, searching for the
// lexicographically smallest graph6 bit string over the leaves; leaves are
// pruned with automorphisms discovered along the way.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalCert canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace recon

template <>
struct std::hash<recon::CanonicalCert> {
    std::size_t operator()(const recon::CanonicalCert& c) const noexcept {
        return std::hash<std::string>{}(c.bytes());
    }
};
