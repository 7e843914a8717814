#pragma once

#include <vector>

#include "recon/deck.hpp"
#include "recon/graph.hpp"

namespace recon {

struct OracleOptions {
    int cap = 10;
    // Only 2-colourable candidates are kept.
    bool bipartite_only = false;
};

// Every graph, one per isomorphism class and sorted by certificate, whose
// deck equals d. A source graph H has some card C = H - v with
// deg(v) = m - |E(C)|, so extending the card with the fewest candidate
// neighbourhoods by a new vertex of that degree reaches every H.
std::vector<Graph> oracle_reconstruct(const Deck& d, const OracleOptions& options = {});

// Every graph whose edge-deck equals ed: all completions of one edge-card by
// a single missing edge.
std::vector<Graph> oracle_edge_reconstruct(const EdgeDeck& ed, const OracleOptions& options = {});

}  // namespace recon
