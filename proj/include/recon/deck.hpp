#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recon/canon.hpp"
#include "recon/graph.hpp"

namespace recon {

// Multiset of vertex-deleted cards, stored sorted. `provenance[i]` is the
// deleted vertex of card i and is only filled when the deck was computed from
// a known graph.
struct Deck {
    int n = 0;
    std::vector<CanonicalCert> cards;
    std::vector<Vertex> provenance;

    std::size_t size() const { return cards.size(); }
};

// Multiset of edge-deleted cards, stored sorted; provenance as for Deck.
struct EdgeDeck {
    int n = 0;
    std::vector<CanonicalCert> cards;
    std::vector<std::pair<Vertex, Vertex>> provenance;

    std::size_t size() const { return cards.size(); }
};

Deck compute_deck(const Graph& g);
EdgeDeck compute_edge_deck(const Graph& g);

bool decks_equal(const Deck& a, const Deck& b);
bool decks_equal(const EdgeDeck& a, const EdgeDeck& b);

// FNV-1a over the sorted card list. Used to bucket decks, never to decide
// equality.
std::uint64_t deck_digest(const Deck& d);
std::uint64_t deck_digest(const EdgeDeck& d);

// Edge count of the source graph: sum of card edge counts over n-2.
int reconstruct_edge_count(const Deck& d);
// Degree of the vertex deleted to form card `card_index`.
int deleted_vertex_degree(const Deck& d, std::size_t card_index);
// Number of subgraphs (not necessarily induced) of the source isomorphic to f.
long long kelly_count(const Deck& d, const Graph& f);

// Injective maps V(f) -> V(g) sending edges to edges.
long long count_embeddings(const Graph& f, const Graph& g);
// Distinct copies of f in g: embeddings divided by |Aut(f)|.
long long count_subgraph_copies(const Graph& f, const Graph& g);

// Degrees in the source graph of the endpoints of the edge deleted to form
// card `card_index`, found by trying every completion of the card.
std::pair<int, int> edge_endpoint_degrees(const EdgeDeck& ed, std::size_t card_index);

// File formats: header `n=<int>` (deck) or `en=<int>` (edge-deck), then one
// certificate per line.
void write_deck(std::ostream& out, const Deck& d);
void write_edge_deck(std::ostream& out, const EdgeDeck& ed);

struct DeckFile {
    enum class Kind { Vertex, Edge } kind = Kind::Vertex;
    Deck deck;
    EdgeDeck edge_deck;
};
DeckFile read_deck_stream(std::istream& in);
DeckFile read_deck_file(const std::string& path);

}  // namespace recon
