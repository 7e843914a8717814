#include "recon/deck.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>

#include "recon/errors.hpp"
#include "recon/graph6.hpp"

namespace recon {

namespace {

template <typename Prov>
void sort_with_provenance(std::vector<CanonicalCert>& cards, std::vector<Prov>& prov) {
    std::vector<std::size_t> idx(cards.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return cards[a] < cards[b]; });
    std::vector<CanonicalCert> sorted_cards;
    std::vector<Prov> sorted_prov;
    sorted_cards.reserve(cards.size());
    sorted_prov.reserve(prov.size());
    for (std::size_t i : idx) {
        sorted_cards.push_back(std::move(cards[i]));
        sorted_prov.push_back(prov[i]);
    }
    cards = std::move(sorted_cards);
    prov = std::move(sorted_prov);
}

std::uint64_t fnv1a(const std::vector<CanonicalCert>& cards, int n) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](unsigned char byte) {
        h ^= byte;
        h *= 0x100000001b3ull;
    };
    mix(static_cast<unsigned char>(n));
    for (const CanonicalCert& c : cards) {
        for (char ch : c.bytes()) mix(static_cast<unsigned char>(ch));
        mix('\n');
    }
    return h;
}

}  // namespace

Deck compute_deck(const Graph& g) {
    Deck d;
    d.n = g.order();
    for (Vertex v = 0; v < g.order(); ++v) {
        d.cards.push_back(canonical_form(delete_vertex(g, v)));
        d.provenance.push_back(v);
    }
    sort_with_provenance(d.cards, d.provenance);
    return d;
}

EdgeDeck compute_edge_deck(const Graph& g) {
    EdgeDeck ed;
    ed.n = g.order();
    for (auto [u, v] : g.edges()) {
        ed.cards.push_back(canonical_form(delete_edge(g, u, v)));
        ed.provenance.emplace_back(u, v);
    }
    sort_with_provenance(ed.cards, ed.provenance);
    return ed;
}

bool decks_equal(const Deck& a, const Deck& b) { return a.n == b.n && a.cards == b.cards; }

bool decks_equal(const EdgeDeck& a, const EdgeDeck& b) { return a.n == b.n && a.cards == b.cards; }

std::uint64_t deck_digest(const Deck& d) { return fnv1a(d.cards, d.n); }

std::uint64_t deck_digest(const EdgeDeck& d) { return fnv1a(d.cards, d.n) ^ 0x9e3779b97f4a7c15ull; }

int reconstruct_edge_count(const Deck& d) {
    if (d.n < 3) fail(ErrorKind::MalformedDeck, "edge count needs at least 3 vertices");
    long long total = 0;
    for (const CanonicalCert& c : d.cards) total += c.graph().size();
    if (total % (d.n - 2) != 0) {
        fail(ErrorKind::MalformedDeck, "card edge total " + std::to_string(total) + " not divisible by " +
                                           std::to_string(d.n - 2));
    }
    return static_cast<int>(total / (d.n - 2));
}

int deleted_vertex_degree(const Deck& d, std::size_t card_index) {
    if (card_index >= d.cards.size()) fail(ErrorKind::MalformedDeck, "card index out of range");
    return reconstruct_edge_count(d) - d.cards[card_index].graph().size();
}

long long count_embeddings(const Graph& f, const Graph& g) {
    const int k = f.order();
    if (k > g.order()) return 0;
    std::vector<Vertex> image(k, -1);
    long long total = 0;
    VertexSet used;
    auto place = [&](auto&& self, int i) -> void {
        if (i == k) {
            ++total;
            return;
        }
        for (Vertex w = 0; w < g.order(); ++w) {
            if (used.contains(w)) continue;
            bool ok = true;
            for (Vertex j : f.neighbors(i)) {
                if (j < i && !g.adjacent(image[j], w)) { ok = false; break; }
            }
            if (!ok) continue;
            image[i] = w;
            used.insert(w);
            self(self, i + 1);
            used.erase(w);
        }
    };
    place(place, 0);
    return total;
}

long long count_subgraph_copies(const Graph& f, const Graph& g) {
    return count_embeddings(f, g) / count_embeddings(f, f);
}

long long kelly_count(const Deck& d, const Graph& f) {
    if (f.order() >= d.n) fail(ErrorKind::NotProperSubgraph, "pattern must have fewer vertices than the source");
    long long total = 0;
    for (const CanonicalCert& c : d.cards) total += count_subgraph_copies(f, c.graph());
    const int divisor = d.n - f.order();
    if (total % divisor != 0) {
        fail(ErrorKind::MalformedDeck, "card copy total not divisible by " + std::to_string(divisor));
    }
    return total / divisor;
}

std::pair<int, int> edge_endpoint_degrees(const EdgeDeck& ed, std::size_t card_index) {
    if (card_index >= ed.cards.size()) fail(ErrorKind::MalformedDeck, "card index out of range");
    const Graph h = ed.cards[card_index].graph();
    std::optional<std::pair<int, int>> found;
    for (Vertex x = 0; x < h.order(); ++x) {
        for (Vertex y = x + 1; y < h.order(); ++y) {
            if (h.adjacent(x, y)) continue;
            Graph candidate = h;
            candidate.add_edge(x, y);
            if (!decks_equal(compute_edge_deck(candidate), ed)) continue;
            std::pair<int, int> degrees{candidate.degree(x), candidate.degree(y)};
            if (degrees.first > degrees.second) std::swap(degrees.first, degrees.second);
            if (found && *found != degrees) {
                fail(ErrorKind::AmbiguousEndpoints, "completions of card " + ed.cards[card_index].bytes() +
                                                        " disagree on endpoint degrees");
            }
            found = degrees;
        }
    }
    if (!found) fail(ErrorKind::NoCandidate, "no completion of card " + ed.cards[card_index].bytes() + " matches");
    return *found;
}

void write_deck(std::ostream& out, const Deck& d) {
    out << "n=" << d.n << '\n';
    for (const CanonicalCert& c : d.cards) out << c.bytes() << '\n';
}

void write_edge_deck(std::ostream& out, const EdgeDeck& ed) {
    out << "en=" << ed.n << '\n';
    for (const CanonicalCert& c : ed.cards) out << c.bytes() << '\n';
}

DeckFile read_deck_stream(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) fail(ErrorKind::ParseError, "deck file is empty");

    DeckFile file;
    const std::string& header = lines.front();
    std::string number;
    if (header.rfind("en=", 0) == 0) {
        file.kind = DeckFile::Kind::Edge;
        number = header.substr(3);
    } else if (header.rfind("n=", 0) == 0) {
        number = header.substr(2);
    } else {
        fail(ErrorKind::ParseError, "deck header must be n=<int> or en=<int>");
    }
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(number, &used);
        if (used != number.size()) throw std::invalid_argument(number);
    } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "bad deck header '" + header + "'");
    }
    if (n < 1 || n > kMaxVertices) fail(ErrorKind::OversizeGraph, "deck order " + std::to_string(n) + " unsupported");

    std::vector<CanonicalCert> cards;
    for (std::size_t i = 1; i < lines.size(); ++i) cards.push_back(canonical_form(parse_graph6(lines[i])));
    std::sort(cards.begin(), cards.end());

    if (file.kind == DeckFile::Kind::Vertex) {
        if (static_cast<int>(cards.size()) != n) {
            fail(ErrorKind::MalformedDeck, "deck of order " + std::to_string(n) + " has " +
                                               std::to_string(cards.size()) + " cards");
        }
        for (const CanonicalCert& c : cards) {
            if (c.order() != n - 1) fail(ErrorKind::MalformedDeck, "card " + c.bytes() + " has the wrong order");
        }
        file.deck.n = n;
        file.deck.cards = std::move(cards);
    } else {
        if (cards.empty()) fail(ErrorKind::MalformedDeck, "edge-deck has no cards");
        for (const CanonicalCert& c : cards) {
            if (c.order() != n) fail(ErrorKind::MalformedDeck, "edge-card " + c.bytes() + " has the wrong order");
        }
        file.edge_deck.n = n;
        file.edge_deck.cards = std::move(cards);
    }
    return file;
}

DeckFile read_deck_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    return read_deck_stream(in);
}

}  // namespace recon
