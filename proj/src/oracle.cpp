#include "recon/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "recon/errors.hpp"

namespace recon {

namespace {

void check_cap(int n, const OracleOptions& options) {
    if (n > options.cap) {
        fail(ErrorKind::CapExceeded, "oracle search on " + std::to_string(n) + " vertices exceeds cap " +
                                         std::to_string(options.cap));
    }
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<Graph> sorted_values(std::map<CanonicalCert, Graph>& found) {
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [cert, g] : found) out.push_back(std::move(g));
    return out;
}

void offer(std::map<CanonicalCert, Graph>& found, const Graph& h) {
    CanonicalLabeling lab = canonical_labeling(h);
    found.emplace(std::move(lab.cert), std::move(lab.graph));
}

}  // namespace

std::vector<Graph> oracle_reconstruct(const Deck& d, const OracleOptions& options) {
    check_cap(d.n, options);
    std::map<CanonicalCert, Graph> found;
    const int n = d.n;
    if (static_cast<int>(d.cards.size()) != n || n < 1) return {};

    if (n <= 2) {
        // No edge-count formula below three vertices; try every graph.
        const int pairs = n * (n - 1) / 2;
        for (int mask = 0; mask < (1 << pairs); ++mask) {
            Graph h(n);
            if (mask) h.add_edge(0, 1);
            if (options.bipartite_only && !is_bipartite(h)) continue;
            if (decks_equal(compute_deck(h), d)) offer(found, h);
        }
        return sorted_values(found);
    }

    int m = 0;
    try {
        m = reconstruct_edge_count(d);
    } catch (const Error&) {
        return {};
    }
    std::vector<Graph> cards;
    std::vector<int> degrees;
    for (const CanonicalCert& c : d.cards) {
        cards.push_back(c.graph());
        degrees.push_back(m - cards.back().size());
        if (degrees.back() < 0 || degrees.back() > n - 1) return {};
    }
    std::vector<int> target = degrees;
    std::sort(target.begin(), target.end(), std::greater<>());

    std::size_t pick = 0;
    for (std::size_t i = 1; i < cards.size(); ++i) {
        if (binomial(n - 1, degrees[i]) < binomial(n - 1, degrees[pick])) pick = i;
    }
    const Graph& base = cards[pick];
    if (options.bipartite_only && !is_bipartite(base)) return {};
    const int k = degrees[pick];

    // Gosper's hack over k-subsets of the card's n-1 vertices.
    const std::uint32_t limit = 1u << (n - 1);
    std::uint32_t s = k == 0 ? 0u : (1u << k) - 1u;
    while (true) {
        const Graph h = add_vertex(base, VertexSet(s));
        if (h.degree_sequence() == target && (!options.bipartite_only || is_bipartite(h)) &&
            decks_equal(compute_deck(h), d)) {
            offer(found, h);
        }
        if (k == 0) break;
        const std::uint32_t c = s & (~s + 1u);
        const std::uint32_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
        if (s >= limit) break;
    }
    return sorted_values(found);
}

std::vector<Graph> oracle_edge_reconstruct(const EdgeDeck& ed, const OracleOptions& options) {
    check_cap(ed.n, options);
    if (ed.cards.empty()) fail(ErrorKind::MalformedDeck, "edge-deck has no cards");
    std::map<CanonicalCert, Graph> found;
    const Graph base = ed.cards.front().graph();
    for (Vertex x = 0; x < base.order(); ++x) {
        for (Vertex y = x + 1; y < base.order(); ++y) {
            if (base.adjacent(x, y)) continue;
            Graph h = base;
            h.add_edge(x, y);
            if (options.bipartite_only && !is_bipartite(h)) continue;
            if (decks_equal(compute_edge_deck(h), ed)) offer(found, h);
        }
    }
    return sorted_values(found);
}

}  // namespace recon
