#include <algorithm>
#include <map>
#include <set>

#include "recon/graph6.hpp"
#include "reconstruct_internal.hpp"

namespace recon {

namespace {

constexpr const char* kG2Tf = "triangle-free, diameter 2, at least 4 edges";
constexpr const char* kG3Tf = "triangle-free in G3";

nlohmann::json pairs_json(const PHSet& p) {
    nlohmann::json out = nlohmann::json::array();
    for (auto [a, b] : p.pairs) out.push_back({a, b});
    return out;
}

Graph with_edge(const Graph& h, Vertex a, Vertex b) {
    Graph g = h;
    g.add_edge(a, b);
    return g;
}

// Outcome of examining one edge-card. A tie leaves `result` empty and lists
// the cards worth trying next.
struct Attempt {
    std::optional<ReconstructionResult> result;
    std::vector<CanonicalCert> follow_up;
};

Attempt attempt_card(const EdgeDeck& ed, std::size_t index) {
    const Graph h = ed.cards[index].graph();
    const PHSet p = compute_ph(h);
    ReconstructionResult r;
    r.witness["card"] = ed.cards[index].bytes();
    r.witness["card_index"] = index;
    r.witness["ph"] = pairs_json(p);

    if (p.size() == 0) fail(ErrorKind::HypothesisViolation, "edge-card " + ed.cards[index].bytes() + " has no far pair");
    if (p.size() == 1) {
        r.route = Route::THM10_P1;
        r.graph = with_edge(h, p.pairs[0].first, p.pairs[0].second);
        return {std::move(r), {}};
    }

    std::map<Vertex, int> count;
    for (auto [a, b] : p.pairs) {
        ++count[a];
        ++count[b];
    }
    std::vector<Vertex> heavy;
    for (auto [v, c] : count)
        if (c >= 2) heavy.push_back(v);

    if (p.size() >= 3) {
        r.route = Route::THM10_K3;
        if (heavy.size() == 2) {
            r.graph = with_edge(h, heavy[0], heavy[1]);
            r.witness["joined"] = heavy;
            return {std::move(r), {}};
        }
        if (heavy.size() != 1) fail(ErrorKind::HypothesisViolation, "far pairs have more than two shared vertices");
        const Vertex x = heavy[0];
        VertexSet partners;
        for (auto [a, b] : p.pairs) {
            if (a != x && b != x) fail(ErrorKind::HypothesisViolation, "a far pair misses the shared vertex");
            partners.insert(a == x ? b : a);
        }
        for (Vertex c : partners) {
            const VertexSet leaves = partners - VertexSet::single(c);
            if (!leaves.subset_of(h.neighbors(c)) || !is_independent(h, leaves)) continue;
            r.graph = with_edge(h, x, c);
            r.witness["joined"] = {x, c};
            r.witness["star_center"] = c;
            return {std::move(r), {}};
        }
        fail(ErrorKind::HypothesisViolation, "far-pair partners do not induce a star");
    }

    // Two pairs {u, v1}, {u, v2} with v1 v2 an edge of the card.
    if (heavy.size() != 1) fail(ErrorKind::HypothesisViolation, "the two far pairs share no vertex");
    const Vertex u = heavy[0];
    const Vertex v1 = p.pairs[0].first == u ? p.pairs[0].second : p.pairs[0].first;
    const Vertex v2 = p.pairs[1].first == u ? p.pairs[1].second : p.pairs[1].first;
    if (!h.adjacent(v1, v2)) fail(ErrorKind::HypothesisViolation, "far-pair partners are not adjacent");
    r.witness["shared"] = u;

    const std::pair<int, int> ends = edge_endpoint_degrees(ed, index);
    r.witness["endpoint_degrees"] = {ends.first, ends.second};
    auto matches = [&](Vertex v) {
        std::pair<int, int> got{h.degree(u) + 1, h.degree(v) + 1};
        if (got.first > got.second) std::swap(got.first, got.second);
        return got == ends;
    };
    const bool m1 = matches(v1);
    const bool m2 = matches(v2);
    if (!m1 && !m2) fail(ErrorKind::HypothesisViolation, "no far pair has the deleted edge's endpoint degrees");
    if (m1 != m2) {
        const Vertex v = m1 ? v1 : v2;
        r.route = Route::THM10_P2_DEGREE;
        r.graph = with_edge(h, u, v);
        r.witness["joined"] = {u, v};
        return {std::move(r), {}};
    }

    // Degrees tie: the card deleting v1 v2 is one of these two.
    Attempt tie;
    for (Vertex v : {v1, v2}) {
        Graph g = with_edge(h, u, v);
        g.remove_edge(v1, v2);
        tie.follow_up.push_back(canonical_form(g));
    }
    return tie;
}

}  // namespace

bool PHSet::contains(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(pairs.begin(), pairs.end(), std::pair<Vertex, Vertex>{a, b});
}

PHSet compute_ph(const Graph& h) {
    const DistanceMatrix dist = distance_matrix(h);
    PHSet p;
    for (Vertex a = 0; a < h.order(); ++a)
        for (Vertex b = a + 1; b < h.order(); ++b)
            if (dist(a, b) >= 3) p.pairs.emplace_back(a, b);
    return p;
}

ReconstructionResult edge_reconstruct_g2_tf(const EdgeDeck& ed, const ReconstructOptions& options,
                                             std::optional<std::size_t> start_card) {
    detail::prevalidate(ed, in_class_g2_tf_edge, options, kG2Tf);
    if (ed.cards.size() < 4) fail(ErrorKind::HypothesisViolation, "fewer than 4 edges");
    const std::size_t start = start_card.value_or(0);
    if (start >= ed.cards.size()) fail(ErrorKind::MalformedDeck, "starting card out of range");

    std::vector<std::size_t> queue{start};
    std::set<CanonicalCert> seen;
    auto index_of = [&](const CanonicalCert& c) -> std::optional<std::size_t> {
        auto it = std::lower_bound(ed.cards.begin(), ed.cards.end(), c);
        if (it == ed.cards.end() || *it != c) return std::nullopt;
        return static_cast<std::size_t>(it - ed.cards.begin());
    };
    nlohmann::json tied = nlohmann::json::array();
    std::size_t next_scan = 0;

    while (true) {
        std::optional<std::size_t> index;
        while (!queue.empty() && !index) {
            const std::size_t i = queue.front();
            queue.erase(queue.begin());
            if (!seen.count(ed.cards[i])) index = i;
        }
        while (!index && next_scan < ed.cards.size()) {
            if (!seen.count(ed.cards[next_scan])) index = next_scan;
            ++next_scan;
        }
        if (!index) break;
        seen.insert(ed.cards[*index]);

        Attempt a = attempt_card(ed, *index);
        if (a.result) {
            ReconstructionResult r = std::move(*a.result);
            r.witness["tied_cards"] = tied;
            detail::postvalidate(r, ed, in_class_g2_tf_edge, kG2Tf);
            return r;
        }
        tied.push_back(ed.cards[*index].bytes());
        for (const CanonicalCert& c : a.follow_up)
            if (auto i = index_of(c)) queue.push_back(*i);
    }

    // Every card ties on degrees, which forces a bipartite source graph.
    const std::vector<Graph> found = oracle_edge_reconstruct(ed, {options.oracle_cap, true});
    if (found.size() != 1) {
        fail(found.empty() ? ErrorKind::HypothesisViolation : ErrorKind::NonUnique,
             std::to_string(found.size()) + " bipartite graphs have this edge-deck");
    }
    ReconstructionResult r;
    r.route = Route::THM10_P2_BIPARTITE_FALLBACK;
    r.graph = found.front();
    r.witness["tied_cards"] = tied;
    detail::postvalidate(r, ed, in_class_g2_tf_edge, kG2Tf);
    return r;
}

ReconstructionResult edge_reconstruct_g3_tf(const EdgeDeck& ed, const ReconstructOptions& options) {
    // The deck comes from the unique graph with this edge-deck.
    const std::vector<Graph> found = oracle_edge_reconstruct(ed, {options.oracle_cap, false});
    if (found.empty()) fail(ErrorKind::HypothesisViolation, "no graph has this edge-deck");
    if (found.size() > 1) fail(ErrorKind::HypothesisViolation, "several graphs share this edge-deck");
    const Graph& source = found.front();
    if (!in_class_g3_tf(source)) {
        fail(ErrorKind::HypothesisViolation, "edge-deck belongs to " + emit_graph6(source) + ", which is not " + kG3Tf);
    }
    const Deck d = compute_deck(source);
    const int kappa = vertex_connectivity(source);

    ReconstructOptions inner = options;
    inner.trusted = true;
    ReconstructionResult r;
    if (kappa == 1) {
        r = reconstruct_g3_tf_k1(d, inner);
    } else if (kappa == 2) {
        const std::vector<Graph> candidates = oracle_reconstruct(d, {options.oracle_cap, false});
        if (candidates.size() != 1) fail(ErrorKind::NonUnique, "deck does not determine a unique graph");
        r.route = Route::ORACLE;
        r.graph = candidates.front();
    } else {
        r = reconstruct_g3_tf_k3plus(d, inner);
    }
    if (!is_isomorphic(r.graph, source)) {
        fail(ErrorKind::ConsistencyFailure, "deck route disagrees with the edge-deck oracle");
    }
    nlohmann::json witness;
    witness["connectivity"] = kappa;
    witness["deck_route"] = r.witness;
    r.witness = std::move(witness);
    detail::postvalidate(r, ed, in_class_g3_tf, kG3Tf);
    return r;
}

}  // namespace recon
