#include <algorithm>
#include <map>

#include "recon/decompose.hpp"
#include "recon/graph6.hpp"
#include "reconstruct_internal.hpp"

namespace recon {

using detail::set_json;

namespace {

constexpr const char* kG2Tf3 = "triangle-free, diameter 2, connectivity 3";
constexpr const char* kG3Tf1 = "triangle-free in G3 with connectivity 1";
constexpr const char* kG3Tf3 = "triangle-free in G3 with connectivity >= 3";

struct CardView {
    std::size_t index;
    Graph graph;
    int deleted_degree;
};

std::vector<CardView> distinct_cards(const Deck& d) {
    const int m = reconstruct_edge_count(d);
    std::vector<CardView> out;
    for (std::size_t i : detail::distinct_card_indices(d.cards)) {
        Graph h = d.cards[i].graph();
        const int degree = m - h.size();
        out.push_back({i, std::move(h), degree});
    }
    return out;
}

// Extends card h by the deleted vertex with the given neighbourhood.
Graph reattach(const Graph& h, VertexSet neighbours) { return add_vertex(h, neighbours); }

// Case 3 leaves x1's remaining neighbours on one L-side; try every subset of
// the right size on each side and keep completions reproducing the deck.
std::vector<Graph> case3_completions(const Deck& d, const Graph& h, VertexSet base, const BSetPartition& b, int extra) {
    std::map<CanonicalCert, Graph> found;
    for (VertexSet side : {b.l_x2, b.l_x3}) {
        if (extra > side.size()) continue;
        const std::vector<Vertex> members = side.members();
        const int k = static_cast<int>(members.size());
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            if (std::popcount(mask) != extra) continue;
            VertexSet chosen;
            for (int i = 0; i < k; ++i)
                if ((mask >> i) & 1u) chosen.insert(members[i]);
            Graph g = reattach(h, base | chosen);
            if (decks_equal(compute_deck(g), d)) {
                CanonicalLabeling lab = canonical_labeling(g);
                found.emplace(std::move(lab.cert), std::move(lab.graph));
            }
        }
    }
    std::vector<Graph> out;
    for (auto& [cert, g] : found) out.push_back(std::move(g));
    return out;
}

ReconstructionResult k3_from_card(const Deck& d, const CardView& card) {
    const Graph& h = card.graph;
    std::vector<VertexSet> cuts = cut_sets_of_size(h, 2);
    if (cuts.empty()) fail(ErrorKind::HypothesisViolation, "card has no 2-cut");
    std::sort(cuts.begin(), cuts.end(), [](VertexSet a, VertexSet b) { return a.members() < b.members(); });
    const Vertex x2 = cuts.front().members()[0];
    const Vertex x3 = cuts.front().members()[1];
    const VertexSet pair{x2, x3};
    const ComponentPartition cp = components_after_cut(h, pair);
    if (cp.nontrivial_count() > 1) {
        fail(ErrorKind::HypothesisViolation, "card minus its 2-cut has two nontrivial components");
    }

    ReconstructionResult r;
    r.witness["card"] = d.cards[card.index].bytes();
    r.witness["cut"] = {x2, x3};
    r.witness["deleted_degree"] = card.deleted_degree;
    const VertexSet trivial = cp.trivial_vertices();

    if (cp.nontrivial_count() == 0) {
        r.route = Route::THM4_COMPLETE_BIPARTITE;
        r.graph = reattach(h, h.vertices() - pair);
        r.witness["case"] = "COMPLETE_BIPARTITE";
        return r;
    }

    const int d_c1 = card.deleted_degree - trivial.size();
    const BSetPartition b = b_set_partition(h, x2, x3, d_c1);
    r.witness["case"] = to_string(b.tag);
    r.witness["degree_into_c1"] = d_c1;
    r.witness["c1_1"] = set_json(b.c1_1);
    r.witness["l_x2"] = set_json(b.l_x2);
    r.witness["l_x3"] = set_json(b.l_x3);
    switch (b.tag) {
    case BCase::Case1:
        r.route = Route::THM4_CASE1;
        r.witness["b12"] = set_json(b.b12);
        r.witness["b13"] = set_json(b.b13);
        r.graph = reattach(h, trivial | b.c1_1 | b.b12 | b.b13);
        break;
    case BCase::Case2:
        r.route = Route::THM4_CASE2;
        r.graph = reattach(h, trivial | b.c1_1);
        break;
    case BCase::Case3: {
        r.route = Route::THM4_CASE3;
        const int extra = d_c1 - b.c1_1.size();
        if (extra <= 0) fail(ErrorKind::HypothesisViolation, "x1 has fewer neighbours in C1 than C1(1) holds");
        const std::vector<Graph> found = case3_completions(d, h, trivial | b.c1_1, b, extra);
        r.witness["completions_matching_deck"] = found.size();
        if (found.empty()) fail(ErrorKind::HypothesisViolation, "no case-3 completion reproduces the deck");
        if (found.size() > 1) fail(ErrorKind::NonUnique, "case-3 completions give non-isomorphic graphs with equal decks");
        r.graph = found.front();
        break;
    }
    }
    return r;
}

}  // namespace

ReconstructionResult reconstruct_g2_tf_k3(const Deck& d, const ReconstructOptions& options) {
    detail::prevalidate(d, in_class_g2_tf_k3, options, kG2Tf3);
    if (d.n < 4) fail(ErrorKind::HypothesisViolation, "connectivity 3 needs at least 4 vertices");

    std::vector<CardView> k2_cards;
    for (CardView& c : distinct_cards(d)) {
        if (is_connected(c.graph) && vertex_connectivity(c.graph) == 2) k2_cards.push_back(std::move(c));
    }
    if (k2_cards.empty()) fail(ErrorKind::HypothesisViolation, "no card has connectivity 2");

    const std::size_t runs = options.cross_check_cards ? k2_cards.size() : 1;
    ReconstructionResult primary = k3_from_card(d, k2_cards.front());
    nlohmann::json tags = nlohmann::json::array();
    tags.push_back(primary.witness["case"]);
    const CanonicalCert primary_cert = canonical_form(primary.graph);
    for (std::size_t i = 1; i < runs; ++i) {
        const ReconstructionResult other = k3_from_card(d, k2_cards[i]);
        tags.push_back(other.witness["case"]);
        if (canonical_form(other.graph) != primary_cert) {
            fail(ErrorKind::ConsistencyFailure, "connectivity-2 cards " + d.cards[k2_cards.front().index].bytes() +
                                                    " and " + d.cards[k2_cards[i].index].bytes() +
                                                    " lead to different graphs");
        }
    }
    primary.witness["cards_checked"] = runs;
    primary.witness["case_per_card"] = tags;
    detail::postvalidate(primary, d, in_class_g2_tf_k3, kG2Tf3);
    return primary;
}

ReconstructionResult reconstruct_g3_tf_k1(const Deck& d, const ReconstructOptions& options) {
    detail::prevalidate(d, in_class_g3_tf_k1, options, kG3Tf1);
    if (d.n < 4) fail(ErrorKind::HypothesisViolation, "G3 members have at least 4 vertices");
    const std::vector<CardView> cards = distinct_cards(d);

    auto finish = [&](ReconstructionResult r, const CardView& card) {
        r.witness["card"] = d.cards[card.index].bytes();
        r.witness["deleted_degree"] = card.deleted_degree;
        detail::postvalidate(r, d, in_class_g3_tf_k1, kG3Tf1);
        return r;
    };

    // Case 1: a disconnected card whose only nontrivial component is
    // bipartite with unequal sides. The deleted vertex sees every trivial
    // component and exactly one side.
    for (const CardView& card : cards) {
        const Graph& h = card.graph;
        if (is_connected(h)) continue;
        const ComponentPartition cp = components_after_cut(h, VertexSet{});
        if (cp.nontrivial_count() != 1) continue;
        const auto parts = bipartition(h);
        if (!parts) continue;
        VertexSet c1;
        for (std::size_t i = 0; i < cp.components.size(); ++i)
            if (!cp.trivial[i]) c1 = cp.components[i];
        const VertexSet p = parts->first & c1;
        const VertexSet q = parts->second & c1;
        if (p.size() == q.size()) continue;
        const VertexSet trivial = cp.trivial_vertices();
        const int need = card.deleted_degree - trivial.size();
        VertexSet side;
        if (need == p.size()) side = p;
        else if (need == q.size()) side = q;
        else fail(ErrorKind::HypothesisViolation, "deleted degree matches neither side of C1");
        ReconstructionResult r;
        r.route = Route::THM8_CASE1;
        r.graph = reattach(h, trivial | side);
        r.witness["side"] = set_json(side);
        r.witness["trivial_components"] = trivial.size();
        return finish(std::move(r), card);
    }

    // Case 2 when some cut vertex leaves at least two trivial components,
    // Case 3 otherwise. Every disconnected card is G - x for a cut vertex x.
    int disconnected = 0;
    bool many_trivial = false;
    for (std::size_t i = 0; i < d.cards.size(); ++i) {
        const Graph h = d.cards[i].graph();
        if (is_connected(h)) continue;
        ++disconnected;
        if (components_after_cut(h, VertexSet{}).trivial_vertices().size() >= 2) many_trivial = true;
    }

    if (many_trivial) {
        if (disconnected != 1) fail(ErrorKind::HypothesisViolation, "expected exactly one disconnected card");
        for (const CardView& card : cards) {
            if (card.deleted_degree != 1) continue;
            const std::vector<Vertex> cuts = cut_vertices(card.graph);
            if (cuts.size() != 1) {
                fail(ErrorKind::HypothesisViolation, "card deleting a leaf should have a unique cut vertex");
            }
            ReconstructionResult r;
            r.route = Route::THM8_CASE2;
            r.graph = reattach(card.graph, VertexSet::single(cuts.front()));
            r.witness["cut_vertex"] = cuts.front();
            return finish(std::move(r), card);
        }
        fail(ErrorKind::HypothesisViolation, "no card deletes a vertex of degree 1");
    }

    for (const CardView& card : cards) {
        if (card.deleted_degree != 1 || !is_connected(card.graph)) continue;
        const auto parts = bipartition(card.graph);
        if (!parts) continue;
        VertexSet x = parts->first;
        VertexSet y = parts->second;
        if (x.size() < y.size()) std::swap(x, y);
        if (x.size() != y.size() + 1) continue;
        for (Vertex z : x) {
            if (card.graph.neighbors(z) != y) continue;
            ReconstructionResult r;
            r.route = Route::THM8_CASE3;
            r.graph = reattach(card.graph, VertexSet::single(z));
            r.witness["attach_to"] = z;
            r.witness["larger_side"] = set_json(x);
            return finish(std::move(r), card);
        }
    }
    fail(ErrorKind::HypothesisViolation, "no connectivity-1 case applies to this deck");
}

ReconstructionResult reconstruct_g3_tf_k3plus(const Deck& d, const ReconstructOptions& options) {
    detail::prevalidate(d, in_class_g3_tf_k3plus, options, kG3Tf3);
    const std::vector<Graph> found = oracle_reconstruct(d, {options.oracle_cap, true});
    if (found.empty()) fail(ErrorKind::HypothesisViolation, "no bipartite graph has this deck");
    if (found.size() > 1) fail(ErrorKind::NonUnique, "several bipartite graphs share this deck");
    ReconstructionResult r;
    r.route = Route::THM5_BIPARTITE_FALLBACK;
    r.graph = found.front();
    r.witness["bipartite_candidates"] = found.size();
    detail::postvalidate(r, d, in_class_g3_tf_k3plus, kG3Tf3);
    return r;
}

}  // namespace recon
