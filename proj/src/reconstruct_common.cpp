#include "reconstruct_internal.hpp"

#include "recon/graph6.hpp"

namespace recon {

std::string_view route_name(Route r) {
    switch (r) {
    case Route::THM4_CASE1: return "THM4_CASE1";
    case Route::THM4_CASE2: return "THM4_CASE2";
    case Route::THM4_CASE3: return "THM4_CASE3";
    case Route::THM4_COMPLETE_BIPARTITE: return "THM4_COMPLETE_BIPARTITE";
    case Route::THM5_BIPARTITE_FALLBACK: return "THM5_BIPARTITE_FALLBACK";
    case Route::THM8_CASE1: return "THM8_CASE1";
    case Route::THM8_CASE2: return "THM8_CASE2";
    case Route::THM8_CASE3: return "THM8_CASE3";
    case Route::THM10_P1: return "THM10_P1";
    case Route::THM10_K3: return "THM10_K3";
    case Route::THM10_P2_DEGREE: return "THM10_P2_DEGREE";
    case Route::THM10_P2_BIPARTITE_FALLBACK: return "THM10_P2_BIPARTITE_FALLBACK";
    case Route::ORACLE: return "ORACLE";
    }
    return "?";
}

bool in_class_g2_tf_k3(const Graph& g) {
    return is_triangle_free(g) && in_g2(g) && vertex_connectivity(g) == 3;
}

bool in_class_g3_tf_k1(const Graph& g) {
    return is_triangle_free(g) && in_g3(g) && vertex_connectivity(g) == 1;
}

bool in_class_g3_tf_k3plus(const Graph& g) {
    return is_triangle_free(g) && in_g3(g) && vertex_connectivity(g) >= 3;
}

bool in_class_g2_tf_edge(const Graph& g) { return g.size() >= 4 && is_triangle_free(g) && in_g2(g); }

bool in_class_g3_tf(const Graph& g) { return is_triangle_free(g) && in_g3(g); }

nlohmann::json to_json(const ReconstructionResult& r) {
    nlohmann::json j;
    j["route"] = std::string(route_name(r.route));
    j["graph_g6"] = canonical_form(r.graph).bytes();
    j["witness"] = r.witness;
    return j;
}

namespace detail {

namespace {

void check_oracle_answer(const std::vector<Graph>& found, const ClassPredicate& in_class,
                         const std::string& class_name) {
    if (found.empty()) fail(ErrorKind::HypothesisViolation, "no graph has this deck");
    if (found.size() > 1) {
        fail(ErrorKind::HypothesisViolation, std::to_string(found.size()) + " non-isomorphic graphs share this deck");
    }
    if (!in_class(found.front())) {
        fail(ErrorKind::HypothesisViolation, "deck belongs to " + emit_graph6(found.front()) + ", which is not " +
                                                 class_name);
    }
}

}  // namespace

void prevalidate(const Deck& d, const ClassPredicate& in_class, const ReconstructOptions& options,
                 const std::string& class_name) {
    if (options.trusted) return;
    check_oracle_answer(oracle_reconstruct(d, {options.oracle_cap, false}), in_class, class_name);
}

void prevalidate(const EdgeDeck& ed, const ClassPredicate& in_class, const ReconstructOptions& options,
                 const std::string& class_name) {
    if (options.trusted) return;
    check_oracle_answer(oracle_edge_reconstruct(ed, {options.oracle_cap, false}), in_class, class_name);
}

void postvalidate(const ReconstructionResult& r, const Deck& d, const ClassPredicate& in_class,
                  const std::string& class_name) {
    if (!decks_equal(compute_deck(r.graph), d)) {
        fail(ErrorKind::HypothesisViolation, std::string(route_name(r.route)) + " produced " + emit_graph6(r.graph) +
                                                 " whose deck differs from the input");
    }
    if (!in_class(r.graph)) {
        fail(ErrorKind::HypothesisViolation, "reconstructed graph " + emit_graph6(r.graph) + " is not " + class_name);
    }
}

void postvalidate(const ReconstructionResult& r, const EdgeDeck& ed, const ClassPredicate& in_class,
                  const std::string& class_name) {
    if (!decks_equal(compute_edge_deck(r.graph), ed)) {
        fail(ErrorKind::HypothesisViolation, std::string(route_name(r.route)) + " produced " + emit_graph6(r.graph) +
                                                 " whose edge-deck differs from the input");
    }
    if (!in_class(r.graph)) {
        fail(ErrorKind::HypothesisViolation, "reconstructed graph " + emit_graph6(r.graph) + " is not " + class_name);
    }
}

std::vector<std::size_t> distinct_card_indices(const std::vector<CanonicalCert>& cards) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cards.size(); ++i)
        if (i == 0 || cards[i] != cards[i - 1]) out.push_back(i);
    return out;
}

nlohmann::json set_json(VertexSet s) { return nlohmann::json(s.members()); }

}  // namespace detail
}  // namespace recon
