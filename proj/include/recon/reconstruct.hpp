#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "recon/deck.hpp"
#include "recon/graph.hpp"

namespace recon {

enum class Route {
    THM4_CASE1,
    THM4_CASE2,
    THM4_CASE3,
    THM4_COMPLETE_BIPARTITE,
    THM5_BIPARTITE_FALLBACK,
    THM8_CASE1,
    THM8_CASE2,
    THM8_CASE3,
    THM10_P1,
    THM10_K3,
    THM10_P2_DEGREE,
    THM10_P2_BIPARTITE_FALLBACK,
    ORACLE,
};

std::string_view route_name(Route r);
inline constexpr int kRouteCount = static_cast<int>(Route::ORACLE) + 1;

struct ReconstructionResult {
    Graph graph;
    Route route = Route::ORACLE;
    nlohmann::json witness = nlohmann::json::object();
};

struct ReconstructOptions {
    // Skip the oracle check that the input deck belongs to the procedure's
    // class and determines a unique graph.
    bool trusted = false;
    int oracle_cap = 10;
    // Run the connectivity-3 procedure from every distinct connectivity-2
    // card and require the outputs to agree.
    bool cross_check_cards = true;
};

// Class predicates for the procedures below.
bool in_class_g2_tf_k3(const Graph& g);
bool in_class_g3_tf_k1(const Graph& g);
bool in_class_g3_tf_k3plus(const Graph& g);
bool in_class_g2_tf_edge(const Graph& g);  // also needs at least 4 edges
bool in_class_g3_tf(const Graph& g);

// Triangle-free, diameter 2, connectivity 3.
ReconstructionResult reconstruct_g2_tf_k3(const Deck& d, const ReconstructOptions& options = {});
// Triangle-free, diam(G) = diam(complement) = 3, connectivity 1.
ReconstructionResult reconstruct_g3_tf_k1(const Deck& d, const ReconstructOptions& options = {});
// Triangle-free, diam(G) = diam(complement) = 3, connectivity >= 3.
ReconstructionResult reconstruct_g3_tf_k3plus(const Deck& d, const ReconstructOptions& options = {});

// Unordered pairs at distance >= 3 (unreachable included), sorted.
struct PHSet {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::size_t size() const { return pairs.size(); }
    bool contains(Vertex a, Vertex b) const;
};
PHSet compute_ph(const Graph& h);

// Triangle-free diameter-2 graphs with at least 4 edges. `start_card` picks
// the first edge-card examined; later cards follow the deck order.
ReconstructionResult edge_reconstruct_g2_tf(const EdgeDeck& ed, const ReconstructOptions& options = {},
                                             std::optional<std::size_t> start_card = std::nullopt);
// Triangle-free graphs with diam(G) = diam(complement) = 3.
ReconstructionResult edge_reconstruct_g3_tf(const EdgeDeck& ed, const ReconstructOptions& options = {});

struct G3Structure {
    enum class Kind { IndependentCut, CutWithEdge } kind = Kind::IndependentCut;
    // Far pair in the complement (distance 3). For IndependentCut, `first` is
    // the cut vertex and `second` the vertex of C1(S).
    std::pair<Vertex, Vertex> far_pair{};
    int far_pairs = 0;
    int nontrivial_components = 0;
    Bipartition parts;
};

// Checks the structure forced on a triangle-free graph with
// diam(G) = diam(complement) = 3, connectivity >= 3 and minimum cut s.
// Every violated fact raises AssertionFailure naming it.
G3Structure derive_g3_structure(const Graph& g, VertexSet s, bool check_preconditions = true);

nlohmann::json to_json(const ReconstructionResult& r);

}  // namespace recon
