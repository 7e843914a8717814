#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "recon/graph.hpp"

namespace recon {

// Known numbers of non-isomorphic graphs on n = 1..9 vertices.
std::optional<long long> known_graph_count(int n);

struct ClassCounts {
    long long g2 = 0;
    long long g3 = 0;
    long long triangle_free = 0;
    long long bipartite = 0;
    long long connected = 0;
    std::map<int, long long> connectivity;  // kappa -> count, connected graphs only
};
ClassCounts count_classes(const std::vector<Graph>& graphs, int jobs);

enum class DeckKind { Vertex, Edge };

// Groups of pairwise non-isomorphic graphs sharing a deck, by certificate.
struct DeckUniqueness {
    DeckKind kind = DeckKind::Vertex;
    long long compared = 0;  // graphs entering the comparison
    long long buckets_with_digest_clash = 0;
    std::vector<std::vector<std::string>> collisions;
};

// Edge decks are compared only on the subclass with at least 4 edges and no
// isolated vertices.
bool qualifies_for_edge_check(const Graph& g);
DeckUniqueness verify_deck_uniqueness(const std::vector<Graph>& graphs, DeckKind kind, int jobs);

struct GreenwellReport {
    long long qualifying = 0;
    long long equal_edge_deck_pairs = 0;
    long long violations = 0;  // equal edge-decks with different decks
    std::vector<std::vector<std::string>> witnesses;
};
GreenwellReport greenwell_check(const std::vector<Graph>& graphs, int jobs);

struct TheoremFailure {
    std::string graph_g6;
    std::string message;
};

struct TheoremVerdict {
    std::string id;
    int n_max = 0;
    long long instances = 0;
    long long passes = 0;
    std::vector<TheoremFailure> failures;
    std::map<std::string, long long> routes;
    std::map<int, long long> members_by_order;
    nlohmann::json extra = nlohmann::json::object();

    bool ok() const { return failures.empty() && passes == instances; }
};

// Largest n_max accepted for each campaign.
int theorem_cap(const std::string& id);
// Runs the campaign for T4, T5, T8, T10 or T11 over triangle-free graphs on
// 1..n_max vertices.
TheoremVerdict verify_theorem(const std::string& id, int n_max, int jobs);

struct CorpusCheck {
    std::string path;
    long long lines = 0;
    long long wrong_order = 0;
    long long duplicates = 0;
    long long missing = 0;
    long long extra = 0;
    bool consistent() const { return wrong_order == 0 && duplicates == 0 && missing == 0 && extra == 0; }
};
// Compares a graph6 corpus file of n-vertex graphs with the enumerator.
CorpusCheck check_corpus(const std::string& path, const std::vector<Graph>& enumerated, int n);

struct CensusOptions {
    int n = 0;
    bool edge = false;
    std::optional<std::string> theorem;
    int jobs = 1;
    bool allow_n10 = false;
    std::optional<std::string> corpus;
};

struct CensusReport {
    int n = 0;
    std::string mode;
    long long total_graphs = 0;
    std::optional<long long> expected_total;
    std::optional<ClassCounts> class_counts;
    std::optional<DeckUniqueness> decks;
    std::optional<GreenwellReport> greenwell;
    std::optional<TheoremVerdict> theorem;
    std::optional<CorpusCheck> corpus;
    double wall_time = 0.0;

    bool ok() const;
};

CensusReport run_census(const CensusOptions& options);

nlohmann::json to_json(const CensusReport& r, bool include_timing);
std::string to_csv(const CensusReport& r);

}  // namespace recon
