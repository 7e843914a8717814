#include "recon/census.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "recon/canon.hpp"
#include "recon/deck.hpp"
#include "recon/enumerate.hpp"
#include "recon/errors.hpp"
#include "recon/graph6.hpp"
#include "recon/oracle.hpp"
#include "recon/reconstruct.hpp"

namespace recon {

std::optional<long long> known_graph_count(int n) {
    static constexpr long long counts[] = {1, 2, 4, 11, 34, 156, 1044, 12346, 274668};
    if (n < 1 || n > 9) return std::nullopt;
    return counts[n - 1];
}

ClassCounts count_classes(const std::vector<Graph>& graphs, int jobs) {
    struct Row {
        bool g2, g3, tf, bip, connected;
        int kappa;
    };
    std::vector<Row> rows(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        const Graph& g = graphs[i];
        Row& r = rows[i];
        r.connected = is_connected(g);
        r.g2 = in_g2(g);
        r.g3 = in_g3(g);
        r.tf = is_triangle_free(g);
        r.bip = is_bipartite(g);
        r.kappa = r.connected ? vertex_connectivity(g) : -1;
    });
    ClassCounts c;
    for (const Row& r : rows) {
        c.g2 += r.g2;
        c.g3 += r.g3;
        c.triangle_free += r.tf;
        c.bipartite += r.bip;
        c.connected += r.connected;
        if (r.connected) ++c.connectivity[r.kappa];
    }
    return c;
}

bool qualifies_for_edge_check(const Graph& g) {
    if (g.size() < 4) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return false;
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<CanonicalCert> cards_of(const Graph& g, DeckKind kind) {
    return kind == DeckKind::Vertex ? compute_deck(g).cards : compute_edge_deck(g).cards;
}

std::uint64_t digest_of(const Graph& g, DeckKind kind) {
    return kind == DeckKind::Vertex ? deck_digest(compute_deck(g)) : deck_digest(compute_edge_deck(g));
}

// Indices grouped by exact deck equality, keeping only groups of two or more.
// Digests only bucket; every group is confirmed card by card.
struct Grouping {
    std::vector<std::vector<std::size_t>> groups;
    long long digest_clashes = 0;
};

Grouping group_equal_decks(const std::vector<Graph>& graphs, const std::vector<std::size_t>& members, DeckKind kind,
                           int jobs) {
    std::vector<std::uint64_t> digest(members.size());
    parallel_for(members.size(), jobs, [&](std::size_t i) { digest[i] = digest_of(graphs[members[i]], kind); });
    std::vector<std::size_t> order(members.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return digest[a] < digest[b]; });

    std::vector<std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && digest[order[j]] == digest[order[i]]) ++j;
        if (j - i > 1) {
            std::vector<std::size_t> bucket;
            for (std::size_t k = i; k < j; ++k) bucket.push_back(members[order[k]]);
            std::sort(bucket.begin(), bucket.end());
            buckets.push_back(std::move(bucket));
        }
        i = j;
    }

    Grouping out;
    for (const std::vector<std::size_t>& bucket : buckets) {
        std::vector<std::pair<std::vector<CanonicalCert>, std::vector<std::size_t>>> exact;
        for (std::size_t idx : bucket) {
            std::vector<CanonicalCert> cards = cards_of(graphs[idx], kind);
            auto it = std::find_if(exact.begin(), exact.end(), [&](const auto& e) { return e.first == cards; });
            if (it == exact.end()) exact.push_back({std::move(cards), {idx}});
            else it->second.push_back(idx);
        }
        out.digest_clashes += static_cast<long long>(exact.size()) - 1;
        for (auto& e : exact)
            if (e.second.size() > 1) out.groups.push_back(std::move(e.second));
    }
    std::sort(out.groups.begin(), out.groups.end());
    return out;
}

std::vector<std::string> certs_of(const std::vector<Graph>& graphs, const std::vector<std::size_t>& group) {
    std::vector<std::string> out;
    for (std::size_t i : group) out.push_back(canonical_form(graphs[i]).bytes());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> edge_qualifying(const std::vector<Graph>& graphs) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (qualifies_for_edge_check(graphs[i])) out.push_back(i);
    return out;
}

}  // namespace

DeckUniqueness verify_deck_uniqueness(const std::vector<Graph>& graphs, DeckKind kind, int jobs) {
    std::vector<std::size_t> members;
    if (kind == DeckKind::Edge) {
        members = edge_qualifying(graphs);
    } else {
        members.resize(graphs.size());
        std::iota(members.begin(), members.end(), 0);
    }
    DeckUniqueness out;
    out.kind = kind;
    out.compared = static_cast<long long>(members.size());
    const Grouping grouping = group_equal_decks(graphs, members, kind, jobs);
    out.buckets_with_digest_clash = grouping.digest_clashes;
    for (const auto& group : grouping.groups) out.collisions.push_back(certs_of(graphs, group));
    return out;
}

GreenwellReport greenwell_check(const std::vector<Graph>& graphs, int jobs) {
    const std::vector<std::size_t> members = edge_qualifying(graphs);
    GreenwellReport out;
    out.qualifying = static_cast<long long>(members.size());
    const Grouping grouping = group_equal_decks(graphs, members, DeckKind::Edge, jobs);
    for (const auto& group : grouping.groups) {
        for (std::size_t a = 0; a < group.size(); ++a) {
            for (std::size_t b = a + 1; b < group.size(); ++b) {
                ++out.equal_edge_deck_pairs;
                if (!decks_equal(compute_deck(graphs[group[a]]), compute_deck(graphs[group[b]]))) {
                    ++out.violations;
                    out.witnesses.push_back(certs_of(graphs, {group[a], group[b]}));
                }
            }
        }
    }
    return out;
}

int theorem_cap(const std::string& id) {
    if (id == "T4" || id == "T8") return 10;
    if (id == "T10" || id == "T11") return 9;
    if (id == "T5") return 11;
    fail(ErrorKind::ParseError, "unknown theorem id '" + id + "'");
}

namespace {

// Outcome of one graph in a campaign.
struct Outcome {
    bool member = false;
    bool pass = false;
    std::string message;
    std::optional<ErrorKind> error;
    std::vector<std::string> routes;
    std::map<std::string, long long> counters;
};

void require(bool fact, const std::string& what) {
    if (!fact) fail(ErrorKind::ConsistencyFailure, what);
}

// Shared check for the vertex-deck procedures: the output matches the source
// and the oracle's unique answer, and no undesignated route reaches the oracle.
void check_vertex_route(Outcome& o, const Graph& g, const ReconstructionResult& r, int cap) {
    o.routes.push_back(std::string(route_name(r.route)));
    const CanonicalCert source = canonical_form(g);
    require(canonical_form(r.graph) == source, "output is not isomorphic to the source");
    const std::vector<Graph> oracle = oracle_reconstruct(compute_deck(g), {cap, false});
    require(oracle.size() == 1 && canonical_form(oracle.front()) == source, "output disagrees with the oracle");
    require(r.route != Route::ORACLE, "procedure escaped to the oracle");
}

Outcome run_t4(const Graph& g) {
    Outcome o;
    if (!in_class_g2_tf_k3(g)) return o;
    o.member = true;
    ReconstructOptions options;
    options.oracle_cap = 10;
    check_vertex_route(o, g, reconstruct_g2_tf_k3(compute_deck(g), options), 10);
    return o;
}

Outcome run_t8(const Graph& g) {
    Outcome o;
    if (!in_class_g3_tf_k1(g)) return o;
    o.member = true;
    ReconstructOptions options;
    options.oracle_cap = 10;
    check_vertex_route(o, g, reconstruct_g3_tf_k1(compute_deck(g), options), 10);
    return o;
}

Outcome run_t5(const Graph& g) {
    Outcome o;
    if (!in_class_g3_tf_k3plus(g)) return o;
    o.member = true;
    const int kappa = vertex_connectivity(g);
    for (VertexSet s : cut_sets_of_size(g, kappa)) {
        ++o.counters["cuts_checked"];
        try {
            const G3Structure st = derive_g3_structure(g, s);
            ++o.counters[st.kind == G3Structure::Kind::IndependentCut ? "independent_cut" : "cut_with_edge"];
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::AssertionFailure) throw;
            fail(ErrorKind::AssertionFailure, "cut " + nlohmann::json(s.members()).dump() + ": " + e.what());
        }
    }
    ReconstructOptions options;
    options.oracle_cap = 11;
    const ReconstructionResult r = reconstruct_g3_tf_k3plus(compute_deck(g), options);
    o.routes.push_back(std::string(route_name(r.route)));
    require(is_isomorphic(r.graph, g), "output is not isomorphic to the source");
    return o;
}

// Every far pair of G - uv uses u or v, {u, v} is one of them, and when
// there are three or more pairs the shared-vertex structure is as forced.
std::string ph_violation(const Graph& g, Vertex u, Vertex v) {
    const Graph h = delete_edge(g, u, v);
    const PHSet p = compute_ph(h);
    if (!p.contains(u, v)) return "deleted edge is not a far pair";
    std::map<Vertex, int> count;
    for (auto [a, b] : p.pairs) {
        if (a != u && a != v && b != u && b != v) return "far pair avoids both endpoints";
        ++count[a];
        ++count[b];
    }
    if (p.size() < 3) return {};
    std::vector<Vertex> heavy;
    for (auto [x, c] : count)
        if (c >= 2) heavy.push_back(x);
    if (heavy.size() > 2) return "more than two vertices repeat among far pairs";
    if (heavy.size() == 1) {
        const Vertex x = heavy[0];
        VertexSet partners;
        for (auto [a, b] : p.pairs) {
            if (a != x && b != x) return "a far pair misses the repeated vertex";
            partners.insert(a == x ? b : a);
        }
        bool star = false;
        for (Vertex c : partners) {
            const VertexSet leaves = partners - VertexSet::single(c);
            if (leaves.subset_of(h.neighbors(c)) && is_independent(h, leaves)) star = true;
        }
        if (!star) return "far-pair partners do not induce a star";
    }
    return {};
}

Outcome run_t10(const Graph& g) {
    Outcome o;
    if (!in_class_g2_tf_edge(g)) return o;
    o.member = true;
    for (auto [u, v] : g.edges()) {
        ++o.counters["ph_checks"];
        const std::string bad = ph_violation(g, u, v);
        if (!bad.empty()) {
            fail(ErrorKind::ConsistencyFailure, "edge " + std::to_string(u) + "-" + std::to_string(v) + ": " + bad);
        }
    }
    const EdgeDeck ed = compute_edge_deck(g);
    const CanonicalCert source = canonical_form(g);
    const std::vector<Graph> oracle = oracle_edge_reconstruct(ed, {9, false});
    require(oracle.size() == 1 && canonical_form(oracle.front()) == source, "edge oracle disagrees with the source");
    ReconstructOptions options;
    options.oracle_cap = 9;
    for (std::size_t i = 0; i < ed.cards.size(); ++i) {
        if (i > 0 && ed.cards[i] == ed.cards[i - 1]) continue;
        ++o.counters["starting_cards"];
        const ReconstructionResult r = edge_reconstruct_g2_tf(ed, options, i);
        options.trusted = true;
        o.routes.push_back(std::string(route_name(r.route)));
        require(canonical_form(r.graph) == source, "output from starting card " + std::to_string(i) +
                                                       " is not isomorphic to the source");
    }
    return o;
}

Outcome run_t11(const Graph& g) {
    Outcome o;
    if (!in_class_g3_tf(g)) return o;
    o.member = true;
    ReconstructOptions options;
    options.oracle_cap = 9;
    const ReconstructionResult r = edge_reconstruct_g3_tf(compute_edge_deck(g), options);
    o.routes.push_back(std::string(route_name(r.route)));
    require(is_isomorphic(r.graph, g), "output is not isomorphic to the source");
    return o;
}

}  // namespace

TheoremVerdict verify_theorem(const std::string& id, int n_max, int jobs) {
    const int cap = theorem_cap(id);
    if (n_max < 1 || n_max > cap) {
        fail(ErrorKind::CapExceeded, id + " campaign supports 1 <= n <= " + std::to_string(cap));
    }
    Outcome (*check)(const Graph&) = nullptr;
    if (id == "T4") check = run_t4;
    else if (id == "T5") check = run_t5;
    else if (id == "T8") check = run_t8;
    else if (id == "T10") check = run_t10;
    else check = run_t11;

    std::vector<Graph> graphs;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Graph> level = enumerate_nonisomorphic(n, {true, jobs});
        graphs.insert(graphs.end(), level.begin(), level.end());
    }
    TheoremVerdict v;
    v.id = id;
    v.n_max = n_max;
    if (id == "T4" && n_max == 9) {
        graphs.push_back(canonical_graph(petersen_graph()));
        v.extra["targeted"] = {"petersen"};
    }

    std::vector<Outcome> outcomes(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        Outcome& o = outcomes[i];
        try {
            o = check(graphs[i]);
            o.pass = o.member;
        } catch (const Error& e) {
            o.member = true;
            o.error = e.kind();
            o.message = std::string(error_kind_name(e.kind())) + ": " + e.what();
        }
    });

    std::map<std::string, long long> counters;
    std::map<std::string, long long> errors;
    v.extra["graphs_examined"] = graphs.size();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Outcome& o = outcomes[i];
        for (const auto& [key, value] : o.counters) counters[key] += value;
        if (o.error) ++errors[std::string(error_kind_name(*o.error))];
        if (!o.member) continue;
        ++v.instances;
        ++v.members_by_order[graphs[i].order()];
        for (const std::string& route : o.routes) ++v.routes[route];
        if (o.pass) ++v.passes;
        else v.failures.push_back({canonical_form(graphs[i]).bytes(), o.message});
    }
    for (const auto& [key, value] : counters) v.extra[key] = value;
    v.extra["errors_by_kind"] = errors;
    return v;
}

CorpusCheck check_corpus(const std::string& path, const std::vector<Graph>& enumerated, int n) {
    CorpusCheck c;
    c.path = path;
    const std::vector<Graph> corpus = read_graph6_file(path);
    c.lines = static_cast<long long>(corpus.size());
    std::unordered_set<CanonicalCert> expected;
    for (const Graph& g : enumerated) expected.insert(canonical_form(g));
    std::unordered_set<CanonicalCert> seen;
    for (const Graph& g : corpus) {
        if (g.order() != n) {
            ++c.wrong_order;
            continue;
        }
        const CanonicalCert cert = canonical_form(g);
        if (!seen.insert(cert).second) ++c.duplicates;
        else if (!expected.count(cert)) ++c.extra;
    }
    for (const CanonicalCert& cert : expected)
        if (!seen.count(cert)) ++c.missing;
    return c;
}

bool CensusReport::ok() const {
    if (expected_total && *expected_total != total_graphs) return false;
    if (decks && !decks->collisions.empty() && (decks->kind == DeckKind::Edge || n >= 3)) return false;
    if (greenwell && greenwell->violations != 0) return false;
    if (theorem && !theorem->ok()) return false;
    if (corpus && !corpus->consistent()) return false;
    return true;
}

CensusReport run_census(const CensusOptions& options) {
    const auto start = Clock::now();
    const int n = options.n;
    if (n < 1) fail(ErrorKind::CapExceeded, "census needs n >= 1");
    CensusReport r;
    r.n = n;

    if (options.theorem) {
        r.mode = "theorem";
        r.theorem = verify_theorem(*options.theorem, n, options.jobs);
        r.total_graphs = r.theorem->extra["graphs_examined"].get<long long>();
    } else {
        if (options.edge) {
            if (n > 8) fail(ErrorKind::CapExceeded, "edge census supports n <= 8");
        } else if (n > 10 || (n == 10 && !(options.allow_n10 && options.jobs >= 2))) {
            fail(ErrorKind::CapExceeded, "vertex census supports n <= 9; n = 10 needs --allow-n10 and --jobs >= 2");
        }
        r.mode = options.edge ? "edge" : "vertex";
        const std::vector<Graph> graphs = enumerate_nonisomorphic(n, {false, options.jobs});
        r.total_graphs = static_cast<long long>(graphs.size());
        r.expected_total = known_graph_count(n);
        r.class_counts = count_classes(graphs, options.jobs);
        r.decks = verify_deck_uniqueness(graphs, options.edge ? DeckKind::Edge : DeckKind::Vertex, options.jobs);
        if (options.edge) r.greenwell = greenwell_check(graphs, options.jobs);
        if (options.corpus) r.corpus = check_corpus(*options.corpus, graphs, n);
    }
    r.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

namespace {

nlohmann::json counts_json(const std::map<int, long long>& m) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = v;
    return j;
}

}  // namespace

nlohmann::json to_json(const CensusReport& r, bool include_timing) {
    nlohmann::json j;
    j["n"] = r.n;
    j["mode"] = r.mode;
    j["total_graphs"] = r.total_graphs;
    j["ok"] = r.ok();
    if (r.expected_total) {
        j["expected_total"] = *r.expected_total;
        j["enumerator_matches_known_count"] = *r.expected_total == r.total_graphs;
    }
    if (r.class_counts) {
        const ClassCounts& c = *r.class_counts;
        j["class_counts"] = {{"G2", c.g2},
                             {"G3", c.g3},
                             {"triangle_free", c.triangle_free},
                             {"bipartite", c.bipartite},
                             {"connected", c.connected},
                             {"connectivity", counts_json(c.connectivity)}};
    }
    if (r.decks) {
        j["deck_check"] = {{"kind", r.decks->kind == DeckKind::Vertex ? "vertex" : "edge"},
                           {"compared", r.decks->compared},
                           {"digest_clashes", r.decks->buckets_with_digest_clash},
                           {"collisions", r.decks->collisions}};
    }
    if (r.greenwell) {
        j["greenwell"] = {{"qualifying", r.greenwell->qualifying},
                          {"equal_edge_deck_pairs", r.greenwell->equal_edge_deck_pairs},
                          {"violations", r.greenwell->violations},
                          {"witnesses", r.greenwell->witnesses}};
    }
    if (r.theorem) {
        const TheoremVerdict& v = *r.theorem;
        nlohmann::json failures = nlohmann::json::array();
        for (const TheoremFailure& f : v.failures) failures.push_back({{"graph_g6", f.graph_g6}, {"message", f.message}});
        j["theorem_verdicts"][v.id] = {{"n_max", v.n_max},
                                       {"instances", v.instances},
                                       {"passes", v.passes},
                                       {"failures", failures},
                                       {"routes", v.routes},
                                       {"members_by_order", counts_json(v.members_by_order)},
                                       {"details", v.extra}};
    }
    if (r.corpus) {
        j["corpus"] = {{"path", r.corpus->path},         {"lines", r.corpus->lines},
                       {"wrong_order", r.corpus->wrong_order}, {"duplicates", r.corpus->duplicates},
                       {"missing", r.corpus->missing},   {"extra", r.corpus->extra},
                       {"consistent", r.corpus->consistent()}};
    }
    if (include_timing) j["wall_time"] = r.wall_time;
    return j;
}

std::string to_csv(const CensusReport& r) {
    std::ostringstream out;
    out << "metric,value\n";
    out << "n," << r.n << '\n';
    out << "mode," << r.mode << '\n';
    out << "total_graphs," << r.total_graphs << '\n';
    if (r.class_counts) {
        out << "G2," << r.class_counts->g2 << '\n';
        out << "G3," << r.class_counts->g3 << '\n';
        out << "triangle_free," << r.class_counts->triangle_free << '\n';
        out << "bipartite," << r.class_counts->bipartite << '\n';
        out << "connected," << r.class_counts->connected << '\n';
        for (const auto& [k, v] : r.class_counts->connectivity) out << "kappa_" << k << ',' << v << '\n';
    }
    if (r.decks) {
        out << "deck_compared," << r.decks->compared << '\n';
        out << "deck_collisions," << r.decks->collisions.size() << '\n';
    }
    if (r.greenwell) out << "greenwell_violations," << r.greenwell->violations << '\n';
    if (r.theorem) {
        out << "theorem," << r.theorem->id << '\n';
        out << "instances," << r.theorem->instances << '\n';
        out << "passes," << r.theorem->passes << '\n';
        out << "failures," << r.theorem->failures.size() << '\n';
        for (const auto& [route, count] : r.theorem->routes) out << "route_" << route << ',' << count << '\n';
    }
    if (r.corpus) out << "corpus_consistent," << (r.corpus->consistent() ? "true" : "false") << '\n';
    out << "ok," << (r.ok() ? "true" : "false") << '\n';
    out << "wall_time," << r.wall_time << '\n';
    return out.str();
}

}  // namespace recon
