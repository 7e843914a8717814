// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
// All comparisons are exact integer equality.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "recon/canon.hpp"
#include "recon/census.hpp"
#include "recon/deck.hpp"
#include "recon/enumerate.hpp"
#include "recon/errors.hpp"
#include "recon/reconstruct.hpp"

using namespace recon;

namespace {

constexpr int kJobs = 2;

// Pinned values.
constexpr long long kGraphsOn9 = 274668;
constexpr long long kKnownCounts[] = {1, 2, 4, 11, 34, 156, 1044, 12346, 274668};
constexpr int kVertexCensusN = 9;
constexpr int kEdgeCensusMax = 8;
constexpr int kT4Max = 9;
constexpr int kT8Max = 9;
constexpr int kT5Max = 11;
constexpr int kT10Max = 8;
constexpr int kFormulaMax = 7;
constexpr int kPatternMax = 4;
constexpr int kCanonMax = 6;

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool fact, const std::string& what) {
        if (!fact) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

std::string routes_text(const std::map<std::string, long long>& routes) {
    std::string s;
    for (const auto& [name, count] : routes) s += (s.empty() ? "" : ",") + name + "=" + std::to_string(count);
    return s;
}

void campaign(Verdict& v, const TheoremVerdict& t) {
    v.require(t.ok(), t.id + " campaign has failures");
    v.require(t.routes.count("ORACLE") == 0 || t.id == "T11", t.id + " used the ORACLE route");
    v.detail << ' ' << t.id << " n<=" << t.n_max << ": " << t.passes << "/" << t.instances
             << " pass; routes " << routes_text(t.routes);
    if (!t.failures.empty()) v.detail << "; first failure " << t.failures.front().graph_g6 << ": " << t.failures.front().message;
}

void criterion1(Verdict& v) {
    CensusOptions o;
    o.n = kVertexCensusN;
    o.jobs = kJobs;
    const CensusReport r = run_census(o);
    v.require(r.total_graphs == kGraphsOn9, "graph count on 9 vertices");
    v.require(r.decks && r.decks->compared == kGraphsOn9, "all graphs compared");
    v.require(r.decks && r.decks->collisions.empty(), "no deck collisions on 9 vertices");
    CensusOptions two;
    two.n = 2;
    const CensusReport r2 = run_census(two);
    const std::vector<std::vector<std::string>> expected{{"A?", "A_"}};
    v.require(r2.decks && r2.decks->collisions == expected, "K2 and 2K1 collide on 2 vertices");
    v.detail << " n=9: " << r.total_graphs << " graphs, "
             << (r.decks ? r.decks->collisions.size() : 0) << " collisions, "
             << (r.decks ? r.decks->buckets_with_digest_clash : 0) << " digest clashes; n=2 collision reported";
}

void criterion2(Verdict& v) {
    long long qualifying = 0;
    long long collisions = 0;
    long long violations = 0;
    for (int n = 1; n <= kEdgeCensusMax; ++n) {
        CensusOptions o;
        o.n = n;
        o.edge = true;
        o.jobs = kJobs;
        const CensusReport r = run_census(o);
        qualifying += r.decks ? r.decks->compared : 0;
        collisions += r.decks ? static_cast<long long>(r.decks->collisions.size()) : 1;
        violations += r.greenwell ? r.greenwell->violations : 1;
    }
    v.require(collisions == 0, "no edge-deck collisions");
    v.require(violations == 0, "equal edge-decks give equal decks");
    v.detail << " n<=8: " << qualifying << " qualifying graphs, " << collisions << " edge-deck collisions, "
             << violations << " deck violations";
}

void criterion3(Verdict& v) {
    const TheoremVerdict t = verify_theorem("T4", kT4Max, kJobs);
    v.require(t.instances > 0, "members exist");
    v.require(t.extra.contains("targeted"), "Petersen instance included");
    campaign(v, t);
}

void criterion4(Verdict& v) {
    const Graph p4 = path_graph(4);
    const Graph double_star(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    for (const Graph& w : {p4, double_star}) {
        const bool member = in_class_g3_tf_k1(w);
        v.require(member, "witness " + canonical_form(w).bytes() + " is in the class");
        if (!member) continue;
        const ReconstructionResult r = reconstruct_g3_tf_k1(compute_deck(w));
        v.require(is_isomorphic(r.graph, w), "witness " + canonical_form(w).bytes() + " reconstructs");
        v.detail << " witness " << canonical_form(w).bytes() << " via " << route_name(r.route) << ';';
    }
    const TheoremVerdict t = verify_theorem("T8", kT8Max, kJobs);
    v.require(t.members_by_order.count(4) && t.members_by_order.at(4) == 1, "P4 is the only member on 4 vertices");
    campaign(v, t);
}

void criterion5(Verdict& v) {
    const TheoremVerdict t = verify_theorem("T5", kT5Max, kJobs);
    v.require(t.ok(), "no assertion failures and unique reconstructions");
    long long assertion_failures = 0;
    if (t.extra.contains("errors_by_kind") && t.extra["errors_by_kind"].contains("AssertionFailure"))
        assertion_failures = t.extra["errors_by_kind"]["AssertionFailure"].get<long long>();
    v.require(assertion_failures == 0, "no structure assertion fails");
    v.detail << " n<=11: " << t.instances << " members (" << (t.instances == 0 ? "vacuous" : "non-vacuous")
             << "), " << assertion_failures << " assertion failures, "
             << t.extra.value("cuts_checked", 0LL) << " minimum cuts checked; " << t.passes << " unique reconstructions";
}

void criterion6(Verdict& v) {
    const TheoremVerdict t = verify_theorem("T10", kT10Max, kJobs);
    campaign(v, t);
    v.detail << "; " << t.extra.value("ph_checks", 0LL) << " far-pair checks, " << t.extra.value("starting_cards", 0LL)
             << " starting cards";
}

void criterion7(Verdict& v) {
    std::vector<Graph> patterns;
    for (int k = 1; k <= kPatternMax; ++k)
        for (const Graph& f : oracle::all_unlabeled(k)) patterns.push_back(f);
    long long graphs = 0;
    long long comparisons = 0;
    long long mismatches = 0;
    // the edge-count formula divides by n - 2
    for (int n = 3; n <= kFormulaMax; ++n) {
        for (const Graph& g : enumerate_nonisomorphic(n)) {
            ++graphs;
            const Deck d = compute_deck(g);
            ++comparisons;
            mismatches += reconstruct_edge_count(d) != g.size();
            for (std::size_t i = 0; i < d.size(); ++i) {
                ++comparisons;
                mismatches += deleted_vertex_degree(d, i) != g.degree(d.provenance[i]);
            }
            for (const Graph& f : patterns) {
                if (f.order() >= n) continue;
                ++comparisons;
                mismatches += kelly_count(d, f) != oracle::subgraph_copies(f, g);
            }
        }
    }
    v.require(mismatches == 0, "deck formulas equal direct counts");
    v.detail << ' ' << graphs << " graphs, " << patterns.size() << " patterns, " << comparisons << " comparisons, "
             << mismatches << " mismatches";
}

void criterion8(Verdict& v) {
    long long labeled = 0;
    long long mismatches = 0;
    for (int n = 1; n <= kCanonMax; ++n) {
        // cert(a) == cert(b) iff min_code(a) == min_code(b), for every pair of labeled graphs
        std::map<std::string, std::string> cert_to_code;
        std::map<std::string, std::string> code_to_cert;
        for (const Graph& g : oracle::all_labeled(n)) {
            ++labeled;
            const std::string cert = canonical_form(g).bytes();
            const std::string code = oracle::min_code(g);
            auto [a, fresh_a] = cert_to_code.emplace(cert, code);
            auto [b, fresh_b] = code_to_cert.emplace(code, cert);
            mismatches += a->second != code;
            mismatches += b->second != cert;
        }
    }
    v.require(mismatches == 0, "canonical form agrees with the permutation oracle");
    std::string counts;
    for (int n = 1; n <= 9; ++n) {
        const long long c = static_cast<long long>(enumerate_nonisomorphic(n, {false, kJobs}).size());
        v.require(c == kKnownCounts[n - 1], "enumerator count for n=" + std::to_string(n));
        counts += (counts.empty() ? "" : ",") + std::to_string(c);
    }
    v.detail << ' ' << labeled << " labeled graphs n<=6, " << mismatches << " mismatches; counts " << counts;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
        {"vertex-deck uniqueness", criterion1},
        {"edge-deck uniqueness and edge-deck determines deck", criterion2},
        {"connectivity-3 diameter-2 round trip", criterion3},
        {"connectivity-1 diameter-3 round trip", criterion4},
        {"connectivity-3+ diameter-3 structure", criterion5},
        {"diameter-2 edge reconstruction round trip", criterion6},
        {"exact deck formulas", criterion7},
        {"canonical labeling and enumerator counts", criterion8},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[k].second(v);
        } catch (const Error& e) {
            v.require(false, std::string(error_kind_name(e.kind())) + ": " + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !v.pass;
        std::printf("%s criterion %zu: %s;%s (%.1fs)\n", v.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    v.detail.str().c_str(), secs);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
