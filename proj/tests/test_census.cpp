#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>

#include "oracles.hpp"
#include "recon/canon.hpp"
#include "recon/census.hpp"
#include "recon/enumerate.hpp"
#include "recon/errors.hpp"
#include "recon/graph6.hpp"

using namespace recon;

TEST_CASE("enumerator counts") {
    const long long expected[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 1; n <= 8; ++n) CHECK(static_cast<long long>(enumerate_nonisomorphic(n).size()) == expected[n - 1]);
    for (int n = 1; n <= 9; ++n) CHECK(known_graph_count(n).has_value());
    CHECK_FALSE(known_graph_count(10).has_value());
    CHECK_THROWS_AS(enumerate_nonisomorphic(12), Error);
    CHECK_THROWS_AS(enumerate_nonisomorphic(0), Error);
}

TEST_CASE("enumerator agrees with brute-force classes at 5 vertices") {
    std::set<std::string> mine;
    for (const Graph& g : enumerate_nonisomorphic(5)) mine.insert(oracle::min_code(g));
    std::set<std::string> brute;
    for (const Graph& g : oracle::all_unlabeled(5)) brute.insert(oracle::min_code(g));
    CHECK(mine == brute);
}

TEST_CASE("enumerated graphs are canonical and distinct") {
    for (int n = 1; n <= 8; ++n) {
        std::set<CanonicalCert> seen;
        for (const Graph& g : enumerate_nonisomorphic(n)) {
            REQUIRE(canonical_graph(g) == g);
            REQUIRE(seen.insert(canonical_form(g)).second);
        }
    }
}

TEST_CASE("triangle-free enumeration") {
    // triangle-free graphs on n vertices
    const long long expected[] = {1, 2, 3, 7, 14, 38, 107, 410, 1897};
    for (int n = 1; n <= 9; ++n) {
        const std::vector<Graph> tf = enumerate_nonisomorphic(n, {true, 1});
        CHECK(static_cast<long long>(tf.size()) == expected[n - 1]);
        for (const Graph& g : tf) REQUIRE(is_triangle_free(g));
    }
    long long filtered = 0;
    for (const Graph& g : enumerate_nonisomorphic(7)) filtered += is_triangle_free(g);
    CHECK(filtered == 107);
}

TEST_CASE("enumeration does not depend on the worker count") {
    CHECK(enumerate_nonisomorphic(7, {false, 1}) == enumerate_nonisomorphic(7, {false, 3}));
    CHECK(enumerate_nonisomorphic(8, {true, 1}) == enumerate_nonisomorphic(8, {true, 4}));
}

TEST_CASE("parallel_for visits every index once") {
    std::vector<int> hits(1000);
    parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
    for (int h : hits) REQUIRE(h == 1);
    CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                        if (i == 7) fail(ErrorKind::AssertionFailure, "boom");
                    }),
                    Error);
}

TEST_CASE("vertex deck census") {
    const DeckUniqueness six = verify_deck_uniqueness(enumerate_nonisomorphic(6), DeckKind::Vertex, 2);
    CHECK(six.compared == 156);
    CHECK(six.collisions.empty());

    const DeckUniqueness two = verify_deck_uniqueness(enumerate_nonisomorphic(2), DeckKind::Vertex, 1);
    REQUIRE(two.collisions.size() == 1);
    CHECK(two.collisions.front() == std::vector<std::string>{"A?", "A_"});
}

TEST_CASE("edge deck census and the edge-deck to deck check") {
    const std::vector<Graph> seven = enumerate_nonisomorphic(7);
    const DeckUniqueness ed = verify_deck_uniqueness(seven, DeckKind::Edge, 2);
    CHECK(ed.collisions.empty());
    long long qualifying = 0;
    for (const Graph& g : seven) qualifying += qualifies_for_edge_check(g);
    CHECK(ed.compared == qualifying);

    const GreenwellReport six = greenwell_check(enumerate_nonisomorphic(6), 1);
    CHECK(six.violations == 0);
    CHECK(six.qualifying > 0);

    long long small = 0;
    for (const Graph& g : enumerate_nonisomorphic(3)) small += qualifies_for_edge_check(g);
    CHECK(small == 0);
    CHECK(qualifies_for_edge_check(cycle_graph(4)));
    CHECK_FALSE(qualifies_for_edge_check(path_graph(4)));
}

TEST_CASE("theorem campaigns at small orders") {
    const TheoremVerdict t8 = verify_theorem("T8", 7, 2);
    CHECK(t8.ok());
    CHECK(t8.instances > 0);
    CHECK(t8.members_by_order.at(4) == 1);  // P4
    CHECK(t8.routes.count("ORACLE") == 0);

    const TheoremVerdict t4 = verify_theorem("T4", 8, 2);
    CHECK(t4.ok());
    CHECK(t4.instances > 0);

    const TheoremVerdict t10 = verify_theorem("T10", 7, 2);
    CHECK(t10.ok());

    const TheoremVerdict t11 = verify_theorem("T11", 7, 2);
    CHECK(t11.ok());

    const TheoremVerdict t5 = verify_theorem("T5", 8, 2);
    CHECK(t5.ok());

    CHECK_THROWS_AS(verify_theorem("T4", 11, 1), Error);
    CHECK_THROWS_AS(verify_theorem("T9", 5, 1), Error);
}

TEST_CASE("census reports") {
    CensusOptions o;
    o.n = 6;
    const CensusReport r = run_census(o);
    CHECK(r.ok());
    CHECK(r.total_graphs == 156);
    REQUIRE(r.class_counts);
    long long by_kappa = 0;
    for (const auto& [k, c] : r.class_counts->connectivity) by_kappa += c;
    CHECK(by_kappa == r.class_counts->connected);
    CHECK(r.class_counts->connected == 112);

    CensusOptions two;
    two.n = 2;
    const CensusReport r2 = run_census(two);
    CHECK(r2.ok());
    REQUIRE(r2.decks);
    CHECK(r2.decks->collisions.size() == 1);

    CensusOptions big;
    big.n = 10;
    CHECK_THROWS_AS(run_census(big), Error);
}

TEST_CASE("reports are identical for any worker count") {
    CensusOptions a;
    a.n = 7;
    a.edge = true;
    a.jobs = 1;
    CensusOptions b = a;
    b.jobs = 3;
    CHECK(to_json(run_census(a), false).dump(2) == to_json(run_census(b), false).dump(2));

    CensusOptions t;
    t.n = 7;
    t.theorem = "T8";
    t.jobs = 1;
    CensusOptions u = t;
    u.jobs = 4;
    CHECK(to_json(run_census(t), false).dump(2) == to_json(run_census(u), false).dump(2));
}

TEST_CASE("corpus cross-check") {
    const std::vector<Graph> graphs = enumerate_nonisomorphic(5);
    const std::string path = "corpus_test_5.g6";
    {
        std::ofstream out(path);
        out << ">>graph6<<";
        for (const Graph& g : graphs) out << emit_graph6(g) << '\n';
    }
    CHECK(check_corpus(path, graphs, 5).consistent());
    {
        std::ofstream out(path);
        for (std::size_t i = 1; i < graphs.size(); ++i) out << emit_graph6(graphs[i]) << '\n';
        out << emit_graph6(graphs[1]) << '\n';
    }
    const CorpusCheck bad = check_corpus(path, graphs, 5);
    CHECK(bad.missing == 1);
    CHECK(bad.duplicates == 1);
    std::remove(path.c_str());
}
