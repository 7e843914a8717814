#pragma once

// Brute-force reference implementations. They read only adjacency from
// recon::Graph and share no code with the library algorithms.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "recon/graph.hpp"

namespace oracle {

using recon::Graph;
using recon::Vertex;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
    std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order()));
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) m[i][j] = g.adjacent(i, j);
    return m;
}

// Upper triangle, column-major, as a 0/1 string (graph6 bit order).
inline std::string bits_under(const Graph& g, const std::vector<int>& perm) {
    // perm[pos] = original vertex placed at position pos
    std::string s;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) s += g.adjacent(perm[i], perm[j]) ? '1' : '0';
    return s;
}

// Lexicographically smallest bit string over all n! orders.
inline std::string min_code(const Graph& g) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best = bits_under(g, perm);
    while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, bits_under(g, perm));
    return std::to_string(g.order()) + ":" + best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; ok && i < a.order(); ++i)
            for (int j = i + 1; ok && j < a.order(); ++j)
                if (a.adjacent(i, j) != b.adjacent(perm[i], perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Every labeled graph on n vertices (n <= 6 keeps this small).
inline std::vector<Graph> all_labeled(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    std::vector<Graph> out;
    for (long mask = 0; mask < (1L << pairs.size()); ++mask) {
        Graph g(n);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
        out.push_back(g);
    }
    return out;
}

// One representative per class, chosen by min_code; n <= 6.
inline std::vector<Graph> all_unlabeled(int n) {
    std::map<std::string, Graph> reps;
    for (const Graph& g : all_labeled(n)) reps.emplace(min_code(g), g);
    std::vector<Graph> out;
    for (auto& [code, g] : reps) out.push_back(g);
    return out;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

inline Graph shuffled(const Graph& g, std::mt19937& rng) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.permuted(perm);
}

constexpr int kUnreachable = 1 << 20;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreachable));
    for (int i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) d[i][j] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline bool connected_without(const Graph& g, unsigned removed) {
    const int n = g.order();
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!((removed >> v) & 1)) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive <= 1) return true;
    std::vector<bool> seen(n);
    std::vector<int> stack{start};
    seen[start] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
            if (!seen[w] && !((removed >> w) & 1) && g.adjacent(v, w)) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == alive;
}

// Smallest vertex set whose removal disconnects g; n - 1 when none does.
inline int connectivity(const Graph& g) {
    const int n = g.order();
    int best = n - 1;
    for (unsigned s = 0; s < (1u << n); ++s) {
        const int k = __builtin_popcount(s);
        if (k >= best || n - k < 2) continue;
        if (!connected_without(g, s)) best = k;
    }
    return best;
}

inline bool triangle_free(const Graph& g) {
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            for (int c = b + 1; c < g.order(); ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return false;
    return true;
}

// Distinct edge sets of g forming a copy of f: enumerate injective maps and
// collect the image edge sets.
inline long long subgraph_copies(const Graph& f, const Graph& g) {
    const int k = f.order();
    const int n = g.order();
    if (k > n) return 0;
    std::set<std::vector<std::pair<int, int>>> copies;
    std::vector<int> image(k);
    std::vector<bool> used(n);
    auto extend = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (f.adjacent(i, j)) {
                        if (!g.adjacent(image[i], image[j])) return;
                        edges.emplace_back(std::min(image[i], image[j]), std::max(image[i], image[j]));
                    }
            std::sort(edges.begin(), edges.end());
            // Isolated vertices of f also pin down vertices, so include them.
            std::vector<int> verts(image.begin(), image.end());
            std::sort(verts.begin(), verts.end());
            for (int v : verts) edges.emplace_back(v, -1);
            copies.insert(edges);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            image[depth] = v;
            self(self, depth + 1);
            used[v] = false;
        }
    };
    extend(extend, 0);
    return static_cast<long long>(copies.size());
}

inline Graph remove_vertex(const Graph& g, int v) {
    Graph h(g.order() - 1);
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (i != v && j != v && g.adjacent(i, j)) h.add_edge(i - (i > v), j - (j > v));
    return h;
}

// Deck as a sorted list of brute-force codes.
inline std::vector<std::string> deck_codes(const Graph& g) {
    std::vector<std::string> out;
    for (int v = 0; v < g.order(); ++v) out.push_back(min_code(remove_vertex(g, v)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
