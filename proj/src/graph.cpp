#include "recon/graph.hpp"

#include <algorithm>
#include <string>

#include "recon/errors.hpp"

namespace recon {

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
        fail(ErrorKind::OversizeGraph, "graph order " + std::to_string(n) + " outside 0.." +
                                           std::to_string(kMaxVertices));
    }
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += rows_[v].size();
    return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        fail(ErrorKind::MissingVertex, "edge endpoint outside vertex range");
    }
    if (u == v) fail(ErrorKind::HypothesisViolation, "loops are not allowed");
    rows_[u].insert(v);
    rows_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    rows_[u].erase(v);
    rows_[v].erase(u);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : rows_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> seq(n_);
    for (Vertex v = 0; v < n_; ++v) seq[v] = degree(v);
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return seq;
}

Graph Graph::permuted(const std::vector<Vertex>& perm) const {
    Graph out(n_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : rows_[u]) {
            if (u < v) out.add_edge(perm[u], perm[v]);
        }
    }
    return out;
}

Graph Graph::induced(VertexSet keep) const {
    std::array<Vertex, kMaxVertices> index{};
    int k = 0;
    for (Vertex v : keep) index[v] = k++;
    Graph out(k);
    for (Vertex u : keep) {
        for (Vertex v : rows_[u] & keep) {
            if (u < v) out.add_edge(index[u], index[v]);
        }
    }
    return out;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v) {
        if (a.rows_[v] != b.rows_[v]) return false;
    }
    return true;
}

Graph path_graph(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph petersen_graph() {
    // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

VertexSet reachable(const Graph& g, Vertex from, VertexSet within) {
    VertexSet seen = VertexSet::single(from);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= g.neighbors(v);
        next = (next & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.order();
    DistanceMatrix d(n);
    for (Vertex s = 0; s < n; ++s) {
        VertexSet seen = VertexSet::single(s);
        VertexSet frontier = seen;
        int depth = 0;
        while (!frontier.empty()) {
            for (Vertex v : frontier) d.at(s, v) = depth;
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            next -= seen;
            seen |= next;
            frontier = next;
            ++depth;
        }
    }
    return d;
}

int diameter(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    const DistanceMatrix d = distance_matrix(g);
    int best = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) best = std::max(best, d(u, v));
    return best;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return reachable(g, 0, g.vertices()) == g.vertices();
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (!rest.empty()) {
        VertexSet comp = reachable(g, rest.first(), within);
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

namespace {

bool is_complete(const Graph& g) {
    return g.size() * 2 == g.order() * (g.order() - 1);
}

void require_connected(const Graph& g) {
    if (!is_connected(g)) fail(ErrorKind::DisconnectedInput, "vertex connectivity of a disconnected graph");
}

bool disconnects(const Graph& g, VertexSet cut) {
    VertexSet rest = g.vertices() - cut;
    if (rest.size() < 2) return false;
    return reachable(g, rest.first(), rest) != rest;
}

// Calls visit(s) for every k-subset of 0..n-1 in increasing bit order.
template <typename Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
    if (k == 0) return visit(VertexSet{});
    if (k > n) return false;
    std::uint32_t s = (1u << k) - 1u;
    const std::uint32_t limit = 1u << n;
    while (s < limit) {
        if (visit(VertexSet(s))) return true;
        const std::uint32_t c = s & (~s + 1u);
        const std::uint32_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return false;
}

}  // namespace

int vertex_connectivity_by_subsets(const Graph& g) {
    require_connected(g);
    const int n = g.order();
    if (is_complete(g)) return n - 1;
    for (int k = 1; k <= n - 2; ++k) {
        if (for_each_subset(n, k, [&](VertexSet s) { return disconnects(g, s); })) return k;
    }
    return n - 1;
}

int local_connectivity(const Graph& g, Vertex s, Vertex t) {
    // Split every vertex v into v_in = 2v and v_out = 2v+1 joined by a unit
    // arc; each edge uv becomes u_out -> v_in and v_out -> u_in.
    const int n = g.order();
    const int nodes = 2 * n;
    std::vector<int> cap(static_cast<std::size_t>(nodes) * nodes, 0);
    auto arc = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a) * nodes + b]; };
    for (Vertex v = 0; v < n; ++v) arc(2 * v, 2 * v + 1) = (v == s || v == t) ? n : 1;
    for (auto [u, v] : g.edges()) {
        arc(2 * u + 1, 2 * v) = n;
        arc(2 * v + 1, 2 * u) = n;
    }
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> parent(nodes);
    while (true) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[source] = source;
        std::vector<int> queue{source};
        for (std::size_t head = 0; head < queue.size() && parent[sink] < 0; ++head) {
            const int a = queue[head];
            for (int b = 0; b < nodes; ++b) {
                if (parent[b] < 0 && arc(a, b) > 0) {
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if (parent[sink] < 0) break;
        for (int b = sink; b != source; b = parent[b]) {
            --arc(parent[b], b);
            ++arc(b, parent[b]);
        }
        ++flow;
    }
    return flow;
}

int vertex_connectivity_by_flow(const Graph& g) {
    require_connected(g);
    const int n = g.order();
    if (is_complete(g)) return n - 1;
    int best = n - 1;
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex t = s + 1; t < n; ++t) {
            if (!g.adjacent(s, t)) best = std::min(best, local_connectivity(g, s, t));
        }
    }
    return best;
}

int vertex_connectivity(const Graph& g) {
    return vertex_connectivity_by_subsets(g);
}

std::vector<VertexSet> cut_sets_of_size(const Graph& g, int size) {
    std::vector<VertexSet> out;
    for_each_subset(g.order(), size, [&](VertexSet s) {
        if (disconnects(g, s)) out.push_back(s);
        return false;
    });
    return out;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (VertexSet s : cut_sets_of_size(g, 1)) out.push_back(s.first());
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        if (g.neighbors(u).intersects(g.neighbors(v))) return false;
    }
    return true;
}

bool is_independent(const Graph& g, VertexSet s) {
    for (Vertex v : s) {
        if (g.neighbors(v).intersects(s)) return false;
    }
    return true;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    Bipartition out;
    VertexSet rest = g.vertices();
    while (!rest.empty()) {
        const Vertex root = rest.first();
        VertexSet side[2] = {VertexSet::single(root), VertexSet{}};
        VertexSet frontier = side[0];
        int colour = 0;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            if (next.intersects(side[colour])) return std::nullopt;
            colour ^= 1;
            next -= side[colour];
            side[colour] |= next;
            frontier = next;
        }
        if (!is_independent(g, side[0]) || !is_independent(g, side[1])) return std::nullopt;
        out.first |= side[0];
        out.second |= side[1];
        rest -= side[0] | side[1];
    }
    return out;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

Graph delete_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) fail(ErrorKind::MissingVertex, "vertex " + std::to_string(v) + " not present");
    VertexSet keep = g.vertices();
    keep.erase(v);
    return g.induced(keep);
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
        fail(ErrorKind::MissingEdge, "edge " + std::to_string(u) + "-" + std::to_string(v) + " not present");
    }
    Graph out = g;
    out.remove_edge(u, v);
    return out;
}

Graph add_vertex(const Graph& g, VertexSet neighbors) {
    const int n = g.order();
    Graph out(n + 1);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    for (Vertex v : neighbors) out.add_edge(v, n);
    return out;
}

bool in_g2(const Graph& g) { return g.order() >= 2 && diameter(g) == 2; }

bool in_g3(const Graph& g) {
    return g.order() >= 2 && diameter(g) == 3 && diameter(complement(g)) == 3;
}

}  // namespace recon
