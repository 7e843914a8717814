#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace recon {

inline constexpr int kMaxVertices = 16;

using Vertex = int;

// Subset of 0..kMaxVertices-1, one bit per vertex.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> members) {
        for (Vertex v : members) insert(v);
    }

    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 32 ? ~0u : ((1u << n) - 1u));
    }
    static constexpr VertexSet single(Vertex v) { return VertexSet(1u << v); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr Vertex first() const { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) { bits_ |= 1u << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(1u << v); }

    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

    std::vector<Vertex> members() const;

    class iterator {
    public:
        constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint32_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint32_t bits_ = 0;
};

// Labeled simple undirected graph on vertices 0..n-1, n <= 16.
// Rows are bitsets, so adjacency is symmetric and loop-free by construction
// through the public mutators.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    int order() const { return n_; }
    int size() const;  // edge count

    bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
    VertexSet neighbors(Vertex v) const { return rows_[v]; }
    int degree(Vertex v) const { return rows_[v].size(); }
    VertexSet vertices() const { return VertexSet::range(n_); }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    std::vector<std::pair<Vertex, Vertex>> edges() const;
    std::vector<int> degree_sequence() const;  // sorted descending

    // Relabel: vertex v of this graph becomes perm[v] in the result.
    Graph permuted(const std::vector<Vertex>& perm) const;
    Graph induced(VertexSet keep) const;  // order-preserving compaction

    friend bool operator==(const Graph& a, const Graph& b);

private:
    int n_ = 0;
    std::array<VertexSet, kMaxVertices> rows_{};
};

inline constexpr int kInfinity = 1 << 20;

// Hop counts; kInfinity marks pairs in different components.
class DistanceMatrix {
public:
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kInfinity) {}
    int order() const { return n_; }
    int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    int& at(Vertex u, Vertex v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }

private:
    int n_;
    std::vector<int> d_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
Graph empty_graph(int n);

DistanceMatrix distance_matrix(const Graph& g);
VertexSet reachable(const Graph& g, Vertex from, VertexSet within);
int diameter(const Graph& g);  // kInfinity iff disconnected (n >= 2)
bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);

// Minimum size of a vertex cut; n-1 for complete graphs.
// Throws DisconnectedInput on disconnected input.
int vertex_connectivity(const Graph& g);
int vertex_connectivity_by_subsets(const Graph& g);
int vertex_connectivity_by_flow(const Graph& g);
// Maximum number of internally disjoint s-t paths, s and t non-adjacent.
int local_connectivity(const Graph& g, Vertex s, Vertex t);
// All cut sets of the given size, in increasing bit order.
std::vector<VertexSet> cut_sets_of_size(const Graph& g, int size);
std::vector<Vertex> cut_vertices(const Graph& g);

Graph complement(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_independent(const Graph& g, VertexSet s);

struct Bipartition {
    VertexSet first;
    VertexSet second;
    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};
// Per component, the color class holding the component's lowest vertex goes
// into `first`.
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_edge(const Graph& g, Vertex u, Vertex v);
Graph add_vertex(const Graph& g, VertexSet neighbors);

// diam(G) = 2
bool in_g2(const Graph& g);
// diam(G) = diam(complement) = 3
bool in_g3(const Graph& g);

}  // namespace recon
