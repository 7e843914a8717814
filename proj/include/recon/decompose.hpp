#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

// Components of G - S, ordered by lowest vertex.
struct ComponentPartition {
    VertexSet cut;
    std::vector<VertexSet> components;
    std::vector<bool> trivial;

    int nontrivial_count() const;
    VertexSet trivial_vertices() const;
};

ComponentPartition components_after_cut(const Graph& g, VertexSet s);

// C_i(T): vertices of component i whose neighbourhood in S is exactly T.
class ClassTable {
public:
    using Key = std::pair<std::size_t, VertexSet>;

    void assign(std::size_t component, VertexSet neighbours_in_cut, Vertex v);
    // Empty set when no vertex of that component has that neighbourhood.
    VertexSet at(std::size_t component, VertexSet neighbours_in_cut) const;
    const std::map<Key, VertexSet>& classes() const { return classes_; }

private:
    std::map<Key, VertexSet> classes_;
};

ClassTable class_table(const Graph& g, VertexSet s, const ComponentPartition& cp);

enum class BCase { Case1, Case2, Case3 };
const char* to_string(BCase c);

// View of a card H = G - x1 split by the 2-cut {x2, x3}. Indices 1, 2, 3 in
// the field names refer to x1, x2, x3.
struct BSetPartition {
    VertexSet c1;              // the nontrivial component of H - {x2, x3}; empty if none
    VertexSet trivial;         // vertices of the trivial components
    VertexSet c1_1;            // C1(1): adjacent to neither x2 nor x3
    VertexSet c1_23;           // C1({2,3})
    VertexSet a2, a3;
    VertexSet l_x2, l_x3;
    VertexSet b2, b3, b12, b13;  // filled for Case1 and Case2 only
    BCase tag = BCase::Case3;
    bool resolved() const { return tag != BCase::Case3; }
};

// d_c1_x1 is the degree of x1 into C1, i.e. d_G(x1) minus the number of
// trivial components. Throws NotACut or MultipleNontrivial.
BSetPartition b_set_partition(const Graph& h, Vertex x2, Vertex x3, int d_c1_x1);

// Structural facts forced for a triangle-free diameter-2 graph with
// connectivity 3 and cut set {x1, x2, x3}. Returns the violated facts.
std::vector<std::string> check_k3_cut_structure(const Graph& g, Vertex x1, Vertex x2, Vertex x3);

}  // namespace recon
