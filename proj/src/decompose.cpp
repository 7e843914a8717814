#include "recon/decompose.hpp"

#include <string>

#include "recon/errors.hpp"

namespace recon {

int ComponentPartition::nontrivial_count() const {
    int count = 0;
    for (bool t : trivial) count += t ? 0 : 1;
    return count;
}

VertexSet ComponentPartition::trivial_vertices() const {
    VertexSet out;
    for (std::size_t i = 0; i < components.size(); ++i)
        if (trivial[i]) out |= components[i];
    return out;
}

ComponentPartition components_after_cut(const Graph& g, VertexSet s) {
    ComponentPartition cp;
    cp.cut = s;
    cp.components = connected_components(g, g.vertices() - s);
    for (VertexSet c : cp.components) cp.trivial.push_back(c.size() == 1);
    return cp;
}

void ClassTable::assign(std::size_t component, VertexSet neighbours_in_cut, Vertex v) {
    classes_[{component, neighbours_in_cut}].insert(v);
}

VertexSet ClassTable::at(std::size_t component, VertexSet neighbours_in_cut) const {
    auto it = classes_.find({component, neighbours_in_cut});
    return it == classes_.end() ? VertexSet{} : it->second;
}

ClassTable class_table(const Graph& g, VertexSet s, const ComponentPartition& cp) {
    ClassTable table;
    for (std::size_t i = 0; i < cp.components.size(); ++i) {
        for (Vertex v : cp.components[i]) table.assign(i, g.neighbors(v) & s, v);
    }
    return table;
}

const char* to_string(BCase c) {
    switch (c) {
    case BCase::Case1: return "CASE1";
    case BCase::Case2: return "CASE2";
    case BCase::Case3: return "CASE3";
    }
    return "?";
}

namespace {

VertexSet neighbours_of_set(const Graph& g, VertexSet s) {
    VertexSet out;
    for (Vertex v : s) out |= g.neighbors(v);
    return out;
}

// Vertices of `side` missing at least one neighbour in `other`.
VertexSet not_fully_joined(const Graph& g, VertexSet side, VertexSet other) {
    VertexSet out;
    for (Vertex v : side)
        if (!other.subset_of(g.neighbors(v))) out.insert(v);
    return out;
}

bool complete_join(const Graph& g, VertexSet a, VertexSet b) {
    for (Vertex v : a)
        if (!b.subset_of(g.neighbors(v))) return false;
    return true;
}

bool no_edges_between(const Graph& g, VertexSet a, VertexSet b) {
    for (Vertex v : a)
        if (g.neighbors(v).intersects(b)) return false;
    return true;
}

}  // namespace

BSetPartition b_set_partition(const Graph& h, Vertex x2, Vertex x3, int d_c1_x1) {
    const VertexSet pair{x2, x3};
    const ComponentPartition cp = components_after_cut(h, pair);
    if (cp.components.size() < 2) {
        fail(ErrorKind::NotACut, "{" + std::to_string(x2) + "," + std::to_string(x3) + "} does not disconnect the card");
    }
    if (cp.nontrivial_count() > 1) {
        fail(ErrorKind::MultipleNontrivial, "card minus the 2-cut has more than one nontrivial component");
    }

    BSetPartition b;
    b.trivial = cp.trivial_vertices();
    for (std::size_t i = 0; i < cp.components.size(); ++i)
        if (!cp.trivial[i]) b.c1 = cp.components[i];

    const VertexSet nx2 = h.neighbors(x2);
    const VertexSet nx3 = h.neighbors(x3);
    b.c1_1 = b.c1 - nx2 - nx3;
    b.c1_23 = b.c1 & nx2 & nx3;
    const VertexSet only2 = (b.c1 & nx2) - nx3;
    const VertexSet only3 = (b.c1 & nx3) - nx2;
    const VertexSet near_c1_1 = neighbours_of_set(h, b.c1_1);
    b.a2 = only2 & near_c1_1;
    b.a3 = only3 & near_c1_1;
    b.l_x2 = only2 - b.a2;
    b.l_x3 = only3 - b.a3;

    const VertexSet loose2 = not_fully_joined(h, b.l_x2, b.l_x3);
    const VertexSet loose3 = not_fully_joined(h, b.l_x3, b.l_x2);
    if (!loose2.empty() && !loose3.empty()) {
        b.tag = BCase::Case1;
        b.b12 = loose2;
        b.b13 = loose3;
        b.b2 = b.l_x2 - loose2;
        b.b3 = b.l_x3 - loose3;
    } else if (b.c1_1.size() == d_c1_x1) {
        b.tag = BCase::Case2;
        b.b2 = b.l_x2;
        b.b3 = b.l_x3;
    } else {
        b.tag = BCase::Case3;
    }
    return b;
}

std::vector<std::string> check_k3_cut_structure(const Graph& g, Vertex x1, Vertex x2, Vertex x3) {
    std::vector<std::string> violated;
    const VertexSet s{x1, x2, x3};
    const ComponentPartition cp = components_after_cut(g, s);
    if (cp.components.size() < 2) {
        violated.emplace_back("S is not a cut set");
        return violated;
    }
    if (cp.nontrivial_count() > 1) violated.emplace_back("G-S has more than one nontrivial component");
    if (!complete_join(g, cp.trivial_vertices(), s)) violated.emplace_back("a trivial component misses a vertex of S");
    if (cp.nontrivial_count() != 1) return violated;

    std::size_t c1_index = 0;
    while (cp.trivial[c1_index]) ++c1_index;
    const ClassTable table = class_table(g, s, cp);
    auto cls = [&](std::initializer_list<Vertex> t) { return table.at(c1_index, VertexSet(t)); };

    if (!table.at(c1_index, VertexSet{}).empty()) violated.emplace_back("C1(empty) is nonempty");
    if (!table.at(c1_index, s).empty()) violated.emplace_back("C1(S) is nonempty");

    const VertexSet c1_1 = cls({x1});
    const VertexSet c1_2 = cls({x2});
    const VertexSet c1_3 = cls({x3});
    const VertexSet c1_12 = cls({x1, x2});
    const VertexSet c1_13 = cls({x1, x3});
    const VertexSet near = neighbours_of_set(g, c1_1);
    const VertexSet a2 = (c1_2 | c1_12) & near;
    const VertexSet a3 = (c1_3 | c1_13) & near;
    if (g.neighbors(x1).intersects(a2 | a3)) violated.emplace_back("a vertex of A2 or A3 is adjacent to x1");
    if (a2.intersects(c1_12) || a3.intersects(c1_13)) violated.emplace_back("A-sets meet C1({1,j})");

    const VertexSet b2 = c1_2 - a2;
    const VertexSet b3 = c1_3 - a3;
    const VertexSet b12 = c1_12 - a2;
    const VertexSet b13 = c1_13 - a3;
    for (VertexSet part : {b2, b3, b12, b13}) {
        if (!is_independent(g, part)) violated.emplace_back("a B-set is not independent");
    }
    if (!no_edges_between(g, b12, b2 | b13) || !no_edges_between(g, b13, b3))
        violated.emplace_back("forbidden edge among B-sets");
    if (!complete_join(g, b2, b13)) violated.emplace_back("B2 is not completely joined to B13");
    if (!complete_join(g, b3, b12)) violated.emplace_back("B3 is not completely joined to B12");
    if (!complete_join(g, b2, b3)) violated.emplace_back("B2 is not completely joined to B3");
    return violated;
}

}  // namespace recon
