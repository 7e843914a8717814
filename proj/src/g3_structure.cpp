#include <string>

#include "recon/decompose.hpp"
#include "recon/errors.hpp"
#include "recon/reconstruct.hpp"

namespace recon {

namespace {

void require(bool fact, const std::string& what) {
    if (!fact) fail(ErrorKind::AssertionFailure, what);
}

bool proper_bipartition(const Graph& g, const Bipartition& b) {
    if ((b.first & b.second).size() != 0 || (b.first | b.second) != g.vertices()) return false;
    return is_independent(g, b.first) && is_independent(g, b.second);
}

}  // namespace

G3Structure derive_g3_structure(const Graph& g, VertexSet s, bool check_preconditions) {
    if (check_preconditions) {
        if (!is_triangle_free(g)) fail(ErrorKind::HypothesisViolation, "graph has a triangle");
        if (!in_g3(g)) fail(ErrorKind::HypothesisViolation, "graph or its complement does not have diameter 3");
        const int kappa = vertex_connectivity(g);
        if (kappa < 3) fail(ErrorKind::HypothesisViolation, "connectivity below 3");
        if (s.size() != kappa || is_connected(g.induced(g.vertices() - s))) {
            fail(ErrorKind::HypothesisViolation, "s is not a minimum cut");
        }
    }

    const DistanceMatrix far = distance_matrix(complement(g));
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
            if (far(a, b) == 3) pairs.emplace_back(a, b);
    require(!pairs.empty(), "the complement has a pair at distance 3");
    for (auto [a, b] : pairs) {
        require(g.adjacent(a, b), "every far pair is an edge of G");
        require(s.contains(a) || s.contains(b), "no far pair lies outside the cut");
    }

    const ComponentPartition cp = components_after_cut(g, s);
    G3Structure out;
    out.far_pairs = static_cast<int>(pairs.size());
    out.nontrivial_components = cp.nontrivial_count();

    if (is_independent(g, s)) {
        out.kind = G3Structure::Kind::IndependentCut;
        auto [a, b] = pairs.front();
        require(s.contains(a) != s.contains(b), "far pair has exactly one endpoint in an independent cut");
        const Vertex x1 = s.contains(a) ? a : b;
        const Vertex u = s.contains(a) ? b : a;
        out.far_pair = {x1, u};

        require(cp.nontrivial_count() == 1, "exactly one nontrivial component");
        std::size_t c1 = 0;
        while (cp.trivial[c1]) ++c1;
        require(cp.components[c1].contains(u), "u lies in the nontrivial component");
        require(s.subset_of(g.neighbors(u)), "u is adjacent to every cut vertex");

        const ClassTable table = class_table(g, s, cp);
        const VertexSet empty_class = table.at(c1, VertexSet{});
        require(empty_class.size() > 0, "C1(empty) is nonempty");
        for (const auto& [key, members] : table.classes()) {
            if (key.first != c1 || key.second.size() == 0 || members.size() == 0) continue;
            require(key.second.contains(x1), "every nonempty class of C1 other than C1(empty) contains x1");
        }
        require(empty_class.subset_of(g.neighbors(u)), "u is adjacent to all of C1(empty)");
        require(is_independent(g, empty_class), "C1(empty) is independent");

        out.parts.first = (cp.components[c1] - empty_class) | cp.trivial_vertices();
        out.parts.second = empty_class | s;
    } else {
        out.kind = G3Structure::Kind::CutWithEdge;
        require(cp.nontrivial_count() == static_cast<int>(cp.components.size()), "every component is nontrivial");
        for (auto [a, b] : pairs) require(s.contains(a) && s.contains(b), "every far pair lies inside the cut");
        auto [x1, x2] = pairs.front();
        out.far_pair = {x1, x2};
        require(g.adjacent(x1, x2), "x1 and x2 are adjacent");
        const VertexSet n1 = g.neighbors(x1);
        const VertexSet n2 = g.neighbors(x2);
        require(!n1.intersects(n2), "no vertex is adjacent to both x1 and x2");
        require((n1 | n2) == g.vertices(), "every vertex is adjacent to x1 or x2");
        out.parts.first = n1;
        out.parts.second = n2;
    }
    require(proper_bipartition(g, out.parts), "the derived parts form a bipartition");
    return out;
}

}  // namespace recon
