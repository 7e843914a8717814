#include "recon/canon.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

#include "recon/graph6.hpp"

namespace recon {

Graph CanonicalCert::graph() const { return parse_graph6(bytes_); }

namespace {

using Code = std::array<std::uint64_t, 2>;
using Labels = std::array<std::uint8_t, kMaxVertices>;

struct Partition {
    std::array<VertexSet, kMaxVertices> cells{};
    int count = 0;

    bool discrete(int n) const { return count == n; }
};

// Splits cells by neighbour counts into other cells until the partition is
// equitable. Only the cell order and adjacency are consulted, so the result
// commutes with relabeling.
void refine(const Graph& g, Partition& p) {
    std::array<int, kMaxVertices> counts{};
restart:
    for (int s = 0; s < p.count; ++s) {
        const VertexSet splitter = p.cells[s];
        for (int c = 0; c < p.count; ++c) {
            const VertexSet cell = p.cells[c];
            if (cell.size() == 1) continue;
            int lo = kMaxVertices + 1;
            int hi = -1;
            for (Vertex v : cell) {
                counts[v] = (g.neighbors(v) & splitter).size();
                lo = std::min(lo, counts[v]);
                hi = std::max(hi, counts[v]);
            }
            if (lo == hi) continue;
            std::array<VertexSet, kMaxVertices> pieces{};
            int made = 0;
            for (int value = lo; value <= hi; ++value) {
                VertexSet piece;
                for (Vertex v : cell)
                    if (counts[v] == value) piece.insert(v);
                if (!piece.empty()) pieces[made++] = piece;
            }
            for (int k = p.count - 1; k > c; --k) p.cells[k + made - 1] = p.cells[k];
            for (int k = 0; k < made; ++k) p.cells[c + k] = pieces[k];
            p.count += made - 1;
            goto restart;
        }
    }
}

Code encode(const Graph& g, const Labels& lab, int n) {
    Code code{0, 0};
    int k = 0;
    for (int j = 1; j < n; ++j) {
        const VertexSet row = g.neighbors(lab[j]);
        for (int i = 0; i < j; ++i, ++k) {
            if (row.contains(lab[i])) code[k >> 6] |= std::uint64_t{1} << (63 - (k & 63));
        }
    }
    return code;
}

class Search {
public:
    explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

    Labels run() {
        Partition root;
        if (n_ > 0) {
            root.cells[0] = g_.vertices();
            root.count = 1;
        }
        path_.clear();
        descend(root);
        return best_lab_;
    }

private:
    void descend(Partition p) {
        refine(g_, p);
        if (p.discrete(n_)) {
            leaf(p);
            return;
        }
        int target = 0;
        while (p.cells[target].size() == 1) ++target;
        const VertexSet cell = p.cells[target];

        VertexSet explored;
        for (Vertex v : cell) {
            if (!explored.empty() && equivalent_to_explored(v, explored)) continue;
            explored.insert(v);
            Partition child = p;
            for (int k = child.count - 1; k > target; --k) child.cells[k + 1] = child.cells[k];
            child.cells[target] = VertexSet::single(v);
            child.cells[target + 1] = cell - VertexSet::single(v);
            ++child.count;
            path_.push_back(v);
            descend(child);
            path_.pop_back();
        }
    }

    // True if v shares an orbit with an explored sibling under the group
    // generated by the known automorphisms that fix the current path.
    bool equivalent_to_explored(Vertex v, VertexSet explored) const {
        std::array<std::uint8_t, kMaxVertices> root{};
        std::iota(root.begin(), root.begin() + n_, 0);
        auto find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        bool any = false;
        for (const Labels& gamma : autos_) {
            bool fixes = true;
            for (Vertex w : path_) {
                if (gamma[w] != w) { fixes = false; break; }
            }
            if (!fixes) continue;
            any = true;
            for (int x = 0; x < n_; ++x) {
                const int a = find(x);
                const int b = find(gamma[x]);
                if (a != b) root[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
            }
        }
        if (!any) return false;
        const int rv = find(v);
        for (Vertex u : explored)
            if (find(u) == rv) return true;
        return false;
    }

    void record_automorphism(const Labels& from, const Labels& to) {
        Labels gamma{};
        bool identity = true;
        for (int i = 0; i < n_; ++i) {
            gamma[from[i]] = to[i];
            if (from[i] != to[i]) identity = false;
        }
        if (!identity) autos_.push_back(gamma);
    }

    void leaf(const Partition& p) {
        Labels lab{};
        for (int i = 0; i < n_; ++i) lab[i] = static_cast<std::uint8_t>(p.cells[i].first());
        const Code code = encode(g_, lab, n_);
        if (!have_first_) {
            have_first_ = true;
            first_ = best_ = code;
            first_lab_ = best_lab_ = lab;
            return;
        }
        if (code == first_) record_automorphism(first_lab_, lab);
        if (code == best_) {
            if (best_lab_ != first_lab_) record_automorphism(best_lab_, lab);
        } else if (code < best_) {
            best_ = code;
            best_lab_ = lab;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<Vertex> path_;
    std::vector<Labels> autos_;
    bool have_first_ = false;
    Code first_{};
    Code best_{};
    Labels first_lab_{};
    Labels best_lab_{};
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
    const int n = g.order();
    Search search(g);
    const Labels lab = search.run();
    CanonicalLabeling out;
    out.order.assign(lab.begin(), lab.begin() + n);
    std::vector<Vertex> position(n);
    for (int i = 0; i < n; ++i) position[lab[i]] = i;
    out.graph = g.permuted(position);
    out.cert = CanonicalCert(emit_graph6(out.graph));
    return out;
}

CanonicalCert canonical_form(const Graph& g) { return canonical_labeling(g).cert; }

Graph canonical_graph(const Graph& g) { return canonical_labeling(g).graph; }

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace recon
