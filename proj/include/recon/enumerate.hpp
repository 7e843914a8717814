#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

struct EnumerateOptions {
    bool triangle_free_only = false;
    int jobs = 1;
};

// One canonical representative per isomorphism class on n vertices
// (1 <= n <= 11), in a fixed order independent of `jobs`. Children of a
// parent are kept when the added vertex is equivalent to the last vertex of
// the child's canonical order.
std::vector<Graph> enumerate_nonisomorphic(int n, const EnumerateOptions& options = {});

// The canonical children of one parent on n - 1 vertices.
std::vector<Graph> canonical_children(const Graph& parent, bool triangle_free_only);

// Runs work(i) for i in [0, count) on `jobs` threads. Each index is handled
// exactly once; callers write results into slot i to keep output ordered.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& work);

}  // namespace recon
