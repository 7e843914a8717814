#include "recon/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <unordered_set>

#include "recon/canon.hpp"
#include "recon/errors.hpp"

namespace recon {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& work) {
    const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard<std::mutex> hold(failure_lock);
                    if (!failure) failure = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<Graph> canonical_children(const Graph& parent, bool triangle_free_only) {
    const int p = parent.order();
    const int max_parent_degree = p == 0 ? 0 : parent.degree_sequence().front();
    const CanonicalCert parent_cert = canonical_form(parent);
    std::unordered_set<CanonicalCert> seen;
    std::vector<Graph> out;
    for (std::uint32_t bits = 0; bits < (1u << p); ++bits) {
        const VertexSet x(bits);
        const int k = x.size();
        // The new vertex must end up with maximum degree.
        if (k < max_parent_degree) continue;
        bool ok = true;
        for (Vertex v : x)
            if (parent.degree(v) + 1 > k) ok = false;
        if (!ok) continue;
        if (triangle_free_only && !is_independent(parent, x)) continue;

        const Graph child = add_vertex(parent, x);
        const CanonicalLabeling lab = canonical_labeling(child);
        const Vertex last = lab.order.back();
        if (last != p && canonical_form(delete_vertex(child, last)) != parent_cert) continue;
        if (seen.insert(lab.cert).second) out.push_back(lab.graph);
    }
    return out;
}

std::vector<Graph> enumerate_nonisomorphic(int n, const EnumerateOptions& options) {
    if (n < 1 || n > 11) fail(ErrorKind::CapExceeded, "enumeration supports 1 <= n <= 11");
    std::vector<Graph> level{Graph(1)};
    for (int order = 2; order <= n; ++order) {
        std::vector<std::vector<Graph>> shards(level.size());
        parallel_for(level.size(), options.jobs, [&](std::size_t i) {
            shards[i] = canonical_children(level[i], options.triangle_free_only);
        });
        std::vector<Graph> next;
        for (auto& shard : shards)
            for (Graph& g : shard) next.push_back(std::move(g));
        level = std::move(next);
    }
    return level;
}

}  // namespace recon
