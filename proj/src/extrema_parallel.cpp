#include <algorithm>
#include <atomic>
#include <cstdint>

#include "terrex/extrema.hpp"
#include "terrex/types.hpp"
#include "terrex/union_find.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace terrex::detail {
namespace {

inline void mark(std::vector<std::uint8_t>& flags, std::uint32_t i) {
    std::atomic_ref<std::uint8_t> ref(flags[i]);
    if (ref.load(std::memory_order_relaxed) == 0) ref.store(1, std::memory_order_relaxed);
}

}  // namespace

ExtremaReport count_extrema_parallel(const Triangulation& tri, const Realization& r,
                                     ExtremaMode mode) {
    if (r.size() != tri.vertex_count())
        throw InputError("realization has " + std::to_string(r.size()) + " heights for " +
                         std::to_string(tri.vertex_count()) + " vertices");
    const std::int64_t n = static_cast<std::int64_t>(tri.vertex_count());
    ExtremaReport rep;
    rep.mode = mode;

    if (mode == ExtremaMode::strict) {
        std::vector<std::uint8_t> is_min(n, 0), is_max(n, 0);
        std::size_t locmin = 0, locmax = 0;
#pragma omp parallel for schedule(static) reduction(+ : locmin, locmax)
        for (std::int64_t v = 0; v < n; ++v) {
            bool lower = false, higher = false;
            for (VertexId u : tri.neighbors(static_cast<VertexId>(v))) {
                lower |= r[u] < r[v];
                higher |= r[u] > r[v];
            }
            if (!lower) {
                is_min[v] = 1;
                ++locmin;
            }
            if (!higher) {
                is_max[v] = 1;
                ++locmax;
            }
        }
        rep.locmin = locmin;
        rep.locmax = locmax;
        rep.min_components.reserve(locmin);
        rep.max_components.reserve(locmax);
        for (VertexId v = 0; v < n; ++v) {
            if (is_min[v]) rep.min_components.push_back({v});
            if (is_max[v]) rep.max_components.push_back({v});
        }
        return rep;
    }

    // Plateau mode: connected components over equal-height edges, then
    // per-component lower/higher flags, all in parallel passes.
    AtomicUnionFind uf(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < n; ++v) {
        for (VertexId u : tri.neighbors(static_cast<VertexId>(v))) {
            if (u > v && r[u] == r[v]) uf.unite(static_cast<std::uint32_t>(v), u);
        }
    }

    std::vector<std::uint32_t> root(n);
    std::vector<std::uint8_t> has_lower(n, 0), has_higher(n, 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < n; ++v) {
        root[v] = uf.find(static_cast<std::uint32_t>(v));
    }
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < n; ++v) {
        bool lower = false, higher = false;
        for (VertexId u : tri.neighbors(static_cast<VertexId>(v))) {
            lower |= r[u] < r[v];
            higher |= r[u] > r[v];
        }
        if (lower) mark(has_lower, root[v]);
        if (higher) mark(has_higher, root[v]);
    }

    // Group members by root with a counting sort; roots are component
    // minima of vertex ids, so the ordering is canonical.
    std::vector<std::uint32_t> comp_index(n, 0);
    std::uint32_t count = 0;
    for (std::int64_t v = 0; v < n; ++v) {
        if (root[v] == static_cast<std::uint32_t>(v)) comp_index[v] = count++;
    }
    std::vector<std::uint32_t> sizes(count, 0);
    for (std::int64_t v = 0; v < n; ++v) ++sizes[comp_index[root[v]]];

    std::vector<std::vector<VertexId>> groups(count);
    for (std::uint32_t c = 0; c < count; ++c) groups[c].reserve(sizes[c]);
    for (VertexId v = 0; v < n; ++v) groups[comp_index[root[v]]].push_back(v);

    for (std::uint32_t c = 0; c < count; ++c) {
        const std::uint32_t rt = groups[c].front();
        const bool mn = !has_lower[rt];
        const bool mx = !has_higher[rt];
        if (mn) {
            ++rep.locmin;
            rep.min_components.push_back(groups[c]);
        }
        if (mx) {
            ++rep.locmax;
            rep.max_components.push_back(groups[c]);
        }
    }
    return rep;
}

}  // namespace terrex::detail
