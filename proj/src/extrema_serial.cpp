#include <algorithm>

#include "terrex/extrema.hpp"
#include "terrex/types.hpp"

namespace terrex {
namespace {

void check_sizes(const Triangulation& tri, const Realization& r) {
    if (r.size() != tri.vertex_count())
        throw InputError("realization has " + std::to_string(r.size()) + " heights for " +
                         std::to_string(tri.vertex_count()) + " vertices");
}

// Labels every vertex with the id of its flat component (smallest member
// index first, so labels are canonical) and returns the component count.
std::size_t label_components(const Triangulation& tri, const Realization& r,
                             std::vector<std::uint32_t>& comp) {
    const std::size_t n = tri.vertex_count();
    comp.assign(n, kNoVertex);
    std::vector<VertexId> stack;
    std::uint32_t next = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] != kNoVertex) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : tri.neighbors(v)) {
                if (comp[u] == kNoVertex && r[u] == r[v]) {
                    comp[u] = next;
                    stack.push_back(u);
                }
            }
        }
        ++next;
    }
    return next;
}

std::vector<std::vector<VertexId>> gather(const std::vector<std::uint32_t>& comp,
                                          std::size_t count) {
    std::vector<std::vector<VertexId>> out(count);
    for (VertexId v = 0; v < comp.size(); ++v) out[comp[v]].push_back(v);
    return out;  // members ascending, components ordered by first member
}

}  // namespace

namespace detail {

ExtremaReport count_extrema_serial(const Triangulation& tri, const Realization& r,
                                   ExtremaMode mode) {
    check_sizes(tri, r);
    const std::size_t n = tri.vertex_count();
    ExtremaReport rep;
    rep.mode = mode;

    if (mode == ExtremaMode::strict) {
        for (VertexId v = 0; v < n; ++v) {
            bool lower = false, higher = false;
            for (VertexId u : tri.neighbors(v)) {
                lower |= r[u] < r[v];
                higher |= r[u] > r[v];
            }
            if (!lower) {
                ++rep.locmin;
                rep.min_components.push_back({v});
            }
            if (!higher) {
                ++rep.locmax;
                rep.max_components.push_back({v});
            }
        }
        return rep;
    }

    std::vector<std::uint32_t> comp;
    const std::size_t count = label_components(tri, r, comp);
    std::vector<char> has_lower(count, 0), has_higher(count, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : tri.neighbors(v)) {
            if (r[u] < r[v]) has_lower[comp[v]] = 1;
            if (r[u] > r[v]) has_higher[comp[v]] = 1;
        }
    }
    auto groups = gather(comp, count);
    for (std::size_t c = 0; c < count; ++c) {
        if (!has_lower[c]) {
            ++rep.locmin;
            rep.min_components.push_back(groups[c]);
        }
        if (!has_higher[c]) {
            ++rep.locmax;
            rep.max_components.push_back(groups[c]);
        }
    }
    return rep;
}

}  // namespace detail

std::size_t count_plateau_minima(const Triangulation& tri, const Realization& r) {
    check_sizes(tri, r);
    const std::size_t n = tri.vertex_count();
    std::vector<std::uint32_t> comp;
    const std::size_t count = label_components(tri, r, comp);
    std::vector<char> has_lower(count, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : tri.neighbors(v)) {
            if (r[u] < r[v]) has_lower[comp[v]] = 1;
        }
    }
    std::size_t mins = 0;
    for (std::size_t c = 0; c < count; ++c) mins += !has_lower[c];
    return mins;
}

std::vector<std::vector<VertexId>> flat_components(const Triangulation& tri, const Realization& r,
                                                   Exec exec) {
    (void)exec;  // partition extraction is memory-bound; one serial pass
    check_sizes(tri, r);
    std::vector<std::uint32_t> comp;
    const std::size_t count = label_components(tri, r, comp);
    return gather(comp, count);
}

ExtremaReport count_extrema(const Triangulation& tri, const Realization& r, ExtremaMode mode,
                            Exec exec) {
    switch (exec) {
        case Exec::serial:
            return detail::count_extrema_serial(tri, r, mode);
        case Exec::parallel:
            return detail::count_extrema_parallel(tri, r, mode);
        case Exec::automatic:
        default:
            if (tri.vertex_count() >= 1u << 15)
                return detail::count_extrema_parallel(tri, r, mode);
            return detail::count_extrema_serial(tri, r, mode);
    }
}

}  // namespace terrex
