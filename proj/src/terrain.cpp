#include "terrex/terrain.hpp"

#include <cmath>
#include <string>

namespace terrex {

ValidationReport validate(const ImpreciseTerrain& t) {
    ValidationReport rep;
    const std::size_t n = t.tri.vertex_count();

    if (t.intervals.size() != n) {
        rep.problems.push_back("interval count " + std::to_string(t.intervals.size()) +
                               " does not match vertex count " + std::to_string(n));
    }
    const std::size_t m = std::min(t.intervals.size(), n);
    for (std::size_t v = 0; v < m; ++v) {
        const auto& iv = t.intervals[v];
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
            rep.problems.push_back("non-finite interval at vertex " + std::to_string(v));
        } else if (iv.lo > iv.hi) {
            rep.problems.push_back("lo > hi at vertex " + std::to_string(v));
        }
    }

    std::size_t ti = 0;
    for (const Triangle& tr : t.tri.triangles()) {
        if (tr.a >= n || tr.b >= n || tr.c >= n) {
            rep.problems.push_back("dangling reference in triangle " + std::to_string(ti));
        } else if (tr.a == tr.b || tr.b == tr.c || tr.a == tr.c) {
            rep.problems.push_back("degenerate triangle " + std::to_string(ti));
        }
        ++ti;
    }

    if (n >= 3 && t.tri.edge_count() > 3 * n - 6) {
        rep.problems.push_back("edge count " + std::to_string(t.tri.edge_count()) +
                               " exceeds planar bound 3n-6");
    }
    if (n > 0 && t.tri.triangles().empty()) {
        rep.problems.push_back("no triangles");
    }
    for (VertexId v = 0; v < n; ++v) {
        if (t.tri.degree(v) == 0) {
            rep.problems.push_back("isolated vertex " + std::to_string(v));
        }
    }
    return rep;
}

ImpreciseTerrain negate(const ImpreciseTerrain& t) {
    ImpreciseTerrain out = t;
    for (auto& iv : out.intervals) {
        const double lo = iv.lo, hi = iv.hi;
        iv.lo = -hi;
        iv.hi = -lo;
    }
    return out;
}

Realization negate(const Realization& r) {
    Realization out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = -r[i];
    return out;
}

bool realization_valid(const ImpreciseTerrain& t, const Realization& r) {
    if (r.size() != t.intervals.size()) return false;
    for (std::size_t v = 0; v < r.size(); ++v) {
        if (!(t.intervals[v].lo <= r[v] && r[v] <= t.intervals[v].hi)) return false;
    }
    return true;
}

}  // namespace terrex
