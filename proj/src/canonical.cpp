#include "terrex/canonical.hpp"

#include "terrex/extrema.hpp"

namespace terrex {

CanonicalPair canonical_form(const ImpreciseTerrain& t) {
    // Both sweeps run on the original (F, C); Lemma-style preprocessing must
    // not chain one result into the other.
    CanonicalPair pair;
    pair.f_prime = minimize_minima(t).realization;
    pair.c_prime = minimize_maxima(t).realization;
    return pair;
}

ImpreciseTerrain canonical_terrain(const ImpreciseTerrain& t, const CanonicalPair& pair) {
    ImpreciseTerrain out;
    out.tri = t.tri;
    out.intervals.resize(t.vertex_count());
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        out.intervals[v] = {pair.f_prime[v], pair.c_prime[v]};
    }
    return out;
}

GapBounds gap_bounds(const ImpreciseTerrain& t, const CanonicalPair& pair) {
    const auto f = count_extrema(t.tri, pair.f_prime, ExtremaMode::plateau);
    const auto c = count_extrema(t.tri, pair.c_prime, ExtremaMode::plateau);
    GapBounds b;
    b.lower = f.locmin + c.locmax;
    b.upper = c.locmin + f.locmax;
    return b;
}

GapBounds gap_bounds(const ImpreciseTerrain& t) { return gap_bounds(t, canonical_form(t)); }

}  // namespace terrex
