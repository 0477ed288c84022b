#pragma once

#include "terrex/sweep.hpp"
#include "terrex/terrain.hpp"

namespace terrex {

// F' = floor after optimally raising minima, C' = ceiling after optimally
// lowering maxima. Both are realizations of the original terrain and
// F <= F' <= C' <= C pointwise.
struct CanonicalPair {
    Realization f_prime;
    Realization c_prime;
};

struct GapBounds {
    std::size_t lower = 0;  // locmin(F') + locmax(C')
    std::size_t upper = 0;  // locmin(C') + locmax(F')
};

CanonicalPair canonical_form(const ImpreciseTerrain& t);

// The canonical pair viewed as an imprecise terrain [F'(v), C'(v)].
ImpreciseTerrain canonical_terrain(const ImpreciseTerrain& t, const CanonicalPair& pair);

GapBounds gap_bounds(const ImpreciseTerrain& t);
GapBounds gap_bounds(const ImpreciseTerrain& t, const CanonicalPair& pair);

}  // namespace terrex
