#pragma once

#include <cstdint>
#include <vector>

#include "terrex/terrain.hpp"

namespace terrex {

enum class ExtremaMode { plateau, strict };

// Which kernel runs the count. `automatic` picks the OpenMP kernel for large
// inputs and the serial one otherwise; `serial` is the reference
// implementation the parallel kernel is tested against.
enum class Exec { automatic, serial, parallel };

struct ExtremaReport {
    ExtremaMode mode = ExtremaMode::plateau;
    std::size_t locmin = 0;
    std::size_t locmax = 0;
    // Canonical: each component sorted ascending, components ordered by
    // smallest member. Strict mode lists singletons.
    std::vector<std::vector<VertexId>> min_components;
    std::vector<std::vector<VertexId>> max_components;
};

ExtremaReport count_extrema(const Triangulation& tri, const Realization& r, ExtremaMode mode,
                            Exec exec = Exec::automatic);

// Maximal connected equal-height components, canonically ordered.
std::vector<std::vector<VertexId>> flat_components(const Triangulation& tri, const Realization& r,
                                                   Exec exec = Exec::automatic);

// Count-only fast path used by the solvers; no component materialization.
std::size_t count_plateau_minima(const Triangulation& tri, const Realization& r);

namespace detail {
ExtremaReport count_extrema_serial(const Triangulation& tri, const Realization& r,
                                   ExtremaMode mode);
ExtremaReport count_extrema_parallel(const Triangulation& tri, const Realization& r,
                                     ExtremaMode mode);
}  // namespace detail

}  // namespace terrex
