#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "terrex/colored_graph.hpp"
#include "terrex/terrain.hpp"

namespace terrex {

struct SearchLimits {
    std::size_t max_free = 64;             // vertices the search may branch on
    std::uint64_t node_budget = 20'000'000;  // assignments tried
};

struct OptimalResult {
    Realization realization;
    std::size_t extrema = 0;  // locmin + locmax of the realization
    std::uint64_t nodes_explored = 0;
    bool proven_optimal = false;
};

// Exact minimizing-extrema by branch and bound over interval-endpoint
// heights. Canonical-form preprocessing is applied internally. With
// refine_grid the candidate set also contains midpoints between consecutive
// distinct endpoints (the guard for the endpoint-sufficiency conjecture).
OptimalResult exact_min_extrema(const ImpreciseTerrain& t, const SearchLimits& limits = {},
                                bool refine_grid = false);

// Exhaustive minimum of plateau local minima over per-vertex endpoint
// heights. Oracle: throws BudgetError instead of returning an unproven
// answer.
std::size_t brute_force_min_minima(const ImpreciseTerrain& t, const SearchLimits& limits = {});

// Strict-mode variant used by the independent-set reduction checks.
std::size_t brute_force_min_strict_minima(const ImpreciseTerrain& t,
                                          const SearchLimits& limits = {});

// Exact minimum number of monochromatic components over all completions of
// the white vertices.
ColoringResult pdmcs_min_components(const ColoredPlanarGraph& g, const SearchLimits& limits = {});

// A completion with exactly one red and one blue component, if any exists.
std::optional<ColoringResult> pdcs_feasible(const ColoredPlanarGraph& g,
                                            const SearchLimits& limits = {});

// Candidate heights for a vertex: all distinct interval endpoints of the
// terrain clipped to the vertex's own interval (plus gap midpoints when
// refine is set).
std::vector<double> candidate_heights(const ImpreciseTerrain& t, VertexId v, bool refine = false);

}  // namespace terrex
