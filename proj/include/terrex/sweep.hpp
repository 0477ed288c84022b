#pragma once

#include <cstdint>
#include <vector>

#include "terrex/terrain.hpp"

namespace terrex {

enum class EventKind : std::uint8_t { interval_begin = 0, interval_end = 1 };

struct SweepEvent {
    double height;
    VertexId vertex;
    EventKind kind;
};

enum class VertexLabel : std::uint8_t { unprocessed, moving, fixed };

struct SweepTransition {
    VertexId vertex;
    VertexLabel from;
    VertexLabel to;
    double height;  // meaningful when to == fixed
};

struct SweepResult {
    Realization realization;
    // Surviving optimized extrema: local minima for minimize_minima, local
    // maxima for minimize_maxima.
    std::size_t extrema = 0;
    std::size_t event_count = 0;   // always 2n
    std::size_t charge_count = 0;  // neighbor inspections + vertices fixed
};

struct TraceEntry {
    SweepEvent event;
    bool pruned = false;
    std::vector<SweepTransition> transitions;
};

struct SweepTrace {
    std::vector<TraceEntry> entries;               // exactly 2n, pruned ones flagged
    std::vector<SweepTransition> final_transitions;  // queue-exhaustion fixes
    SweepResult result;
};

// Bottom-up flooding sweep that returns a realization with the minimum
// possible number of plateau local minima. Ties in event height are broken
// begin-before-end, then by ascending vertex id.
SweepResult minimize_minima(const ImpreciseTerrain& t);

// Mirror problem via negation; minimizes plateau local maxima.
SweepResult minimize_maxima(const ImpreciseTerrain& t);

// Instrumented sweep of minimize_minima.
SweepTrace sweep_trace(const ImpreciseTerrain& t);

}  // namespace terrex
