#pragma once

#include <string>
#include <vector>

#include "terrex/triangulation.hpp"
#include "terrex/types.hpp"

namespace terrex {

// One concrete height per vertex.
using Realization = std::vector<double>;

// Triangulated terrain with a vertical uncertainty interval per vertex.
struct ImpreciseTerrain {
    Triangulation tri;
    std::vector<HeightInterval> intervals;

    std::size_t vertex_count() const { return tri.vertex_count(); }

    Realization floor() const {
        Realization r(intervals.size());
        for (std::size_t i = 0; i < intervals.size(); ++i) r[i] = intervals[i].lo;
        return r;
    }
    Realization ceiling() const {
        Realization r(intervals.size());
        for (std::size_t i = 0; i < intervals.size(); ++i) r[i] = intervals[i].hi;
        return r;
    }
};

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

// Reports every violated structural invariant instead of throwing.
ValidationReport validate(const ImpreciseTerrain& t);

// Mirror the terrain through height zero: interval (lo, hi) -> (-hi, -lo).
ImpreciseTerrain negate(const ImpreciseTerrain& t);
Realization negate(const Realization& r);

bool realization_valid(const ImpreciseTerrain& t, const Realization& r);

}  // namespace terrex
