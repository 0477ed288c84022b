#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "terrex/extrema.hpp"
#include "terrex/reductions.hpp"
#include "terrex/rng.hpp"
#include "terrex/types.hpp"

namespace terrex {

const char* gadget_tag_name(GadgetTag tag) {
    switch (tag) {
        case GadgetTag::north_gadget: return "NorthGadget";
        case GadgetTag::row_gadget: return "RowGadget";
        case GadgetTag::inverter: return "Inverter";
        case GadgetTag::subgadget: return "Subgadget";
        case GadgetTag::south_gadget: return "SouthGadget";
        case GadgetTag::triangulation_vertex: return "TriangulationVertex";
        case GadgetTag::clause_gadget: return "ClauseGadget";
        case GadgetTag::edge_chain: return "EdgeChain";
        case GadgetTag::variable_vertex: return "VariableVertex";
    }
    return "?";
}

bool SetCoverInstance::covers() const {
    std::set<int> seen;
    for (const auto& s : sets)
        for (int x : s) {
            if (x < 1 || static_cast<std::size_t>(x) > universe_size) return false;
            seen.insert(x);
        }
    return seen.size() == universe_size;
}

std::size_t Planar3SatInstance::min_unsatisfied() const {
    std::size_t best = clauses.size();
    for (std::uint32_t mask = 0; mask < (1u << num_vars); ++mask) {
        std::size_t unsat = 0;
        for (const auto& cl : clauses) {
            bool sat = false;
            for (int lit : cl.lits) {
                if (lit == 0) continue;
                const int var = std::abs(lit) - 1;
                const bool val = (mask >> var) & 1;
                sat |= (lit > 0) == val;
            }
            unsat += !sat;
        }
        best = std::min(best, unsat);
    }
    return best;
}

// ---------------------------------------------------------------- spikes

SpikesTerrain gen_spikes(std::size_t stalagmites, std::size_t stalactites, std::size_t grid) {
    if (stalagmites < 1 || stalactites < 1)
        throw InputError("gen_spikes needs at least one stalagmite and one stalactite");
    const std::size_t g = grid;
    if (g < 5) throw InputError("spikes grid must be at least 5");

    // Interior spike slots on a coarse sub-lattice (spacing 2) so spikes are
    // never adjacent to each other, the rim, or the drain.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t y = 2; y + 2 < g; y += 2)
        for (std::size_t x = 2; x + 2 < g; x += 2) slots.emplace_back(x, y);
    if (slots.size() < stalagmites + stalactites + 1)
        throw InputError("spikes grid too small for requested spikes");

    const double kHigh = 4.0;  // ceiling level
    auto idx = [&](std::size_t x, std::size_t y) { return static_cast<VertexId>(y * g + x); };

    std::vector<Point> pts(g * g);
    std::vector<HeightInterval> iv(g * g, {0.0, kHigh});
    for (std::size_t y = 0; y < g; ++y)
        for (std::size_t x = 0; x < g; ++x) {
            pts[idx(x, y)] = {static_cast<double>(x), static_cast<double>(y)};
            if (x == 0 || y == 0 || x + 1 == g || y + 1 == g)
                iv[idx(x, y)] = {kHigh + 1.0, kHigh + 1.0};  // high rim
        }

    // Drain first, then alternate spike kinds around the slot ring so the
    // two families interleave (no monotone surface separates them).
    iv[idx(slots[0].first, slots[0].second)] = {-1.0, -1.0};
    std::size_t placed_g = 0, placed_t = 0, si = 1;
    while (placed_g + placed_t < stalagmites + stalactites) {
        const auto [x, y] = slots[si++];
        bool take_g = (placed_g + placed_t) % 2 == 0;
        if (placed_g == stalagmites) take_g = false;
        if (placed_t == stalactites) take_g = true;
        if (take_g) {
            iv[idx(x, y)] = {kHigh, kHigh};
            ++placed_g;
        } else {
            iv[idx(x, y)] = {0.0, 0.0};
            ++placed_t;
        }
    }

    std::vector<Triangle> tris;
    tris.reserve(2 * (g - 1) * (g - 1));
    for (std::size_t y = 0; y + 1 < g; ++y)
        for (std::size_t x = 0; x + 1 < g; ++x) {
            tris.push_back({idx(x, y), idx(x + 1, y), idx(x + 1, y + 1)});
            tris.push_back({idx(x, y), idx(x + 1, y + 1), idx(x, y + 1)});
        }

    SpikesTerrain out;
    out.terrain.tri = Triangulation(std::move(pts), std::move(tris));
    out.terrain.intervals = std::move(iv);

    const auto f = count_extrema(out.terrain.tri, out.terrain.floor(), ExtremaMode::plateau);
    const auto c = count_extrema(out.terrain.tri, out.terrain.ceiling(), ExtremaMode::plateau);
    out.floor_locmin = f.locmin;
    out.floor_locmax = f.locmax;
    out.ceiling_locmin = c.locmin;
    out.ceiling_locmax = c.locmax;
    return out;
}

// ------------------------------------------------------------- perturbation

ImpreciseTerrain perturb_general_position(const ImpreciseTerrain& t, double eps,
                                          std::uint64_t seed) {
    if (!(eps > 0)) throw InputError("eps must be positive");
    const std::size_t n = t.vertex_count();

    // Minimum positive gap between distinct input heights.
    std::vector<double> vals;
    vals.reserve(2 * n);
    for (const auto& iv : t.intervals) {
        vals.push_back(iv.lo);
        vals.push_back(iv.hi);
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) gap = std::min(gap, vals[i + 1] - vals[i]);
    if (!std::isfinite(gap)) gap = 1.0;

    double ymin = 0, ymax = 0;
    if (n > 0) {
        ymin = ymax = t.tri.points()[0].y;
        for (const auto& p : t.tri.points()) {
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }
    const double max_shift = eps * (ymax - ymin) + eps;  // eps*y plus sub-eps noise
    if (!(max_shift < gap / 2))
        throw InputError("eps too large: shifts up to " + std::to_string(max_shift) +
                         " would reorder heights separated by " + std::to_string(gap));

    // Distinct per-vertex noise below eps, deterministic in the seed.
    SplitMix64 rng(seed ^ 0x7e77a1d30f5ull);
    ImpreciseTerrain out = t;
    std::set<double> used;
    for (VertexId v = 0; v < n; ++v) {
        const double y = t.tri.points()[v].y - ymin;
        double shift;
        do {
            const double noise = (0.25 + 0.5 * rng.unit()) * eps;  // in (0, eps)
            shift = eps * y + noise;
        } while (!used.insert(shift).second);
        out.intervals[v].lo = t.intervals[v].lo - shift;
        out.intervals[v].hi = t.intervals[v].hi - shift;
    }

    // Endpoints of distinct vertices must now all differ.
    std::map<double, VertexId> owner;
    for (VertexId v = 0; v < n; ++v) {
        for (double e : {out.intervals[v].lo, out.intervals[v].hi}) {
            auto [it, fresh] = owner.emplace(e, v);
            if (!fresh && it->second != v)
                throw Error("perturbation failed to separate endpoints");
        }
    }
    return out;
}

}  // namespace terrex
