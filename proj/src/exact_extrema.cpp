#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>

#include "terrex/canonical.hpp"
#include "terrex/exact.hpp"
#include "terrex/extrema.hpp"
#include "terrex/types.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace terrex {
namespace {

std::vector<double> global_endpoints(const ImpreciseTerrain& t, bool refine) {
    std::vector<double> e;
    e.reserve(2 * t.vertex_count());
    for (const auto& iv : t.intervals) {
        e.push_back(iv.lo);
        e.push_back(iv.hi);
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (refine && e.size() > 1) {
        std::vector<double> mids;
        mids.reserve(e.size() - 1);
        for (std::size_t i = 0; i + 1 < e.size(); ++i) mids.push_back(0.5 * (e[i] + e[i + 1]));
        e.insert(e.end(), mids.begin(), mids.end());
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    return e;
}

std::vector<double> clip_to(const std::vector<double>& endpoints, const HeightInterval& iv) {
    std::vector<double> d;
    for (double e : endpoints)
        if (iv.lo <= e && e <= iv.hi) d.push_back(e);
    return d;
}

// Branch-and-bound state over partially assigned heights. Decided regions
// are tracked with a rollback union-find whose per-root payload records the
// flat component's lower/higher flags and how many (member, undecided
// neighbor) pairs remain open. A component whose frontier hits zero can
// never change again, so its extremum status is inevitable and feeds the
// admissible bound max(1, min) + max(1, max).
class ExtremaSearch {
  public:
    ExtremaSearch(const Triangulation& tri, std::vector<std::vector<double>> domains,
                  std::vector<double> pinned_or_initial, std::vector<char> is_free)
        : tri_(tri),
          domains_(std::move(domains)),
          height_(std::move(pinned_or_initial)),
          decided_(tri.vertex_count(), 0),
          parent_(tri.vertex_count()),
          rank_(tri.vertex_count(), 0),
          frontier_(tri.vertex_count(), 0),
          has_lower_(tri.vertex_count(), 0),
          has_higher_(tri.vertex_count(), 0),
          counted_(tri.vertex_count(), 0) {
        const std::size_t n = tri.vertex_count();
        for (std::size_t v = 0; v < n; ++v) parent_[v] = static_cast<VertexId>(v);
        for (VertexId v = 0; v < n; ++v)
            if (!is_free[v]) assign(v);
        for (VertexId v = 0; v < n; ++v)
            if (is_free[v]) free_.push_back(v);
        // Branch on high-degree vertices first, ties by id.
        std::stable_sort(free_.begin(), free_.end(), [&](VertexId a, VertexId b) {
            return tri.degree(a) > tri.degree(b);
        });
        base_mark_ = trail_.size();
    }

    // Runs the search; `best` must hold a valid incumbent value+realization.
    void run(std::size_t& best, Realization& best_real, std::uint64_t budget,
             std::uint64_t& nodes, bool& proven) {
        aborted_ = false;
        budget_ = budget;
        nodes_ = 0;
        dfs(0, best, best_real);
        nodes = nodes_;
        proven = !aborted_;
    }

  private:
    enum class RecKind : std::uint8_t { link, frontier, lower, higher, counted, cmin, cmax };
    struct Rec {
        RecKind kind;
        std::uint8_t small;
        VertexId a;
        std::uint32_t old;
    };

    VertexId find(VertexId x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    void set_frontier(VertexId r, std::uint32_t v) {
        trail_.push_back({RecKind::frontier, 0, r, frontier_[r]});
        frontier_[r] = v;
    }
    void set_lower(VertexId r) {
        if (has_lower_[r]) return;
        trail_.push_back({RecKind::lower, 0, r, 0});
        has_lower_[r] = 1;
    }
    void set_higher(VertexId r) {
        if (has_higher_[r]) return;
        trail_.push_back({RecKind::higher, 0, r, 0});
        has_higher_[r] = 1;
    }

    VertexId unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        std::uint8_t bumped = 0;
        if (rank_[a] == rank_[b]) {
            ++rank_[a];
            bumped = 1;
        }
        parent_[b] = a;
        trail_.push_back({RecKind::link, bumped, b, 0});
        set_frontier(a, frontier_[a] + frontier_[b]);
        if (has_lower_[b]) set_lower(a);
        if (has_higher_[b]) set_higher(a);
        return a;
    }

    void close(VertexId r) {
        trail_.push_back({RecKind::counted, 0, r, 0});
        counted_[r] = 1;
        if (!has_lower_[r]) {
            trail_.push_back({RecKind::cmin, 0, 0, static_cast<std::uint32_t>(imin_)});
            ++imin_;
        }
        if (!has_higher_[r]) {
            trail_.push_back({RecKind::cmax, 0, 0, static_cast<std::uint32_t>(imax_)});
            ++imax_;
        }
    }

    void rollback(std::size_t mark) {
        while (trail_.size() > mark) {
            const Rec rec = trail_.back();
            trail_.pop_back();
            switch (rec.kind) {
                case RecKind::link: {
                    const VertexId r = parent_[rec.a];
                    parent_[rec.a] = rec.a;
                    if (rec.small) --rank_[r];
                    break;
                }
                case RecKind::frontier:
                    frontier_[rec.a] = rec.old;
                    break;
                case RecKind::lower:
                    has_lower_[rec.a] = 0;
                    break;
                case RecKind::higher:
                    has_higher_[rec.a] = 0;
                    break;
                case RecKind::counted:
                    counted_[rec.a] = 0;
                    break;
                case RecKind::cmin:
                    imin_ = rec.old;
                    break;
                case RecKind::cmax:
                    imax_ = rec.old;
                    break;
            }
        }
    }

    void assign(VertexId v) {
        decided_[v] = 1;
        std::uint32_t open = 0;
        for (VertexId u : tri_.neighbors(v))
            if (!decided_[u]) ++open;
        set_frontier(v, open);

        scratch_roots_.clear();
        for (VertexId u : tri_.neighbors(v)) {
            if (!decided_[u]) continue;
            const VertexId ru = find(u);
            set_frontier(ru, frontier_[ru] - 1);
            if (height_[u] == height_[v]) {
                pending_merge_.push_back(ru);
            } else if (height_[u] < height_[v]) {
                set_lower(find(v));
                set_higher(ru);
            } else {
                set_higher(find(v));
                set_lower(ru);
            }
            scratch_roots_.push_back(ru);
        }
        for (VertexId r : pending_merge_) unite(v, r);
        pending_merge_.clear();

        scratch_roots_.push_back(v);
        for (VertexId r : scratch_roots_) {
            const VertexId rr = find(r);
            if (!counted_[rr] && frontier_[rr] == 0) close(rr);
        }
        scratch_roots_.clear();
    }

    void dfs(std::size_t depth, std::size_t& best, Realization& best_real) {
        if (aborted_) return;
        const std::size_t lb = std::max<std::size_t>(imin_, 1) + std::max<std::size_t>(imax_, 1);
        if (lb >= best) return;
        if (depth == free_.size()) {
            const std::size_t total = imin_ + imax_;
            if (total < best) {
                best = total;
                best_real = height_;
            }
            return;
        }
        const VertexId v = free_[depth];
        for (double h : domains_[v]) {
            if (++nodes_ > budget_) {
                aborted_ = true;
                return;
            }
            const std::size_t mark = trail_.size();
            height_[v] = h;
            assign(v);
            dfs(depth + 1, best, best_real);
            rollback(mark);
            decided_[v] = 0;
            if (aborted_) return;
        }
    }

    const Triangulation& tri_;
    std::vector<std::vector<double>> domains_;
    Realization height_;
    std::vector<char> decided_;
    std::vector<VertexId> parent_;
    std::vector<std::uint8_t> rank_;
    std::vector<std::uint32_t> frontier_;
    std::vector<std::uint8_t> has_lower_, has_higher_, counted_;
    std::vector<Rec> trail_;
    std::vector<VertexId> free_;
    std::vector<VertexId> pending_merge_, scratch_roots_;
    std::size_t imin_ = 0, imax_ = 0;
    std::size_t base_mark_ = 0;
    std::uint64_t nodes_ = 0, budget_ = 0;
    bool aborted_ = false;
};

}  // namespace

std::vector<double> candidate_heights(const ImpreciseTerrain& t, VertexId v, bool refine) {
    return clip_to(global_endpoints(t, refine), t.intervals[v]);
}

OptimalResult exact_min_extrema(const ImpreciseTerrain& t, const SearchLimits& limits,
                                bool refine_grid) {
    if (t.vertex_count() == 0) throw InputError("empty terrain");

    const CanonicalPair pair = canonical_form(t);
    const ImpreciseTerrain canon = canonical_terrain(t, pair);

    const auto endpoints = global_endpoints(canon, refine_grid);
    const std::size_t n = canon.vertex_count();
    std::vector<std::vector<double>> domains(n);
    std::vector<char> is_free(n, 0);
    std::vector<double> init(n, 0.0);
    std::size_t free_count = 0;
    for (VertexId v = 0; v < n; ++v) {
        init[v] = canon.intervals[v].lo;
        domains[v] = clip_to(endpoints, canon.intervals[v]);
        if (domains[v].size() > 1) {
            is_free[v] = 1;
            ++free_count;
            // Try the interval ends first; interior values rarely win.
            auto& d = domains[v];
            std::vector<double> ordered;
            ordered.push_back(d.front());
            if (d.back() != d.front()) ordered.push_back(d.back());
            for (std::size_t i = 1; i + 1 < d.size(); ++i) ordered.push_back(d[i]);
            d = std::move(ordered);
        }
    }
    if (free_count > limits.max_free)
        throw InputError("instance has " + std::to_string(free_count) +
                         " free vertices, limit is " + std::to_string(limits.max_free));

    // Incumbent: the better of F' and C'.
    auto eval = [&](const Realization& r) {
        const auto rep = count_extrema(t.tri, r, ExtremaMode::plateau, Exec::serial);
        return rep.locmin + rep.locmax;
    };
    OptimalResult res;
    std::size_t best = eval(pair.f_prime);
    Realization best_real = pair.f_prime;
    const std::size_t cb = eval(pair.c_prime);
    if (cb < best) {
        best = cb;
        best_real = pair.c_prime;
    }
    ExtremaSearch search(canon.tri, std::move(domains), std::move(init), std::move(is_free));
    std::uint64_t nodes = 0;
    bool proven = false;
    search.run(best, best_real, limits.node_budget, nodes, proven);
    res.extrema = best;
    res.realization = std::move(best_real);
    res.nodes_explored = nodes;
    res.proven_optimal = proven;
    return res;
}

}  // namespace terrex
