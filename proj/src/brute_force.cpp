#include <algorithm>
#include <atomic>
#include <cstdint>

#include "terrex/exact.hpp"
#include "terrex/extrema.hpp"
#include "terrex/types.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace terrex {
namespace {

// Allocation-free plateau-minima counter for tight enumeration loops.
class MinimaCounter {
  public:
    explicit MinimaCounter(const Triangulation& tri)
        : tri_(tri), comp_(tri.vertex_count(), kNoVertex), stack_() {
        stack_.reserve(tri.vertex_count());
    }

    std::size_t plateau_minima(const std::vector<double>& h) {
        const std::size_t n = tri_.vertex_count();
        std::fill(comp_.begin(), comp_.end(), kNoVertex);
        std::size_t minima = 0;
        for (VertexId s = 0; s < n; ++s) {
            if (comp_[s] != kNoVertex) continue;
            bool has_lower = false;
            comp_[s] = s;
            stack_.push_back(s);
            while (!stack_.empty()) {
                const VertexId v = stack_.back();
                stack_.pop_back();
                for (VertexId u : tri_.neighbors(v)) {
                    if (h[u] == h[v]) {
                        if (comp_[u] == kNoVertex) {
                            comp_[u] = s;
                            stack_.push_back(u);
                        }
                    } else if (h[u] < h[v]) {
                        has_lower = true;
                    }
                }
            }
            minima += !has_lower;
        }
        return minima;
    }

    std::size_t strict_minima(const std::vector<double>& h) {
        const std::size_t n = tri_.vertex_count();
        std::size_t minima = 0;
        for (VertexId v = 0; v < n; ++v) {
            bool lower = false;
            for (VertexId u : tri_.neighbors(v)) lower |= h[u] < h[v];
            minima += !lower;
        }
        return minima;
    }

  private:
    const Triangulation& tri_;
    std::vector<VertexId> comp_;
    std::vector<VertexId> stack_;
};

struct EnumState {
    const Triangulation* tri;
    const std::vector<VertexId>* free_vs;
    const std::vector<std::vector<double>>* domains;
    std::size_t stop_at;  // enumeration may stop once this value is reached
    bool strict;
};

void enumerate(const EnumState& st, std::vector<double>& h, std::size_t depth,
               MinimaCounter& counter, std::size_t& best, std::uint64_t& leaves) {
    if (best <= st.stop_at) return;
    if (depth == st.free_vs->size()) {
        ++leaves;
        const std::size_t m =
            st.strict ? counter.strict_minima(h) : counter.plateau_minima(h);
        best = std::min(best, m);
        return;
    }
    const VertexId v = (*st.free_vs)[depth];
    for (double cand : (*st.domains)[v]) {
        h[v] = cand;
        enumerate(st, h, depth + 1, counter, best, leaves);
        if (best <= st.stop_at) return;
    }
}

std::size_t brute_force_impl(const ImpreciseTerrain& t, const SearchLimits& limits, bool strict) {
    if (t.vertex_count() == 0) throw InputError("empty terrain");
    const std::size_t n = t.vertex_count();

    std::vector<std::vector<double>> domains(n);
    std::vector<VertexId> free_vs;
    std::vector<double> base(n);
    std::uint64_t leaf_space = 1;
    constexpr std::uint64_t kSpaceCap = std::numeric_limits<std::uint64_t>::max() / 64;
    for (VertexId v = 0; v < n; ++v) {
        base[v] = t.intervals[v].lo;
        domains[v] = candidate_heights(t, v);
        if (domains[v].size() > 1) {
            free_vs.push_back(v);
            if (leaf_space < kSpaceCap) leaf_space *= domains[v].size();
        }
    }
    if (free_vs.size() > limits.max_free)
        throw InputError("brute force limit exceeded: " + std::to_string(free_vs.size()) +
                         " free vertices");
    if (leaf_space > limits.node_budget)
        throw BudgetError("brute force needs " + std::to_string(leaf_space) +
                          " assignments, budget is " + std::to_string(limits.node_budget));

    // A strict minimum exists per connected component, and in plateau mode
    // likewise, so the enumeration may stop at that floor.
    const std::size_t stop_at = t.tri.component_count();

    EnumState st{&t.tri, &free_vs, &domains, stop_at, strict};
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::uint64_t leaves = 0;

    if (free_vs.empty()) {
        MinimaCounter counter(t.tri);
        return strict ? counter.strict_minima(base) : counter.plateau_minima(base);
    }

    // Parallelize over the first vertex's candidates.
    const auto& top = domains[free_vs[0]];
    std::vector<std::size_t> bests(top.size(), std::numeric_limits<std::size_t>::max());
    std::vector<std::uint64_t> leaf_counts(top.size(), 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(top.size()); ++i) {
        MinimaCounter counter(t.tri);
        std::vector<double> h = base;
        h[free_vs[0]] = top[i];
        enumerate(st, h, 1, counter, bests[i], leaf_counts[i]);
    }
    for (std::size_t i = 0; i < top.size(); ++i) {
        best = std::min(best, bests[i]);
        leaves += leaf_counts[i];
    }
    (void)leaves;
    return best;
}

}  // namespace

std::size_t brute_force_min_minima(const ImpreciseTerrain& t, const SearchLimits& limits) {
    return brute_force_impl(t, limits, /*strict=*/false);
}

std::size_t brute_force_min_strict_minima(const ImpreciseTerrain& t, const SearchLimits& limits) {
    return brute_force_impl(t, limits, /*strict=*/true);
}

}  // namespace terrex
