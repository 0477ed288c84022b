#include <algorithm>
#include <cstdint>
#include <limits>

#include "terrex/exact.hpp"
#include "terrex/types.hpp"

namespace terrex {
namespace {

// Shared rollback machinery for the two colored-graph searches. Components
// are tracked over decided (pinned or assigned) vertices; a component whose
// last undecided neighbor disappears is closed and can never merge again.
class ColoringSearch {
  public:
    explicit ColoringSearch(const ColoredPlanarGraph& g)
        : g_(g),
          colors_(g.colors),
          decided_(g.vertex_count(), 0),
          parent_(g.vertex_count()),
          rank_(g.vertex_count(), 0),
          frontier_(g.vertex_count(), 0),
          counted_(g.vertex_count(), 0) {
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            parent_[v] = static_cast<VertexId>(v);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (g.colors[v] == Color::white) {
                whites_.push_back(v);
            }
        }
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (g.colors[v] != Color::white) assign(v, g.colors[v]);
    }

    const std::vector<VertexId>& whites() const { return whites_; }
    std::size_t cur_total() const { return cur_[0] + cur_[1]; }
    std::size_t closed(int c) const { return closed_[c]; }
    std::size_t cur(int c) const { return cur_[c]; }

    std::size_t lower_bound() const {
        std::size_t lb = closed_[0] + closed_[1];
        if (cur_[0] > closed_[0]) ++lb;
        if (cur_[1] > closed_[1]) ++lb;
        return lb;
    }

    std::size_t mark() const { return trail_.size(); }

    void assign(VertexId v, Color c) {
        colors_[v] = c;
        decided_[v] = 1;
        const int ci = c == Color::red ? 0 : 1;
        set_cur(ci, cur_[ci] + 1);

        std::uint32_t open = 0;
        for (VertexId u : g_.rotation[v])
            if (!decided_[u]) ++open;
        set_frontier(v, open);

        scratch_.clear();
        for (VertexId u : g_.rotation[v]) {
            if (!decided_[u]) continue;
            const VertexId ru = find(u);
            set_frontier(ru, frontier_[ru] - 1);
            if (colors_[u] == c) pending_.push_back(ru);
            scratch_.push_back(ru);
        }
        for (VertexId r : pending_) {
            if (unite(v, r)) set_cur(ci, cur_[ci] - 1);
        }
        pending_.clear();

        scratch_.push_back(v);
        for (VertexId r : scratch_) {
            const VertexId rr = find(r);
            if (!counted_[rr] && frontier_[rr] == 0) {
                trail_.push_back({RecKind::counted, 0, rr, 0});
                counted_[rr] = 1;
                const int rc = colors_[rr] == Color::red ? 0 : 1;
                set_closed(rc, closed_[rc] + 1);
            }
        }
        scratch_.clear();
    }

    void unassign(VertexId v, std::size_t mark) {
        rollback(mark);
        decided_[v] = 0;
        colors_[v] = Color::white;
    }

    const std::vector<Color>& colors() const { return colors_; }

  private:
    enum class RecKind : std::uint8_t { link, frontier, counted, cur, closed };
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

    bool unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        std::uint8_t bumped = 0;
        if (rank_[a] == rank_[b]) {
            ++rank_[a];
            bumped = 1;
        }
        parent_[b] = a;
        trail_.push_back({RecKind::link, bumped, b, 0});
        set_frontier(a, frontier_[a] + frontier_[b]);
        return true;
    }

    void set_frontier(VertexId r, std::uint32_t v) {
        trail_.push_back({RecKind::frontier, 0, r, frontier_[r]});
        frontier_[r] = v;
    }
    void set_cur(int c, std::size_t v) {
        trail_.push_back({RecKind::cur, static_cast<std::uint8_t>(c), 0,
                          static_cast<std::uint32_t>(cur_[c])});
        cur_[c] = v;
    }
    void set_closed(int c, std::size_t v) {
        trail_.push_back({RecKind::closed, static_cast<std::uint8_t>(c), 0,
                          static_cast<std::uint32_t>(closed_[c])});
        closed_[c] = v;
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
                case RecKind::counted:
                    counted_[rec.a] = 0;
                    break;
                case RecKind::cur:
                    cur_[rec.small] = rec.old;
                    break;
                case RecKind::closed:
                    closed_[rec.small] = rec.old;
                    break;
            }
        }
    }

    const ColoredPlanarGraph& g_;
    std::vector<Color> colors_;
    std::vector<char> decided_;
    std::vector<VertexId> parent_;
    std::vector<std::uint8_t> rank_;
    std::vector<std::uint32_t> frontier_;
    std::vector<std::uint8_t> counted_;
    std::vector<Rec> trail_;
    std::vector<VertexId> whites_, pending_, scratch_;
    std::size_t cur_[2] = {0, 0};
    std::size_t closed_[2] = {0, 0};
};

void require_both_colors(const ColoredPlanarGraph& g) {
    bool red = false, blue = false;
    for (Color c : g.colors) {
        red |= c == Color::red;
        blue |= c == Color::blue;
    }
    if (!red || !blue) throw InputError("instance needs at least one red and one blue vertex");
}

}  // namespace

ColoringResult pdmcs_min_components(const ColoredPlanarGraph& g, const SearchLimits& limits) {
    require_both_colors(g);
    ColoringSearch search(g);
    if (search.whites().size() > limits.max_free)
        throw InputError("too many white vertices: " + std::to_string(search.whites().size()));

    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<Color> best_colors;
    std::uint64_t nodes = 0;

    auto dfs = [&](auto&& self, std::size_t depth) -> void {
        if (search.lower_bound() >= best) return;
        if (depth == search.whites().size()) {
            if (search.cur_total() < best) {
                best = search.cur_total();
                best_colors = search.colors();
            }
            return;
        }
        const VertexId v = search.whites()[depth];
        for (Color c : {Color::red, Color::blue}) {
            if (++nodes > limits.node_budget)
                throw BudgetError("pdmcs search budget exceeded");
            const std::size_t m = search.mark();
            search.assign(v, c);
            self(self, depth + 1);
            search.unassign(v, m);
        }
    };
    dfs(dfs, 0);

    ColoringResult res;
    res.colors = std::move(best_colors);
    res.components = best;
    return res;
}

std::optional<ColoringResult> pdcs_feasible(const ColoredPlanarGraph& g,
                                            const SearchLimits& limits) {
    require_both_colors(g);
    ColoringSearch search(g);
    if (search.whites().size() > limits.max_free)
        throw InputError("too many white vertices: " + std::to_string(search.whites().size()));

    std::optional<ColoringResult> found;
    std::uint64_t nodes = 0;

    auto dead = [&]() {
        for (int c : {0, 1}) {
            if (search.closed(c) >= 2) return true;
            if (search.closed(c) >= 1 && search.cur(c) > search.closed(c)) return true;
        }
        return false;
    };

    auto dfs = [&](auto&& self, std::size_t depth) -> bool {
        if (dead()) return false;
        if (depth == search.whites().size()) {
            if (search.cur(0) == 1 && search.cur(1) == 1) {
                ColoringResult res;
                res.colors = search.colors();
                res.components = 2;
                found = std::move(res);
                return true;
            }
            return false;
        }
        const VertexId v = search.whites()[depth];
        for (Color c : {Color::red, Color::blue}) {
            if (++nodes > limits.node_budget) throw BudgetError("pdcs search budget exceeded");
            const std::size_t m = search.mark();
            search.assign(v, c);
            const bool ok = self(self, depth + 1);
            search.unassign(v, m);
            if (ok) return true;
        }
        return false;
    };
    dfs(dfs, 0);
    return found;
}

}  // namespace terrex
