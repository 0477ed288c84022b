#include "terrex/sweep.hpp"

#include <algorithm>
#include <cstdint>

#include "terrex/types.hpp"

namespace terrex {
namespace {

struct NullSink {
    void begin_event(std::size_t, const SweepEvent&, bool) {}
    void transition(VertexId, VertexLabel, VertexLabel, double) {}
    void begin_finalization() {}
};

struct RecordingSink {
    SweepTrace* trace;
    std::vector<SweepTransition>* current = nullptr;

    void begin_event(std::size_t i, const SweepEvent& ev, bool pruned) {
        trace->entries[i].event = ev;
        trace->entries[i].pruned = pruned;
        current = &trace->entries[i].transitions;
    }
    void transition(VertexId v, VertexLabel from, VertexLabel to, double h) {
        current->push_back({v, from, to, h});
    }
    void begin_finalization() { current = &trace->final_transitions; }
};

// Moving components: disjoint-set over moving vertices plus an intrusive
// member list per root so a whole component can be enumerated when it is
// fixed ("floodfill in the graph induced by the moving vertices").
class MovingComponents {
  public:
    explicit MovingComponents(std::size_t n)
        : parent_(n, kNoVertex), head_(n, kNoVertex), tail_(n, kNoVertex), next_(n, kNoVertex) {}

    void make_singleton(VertexId v) {
        parent_[v] = v;
        head_[v] = v;
        tail_[v] = v;
        next_[v] = kNoVertex;
    }

    VertexId find(VertexId v) {
        VertexId r = v;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[v] != r) {
            const VertexId p = parent_[v];
            parent_[v] = r;
            v = p;
        }
        return r;
    }

    VertexId unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        next_[tail_[a]] = head_[b];
        tail_[a] = tail_[b];
        parent_[b] = a;
        return a;
    }

    template <class Fn>
    void for_each_member(VertexId root, Fn&& fn) const {
        for (VertexId v = head_[root]; v != kNoVertex; v = next_[v]) fn(v);
    }

  private:
    std::vector<VertexId> parent_, head_, tail_, next_;
};

template <class Sink>
SweepResult run_sweep(const ImpreciseTerrain& t, Sink&& sink) {
    const std::size_t n = t.vertex_count();
    if (n == 0) throw InputError("empty terrain");
    if (t.intervals.size() != n) throw InputError("terrain intervals malformed");

    std::vector<SweepEvent> events;
    events.reserve(2 * n);
    for (VertexId v = 0; v < n; ++v) {
        events.push_back({t.intervals[v].lo, v, EventKind::interval_begin});
        events.push_back({t.intervals[v].hi, v, EventKind::interval_end});
    }
    std::sort(events.begin(), events.end(), [](const SweepEvent& a, const SweepEvent& b) {
        if (a.height != b.height) return a.height < b.height;
        if (a.kind != b.kind) return a.kind < b.kind;  // begin before end
        return a.vertex < b.vertex;
    });

    // Drop end events after the last begin; survivors are fixed afterwards.
    std::size_t last_begin = 0;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (events[i].kind == EventKind::interval_begin) last_begin = i;
    }
    const std::size_t active_end = last_begin + 1;

    std::vector<VertexLabel> label(n, VertexLabel::unprocessed);
    Realization height(n, 0.0);
    MovingComponents comps(n);

    SweepResult res;
    res.event_count = events.size();
    std::size_t charges = 0;
    std::size_t minima = 0;

    auto fix_component = [&](VertexId root, double h) {
        comps.for_each_member(root, [&](VertexId m) {
            label[m] = VertexLabel::fixed;
            height[m] = h;
            ++charges;
            sink.transition(m, VertexLabel::moving, VertexLabel::fixed, h);
        });
    };

    std::vector<VertexId> moving_roots;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const SweepEvent& ev = events[i];
        const bool pruned = i >= active_end;
        sink.begin_event(i, ev, pruned);
        if (pruned) continue;
        const VertexId v = ev.vertex;
        const double h = ev.height;

        if (ev.kind == EventKind::interval_end) {
            if (label[v] == VertexLabel::moving) {
                fix_component(comps.find(v), h);
                ++minima;  // an end-fixed component survives as one minimum
            }
            continue;
        }

        // interval_begin
        bool any_fixed = false;
        moving_roots.clear();
        charges += t.tri.degree(v);
        for (VertexId u : t.tri.neighbors(v)) {
            if (label[u] == VertexLabel::fixed) {
                any_fixed = true;
            } else if (label[u] == VertexLabel::moving) {
                const VertexId r = comps.find(u);
                if (std::find(moving_roots.begin(), moving_roots.end(), r) == moving_roots.end())
                    moving_roots.push_back(r);
            }
        }

        if (any_fixed) {
            label[v] = VertexLabel::fixed;
            height[v] = h;  // = lo(v)
            ++charges;
            sink.transition(v, VertexLabel::unprocessed, VertexLabel::fixed, h);
            // Adjacent moving components stop being minima here.
            for (VertexId r : moving_roots) fix_component(r, h);
        } else if (!moving_roots.empty()) {
            comps.make_singleton(v);
            label[v] = VertexLabel::moving;
            sink.transition(v, VertexLabel::unprocessed, VertexLabel::moving, h);
            VertexId r = comps.find(v);
            for (VertexId mr : moving_roots) r = comps.unite(r, mr);
        } else {
            comps.make_singleton(v);
            label[v] = VertexLabel::moving;
            sink.transition(v, VertexLabel::unprocessed, VertexLabel::moving, h);
        }
    }

    // Fix whatever still moves at the final plane height.
    sink.begin_finalization();
    const double h_final = events[active_end - 1].height;
    for (VertexId v = 0; v < n; ++v) {
        if (label[v] == VertexLabel::moving && comps.find(v) == v) {
            fix_component(v, h_final);
            ++minima;
        }
    }

    res.realization = std::move(height);
    res.extrema = minima;
    res.charge_count = charges;
    return res;
}

}  // namespace

SweepResult minimize_minima(const ImpreciseTerrain& t) {
    NullSink sink;
    return run_sweep(t, sink);
}

SweepResult minimize_maxima(const ImpreciseTerrain& t) {
    NullSink sink;
    SweepResult r = run_sweep(negate(t), sink);
    r.realization = negate(r.realization);
    return r;
}

SweepTrace sweep_trace(const ImpreciseTerrain& t) {
    SweepTrace trace;
    trace.entries.resize(2 * t.vertex_count());
    RecordingSink sink{&trace};
    trace.result = run_sweep(t, sink);
    return trace;
}

}  // namespace terrex
