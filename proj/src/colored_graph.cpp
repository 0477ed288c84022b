#include "terrex/colored_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace terrex {

std::size_t ColoredPlanarGraph::edge_count() const {
    std::size_t deg = 0;
    for (const auto& r : rotation) deg += r.size();
    return deg / 2;
}

bool ColoredPlanarGraph::has_edge(VertexId a, VertexId b) const {
    const auto& r = rotation[a];
    return std::find(r.begin(), r.end(), b) != r.end();
}

void ColoredPlanarGraph::add_vertex(double x, double y, Color c) {
    xs.push_back(x);
    ys.push_back(y);
    rotation.emplace_back();
    colors.push_back(c);
}

void ColoredPlanarGraph::add_edge(VertexId a, VertexId b) {
    if (a == b || has_edge(a, b)) throw InputError("bad edge insertion");
    rotation[a].push_back(b);
    rotation[b].push_back(a);
}

void ColoredPlanarGraph::sort_rotations_by_angle() {
    for (VertexId v = 0; v < vertex_count(); ++v) {
        std::sort(rotation[v].begin(), rotation[v].end(), [&](VertexId a, VertexId b) {
            const double aa = std::atan2(ys[a] - ys[v], xs[a] - xs[v]);
            const double ab = std::atan2(ys[b] - ys[v], xs[b] - xs[v]);
            if (aa != ab) return aa < ab;
            return a < b;
        });
    }
}

std::vector<std::vector<VertexId>> embedding_faces(const ColoredPlanarGraph& g) {
    // Face tracing: from directed edge (u -> v), the next directed edge is
    // (v -> w) where w precedes u in v's ccw rotation. With angular ccw
    // rotations this walks each face once.
    std::map<std::pair<VertexId, VertexId>, char> used;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.rotation[u]) used[{u, v}] = 0;

    auto next_dart = [&](VertexId u, VertexId v) -> std::pair<VertexId, VertexId> {
        const auto& rot = g.rotation[v];
        const auto it = std::find(rot.begin(), rot.end(), u);
        const std::size_t i = static_cast<std::size_t>(it - rot.begin());
        const VertexId w = rot[(i + rot.size() - 1) % rot.size()];
        return {v, w};
    };

    std::vector<std::vector<VertexId>> faces;
    for (auto& [dart, flag] : used) {
        if (flag) continue;
        std::vector<VertexId> walk;
        auto cur = dart;
        while (!used[cur]) {
            used[cur] = 1;
            walk.push_back(cur.first);
            cur = next_dart(cur.first, cur.second);
        }
        faces.push_back(std::move(walk));
    }
    return faces;
}

bool euler_planar(const ColoredPlanarGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return true;
    // count connected components
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack;
    std::size_t comps = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : g.rotation[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
    }
    const std::size_t f = embedding_faces(g).size();
    // For a planar embedding with c components: V - E + F = 1 + c.
    return n + f == g.edge_count() + 1 + comps;
}

namespace {

double walk_signed_area(const ColoredPlanarGraph& g, const std::vector<VertexId>& walk) {
    double s = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const VertexId a = walk[i];
        const VertexId b = walk[(i + 1) % walk.size()];
        s += g.xs[a] * g.ys[b] - g.xs[b] * g.ys[a];
    }
    return 0.5 * s;
}

int orientation(double ax, double ay, double bx, double by, double cx, double cy) {
    const double d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    if (d > 0) return 1;
    if (d < 0) return -1;
    return 0;
}

bool point_in_walk(const ColoredPlanarGraph& g, const std::vector<VertexId>& walk, double px,
                   double py) {
    // winding number over the closed polyline of the walk
    double winding = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const VertexId a = walk[i];
        const VertexId b = walk[(i + 1) % walk.size()];
        const double a1 = std::atan2(g.ys[a] - py, g.xs[a] - px);
        const double a2 = std::atan2(g.ys[b] - py, g.xs[b] - px);
        double d = a2 - a1;
        while (d > 3.14159265358979323846) d -= 2 * 3.14159265358979323846;
        while (d < -3.14159265358979323846) d += 2 * 3.14159265358979323846;
        winding += d;
    }
    return std::abs(winding) > 3.14159265358979323846;  // |winding| ~ 2*pi inside
}

}  // namespace

std::size_t outer_face_index(const ColoredPlanarGraph& g,
                             const std::vector<std::vector<VertexId>>& faces) {
    // With ccw rotations, inner faces walk counterclockwise (positive area)
    // and the outer face walks clockwise; pick the most negative area.
    std::size_t best = 0;
    double best_area = walk_signed_area(g, faces[0]);
    for (std::size_t i = 1; i < faces.size(); ++i) {
        const double a = walk_signed_area(g, faces[i]);
        if (a < best_area) {
            best_area = a;
            best = i;
        }
    }
    return best;
}

bool straight_line_crossings(const ColoredPlanarGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.rotation[u])
            if (u < v) edges.emplace_back(u, v);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [a, b] = edges[i];
            const auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            const int o1 = orientation(g.xs[a], g.ys[a], g.xs[b], g.ys[b], g.xs[c], g.ys[c]);
            const int o2 = orientation(g.xs[a], g.ys[a], g.xs[b], g.ys[b], g.xs[d], g.ys[d]);
            const int o3 = orientation(g.xs[c], g.ys[c], g.xs[d], g.ys[d], g.xs[a], g.ys[a]);
            const int o4 = orientation(g.xs[c], g.ys[c], g.xs[d], g.ys[d], g.xs[b], g.ys[b]);
            if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
        }
    }
    return false;
}

std::size_t monochromatic_components(const ColoredPlanarGraph& g,
                                     const std::vector<Color>& colors) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack;
    std::size_t comps = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s] || colors[s] == Color::white) continue;
        ++comps;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : g.rotation[v]) {
                if (!seen[u] && colors[u] == colors[s]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
    }
    return comps;
}

bool proper_loop_check(const ColoredPlanarGraph& g, const std::vector<char>& in_set) {
    // Inner faces of the full embedding must be triangles.
    auto all_faces = embedding_faces(g);
    if (all_faces.empty()) return false;
    const std::size_t outer = outer_face_index(g, all_faces);
    for (std::size_t i = 0; i < all_faces.size(); ++i) {
        if (i != outer && all_faces[i].size() != 3)
            throw InputError("proper_loop_check requires a triangulated graph");
    }

    // Induced subgraph on the set, with inherited rotation order.
    ColoredPlanarGraph sub;
    std::vector<VertexId> to_sub(g.vertex_count(), kNoVertex);
    std::vector<VertexId> to_full;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (in_set[v]) {
            to_sub[v] = static_cast<VertexId>(to_full.size());
            to_full.push_back(v);
            sub.add_vertex(g.xs[v], g.ys[v], g.colors[v]);
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!in_set[v]) continue;
        for (VertexId u : g.rotation[v])
            if (in_set[u]) sub.rotation[to_sub[v]].push_back(to_sub[u]);
    }

    auto faces = embedding_faces(sub);
    for (const auto& walk : faces) {
        if (walk.size() < 3) continue;
        if (walk_signed_area(sub, walk) <= 0) continue;  // outer/degenerate walks
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (in_set[v]) continue;
            std::vector<VertexId> full_walk;
            full_walk.reserve(walk.size());
            for (VertexId w : walk) full_walk.push_back(to_full[w]);
            if (point_in_walk(g, full_walk, g.xs[v], g.ys[v])) return true;
        }
    }
    return false;
}

bool proper_loop_check(const ColoredPlanarGraph& g, Color which) {
    std::vector<char> in_set(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) in_set[v] = g.colors[v] == which;
    return proper_loop_check(g, in_set);
}

}  // namespace terrex
