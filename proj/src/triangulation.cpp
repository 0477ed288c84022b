#include "terrex/triangulation.hpp"

#include <algorithm>
#include <utility>

namespace terrex {

Triangulation::Triangulation(std::vector<Point> points, std::vector<Triangle> triangles)
    : points_(std::move(points)), triangles_(std::move(triangles)) {
    const std::size_t n = points_.size();
    std::vector<std::pair<VertexId, VertexId>> dir;
    dir.reserve(triangles_.size() * 6);
    auto push = [&](VertexId u, VertexId v) {
        if (u < n && v < n && u != v) {
            dir.emplace_back(u, v);
            dir.emplace_back(v, u);
        }
    };
    for (const Triangle& t : triangles_) {
        push(t.a, t.b);
        push(t.b, t.c);
        push(t.c, t.a);
    }
    std::sort(dir.begin(), dir.end());
    dir.erase(std::unique(dir.begin(), dir.end()), dir.end());

    offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : dir) ++offsets_[u + 1];
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    adj_.resize(dir.size());
    for (std::size_t i = 0; i < dir.size(); ++i) adj_[i] = dir[i].second;
    edge_count_ = dir.size() / 2;
}

std::size_t Triangulation::component_count() const {
    const std::size_t n = vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack;
    std::size_t comps = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
    }
    return comps;
}

bool Triangulation::connected() const {
    return vertex_count() == 0 || component_count() == 1;
}

}  // namespace terrex
