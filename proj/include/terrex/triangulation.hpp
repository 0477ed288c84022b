#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "terrex/types.hpp"

namespace terrex {

struct Triangle {
    VertexId a, b, c;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Planar triangulation: vertex coordinates plus triangles. Vertex adjacency
// is derived from triangle edges and stored in CSR form so it scales to
// millions of vertices.
class Triangulation {
  public:
    Triangulation() = default;
    Triangulation(std::vector<Point> points, std::vector<Triangle> triangles);

    std::size_t vertex_count() const { return points_.size(); }
    std::size_t triangle_count() const { return triangles_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<Point>& points() const { return points_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    bool connected() const;
    std::size_t component_count() const;

  private:
    std::vector<Point> points_;
    std::vector<Triangle> triangles_;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> adj_;
    std::size_t edge_count_ = 0;
};

}  // namespace terrex
