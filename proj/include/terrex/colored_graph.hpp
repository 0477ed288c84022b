#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "terrex/types.hpp"

namespace terrex {

enum class Color : std::uint8_t { red, blue, white };

// Vertex-colored planar graph with an embedding given as a rotation system
// (counterclockwise neighbor order per vertex) plus straight-line
// coordinates used for validation and drawing.
struct ColoredPlanarGraph {
    std::vector<double> xs, ys;
    std::vector<std::vector<VertexId>> rotation;  // ccw neighbor order
    std::vector<Color> colors;

    std::size_t vertex_count() const { return rotation.size(); }
    std::size_t edge_count() const;
    bool has_edge(VertexId a, VertexId b) const;

    void add_vertex(double x, double y, Color c);
    // Appends to both rotations; callers fix the cyclic order afterwards if
    // the default (insertion order) is not angular.
    void add_edge(VertexId a, VertexId b);

    // Recomputes every rotation as the counterclockwise angular order around
    // the vertex, using the stored coordinates.
    void sort_rotations_by_angle();
};

// Face walks of the embedding. Each face is the cyclic list of vertices on
// its boundary walk (a vertex may repeat for non-2-connected graphs).
std::vector<std::vector<VertexId>> embedding_faces(const ColoredPlanarGraph& g);

// Euler's check V - E + F = 1 + C + 1 for the rotation system; false means
// the rotation system does not describe a planar (genus-0) embedding.
bool euler_planar(const ColoredPlanarGraph& g);

// Index into embedding_faces() of the outer face, identified geometrically
// by the signed area of the face walks.
std::size_t outer_face_index(const ColoredPlanarGraph& g,
                             const std::vector<std::vector<VertexId>>& faces);

// True if any two edges properly cross in the straight-line drawing.
bool straight_line_crossings(const ColoredPlanarGraph& g);

struct ColoringResult {
    std::vector<Color> colors;  // no white left
    std::size_t components = 0;  // red components + blue components
};

std::size_t monochromatic_components(const ColoredPlanarGraph& g,
                                     const std::vector<Color>& colors);

// True iff the subgraph induced by `in_set` contains a cycle with at least
// one vertex outside the set strictly inside it. Requires all inner faces of
// g to be triangles.
bool proper_loop_check(const ColoredPlanarGraph& g, const std::vector<char>& in_set);
bool proper_loop_check(const ColoredPlanarGraph& g, Color which);

}  // namespace terrex
