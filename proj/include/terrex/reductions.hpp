#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "terrex/colored_graph.hpp"
#include "terrex/terrain.hpp"

namespace terrex {

struct SetCoverInstance {
    std::size_t universe_size = 0;               // items are 1..universe_size
    std::vector<std::vector<int>> sets;          // each sorted, unique

    bool covers() const;
};

struct Planar3SatInstance {
    int num_vars = 0;  // variables are 1..num_vars
    struct Clause {
        std::array<int, 3> lits;  // signed, zero-padded for short clauses
    };
    std::vector<Clause> clauses;
    // Optional rotation system of the variable-clause incidence graph
    // (vertices: variables then clauses). Validated, not computed.
    std::vector<std::vector<VertexId>> incidence_rotation;

    std::size_t min_unsatisfied() const;  // over all assignments
    bool satisfiable() const { return min_unsatisfied() == 0; }
};

// Affine relation between a source instance optimum and the generated
// target instance optimum, plus the decoding story.
struct CostMap {
    std::string reduction;
    long long offset = 0;
    std::string direction;
    std::string back_transform;
};

enum class GadgetTag : std::uint8_t {
    north_gadget,
    row_gadget,
    inverter,
    subgadget,
    south_gadget,
    triangulation_vertex,
    clause_gadget,
    edge_chain,
    variable_vertex,
};

const char* gadget_tag_name(GadgetTag tag);

struct GadgetTags {
    std::vector<GadgetTag> tag;   // one per vertex
    std::vector<int> param;       // set index / clause index, -1 when unused
};

// ---- set cover -> minimizing-extrema terrain (heights 1/2/3/5, whites [1,5])

struct SetCoverTerrain {
    ImpreciseTerrain terrain;
    CostMap cost;  // terrain optimum = cover optimum + 2
    GadgetTags tags;
};

SetCoverTerrain setcover_to_terrain(const SetCoverInstance& sc);

// ---- PDMCS colored graph -> terrain (red=5, blue=1, white=[1,5], fillers)

struct PdmcsTerrain {
    ImpreciseTerrain terrain;
    CostMap cost;  // terrain optimum = component optimum + offset
};

PdmcsTerrain pdmcs_to_terrain(const ColoredPlanarGraph& g);

// ---- planar 3-SAT -> PDMCS / PDCS gadget graphs

struct SatPdmcsGraph {
    ColoredPlanarGraph graph;
    CostMap cost;  // min components = whites - 2*clauses + min unsatisfied
    GadgetTags tags;
    std::size_t white_count = 0;
    std::size_t inverter_k = 0;
};

// k = 0 picks the default (number of gadgets + 1).
SatPdmcsGraph planar3sat_to_pdmcs(const Planar3SatInstance& f, std::size_t k = 0);

ColoredPlanarGraph planar3sat_to_pdcs(const Planar3SatInstance& f);

// ---- maximum independent set -> strict-minima terrain

struct IndepSetTerrain {
    ImpreciseTerrain terrain;
    CostMap cost;  // min strict minima = n - alpha + isolated_vertices
    std::size_t isolated_vertices = 0;
};

// Input graph: colors ignored, embedding (rotation + coords) required.
IndepSetTerrain independent_set_to_terrain(const ColoredPlanarGraph& g, std::size_t k);

// ---- general position perturbation (z -> z - eps*y - noise)

ImpreciseTerrain perturb_general_position(const ImpreciseTerrain& t, double eps,
                                          std::uint64_t seed = 1);

// ---- spikes family (stalagmites/stalactites between flat floor & ceiling)

struct SpikesTerrain {
    ImpreciseTerrain terrain;
    std::size_t floor_locmin = 0, floor_locmax = 0;
    std::size_t ceiling_locmin = 0, ceiling_locmax = 0;
};

SpikesTerrain gen_spikes(std::size_t stalagmites, std::size_t stalactites, std::size_t grid);

// Lemma-style augmentation used by the proper-loop tests: wraps a colored
// triangulated graph in two rings of white vertices and triangulates the
// annuli.
ColoredPlanarGraph augment_with_white_layers(const ColoredPlanarGraph& g);

}  // namespace terrex
