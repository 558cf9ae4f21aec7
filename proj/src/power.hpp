#pragma once

#include <string>

#include "graph.hpp"
#include "group.hpp"

namespace rpg {

// Which of the four graph variants to build.
struct GraphVariant {
    bool reduced = true;   // false = power graph
    bool directed = false;
    bool proper = false;   // drop the identity vertex
};

// Undirected build. Reduced: edge uv iff one generated subgroup properly
// contains the other. Power: non-proper inclusion, u != v.
SimpleGraph build_power_graph(const FiniteGroup& g, const CyclicSubgroupLattice& lat,
                              const GraphVariant& v);
SimpleGraph build_power_graph(const FiniteGroup& g, const GraphVariant& v);

// Directed build. Reduced: arc u->v iff <v> properly contained in <u>.
// Power: arc u->v iff v in <u>, v != u.
DiGraph build_power_digraph(const FiniteGroup& g, const CyclicSubgroupLattice& lat,
                            const GraphVariant& v);
DiGraph build_power_digraph(const FiniteGroup& g, const GraphVariant& v);

// Closed-form structure of RP(G) for the dihedral, dicyclic and
// semidihedral families, assembled by explicit join/union rules rather
// than subgroup containment tests. Throws UnsupportedFamily otherwise.
struct KnownDecomposition {
    std::string expression;
    SimpleGraph predicted;  // full (non-proper) reduced power graph
};
KnownDecomposition decompose_known(const FiniteGroup& g);

}  // namespace rpg
