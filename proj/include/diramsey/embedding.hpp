#pragma once

#include "diramsey/coloured_digraph.hpp"
#include "diramsey/oriented_tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace diramsey {

// Certificate for a monochromatic copy of a tree in a host: an injective
// map from tree vertices to host vertices, all edges in the stated colour.
struct Embedding {
    std::vector<int> map; // indexed by tree vertex
    int colour = 0;
};

// nullopt when valid, else the first violated requirement.
std::optional<std::string> check_embedding(const ColouredDigraph& host, const OrientedTree& tree,
                                           const Embedding& e);

// Independence re-check for certificates: no edge of the view between members.
bool is_independent_in_view(const ColourView& g, const std::vector<int>& vertices);

} // namespace diramsey
