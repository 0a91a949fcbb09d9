#pragma once

#include "diramsey/coloured_digraph.hpp"
#include "diramsey/embedding.hpp"
#include "diramsey/oriented_tree.hpp"

#include <optional>
#include <vector>

namespace diramsey {

// Exhaustive tree-containment oracle. Backtracking over injective maps:
// tree vertices are ordered by a DFS from a centroid so each placement is
// constrained by its parent's image, candidates are pruned by per-colour
// out/in-degree, and host vertices are tried in decreasing view degree.
// Complete: returns an embedding iff one exists. Correctness, not speed,
// is the contract; every other embedder is validated against it.
std::optional<Embedding> find_tree_in_view(const ColourView& g, const OrientedTree& tree);

// Same oracle over a whole host colour class. A tree larger than the host
// yields nullopt ("impossible"), never an error.
std::optional<Embedding> contains_monochromatic_copy(const ColouredDigraph& host, int colour,
                                                     const OrientedTree& tree);

// Exact longest directed path inside a view, as a vertex list (length =
// size-1; an empty colour class still yields a single vertex when the
// domain is non-empty). Uses DAG longest-path when the class is acyclic,
// branch-and-bound otherwise.
std::vector<int> longest_directed_path_in_view(const ColourView& g);
std::vector<int> longest_monochromatic_directed_path(const ColouredDigraph& host, int colour);

// Topological-sort existence.
bool is_acyclic_in_view(const ColourView& g);

// Centroid of the underlying tree (lowest id on ties).
int tree_centroid(const OrientedTree& t);

} // namespace diramsey
