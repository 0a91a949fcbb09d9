#pragma once

#include "diramsey/oriented_tree.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace diramsey {

// Canonical code of an oriented tree up to isomorphism (directions kept).
std::string canonical_tree_code(const OrientedTree& t);

// All rooted trees on n vertices up to isomorphism, realised out-directed
// with root 0 (level-sequence successor enumeration).
std::vector<OrientedTree> enumerate_rooted_trees(int n);

// All oriented trees on n vertices up to isomorphism. Labelled trees via
// Pruefer sequences, all orientations, deduplicated by canonical code.
// Intended for small n (the count grows quickly).
std::vector<OrientedTree> enumerate_oriented_trees(int n);

// All oriented paths with `length` edges and longest directed block exactly
// l, up to isomorphism.
std::vector<OrientedTree> enumerate_oriented_paths(int length, int l);

// Named target lookup for the CLI: p<k> (directed path of order k),
// outstar<k> / instar<k> (stars on k vertices).
std::optional<OrientedTree> named_tree(const std::string& name);

} // namespace diramsey
