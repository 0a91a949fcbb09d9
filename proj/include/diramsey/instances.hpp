#pragma once

#include "diramsey/coloured_digraph.hpp"
#include "diramsey/oriented_tree.hpp"

#include <random>

namespace diramsey {

// Deterministic instance generators for property suites and sampling.

ColouredDigraph random_tournament(int n, int colours, std::mt19937& rng);
ColouredDigraph random_complete_digraph(int n, int colours, std::mt19937& rng);
// one-colour General digraph, each ordered pair present with probability p
ColouredDigraph random_digraph(int n, double p, std::mt19937& rng);

OrientedTree random_tree(int n, std::mt19937& rng);      // random orientation
OrientedTree random_out_tree(int n, std::mt19937& rng);  // rooted at 0

} // namespace diramsey
