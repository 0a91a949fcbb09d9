#pragma once

#include "diramsey/coloured_digraph.hpp"
#include "diramsey/oriented_tree.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace diramsey {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Tree file: `t <order> [root]`, then one `<tail> <head>` line per edge.
OrientedTree parse_tree(std::istream& in);
OrientedTree parse_tree_file(const std::string& path);
void write_tree(std::ostream& out, const OrientedTree& t);
void write_tree_file(const std::string& path, const OrientedTree& t);

// Colouring file: `c <order> <k> <kind>` with kind in {T, D, G}, then one
// `<tail> <head> <colour>` line per edge. Violations are rejected with the
// offending line number.
ColouredDigraph parse_colouring(std::istream& in);
ColouredDigraph parse_colouring_file(const std::string& path);
void write_colouring(std::ostream& out, const ColouredDigraph& g);
void write_colouring_file(const std::string& path, const ColouredDigraph& g);

} // namespace diramsey
