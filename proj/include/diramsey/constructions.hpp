#pragma once

#include "diramsey/coloured_digraph.hpp"
#include "diramsey/oriented_tree.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace diramsey {

struct VerificationItem {
    std::string check;
    bool pass;
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationItem> items;
    bool ok = true;

    void add(std::string check, bool pass, std::string detail = "");
};

// Per-colour requirements for a lower-bound witness: longest directed path
// bounds (colour -> max allowed length) and forbidden monochromatic trees
// (colour 0 = every colour).
struct ForbiddenSpec {
    std::map<int, int> max_path_length;
    std::vector<std::pair<int, OrientedTree>> forbidden_trees;
};

VerificationReport verify_construction(const ColouredDigraph& host, const ForbiddenSpec& spec);

// Lexicographic tournament on [l]^(k-1) x [n]: transitive orientation with
// colour = first differing coordinate. Colour classes i < k carry no
// directed path of length l; colour-k classes are disjoint n-vertex
// tournaments. Self-verified at build time.
struct LexiConstruction {
    int n, l, k;
    ColouredDigraph host;
    std::vector<std::vector<int>> coords; // vertex -> coordinate tuple
    VerificationReport verification;
};
LexiConstruction build_lexicographic(int n, int l, int k);

// Layered complete-digraph colourings avoiding monochromatic paths of
// length 2n: the step-colouring Base on n^(k-1) vertices, the Doubled
// two-copy variant on 2n^(k-1), and (for k >= 3) the BlownUp variant on
// 4n^(k-1) built from the (k-1)-colour Doubled host.
enum class LayeredStage { Base, Doubled, BlownUp };
std::string to_string(LayeredStage s);
std::optional<LayeredStage> layered_stage_from_string(const std::string& s);

struct LayeredConstruction {
    int n, k;
    LayeredStage stage;
    ColouredDigraph host;
    VerificationReport verification;
};
LayeredConstruction build_layered(int n, int k, LayeredStage stage);

} // namespace diramsey
