#include "diramsey/instances.hpp"

#include <stdexcept>

namespace diramsey {

ColouredDigraph random_tournament(int n, int colours, std::mt19937& rng) {
    std::uniform_int_distribution<int> coin(0, 1), col(1, colours);
    std::vector<ColouredDigraph::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) edges.push_back({i, j, col(rng)});
            else edges.push_back({j, i, col(rng)});
        }
    return ColouredDigraph(n, HostKind::Tournament, colours, edges);
}

ColouredDigraph random_complete_digraph(int n, int colours, std::mt19937& rng) {
    std::uniform_int_distribution<int> col(1, colours);
    std::vector<ColouredDigraph::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) edges.push_back({i, j, col(rng)});
    return ColouredDigraph(n, HostKind::CompleteDigraph, colours, edges);
}

ColouredDigraph random_digraph(int n, double p, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<ColouredDigraph::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && u(rng) < p) edges.push_back({i, j, 1});
    return ColouredDigraph(n, HostKind::General, 1, edges);
}

OrientedTree random_tree(int n, std::mt19937& rng) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    std::vector<std::pair<int, int>> edges;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        int p = pick(rng);
        if (coin(rng)) edges.emplace_back(p, v);
        else edges.emplace_back(v, p);
    }
    return OrientedTree(n, std::move(edges));
}

OrientedTree random_out_tree(int n, std::mt19937& rng) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return OrientedTree(n, std::move(edges), 0);
}

} // namespace diramsey
