#include "diramsey/constructions.hpp"

#include "diramsey/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace diramsey {

void VerificationReport::add(std::string check, bool pass, std::string detail) {
    ok = ok && pass;
    items.push_back({std::move(check), pass, std::move(detail)});
}

std::string to_string(LayeredStage s) {
    switch (s) {
        case LayeredStage::Base: return "base";
        case LayeredStage::Doubled: return "doubled";
        default: return "blownup";
    }
}

std::optional<LayeredStage> layered_stage_from_string(const std::string& s) {
    if (s == "base") return LayeredStage::Base;
    if (s == "doubled") return LayeredStage::Doubled;
    if (s == "blownup") return LayeredStage::BlownUp;
    return std::nullopt;
}

VerificationReport verify_construction(const ColouredDigraph& host, const ForbiddenSpec& spec) {
    VerificationReport report;
    for (auto [colour, bound] : spec.max_path_length) {
        auto path = longest_monochromatic_directed_path(host, colour);
        int len = path.empty() ? 0 : static_cast<int>(path.size()) - 1;
        std::ostringstream os;
        os << "longest colour-" << colour << " directed path = " << len;
        report.add("colour " + std::to_string(colour) + " path length <= " +
                       std::to_string(bound),
                   len <= bound, os.str());
    }
    for (const auto& [colour, tree] : spec.forbidden_trees) {
        std::vector<int> cols;
        if (colour == 0)
            for (int c = 1; c <= host.colours(); ++c) cols.push_back(c);
        else
            cols.push_back(colour);
        for (int c : cols) {
            auto found = contains_monochromatic_copy(host, c, tree);
            std::ostringstream os;
            if (found) {
                os << "copy at";
                for (int v : found->map) os << " " << v;
            }
            report.add("no colour-" + std::to_string(c) + " copy of tree(order " +
                           std::to_string(tree.order()) + ")",
                       !found.has_value(), os.str());
        }
    }
    return report;
}

namespace {

constexpr long long kMaxConstructionOrder = 4096;

std::vector<std::vector<int>> coordinate_tuples(const std::vector<int>& radix) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(radix.size(), 1);
    while (true) {
        tuples.push_back(cur);
        int i = static_cast<int>(radix.size()) - 1;
        while (i >= 0 && cur[i] == radix[i]) cur[i--] = 1;
        if (i < 0) break;
        ++cur[i];
    }
    return tuples;
}

} // namespace

LexiConstruction build_lexicographic(int n, int l, int k) {
    if (n < 1 || l < 1 || k < 1) throw std::invalid_argument("n, l, k must be positive");
    long long order = n;
    for (int i = 0; i < k - 1; ++i) {
        order *= l;
        if (order > kMaxConstructionOrder)
            throw std::invalid_argument("construction order l^(k-1) * n too large");
    }

    // coordinates in lexicographic vertex order: (x_1..x_{k-1}) over [l],
    // final coordinate over [n]
    std::vector<int> radix(k - 1, l);
    radix.push_back(n);
    auto coords = coordinate_tuples(radix);

    std::vector<ColouredDigraph::Edge> edges;
    const int m = static_cast<int>(order);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            int i = 0;
            while (coords[a][i] == coords[b][i]) ++i;
            // vertex order is lexicographic, so a < b means coords[a][i] < coords[b][i]
            edges.push_back({a, b, i + 1});
        }
    ColouredDigraph host(m, HostKind::Tournament, k, edges);

    VerificationReport report;
    if (auto bad = host.validate()) report.add("host is a tournament", false, *bad);
    else report.add("host is a tournament", true);
    for (int c = 1; c < k; ++c) {
        // colour classes below k are acyclic (coordinates increase along
        // their edges), so the DAG longest-path route is exact here
        report.add("colour-" + std::to_string(c) + " class acyclic",
                   is_acyclic_in_view(ColourView(host, c)));
        auto path = longest_monochromatic_directed_path(host, c);
        int len = path.empty() ? 0 : static_cast<int>(path.size()) - 1;
        report.add("no colour-" + std::to_string(c) + " directed path of length " +
                       std::to_string(l),
                   len < l, "longest = " + std::to_string(len));
    }
    {
        // colour-k components: same first k-1 coordinates, so size n
        std::vector<int> comp(m, -1);
        int comps = 0;
        bool ok = true;
        int biggest = 0;
        for (int v = 0; v < m; ++v) {
            if (comp[v] >= 0) continue;
            int size = 0;
            std::vector<int> stack{v};
            comp[v] = comps;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                ++size;
                for (int w = 0; w < m; ++w)
                    if (comp[w] < 0 &&
                        (host.colour_of(x, w) == k || host.colour_of(w, x) == k)) {
                        comp[w] = comps;
                        stack.push_back(w);
                    }
            }
            biggest = std::max(biggest, size);
            ++comps;
        }
        ok = biggest <= n;
        report.add("colour-" + std::to_string(k) + " components have at most " +
                       std::to_string(n) + " vertices",
                   ok, "largest = " + std::to_string(biggest));
    }
    if (!report.ok) throw std::logic_error("lexicographic construction failed self-verification");
    return LexiConstruction{n, l, k, std::move(host), std::move(coords), std::move(report)};
}

namespace {

// step colouring of the ordered pair a -> b over (k-1)-tuples
int layered_colour(const std::vector<int>& a, const std::vector<int>& b, int k) {
    if (a[0] > b[0]) return 1;
    for (int i = 2; i < k; ++i) {
        // tuple index i-1 holds the i-th coordinate
        if (a[i - 1] > b[i - 1]) return i;
        if (a[i - 1] == b[i - 1] && a[i - 2] < b[i - 2]) return i;
    }
    return k;
}

ColouredDigraph layered_base(int n, int k) {
    long long order = 1;
    for (int i = 0; i < k - 1; ++i) {
        order *= n;
        if (order > kMaxConstructionOrder) throw std::invalid_argument("n^(k-1) too large");
    }
    std::vector<int> radix(k - 1, n);
    auto coords = coordinate_tuples(radix);
    const int m = static_cast<int>(order);
    std::vector<ColouredDigraph::Edge> edges;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b) edges.push_back({a, b, layered_colour(coords[a], coords[b], k)});
    return ColouredDigraph(m, HostKind::CompleteDigraph, k, edges);
}

ColouredDigraph layered_doubled(int n, int k) {
    ColouredDigraph base = layered_base(n, k);
    const int m = base.order();
    std::vector<ColouredDigraph::Edge> edges;
    for (const auto& e : base.edge_list()) {
        edges.push_back(e);
        edges.push_back({e.tail + m, e.head + m, e.colour});
    }
    // colour-1 edges forward between the copies, colour-k backward
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            edges.push_back({a, b + m, 1});
            edges.push_back({b + m, a, k});
        }
    return ColouredDigraph(2 * m, HostKind::CompleteDigraph, k, edges);
}

ColouredDigraph layered_blownup(int n, int k) {
    // blow up the (k-1)-colour doubled host by 2n-sets, colour k inside
    ColouredDigraph g = layered_doubled(n, k - 1);
    const int m = g.order();
    const int s = 2 * n;
    long long order = static_cast<long long>(m) * s;
    if (order > kMaxConstructionOrder) throw std::invalid_argument("4n^(k-1) too large");
    std::vector<ColouredDigraph::Edge> edges;
    auto id = [&](int u, int i) { return u * s + i; };
    for (int u = 0; u < m; ++u)
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j)
                if (i != j) edges.push_back({id(u, i), id(u, j), k});
    for (const auto& e : g.edge_list())
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j)
                edges.push_back({id(e.tail, i), id(e.head, j), e.colour});
    return ColouredDigraph(static_cast<int>(order), HostKind::CompleteDigraph, k, edges);
}

} // namespace

LayeredConstruction build_layered(int n, int k, LayeredStage stage) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (k < 2) throw std::invalid_argument("layered constructions need k >= 2");
    if (stage == LayeredStage::BlownUp && k < 3)
        throw std::invalid_argument("the blown-up stage is undefined for k = 2");

    ColouredDigraph host = stage == LayeredStage::Base      ? layered_base(n, k)
                           : stage == LayeredStage::Doubled ? layered_doubled(n, k)
                                                            : layered_blownup(n, k);

    VerificationReport report;
    if (auto bad = host.validate()) report.add("host is a complete digraph", false, *bad);
    else report.add("host is a complete digraph", true);
    for (int c = 1; c <= k; ++c) {
        auto path = longest_monochromatic_directed_path(host, c);
        int len = path.empty() ? 0 : static_cast<int>(path.size()) - 1;
        report.add("no colour-" + std::to_string(c) + " directed path of length " +
                       std::to_string(2 * n),
                   len < 2 * n, "longest = " + std::to_string(len));
    }
    if (!report.ok) throw std::logic_error("layered construction failed self-verification");
    return LayeredConstruction{n, k, stage, std::move(host), std::move(report)};
}

} // namespace diramsey
