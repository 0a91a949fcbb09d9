#include "diramsey/mindegree.hpp"

#include <sstream>
#include <stdexcept>

namespace diramsey {

std::optional<std::string> check_mindegree_pair(const ColourView& g, const MindegreePair& p) {
    std::ostringstream os;
    if (p.X.intersects(p.Y)) return "X and Y intersect";
    bool ok = true;
    p.X.for_each([&](int x) {
        if (!g.domain().test(x)) ok = false;
    });
    p.Y.for_each([&](int y) {
        if (!g.domain().test(y)) ok = false;
    });
    if (!ok) return "pair not inside the view domain";
    int bad = -1;
    p.X.for_each([&](int x) {
        if (bad < 0 && g.out(x).and_count(p.Y) < p.threshold) bad = x;
    });
    if (bad >= 0) {
        os << "vertex " << bad << " in X has fewer than " << p.threshold << " out-neighbours in Y";
        return os.str();
    }
    p.Y.for_each([&](int y) {
        if (bad < 0 && g.in(y).and_count(p.X) < p.threshold) bad = y;
    });
    if (bad >= 0) {
        os << "vertex " << bad << " in Y has fewer than " << p.threshold << " in-neighbours in X";
        return os.str();
    }
    return std::nullopt;
}

MindegreePair find_mindegree_pair(const ColourView& g, Rational eps) {
    if (eps.num <= 0 || eps.den <= 0) throw std::invalid_argument("epsilon must be positive");
    const std::int64_t n = g.size();
    const std::int64_t edges = static_cast<std::int64_t>(g.edge_count());
    if (2 * edges * eps.den < eps.num * n * (n - 1))
        throw std::invalid_argument("graph too sparse: need at least eps * n(n-1)/2 edges");

    // threshold = ceil(eps * n / 8)
    const std::int64_t den8 = eps.den * 8;
    const int threshold = static_cast<int>((eps.num * n + den8 - 1) / den8);

    const int hn = g.host_order();
    std::vector<int> verts = g.domain().to_vector();
    Bitset A(hn), B(hn);
    for (std::size_t i = 0; i < verts.size(); ++i)
        (i % 2 == 0 ? A : B).set(verts[i]);

    // cut size and per-vertex move deltas, maintained incrementally
    std::vector<std::int64_t> in_A(hn, 0), out_B(hn, 0);
    std::int64_t cut = 0;
    for (int v : verts) {
        in_A[v] = g.in(v).and_count(A);
        out_B[v] = g.out(v).and_count(B);
        if (A.test(v)) cut += out_B[v];
    }

    while (4 * cut < edges) {
        bool moved = false;
        for (int v : verts) {
            std::int64_t delta =
                A.test(v) ? in_A[v] - out_B[v] : out_B[v] - in_A[v];
            if (delta <= 0) continue;
            bool from_A = A.test(v);
            if (from_A) {
                A.reset(v);
                B.set(v);
            } else {
                B.reset(v);
                A.set(v);
            }
            // v changed side: every in-neighbour's out_B and every
            // out-neighbour's in_A shift by one
            int d_inA = from_A ? -1 : +1;
            int d_outB = from_A ? +1 : -1;
            g.out(v).for_each([&](int w) { in_A[w] += d_inA; });
            g.in(v).for_each([&](int w) { out_B[w] += d_outB; });
            cut += delta;
            moved = true;
            break;
        }
        if (moved) continue;
        // no single switch helps; swapping the labels flips the cut to e(B,A)
        std::int64_t reverse_cut = 0;
        B.for_each([&](int v) { reverse_cut += g.out(v).and_count(A); });
        if (reverse_cut > cut) {
            std::swap(A, B);
            cut = reverse_cut;
            for (int v : verts) {
                in_A[v] = g.in(v).and_count(A);
                out_B[v] = g.out(v).and_count(B);
            }
            continue;
        }
        throw std::logic_error("switching stalled below the e/4 cut guarantee");
    }

    // peel the bipartite A->B graph below the threshold
    Bitset X = A, Y = B;
    std::vector<int> degree(hn, 0);
    for (int v : verts)
        degree[v] = X.test(v) ? g.out(v).and_count(Y) : g.in(v).and_count(X);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : verts) {
            if (!(X.test(v) || Y.test(v)) || degree[v] >= threshold) continue;
            if (X.test(v)) {
                X.reset(v);
                (g.out(v) & Y).for_each([&](int w) { --degree[w]; });
            } else {
                Y.reset(v);
                (g.in(v) & X).for_each([&](int w) { --degree[w]; });
            }
            changed = true;
        }
    }
    if (X.none() || Y.none())
        throw std::logic_error("peeling emptied a side despite the density precondition");

    MindegreePair pair{std::move(X), std::move(Y), threshold, g.colour()};
    if (auto bad = check_mindegree_pair(g, pair))
        throw std::logic_error("mindegree pair self-check failed: " + *bad);
    return pair;
}

} // namespace diramsey
