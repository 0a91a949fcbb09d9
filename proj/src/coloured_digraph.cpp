#include "diramsey/coloured_digraph.hpp"

#include <sstream>
#include <stdexcept>

namespace diramsey {

std::string to_string(HostKind k) {
    switch (k) {
        case HostKind::Tournament: return "Tournament";
        case HostKind::CompleteDigraph: return "CompleteDigraph";
        default: return "General";
    }
}

char kind_letter(HostKind k) {
    switch (k) {
        case HostKind::Tournament: return 'T';
        case HostKind::CompleteDigraph: return 'D';
        default: return 'G';
    }
}

std::optional<HostKind> kind_from_letter(char c) {
    switch (c) {
        case 'T': return HostKind::Tournament;
        case 'D': return HostKind::CompleteDigraph;
        case 'G': return HostKind::General;
        default: return std::nullopt;
    }
}

ColouredDigraph::ColouredDigraph(int order, HostKind kind, int colours,
                                 const std::vector<Edge>& edges)
    : order_(order), kind_(kind), colours_(colours) {
    if (order_ < 1) throw std::invalid_argument("host order must be positive");
    if (colours_ < 1 || colours_ > 255) throw std::invalid_argument("colour count must be in 1..255");

    colour_.assign(static_cast<std::size_t>(order_) * order_, 0);
    out_.assign(colours_, std::vector<Bitset>(order_, Bitset(order_)));
    in_.assign(colours_, std::vector<Bitset>(order_, Bitset(order_)));
    out_any_.assign(order_, Bitset(order_));
    in_any_.assign(order_, Bitset(order_));
    edge_count_.assign(colours_, 0);

    for (const Edge& e : edges) {
        if (e.tail < 0 || e.tail >= order_ || e.head < 0 || e.head >= order_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.colour < 1 || e.colour > colours_)
            throw std::invalid_argument("edge colour out of range");
        std::size_t i = idx(e.tail, e.head);
        if (colour_[i] != 0) throw std::invalid_argument("duplicate ordered edge");
        colour_[i] = static_cast<std::uint8_t>(e.colour);
        if (e.tail != e.head) {
            out_[e.colour - 1][e.tail].set(e.head);
            in_[e.colour - 1][e.head].set(e.tail);
            out_any_[e.tail].set(e.head);
            in_any_[e.head].set(e.tail);
        }
        ++edge_count_[e.colour - 1];
        ++edge_count_total_;
    }
}

std::vector<ColouredDigraph::Edge> ColouredDigraph::edge_list() const {
    std::vector<Edge> es;
    es.reserve(edge_count_total_);
    for (int u = 0; u < order_; ++u)
        for (int v = 0; v < order_; ++v)
            if (int c = colour_[idx(u, v)]; c != 0) es.push_back({u, v, c});
    return es;
}

std::optional<std::string> ColouredDigraph::validate() const {
    std::ostringstream os;
    for (int v = 0; v < order_; ++v)
        if (colour_[idx(v, v)] != 0) {
            os << "loop at vertex " << v;
            return os.str();
        }
    for (int u = 0; u < order_; ++u) {
        for (int v = u + 1; v < order_; ++v) {
            bool fwd = colour_[idx(u, v)] != 0;
            bool bwd = colour_[idx(v, u)] != 0;
            switch (kind_) {
                case HostKind::Tournament:
                    if (fwd && bwd) {
                        os << "bidirected pair (" << u << "," << v << ") in Tournament";
                        return os.str();
                    }
                    if (!fwd && !bwd) {
                        os << "missing edge between " << u << " and " << v << " in Tournament";
                        return os.str();
                    }
                    break;
                case HostKind::CompleteDigraph:
                    if (fwd != bwd) {
                        os << "missing reverse edge (" << (fwd ? v : u) << "," << (fwd ? u : v)
                           << ") in CompleteDigraph";
                        return os.str();
                    }
                    if (!fwd && !bwd) {
                        os << "missing edge pair between " << u << " and " << v
                           << " in CompleteDigraph";
                        return os.str();
                    }
                    break;
                case HostKind::General:
                    break;
            }
        }
    }
    return std::nullopt;
}

ColouredDigraph ColouredDigraph::tournament(int order, int colours,
                                            const std::vector<Edge>& edges) {
    ColouredDigraph g(order, HostKind::Tournament, colours, edges);
    if (auto v = g.validate()) throw std::invalid_argument(*v);
    return g;
}

ColouredDigraph ColouredDigraph::complete_digraph(int order, int colours,
                                                  const std::vector<Edge>& edges) {
    ColouredDigraph g(order, HostKind::CompleteDigraph, colours, edges);
    if (auto v = g.validate()) throw std::invalid_argument(*v);
    return g;
}

ColourView::ColourView(const ColouredDigraph& host, int colour)
    : host_(&host), colour_(colour), domain_(host.order(), true) {
    if (colour < 1 || colour > host.colours()) throw std::invalid_argument("colour out of range");
}

ColourView::ColourView(const ColouredDigraph& host, int colour, Bitset domain)
    : host_(&host), colour_(colour), domain_(std::move(domain)) {
    if (colour < 1 || colour > host.colours()) throw std::invalid_argument("colour out of range");
}

std::size_t ColourView::edge_count() const {
    std::size_t e = 0;
    domain_.for_each([&](int v) { e += static_cast<std::size_t>(out_degree(v)); });
    return e;
}

} // namespace diramsey
