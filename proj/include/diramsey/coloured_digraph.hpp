#pragma once

#include "diramsey/bitset.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace diramsey {

enum class HostKind { Tournament, CompleteDigraph, General };

std::string to_string(HostKind k);
char kind_letter(HostKind k);
std::optional<HostKind> kind_from_letter(char c);

// A host digraph with a colour (1..k) on every present edge. Kinds carry
// the structural claim checked by validate(); construction itself only
// rejects states the representation cannot hold (duplicate ordered pairs,
// ids or colours out of storable range), so that validate() can report
// kind violations on otherwise well-formed input.
class ColouredDigraph {
public:
    struct Edge {
        int tail, head, colour;
    };

    ColouredDigraph(int order, HostKind kind, int colours, const std::vector<Edge>& edges);

    int order() const { return order_; }
    HostKind kind() const { return kind_; }
    int colours() const { return colours_; }

    // 0 when absent
    int colour_of(int tail, int head) const { return colour_[idx(tail, head)]; }
    bool has_edge(int tail, int head) const { return colour_of(tail, head) != 0; }

    const Bitset& out_row(int colour, int v) const { return out_[colour - 1][v]; }
    const Bitset& in_row(int colour, int v) const { return in_[colour - 1][v]; }
    const Bitset& out_any(int v) const { return out_any_[v]; }
    const Bitset& in_any(int v) const { return in_any_[v]; }

    std::size_t edge_count() const { return edge_count_total_; }
    std::size_t edge_count(int colour) const { return edge_count_[colour - 1]; }

    std::vector<Edge> edge_list() const;

    // First violated invariant, or nullopt when the host is well-formed.
    std::optional<std::string> validate() const;

    // Convenience builders; these validate and throw on violation.
    static ColouredDigraph tournament(int order, int colours, const std::vector<Edge>& edges);
    static ColouredDigraph complete_digraph(int order, int colours, const std::vector<Edge>& edges);

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * order_ + v;
    }

    int order_;
    HostKind kind_;
    int colours_;
    std::vector<std::uint8_t> colour_;
    std::vector<std::vector<Bitset>> out_, in_; // [colour-1][vertex]
    std::vector<Bitset> out_any_, in_any_;
    std::vector<std::size_t> edge_count_;
    std::size_t edge_count_total_ = 0;
};

// Read-only view of one colour class restricted to a vertex subset.
// Vertex ids stay those of the host, so certificates need no translation.
class ColourView {
public:
    ColourView(const ColouredDigraph& host, int colour);
    ColourView(const ColouredDigraph& host, int colour, Bitset domain);

    const ColouredDigraph& host() const { return *host_; }
    int colour() const { return colour_; }
    const Bitset& domain() const { return domain_; }
    int host_order() const { return host_->order(); }
    int size() const { return domain_.count(); }

    Bitset out(int v) const { return host_->out_row(colour_, v) & domain_; }
    Bitset in(int v) const { return host_->in_row(colour_, v) & domain_; }
    int out_degree(int v) const { return host_->out_row(colour_, v).and_count(domain_); }
    int in_degree(int v) const { return host_->in_row(colour_, v).and_count(domain_); }
    bool edge(int u, int v) const {
        return domain_.test(u) && domain_.test(v) && host_->colour_of(u, v) == colour_;
    }

    std::size_t edge_count() const;

    ColourView restricted(const Bitset& sub) const {
        return ColourView(*host_, colour_, domain_ & sub);
    }

private:
    const ColouredDigraph* host_;
    int colour_;
    Bitset domain_;
};

} // namespace diramsey
