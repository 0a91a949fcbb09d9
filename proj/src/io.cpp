#include "diramsey/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace diramsey {

namespace {

// non-empty, non-comment lines with their 1-based numbers
std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> lines;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        std::string s = raw;
        if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
        std::istringstream probe(s);
        std::string tok;
        if (probe >> tok) lines.emplace_back(no, s);
    }
    return lines;
}

int parse_int(std::istringstream& is, int line, const char* what) {
    long long v;
    if (!(is >> v)) throw ParseError(line, std::string("expected ") + what);
    if (v < -1000000000LL || v > 1000000000LL) throw ParseError(line, std::string(what) + " out of range");
    return static_cast<int>(v);
}

void expect_end(std::istringstream& is, int line) {
    std::string extra;
    if (is >> extra) throw ParseError(line, "unexpected trailing token '" + extra + "'");
}

} // namespace

OrientedTree parse_tree(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw ParseError(1, "empty tree file");
    auto [hline, header] = lines.front();
    std::istringstream hs(header);
    std::string tag;
    hs >> tag;
    if (tag != "t") throw ParseError(hline, "tree file must start with 't <order> [root]'");
    int order = parse_int(hs, hline, "order");
    if (order < 1) throw ParseError(hline, "order must be positive");
    std::optional<int> root;
    {
        long long r;
        if (hs >> r) {
            if (r < 0 || r >= order) throw ParseError(hline, "root out of range");
            root = static_cast<int>(r);
            expect_end(hs, hline);
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [no, text] = lines[i];
        std::istringstream es(text);
        int a = parse_int(es, no, "tail");
        int b = parse_int(es, no, "head");
        expect_end(es, no);
        if (a < 0 || a >= order || b < 0 || b >= order)
            throw ParseError(no, "edge endpoint out of range");
        if (a == b) throw ParseError(no, "loop edge");
        for (auto [x, y] : edges)
            if ((x == a && y == b) || (x == b && y == a))
                throw ParseError(no, "duplicate or bidirected edge");
        edges.emplace_back(a, b);
    }
    if (static_cast<int>(edges.size()) != order - 1)
        throw ParseError(lines.back().first, "tree must have order-1 edges");
    try {
        return OrientedTree(order, std::move(edges), root);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines.back().first, e.what());
    }
}

OrientedTree parse_tree_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open tree file: " + path);
    return parse_tree(f);
}

void write_tree(std::ostream& out, const OrientedTree& t) {
    out << "t " << t.order();
    if (t.root()) out << " " << *t.root();
    out << "\n";
    for (auto [a, b] : t.edges()) out << a << " " << b << "\n";
}

void write_tree_file(const std::string& path, const OrientedTree& t) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open file for writing: " + path);
    write_tree(f, t);
}

ColouredDigraph parse_colouring(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw ParseError(1, "empty colouring file");
    auto [hline, header] = lines.front();
    std::istringstream hs(header);
    std::string tag;
    hs >> tag;
    if (tag != "c") throw ParseError(hline, "colouring file must start with 'c <order> <k> <kind>'");
    int order = parse_int(hs, hline, "order");
    int k = parse_int(hs, hline, "colour count");
    std::string kind_tok;
    if (!(hs >> kind_tok) || kind_tok.size() != 1)
        throw ParseError(hline, "expected kind letter T, D or G");
    auto kind = kind_from_letter(kind_tok[0]);
    if (!kind) throw ParseError(hline, "unknown kind '" + kind_tok + "'");
    expect_end(hs, hline);
    if (order < 1) throw ParseError(hline, "order must be positive");
    if (k < 1 || k > 255) throw ParseError(hline, "colour count must be in 1..255");

    std::vector<ColouredDigraph::Edge> edges;
    std::vector<std::vector<char>> present(order, std::vector<char>(order, 0));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [no, text] = lines[i];
        std::istringstream es(text);
        int a = parse_int(es, no, "tail");
        int b = parse_int(es, no, "head");
        int c = parse_int(es, no, "colour");
        expect_end(es, no);
        if (a < 0 || a >= order || b < 0 || b >= order)
            throw ParseError(no, "edge endpoint out of range");
        if (a == b) throw ParseError(no, "loop edge");
        if (c < 1 || c > k) throw ParseError(no, "colour out of range");
        if (present[a][b]) throw ParseError(no, "duplicate ordered edge");
        if (*kind == HostKind::Tournament && present[b][a])
            throw ParseError(no, "bidirected pair in Tournament");
        present[a][b] = 1;
        edges.push_back({a, b, c});
    }
    ColouredDigraph g(order, *kind, k, edges);
    if (auto v = g.validate()) throw ParseError(hline, *v);
    return g;
}

ColouredDigraph parse_colouring_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open colouring file: " + path);
    return parse_colouring(f);
}

void write_colouring(std::ostream& out, const ColouredDigraph& g) {
    out << "c " << g.order() << " " << g.colours() << " " << kind_letter(g.kind()) << "\n";
    for (const auto& e : g.edge_list()) out << e.tail << " " << e.head << " " << e.colour << "\n";
}

void write_colouring_file(const std::string& path, const ColouredDigraph& g) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open file for writing: " + path);
    write_colouring(f, g);
}

} // namespace diramsey
