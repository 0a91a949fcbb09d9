#include "diramsey/acceptance.hpp"
#include "diramsey/constructions.hpp"
#include "diramsey/embedders.hpp"
#include "diramsey/enumerate.hpp"
#include "diramsey/exact.hpp"
#include "diramsey/ghrv.hpp"
#include "diramsey/io.hpp"
#include "diramsey/mindegree.hpp"
#include "diramsey/oracle.hpp"
#include "diramsey/tree_catalog.hpp"
#include "diramsey/tree_ops.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <variant>

namespace py = pybind11;
using namespace diramsey;

namespace {

ColouredDigraph host_from_edges(int order, const std::string& kind, int colours,
                                const std::vector<std::tuple<int, int, int>>& edges) {
    auto k = kind_from_letter(kind.empty() ? 'G' : kind[0]);
    if (!k) throw std::invalid_argument("kind must be T, D or G");
    std::vector<ColouredDigraph::Edge> es;
    for (auto [a, b, c] : edges) es.push_back({a, b, c});
    return ColouredDigraph(order, *k, colours, es);
}

py::object embedding_or_none(const std::optional<Embedding>& e) {
    if (!e) return py::none();
    return py::cast(*e);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "oriented/directed Ramsey numbers of trees: embedders, constructions, search";

    py::class_<OrientedTree>(m, "OrientedTree")
        .def(py::init<int, std::vector<std::pair<int, int>>, std::optional<int>>(),
             py::arg("order"), py::arg("edges"), py::arg("root") = py::none())
        .def_property_readonly("order", &OrientedTree::order)
        .def_property_readonly("edges", &OrientedTree::edges)
        .def_property_readonly("root", &OrientedTree::root)
        .def("out_degree", &OrientedTree::out_degree)
        .def("in_degree", &OrientedTree::in_degree)
        .def("is_path", &OrientedTree::is_path)
        .def("is_out_directed", &OrientedTree::is_out_directed)
        .def("with_root", &OrientedTree::with_root)
        .def("reversed", &OrientedTree::reversed)
        .def("__repr__", &OrientedTree::to_string);

    m.def("directed_path", &directed_path, py::arg("order"));
    m.def("out_star", &out_star, py::arg("order"));
    m.def("in_star", &in_star, py::arg("order"));
    m.def("oriented_path_from_blocks", &oriented_path_from_blocks, py::arg("block_lengths"),
          py::arg("first_forward") = true);
    m.def("named_tree", &named_tree, py::arg("name"));
    m.def("canonical_tree_code", &canonical_tree_code);
    m.def("enumerate_rooted_trees", &enumerate_rooted_trees, py::arg("order"));
    m.def("enumerate_oriented_trees", &enumerate_oriented_trees, py::arg("order"));
    m.def("enumerate_oriented_paths", &enumerate_oriented_paths, py::arg("length"),
          py::arg("longest_block"));

    py::enum_<HostKind>(m, "HostKind")
        .value("Tournament", HostKind::Tournament)
        .value("CompleteDigraph", HostKind::CompleteDigraph)
        .value("General", HostKind::General);

    py::class_<ColouredDigraph>(m, "ColouredDigraph")
        .def(py::init(&host_from_edges), py::arg("order"), py::arg("kind"), py::arg("colours"),
             py::arg("edges"))
        .def_property_readonly("order", &ColouredDigraph::order)
        .def_property_readonly("colours", &ColouredDigraph::colours)
        .def_property_readonly("kind", &ColouredDigraph::kind)
        .def("colour_of", &ColouredDigraph::colour_of, py::arg("tail"), py::arg("head"))
        .def("validate",
             [](const ColouredDigraph& g) -> py::object {
                 auto v = g.validate();
                 return v ? py::cast(*v) : py::none();
             })
        .def("edges",
             [](const ColouredDigraph& g) {
                 std::vector<std::tuple<int, int, int>> es;
                 for (const auto& e : g.edge_list()) es.emplace_back(e.tail, e.head, e.colour);
                 return es;
             })
        .def("__repr__", [](const ColouredDigraph& g) {
            std::ostringstream os;
            os << "ColouredDigraph(order=" << g.order() << ", kind=" << to_string(g.kind())
               << ", colours=" << g.colours() << ")";
            return os.str();
        });

    py::class_<Embedding>(m, "Embedding")
        .def_readonly("map", &Embedding::map)
        .def_readonly("colour", &Embedding::colour)
        .def("__repr__", [](const Embedding& e) {
            std::ostringstream os;
            os << "Embedding(colour=" << e.colour << ", map=[";
            for (std::size_t i = 0; i < e.map.size(); ++i)
                os << (i ? "," : "") << e.map[i];
            os << "])";
            return os.str();
        });

    m.def(
        "contains_monochromatic_copy",
        [](const ColouredDigraph& host, int colour, const OrientedTree& tree) {
            return embedding_or_none(contains_monochromatic_copy(host, colour, tree));
        },
        py::arg("host"), py::arg("colour"), py::arg("tree"));
    m.def("longest_monochromatic_directed_path", &longest_monochromatic_directed_path,
          py::arg("host"), py::arg("colour"));
    m.def(
        "check_embedding",
        [](const ColouredDigraph& host, const OrientedTree& tree, const Embedding& e)
            -> py::object {
            auto bad = check_embedding(host, tree, e);
            return bad ? py::cast(*bad) : py::none();
        },
        py::arg("host"), py::arg("tree"), py::arg("embedding"));

    // tree toolkit
    m.def(
        "k_core",
        [](const OrientedTree& t, std::int64_t k) -> py::object {
            auto core = k_core(t, k);
            if (!core) return py::none();
            return py::make_tuple(core->tree, core->original_ids);
        },
        py::arg("tree"), py::arg("k"));
    m.def(
        "block_decomposition",
        [](const OrientedTree& p) {
            BlockDecomposition d = block_decomposition(p);
            py::dict out;
            out["block_orders"] = d.block_orders;
            out["first_edge_forward"] = d.first_edge_forward;
            out["longest_block_length"] = d.longest_block_length;
            out["traversal"] = d.traversal;
            return out;
        },
        py::arg("path"));
    m.def("out_leaves", &out_leaves, py::arg("tree"));
    m.def("check_degree_leaf_bound", &check_degree_leaf_bound, py::arg("tree"),
          py::arg("vertices"));
    m.def(
        "symmetric_closure",
        [](const OrientedTree& t) {
            SymmetricClosure c = symmetric_closure(t);
            return py::make_tuple(c.tree, c.input_map);
        },
        py::arg("tree"));
    m.def(
        "alternating_layers",
        [](const OrientedTree& t, int root) {
            return alternating_layers(t, root).layers;
        },
        py::arg("tree"), py::arg("root"));

    // embedding engine (views are exposed as host + colour + optional domain)
    m.def(
        "ghrv_dichotomy",
        [](const ColouredDigraph& host, int colour, int target_length) {
            GhrvOutcome out = ghrv_dichotomy(ColourView(host, colour), target_length);
            py::dict d;
            if (auto* p = std::get_if<VertexPath>(&out.result)) d["path"] = p->vertices;
            else d["independent_set"] = std::get<IndependentSet>(out.result).vertices;
            d["levels"] = out.levels;
            return d;
        },
        py::arg("host"), py::arg("colour"), py::arg("target_length"));
    m.def(
        "find_mindegree_pair",
        [](const ColouredDigraph& host, int colour, std::int64_t eps_num,
           std::int64_t eps_den) {
            MindegreePair p = find_mindegree_pair(ColourView(host, colour),
                                                  Rational{eps_num, eps_den});
            py::dict d;
            d["X"] = p.X.to_vector();
            d["Y"] = p.Y.to_vector();
            d["threshold"] = p.threshold;
            d["colour"] = p.colour;
            return d;
        },
        py::arg("host"), py::arg("colour"), py::arg("eps_num"), py::arg("eps_den") = 1);
    m.def(
        "dfs_partition",
        [](const ColouredDigraph& host, int colour, const OrientedTree& t) {
            auto out = dfs_partition(ColourView(host, colour), t);
            py::dict d;
            if (auto* e = std::get_if<Embedding>(&out)) d["embedding"] = *e;
            else {
                auto& p = std::get<TriPartition>(out);
                d["U"] = p.U.to_vector();
                d["X"] = p.X.to_vector();
                d["Y"] = p.Y.to_vector();
                d["partial_map"] = p.partial_map;
            }
            return d;
        },
        py::arg("host"), py::arg("colour"), py::arg("tree"));
    m.def(
        "bidirected_greedy_embed",
        [](const ColouredDigraph& host, int colour, std::int64_t eps_num, std::int64_t eps_den,
           const OrientedTree& t) {
            return bidirected_greedy_embed(host, colour, Rational{eps_num, eps_den}, t);
        },
        py::arg("host"), py::arg("colour"), py::arg("eps_num"), py::arg("eps_den"),
        py::arg("tree"));
    m.def("low_outdegree_embed", &low_outdegree_embed, py::arg("host"),
          py::arg("max_red_outdegree"), py::arg("l"), py::arg("tree"));
    m.def(
        "tree_or_independent",
        [](const ColouredDigraph& host, int colour, const OrientedTree& t, int m_size) {
            auto out = tree_or_independent(ColourView(host, colour), t, m_size);
            py::dict d;
            if (auto* e = std::get_if<Embedding>(&out)) d["embedding"] = *e;
            else d["independent_set"] = std::get<IndependentSet>(out).vertices;
            return d;
        },
        py::arg("host"), py::arg("colour"), py::arg("tree"), py::arg("m"));
    m.def("tree_or_independent_threshold", &tree_or_independent_threshold, py::arg("tree"),
          py::arg("m"));
    m.def(
        "ramsey_path_embed_tournament",
        [](const ColouredDigraph& host, const OrientedTree& path) {
            RamseyEmbedResult r = ramsey_path_embed_tournament(host, path);
            py::dict d;
            d["embedding"] = embedding_or_none(r.embedding);
            d["guaranteed"] = r.guaranteed;
            d["via_fallback"] = r.via_fallback;
            return d;
        },
        py::arg("host"), py::arg("path"));
    m.def(
        "ramsey_tree_embed_tournament",
        [](const ColouredDigraph& host, const std::vector<OrientedTree>& trees, int tracked) {
            RamseyEmbedResult r = ramsey_tree_embed_tournament(host, trees, tracked);
            py::dict d;
            d["embedding"] = embedding_or_none(r.embedding);
            d["guaranteed"] = r.guaranteed;
            d["via_fallback"] = r.via_fallback;
            return d;
        },
        py::arg("host"), py::arg("trees"), py::arg("tracked") = 0);

    // constructions
    m.def(
        "build_lexicographic",
        [](int n, int l, int k) {
            LexiConstruction c = build_lexicographic(n, l, k);
            py::dict d;
            d["host"] = c.host;
            d["coords"] = c.coords;
            d["ok"] = c.verification.ok;
            return d;
        },
        py::arg("n"), py::arg("l"), py::arg("k"));
    m.def(
        "build_layered",
        [](int n, int k, const std::string& stage) {
            auto s = layered_stage_from_string(stage);
            if (!s) throw std::invalid_argument("stage must be base, doubled or blownup");
            LayeredConstruction c = build_layered(n, k, *s);
            py::dict d;
            d["host"] = c.host;
            d["ok"] = c.verification.ok;
            return d;
        },
        py::arg("n"), py::arg("k"), py::arg("stage"));
    m.def(
        "verify_no_monochromatic_copy",
        [](const ColouredDigraph& host, const OrientedTree& tree) {
            ForbiddenSpec spec;
            spec.forbidden_trees.emplace_back(0, tree);
            return verify_construction(host, spec).ok;
        },
        py::arg("host"), py::arg("tree"));

    // exact search
    m.def(
        "count_tournaments",
        [](int n, int limit) {
            return static_cast<std::int64_t>(enumerate_tournaments(n, limit).size());
        },
        py::arg("n"), py::arg("limit") = 7);
    auto search_to_dict = [](const SearchResult& r) {
        py::dict d;
        d["value"] = r.value ? py::cast(*r.value) : py::none();
        d["conclusive"] = r.conclusive;
        d["largest_avoiding_order"] = r.largest_avoiding_order;
        d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
        d["hosts"] = r.stats.hosts_enumerated;
        d["colourings"] = r.stats.colourings_tested;
        d["prunes"] = r.stats.prunes;
        return d;
    };
    m.def(
        "oriented_ramsey_exact",
        [search_to_dict](const std::vector<OrientedTree>& targets, int n_max, int enum_limit,
                         int jobs) {
            SearchOptions o;
            o.enumeration_limit = enum_limit;
            o.jobs = jobs;
            return search_to_dict(oriented_ramsey_exact(targets, n_max, o));
        },
        py::arg("targets"), py::arg("n_max"), py::arg("enum_limit") = 0, py::arg("jobs") = 1);
    m.def(
        "directed_ramsey_exact",
        [search_to_dict](const std::vector<OrientedTree>& targets, int n_max, int jobs) {
            SearchOptions o;
            o.jobs = jobs;
            return search_to_dict(directed_ramsey_exact(targets, n_max, o));
        },
        py::arg("targets"), py::arg("n_max"), py::arg("jobs") = 1);

    // io
    m.def("parse_tree_file", &parse_tree_file, py::arg("path"));
    m.def("write_tree_file", &write_tree_file, py::arg("path"), py::arg("tree"));
    m.def("parse_colouring_file", &parse_colouring_file, py::arg("path"));
    m.def("write_colouring_file", &write_colouring_file, py::arg("path"), py::arg("host"));
}
