#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kop/branchdec.hpp"
#include "kop/generator.hpp"
#include "kop/io.hpp"
#include "kop/layers.hpp"
#include "kop/treedec.hpp"
#include "kop/verify.hpp"

namespace py = pybind11;
using namespace kop;

namespace {

py::dict result_dict(const CheckResult& r) {
    py::dict d;
    d["ok"] = r.ok;
    d["width"] = r.width;
    d["violation"] = r.violation;
    return d;
}

std::string td_text(const TreeDecomposition& td) {
    TdFile f;
    f.bags = td.bags;
    f.tree_edges = td.tree_edges;
    f.n_graph = td.n_graph;
    return write_td(f);
}

std::string bd_text(const BranchDecomposition& bd, const Embedding& emb) {
    BdFile f;
    for (const auto& blk : bd.blocks) {
        BdBlock fb;
        fb.n_nodes = blk.n_nodes;
        fb.tree_edges = blk.tree_edges;
        for (auto [node, e] : blk.sigma) fb.leaves.push_back({node, emb.edge_ends[e]});
        f.blocks.push_back(std::move(fb));
    }
    return write_bd(f);
}

} // namespace

PYBIND11_MODULE(_kop, m) {
    m.doc() = "tree and branch decompositions of k-outerplanar graphs";

    py::register_exception<error>(m, "KopError");

    py::class_<Embedding>(m, "Embedding")
        .def_property_readonly("n", [](const Embedding& e) { return e.n; })
        .def_property_readonly("m", &Embedding::m)
        .def_property_readonly("n_faces", [](const Embedding& e) { return e.n_faces; })
        .def("edges", &Embedding::edge_list)
        .def("neighbors", &Embedding::neighbors, py::arg("v"))
        .def("degree", &Embedding::degree, py::arg("v"))
        .def("to_text", &write_emb)
        .def_static("from_text", &parse_emb, py::arg("text"))
        .def("__repr__", [](const Embedding& e) {
            return "<kop.Embedding n=" + std::to_string(e.n) + " m=" + std::to_string(e.m()) + ">";
        });

    py::class_<TreeDecomposition>(m, "TreeDecomposition")
        .def_readonly("bags", &TreeDecomposition::bags)
        .def_readonly("tree_edges", &TreeDecomposition::tree_edges)
        .def_property_readonly("width", &TreeDecomposition::width)
        .def("to_text", &td_text);

    py::class_<BranchTag>(m, "BranchTag");
    py::class_<BranchBlock>(m, "BranchBlock")
        .def_readonly("n_nodes", &BranchBlock::n_nodes)
        .def_readonly("tree_edges", &BranchBlock::tree_edges)
        .def_readonly("sigma", &BranchBlock::sigma);
    py::class_<BranchDecomposition>(m, "BranchDecomposition")
        .def_readonly("blocks", &BranchDecomposition::blocks)
        .def_readonly("width", &BranchDecomposition::width)
        .def("to_text", &bd_text, py::arg("embedding"));

    m.def(
        "build_embedding",
        [](int n, const std::vector<std::vector<int>>& rot, std::pair<int, int> hint,
           const std::vector<std::pair<int, int>>& extra) {
            return build_embedding(n, rot, hint, extra);
        },
        py::arg("n"), py::arg("rotations"), py::arg("outer_face_hint"),
        py::arg("extra_hints") = std::vector<std::pair<int, int>>{},
        "plane embedding from clockwise neighbor lists");
    m.def(
        "generate",
        [](int k, int n, uint64_t seed, double chords, double spokes) {
            return generate({k, n, seed, chords, spokes});
        },
        py::arg("k"), py::arg("n"), py::arg("seed") = 1, py::arg("chords") = 0.3,
        py::arg("spokes") = 0.25, "seeded k-outerplanar instance");
    m.def("canned", &canned, py::arg("name"));

    m.def("outerplanarity_index", &outerplanarity_index, py::arg("embedding"));
    m.def("vertex_layers", &compute_vertex_layers, py::arg("embedding"));
    m.def("face_layers", &compute_face_layers, py::arg("embedding"));

    m.def("tree_decompose", &decompose, py::arg("embedding"),
          "tree decomposition of width <= 3k-1");
    m.def("branch_decompose", &branch_decompose, py::arg("embedding"),
          "branch decomposition of width <= 2k+1");

    m.def(
        "check_td",
        [](const Embedding& e, const TreeDecomposition& td) {
            return result_dict(check_td(e.n, e.edge_list(), td));
        },
        py::arg("embedding"), py::arg("decomposition"));
    m.def(
        "check_bd",
        [](const Embedding& e, const BranchDecomposition& bd) {
            return result_dict(check_bd(e.n, e.edge_list(), bd));
        },
        py::arg("embedding"), py::arg("decomposition"));
    m.def(
        "oracle_treewidth",
        [](const Embedding& e) { return oracle_treewidth(e.n, e.edge_list()); },
        py::arg("embedding"), "exact treewidth, n <= 10");
    m.def(
        "oracle_branchwidth",
        [](const Embedding& e) { return oracle_branchwidth(e.n, e.edge_list()); },
        py::arg("embedding"), "exact branchwidth, m <= 8");
}
