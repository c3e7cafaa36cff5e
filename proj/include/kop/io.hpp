#ifndef KOP_IO_HPP
#define KOP_IO_HPP

#include <string>
#include <vector>

#include "kop/embedding.hpp"

namespace kop {

// `.emb`: `p emb n m`, one `r v u1 ... ud` clockwise rotation line per vertex,
// `o v u` outer-face designations (face left of v->u; one per component),
// `c ...` comments. Ids are 1-based in files.
std::string write_emb(const Embedding& emb);
Embedding parse_emb(const std::string& text);

struct TdFile {
    std::vector<std::vector<int>> bags; // 0-based vertex ids
    std::vector<std::pair<int, int>> tree_edges; // 0-based node ids
    int n_graph = 0;
    int declared_width = 0; // max bag size - 1
};

// PACE-2017 `.td`; forests are joined into one tree by chaining component roots
std::string write_td(const TdFile& td);
TdFile parse_td(const std::string& text);

struct BdBlock {
    int n_nodes = 0;
    std::vector<std::pair<int, int>> tree_edges;          // 0-based node ids
    std::vector<std::pair<int, std::pair<int, int>>> leaves; // node -> graph edge (u,v), 0-based
};

struct BdFile {
    std::vector<BdBlock> blocks; // one per component with >= 1 edge
};

// `.bd`: per component `s bd N L m`, `l node u v` sigma lines, `t a b` tree edges
std::string write_bd(const BdFile& bd);
BdFile parse_bd(const std::string& text);

} // namespace kop

#endif
