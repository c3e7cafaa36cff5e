#ifndef KOP_BRANCHDEC_HPP
#define KOP_BRANCHDEC_HPP

#include <utility>
#include <vector>

#include "kop/embedding.hpp"
#include "kop/expand.hpp"
#include "kop/forest.hpp"

namespace kop {

// Provenance of a branch tree edge, kept through degree-2 suppression: the two
// halves of a subdivided forest edge obey order <= er_e + 1, stems and
// non-forest leaf edges obey order <= 2.
struct BranchTag {
    enum Kind : signed char { forest_half, stem, nonforest } kind;
    int edge;
};

struct BranchBlock {
    int n_nodes = 0;
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<std::vector<BranchTag>> edge_tags; // parallel to tree_edges
    std::vector<std::pair<int, int>> sigma;        // (leaf node, graph edge id)
};

// One block per connected component holding at least one edge; components with
// a single edge are width-0 sentinels (one leaf, no tree edges).
struct BranchDecomposition {
    std::vector<BranchBlock> blocks;
    int width = 0;
};

// Steps a-e on a degree <= 3 graph with its maximal spanning forest. Width of
// every block is at most max(2, er(G,T)+1).
BranchDecomposition build_branch(const Embedding& emb, const SpanningForest& forest);

// Drops the leaves of expansion path edges, prunes and re-suppresses; sigma
// then covers exactly the original edge set, width does not increase.
BranchDecomposition restrict_to_minor(const BranchDecomposition& bd, const ExpansionRecord& rec);

// expand -> spanning_forest -> build_branch -> restrict_to_minor; width <= 2k+1.
BranchDecomposition branch_decompose(const Embedding& emb);

// Middle-set order of every tree edge, via LCA-marked virtual subtrees;
// near-linear, usable at full instance scale. edge_ends maps graph edge ids
// (as referenced by sigma) to endpoints; n is the vertex count.
std::vector<int> middle_set_orders(const BranchBlock& blk,
                                   const std::vector<std::pair<int, int>>& edge_ends, int n);

} // namespace kop

#endif
