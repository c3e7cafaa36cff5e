#ifndef KOP_TREEDEC_HPP
#define KOP_TREEDEC_HPP

#include <utility>
#include <vector>

#include "kop/embedding.hpp"
#include "kop/expand.hpp"
#include "kop/forest.hpp"

namespace kop {

// Bags over tree (or forest, for disconnected graphs) nodes. The `.td` writer
// joins forest components into the single tree PACE requires.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges;
    int n_graph = 0;

    int width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, (int)b.size() - 1);
        return w;
    }
};

// Faces rooted at the outer face; each inner face hangs from the face one
// stripping step below it via the unique forest-missing edge between them.
struct OpenFaceTree {
    int root = -1;
    std::vector<int> parent;      // per face
    std::vector<int> parent_edge; // the missing edge shared with the parent
    std::vector<int> bottom_up;   // all faces, deepest stripping number first
};

// Step i: peel degree <= 2 vertices (lowest degree first) until one edge per
// component remains, then rebuild bags {v,w,x} / {v,w} backwards. Width <= 2.
TreeDecomposition decompose_outerplanar(const Embedding& emb);

// Step iv scaffolding; asserts Facts 2-5 about stripping numbers.
OpenFaceTree build_open_face_tree(const Embedding& emb, const SpanningForest& forest,
                                  const StrippingTrace& trace);

// Step iv: bags over V + F (the subdivided forest); every missing edge adds
// its lower-id endpoint along its fundamental cycle. Width <= max(vr, er+1).
TreeDecomposition fill_bags(const Embedding& emb, const SpanningForest& forest,
                            const OpenFaceTree& oft);

// Step v: relabel expanded path vertices back to their original vertex.
TreeDecomposition shrink(const TreeDecomposition& td, const ExpansionRecord& rec);

// Full pipeline: Step i for k <= 1, expand/forest/fill/shrink otherwise.
// Width <= 3k-1 in O(kn).
TreeDecomposition decompose(const Embedding& emb);

} // namespace kop

#endif
