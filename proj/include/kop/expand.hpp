#ifndef KOP_EXPAND_HPP
#define KOP_EXPAND_HPP

#include <utility>
#include <vector>

#include "kop/embedding.hpp"

namespace kop {

// Replacement bookkeeping for expanded vertices. A vertex of degree d >= 4 is
// replaced by a path of d-2 vertices of degree 3; the vertex's own id becomes
// the first path vertex and the remaining d-3 get fresh ids appended after all
// original ids. Original edges keep their ids; path edges are appended.
struct ExpansionRecord {
    int original_n = 0;
    int original_m = 0;
    std::vector<std::vector<int>> forward; // original -> path (empty if untouched)
    std::vector<int> backward;             // expanded vertex -> original vertex

    bool identity() const { return (int)backward.size() == original_n; }
    int to_original(int v) const { return backward[v]; }
    // relabel an expanded-vertex set into original ids, sorted unique
    std::vector<int> contract(const std::vector<int>& labeling) const;
};

// Step ii: the result has maximum degree <= 3, the input is a minor of it, and
// each expanded vertex's minimum-layer incident face stays adjacent to the
// whole replacement path, so face layers and the outerplanarity index are
// unchanged.
std::pair<Embedding, ExpansionRecord> expand_high_degree(const Embedding& emb,
                                                         const std::vector<int>& face_layers);

} // namespace kop

#endif
