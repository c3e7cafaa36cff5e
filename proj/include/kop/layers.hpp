#ifndef KOP_LAYERS_HPP
#define KOP_LAYERS_HPP

#include <vector>

#include "kop/embedding.hpp"

namespace kop {

// Vertex layers (1 = on the outer face), face layers (0 = outer face) and the
// outerplanarity index k = max vertex layer (0 only for the empty graph).
struct LayerAssignment {
    std::vector<int> vertex_layer;
    std::vector<int> face_layer;
    int index_k = 0;
};

// Repeated peeling of outer-face vertices with incremental face merging; O(n).
std::vector<int> compute_vertex_layers(const Embedding& emb);

// BFS over the vertex-sharing face adjacency from the outer face; O(n).
std::vector<int> compute_face_layers(const Embedding& emb);

LayerAssignment analyze_layers(const Embedding& emb);

inline int outerplanarity_index(const Embedding& emb) {
    auto vl = compute_vertex_layers(emb);
    int k = 0;
    for (int l : vl) k = std::max(k, l);
    return k;
}

} // namespace kop

#endif
