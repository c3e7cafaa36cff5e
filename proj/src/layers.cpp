#include "kop/layers.hpp"

#include <algorithm>

namespace kop {

namespace {

// face -> unique vertex list and its transpose
struct FaceVertexIncidence {
    std::vector<std::vector<int>> of_face;
    std::vector<std::vector<int>> at_vertex;

    explicit FaceVertexIncidence(const Embedding& emb) {
        of_face.resize(emb.n_faces);
        at_vertex.resize(emb.n);
        for (int f = 0; f < emb.n_faces; f++) of_face[f] = emb.face_vertices(f);
        for (int f = 0; f < emb.n_faces; f++)
            for (int v : of_face[f]) at_vertex[v].push_back(f);
    }
};

} // namespace

std::vector<int> compute_vertex_layers(const Embedding& emb) {
    std::vector<int> layer(emb.n, 0);
    if (emb.n == 0) return layer;
    if (emb.m() == 0) {
        std::fill(layer.begin(), layer.end(), 1);
        return layer;
    }
    FaceVertexIncidence inc(emb);
    std::vector<char> merged(emb.n_faces, 0);
    merged[emb.outer_face] = 1;

    std::vector<int> frontier;
    for (int v = 0; v < emb.n; v++)
        if (emb.degree(v) == 0) layer[v] = 1; // isolated vertices sit in the outer face
    for (int v : inc.of_face[emb.outer_face]) {
        layer[v] = 1;
        frontier.push_back(v);
    }
    int round = 1;
    std::vector<int> next;
    while (!frontier.empty()) {
        next.clear();
        for (int v : frontier) {
            for (int f : inc.at_vertex[v]) {
                if (merged[f]) continue;
                merged[f] = 1;
                for (int u : inc.of_face[f])
                    if (layer[u] == 0) {
                        layer[u] = round + 1;
                        next.push_back(u);
                    }
            }
        }
        frontier.swap(next);
        round++;
    }
    for (int v = 0; v < emb.n; v++)
        if (layer[v] == 0) fail(errc::fact_violation, "vertex unreachable from the outer face");
    return layer;
}

std::vector<int> compute_face_layers(const Embedding& emb) {
    std::vector<int> flayer(emb.n_faces, -1);
    if (emb.n_faces == 0) return flayer;
    flayer[emb.outer_face] = 0;
    if (emb.m() == 0) return flayer;
    FaceVertexIncidence inc(emb);
    std::vector<char> marked(emb.n, 0);
    std::vector<int> frontier{emb.outer_face};
    std::vector<int> next;
    int level = 0;
    while (!frontier.empty()) {
        next.clear();
        for (int f : frontier) {
            for (int v : inc.of_face[f]) {
                if (marked[v]) continue;
                marked[v] = 1;
                for (int g : inc.at_vertex[v])
                    if (flayer[g] < 0) {
                        flayer[g] = level + 1;
                        next.push_back(g);
                    }
            }
        }
        frontier.swap(next);
        level++;
    }
    return flayer;
}

LayerAssignment analyze_layers(const Embedding& emb) {
    LayerAssignment la;
    la.vertex_layer = compute_vertex_layers(emb);
    la.face_layer = compute_face_layers(emb);
    la.index_k = 0;
    for (int l : la.vertex_layer) la.index_k = std::max(la.index_k, l);
    return la;
}

} // namespace kop
