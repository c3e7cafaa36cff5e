#ifndef KOP_EMBEDDING_HPP
#define KOP_EMBEDDING_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kop/error.hpp"

namespace kop {

// Combinatorial plane embedding as a half-edge structure.
//
// Edge e owns half-edges 2e (tail->head) and 2e+1 (head->tail); twin(h) = h^1.
// Rotations are clockwise neighbor orders. The face of a half-edge is the face
// to its LEFT when walking origin -> head; face walks follow
// next(h) = rotation_successor(twin(h)).
//
// The outer face may consist of several boundary cycles (one per connected
// component): components are embedded side by side, each designating one of
// its face cycles as touching the unbounded region. Immutable once built.
struct Embedding {
    int n = 0;
    std::vector<std::pair<int, int>> edge_ends; // edge id -> (tail, head)
    std::vector<std::vector<int>> v_rot;        // per vertex, half-edge ids in clockwise order
    std::vector<int> he_next;                   // rotation successor, same origin
    std::vector<int> he_face;                   // face id per half-edge

    // face boundary cycles as traced; outer cycles all map to outer_face
    std::vector<std::vector<int>> cycles;         // cycle id -> half-edges in face order
    std::vector<int> cycle_face;                  // cycle id -> face id
    std::vector<std::vector<int>> face_cycle_ids; // face id -> cycle ids
    int n_faces = 0;
    int outer_face = -1;

    int m() const { return (int)edge_ends.size(); }
    int origin(int he) const {
        const auto& e = edge_ends[he >> 1];
        return (he & 1) ? e.second : e.first;
    }
    int head(int he) const { return origin(he ^ 1); }
    int degree(int v) const { return (int)v_rot[v].size(); }

    // half-edge u->v, or -1 if the edge does not exist
    int he_of(int u, int v) const;
    bool has_edge(int u, int v) const { return he_of(u, v) >= 0; }

    std::pair<int, int> faces_of_edge(int e) const;
    int face_length(int f) const;
    // unique vertices on the boundary of face f, ascending
    std::vector<int> face_vertices(int f) const;
    // clockwise neighbor list of v
    std::vector<int> neighbors(int v) const;
    // edges as unordered pairs (min, max), for validators
    std::vector<std::pair<int, int>> edge_list() const;
};

// Low-level constructor: edges with fixed ids and per-vertex rotations given
// as edge-id lists. outer_cycle_override, when nonempty, designates the outer
// cycle per component directly (used by rebuilds); otherwise hints are
// directed edges (v,u) whose left face becomes outer, and components without
// a hint designate the cycle containing their lowest half-edge.
Embedding build_embedding_raw(int n, std::vector<std::pair<int, int>> edges,
                              const std::vector<std::vector<int>>& rot_edge_ids,
                              const std::vector<std::pair<int, int>>& hints,
                              const std::vector<int>& outer_cycle_override = {});

// Public builder from clockwise neighbor lists. Edge ids are assigned scanning
// vertices in id order. extra_hints designate outer cycles of further
// components in disconnected inputs.
Embedding build_embedding(int n, const std::vector<std::vector<int>>& rotations,
                          std::pair<int, int> outer_face_hint,
                          const std::vector<std::pair<int, int>>& extra_hints = {});

struct VertexDeleteResult {
    Embedding emb;
    std::vector<int> new_of_old; // -1 for deleted vertices
    std::vector<int> old_of_new;
};

// New embedding without the given edges; surviving rotation order preserved,
// edge ids renumbered by old-id rank, outer face follows the merged region.
Embedding delete_edges(const Embedding& emb, const std::vector<int>& edges);

// New embedding without the given vertices (and their edges); vertex ids
// renumbered by old-id rank.
VertexDeleteResult delete_vertices(const Embedding& emb, const std::vector<int>& vertices);

} // namespace kop

#endif
