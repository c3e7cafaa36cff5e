#include "kop/expand.hpp"

#include <algorithm>

#include "kop/util.hpp"

namespace kop {

std::vector<int> ExpansionRecord::contract(const std::vector<int>& labeling) const {
    std::vector<int> out;
    out.reserve(labeling.size());
    for (int v : labeling) out.push_back(backward[v]);
    sort_unique(out);
    return out;
}

std::pair<Embedding, ExpansionRecord> expand_high_degree(const Embedding& emb,
                                                         const std::vector<int>& face_layers) {
    ExpansionRecord rec;
    rec.original_n = emb.n;
    rec.original_m = emb.m();
    rec.forward.assign(emb.n, {});
    rec.backward.resize(emb.n);
    for (int v = 0; v < emb.n; v++) rec.backward[v] = v;

    int new_n = emb.n;
    for (int v = 0; v < emb.n; v++)
        if (emb.degree(v) >= 4) new_n += emb.degree(v) - 3;
    if (new_n == emb.n) return {emb, rec}; // nothing to expand

    rec.backward.resize(new_n);
    std::vector<std::pair<int, int>> edges = emb.edge_ends;
    std::vector<std::vector<int>> rot(new_n);
    int next_id = emb.n;
    int next_edge = emb.m();

    for (int v = 0; v < emb.n; v++) {
        int d = emb.degree(v);
        if (d <= 3) {
            rot[v].reserve(d);
            for (int he : emb.v_rot[v]) rot[v].push_back(he >> 1);
            continue;
        }
        // pick the incident face of minimum layer; F_j sits between the
        // rotation edges j-1 and j, so reattachment starts at edge j
        int best = 0;
        for (int j = 1; j < d; j++) {
            int fj = emb.he_face[emb.v_rot[v][j]];
            int fb = emb.he_face[emb.v_rot[v][best]];
            if (face_layers[fj] < face_layers[fb] ||
                (face_layers[fj] == face_layers[fb] && fj < fb))
                best = j;
        }
        std::vector<int> path(d - 2);
        path[0] = v;
        for (int t = 1; t < d - 2; t++) path[t] = next_id++;
        rec.forward[v] = path;
        for (int p : path) rec.backward[p] = v;

        auto seq_edge = [&](int t) { return emb.v_rot[v][(best + t) % d] >> 1; };
        auto reattach = [&](int t, int p) {
            int e = seq_edge(t);
            if (edges[e].first == v)
                edges[e].first = p;
            else
                edges[e].second = p;
        };
        std::vector<int> path_edge(d - 3);
        for (int t = 0; t < d - 3; t++) {
            path_edge[t] = next_edge++;
            edges.emplace_back(path[t], path[t + 1]);
        }
        reattach(0, path[0]);
        reattach(1, path[0]);
        rot[path[0]] = {seq_edge(0), seq_edge(1), path_edge[0]};
        for (int t = 1; t < d - 3; t++) {
            reattach(t + 1, path[t]);
            rot[path[t]] = {path_edge[t - 1], seq_edge(t + 1), path_edge[t]};
        }
        reattach(d - 2, path[d - 3]);
        reattach(d - 1, path[d - 3]);
        rot[path[d - 3]] = {path_edge[d - 4], seq_edge(d - 2), seq_edge(d - 1)};
    }

    // outer designation carries over: original edge ids are stable, so reuse a
    // representative directed edge of every outer boundary cycle
    std::vector<std::pair<int, int>> hints;
    for (int c : emb.face_cycle_ids[emb.outer_face]) {
        int he = *std::min_element(emb.cycles[c].begin(), emb.cycles[c].end());
        int e = he >> 1;
        int tail = (he & 1) ? edges[e].second : edges[e].first;
        int head = (he & 1) ? edges[e].first : edges[e].second;
        hints.emplace_back(tail, head);
    }
    Embedding out = build_embedding_raw(new_n, std::move(edges), rot, hints);
    for (int v = 0; v < out.n; v++)
        if (out.degree(v) > 3) fail(errc::malformed_layer, "expansion left a vertex of degree > 3");
    return {std::move(out), std::move(rec)};
}

} // namespace kop
