#include "kop/embedding.hpp"

#include <algorithm>
#include <unordered_map>

#include "kop/util.hpp"

namespace kop {

int Embedding::he_of(int u, int v) const {
    for (int he : v_rot[u])
        if (head(he) == v) return he;
    return -1;
}

std::pair<int, int> Embedding::faces_of_edge(int e) const {
    if (e < 0 || e >= m()) fail(errc::bad_hint, "edge id out of range");
    return {he_face[2 * e], he_face[2 * e + 1]};
}

int Embedding::face_length(int f) const {
    int len = 0;
    for (int c : face_cycle_ids[f]) len += (int)cycles[c].size();
    return len;
}

std::vector<int> Embedding::face_vertices(int f) const {
    std::vector<int> vs;
    for (int c : face_cycle_ids[f])
        for (int he : cycles[c]) vs.push_back(origin(he));
    sort_unique(vs);
    return vs;
}

std::vector<int> Embedding::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(v_rot[v].size());
    for (int he : v_rot[v]) out.push_back(head(he));
    return out;
}

std::vector<std::pair<int, int>> Embedding::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_ends.size());
    for (auto [a, b] : edge_ends) out.emplace_back(std::min(a, b), std::max(a, b));
    return out;
}

namespace {

// trace face cycles and fill he_face/cycle tables; faces not yet assigned
void trace_cycles(Embedding& emb) {
    int H = 2 * emb.m();
    emb.he_face.assign(H, -1);
    emb.cycles.clear();
    std::vector<int> cycle_of_he(H, -1);
    for (int h0 = 0; h0 < H; h0++) {
        if (cycle_of_he[h0] >= 0) continue;
        std::vector<int> cyc;
        int h = h0;
        do {
            cycle_of_he[h] = (int)emb.cycles.size();
            cyc.push_back(h);
            h = emb.he_next[h ^ 1];
        } while (h != h0);
        emb.cycles.push_back(std::move(cyc));
    }
}

void check_euler(const Embedding& emb) {
    dsu comps(emb.n);
    for (auto [a, b] : emb.edge_ends) comps.unite(a, b);
    std::unordered_map<int, long> nv, ne, nc;
    for (int v = 0; v < emb.n; v++)
        if (!emb.v_rot[v].empty()) nv[comps.find(v)]++;
    for (auto [a, b] : emb.edge_ends) ne[comps.find(a)]++;
    for (const auto& cyc : emb.cycles) nc[comps.find(emb.origin(cyc[0]))]++;
    for (auto [root, v] : nv) {
        if (v - ne[root] + nc[root] != 2)
            fail(errc::euler_violation,
                 "component of vertex " + std::to_string(root) + " is not a plane embedding (v=" +
                     std::to_string(v) + " e=" + std::to_string(ne[root]) +
                     " f=" + std::to_string(nc[root]) + ")");
    }
}

// assign face ids given the set of outer cycles (all merged into one face)
void assign_faces(Embedding& emb, const std::vector<int>& outer_cycles) {
    int C = (int)emb.cycles.size();
    std::vector<char> is_outer(C, 0);
    for (int c : outer_cycles) is_outer[c] = 1;
    emb.cycle_face.assign(C, -1);
    emb.outer_face = -1;
    int next_face = 0;
    for (int c = 0; c < C; c++) {
        if (is_outer[c]) {
            if (emb.outer_face < 0) emb.outer_face = next_face++;
            emb.cycle_face[c] = emb.outer_face;
        } else {
            emb.cycle_face[c] = next_face++;
        }
    }
    if (emb.outer_face < 0) emb.outer_face = next_face++; // edge-less graph: empty outer face
    emb.n_faces = next_face;
    emb.face_cycle_ids.assign(emb.n_faces, {});
    for (int c = 0; c < C; c++) emb.face_cycle_ids[emb.cycle_face[c]].push_back(c);
    for (int f = 0; f < emb.n_faces; f++)
        for (int c : emb.face_cycle_ids[f])
            for (int he : emb.cycles[c]) emb.he_face[he] = f;
}

// outer cycle choice: explicit hints first, then per component the cycle
// containing its lowest half-edge
std::vector<int> pick_outer_cycles(const Embedding& emb,
                                   const std::vector<std::pair<int, int>>& hints) {
    if (emb.m() == 0) return {};
    dsu comps(emb.n);
    for (auto [a, b] : emb.edge_ends) comps.unite(a, b);

    int C = (int)emb.cycles.size();
    std::vector<int> cycle_of_he(2 * emb.m());
    for (int c = 0; c < C; c++)
        for (int he : emb.cycles[c]) cycle_of_he[he] = c;

    std::unordered_map<int, int> comp_cycle; // component root -> designated cycle
    for (auto [v, u] : hints) {
        if (v < 0 || v >= emb.n || u < 0 || u >= emb.n)
            fail(errc::bad_hint, "hint vertex out of range");
        int he = emb.he_of(v, u);
        if (he < 0)
            fail(errc::bad_hint,
                 "hint edge (" + std::to_string(v) + "," + std::to_string(u) + ") not in graph");
        int root = comps.find(v);
        int cyc = cycle_of_he[he];
        auto it = comp_cycle.find(root);
        if (it != comp_cycle.end() && it->second != cyc)
            fail(errc::bad_hint, "conflicting outer face hints in one component");
        comp_cycle[root] = cyc;
    }
    // canonical designation for components without a hint
    for (int c = 0; c < C; c++) {
        int root = comps.find(emb.origin(emb.cycles[c][0]));
        comp_cycle.emplace(root, c); // cycles are in lowest-half-edge order already
    }
    std::vector<int> out;
    out.reserve(comp_cycle.size());
    for (auto [root, cyc] : comp_cycle) out.push_back(cyc);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Embedding build_embedding_raw(int n, std::vector<std::pair<int, int>> edges,
                              const std::vector<std::vector<int>>& rot_edge_ids,
                              const std::vector<std::pair<int, int>>& hints,
                              const std::vector<int>& outer_cycle_override) {
    Embedding emb;
    emb.n = n;
    emb.edge_ends = std::move(edges);
    int m = emb.m();
    std::vector<int> seen_at(2 * m, 0);
    emb.v_rot.assign(n, {});
    for (int v = 0; v < n; v++) {
        emb.v_rot[v].reserve(rot_edge_ids[v].size());
        for (int e : rot_edge_ids[v]) {
            auto [a, b] = emb.edge_ends[e];
            int he = (a == v) ? 2 * e : 2 * e + 1;
            if (emb.origin(he) != v || ++seen_at[he] > 1)
                fail(errc::duplicate_edge, "edge " + std::to_string(e) + " misplaced in rotation of " +
                                               std::to_string(v));
            emb.v_rot[v].push_back(he);
        }
    }
    for (int h = 0; h < 2 * m; h++)
        if (!seen_at[h]) fail(errc::asymmetric_rotation, "half-edge missing from rotations");

    emb.he_next.assign(2 * m, -1);
    for (int v = 0; v < n; v++) {
        const auto& rot = emb.v_rot[v];
        for (size_t i = 0; i < rot.size(); i++) emb.he_next[rot[i]] = rot[(i + 1) % rot.size()];
    }
    trace_cycles(emb);
    check_euler(emb);
    assign_faces(emb, outer_cycle_override.empty() ? pick_outer_cycles(emb, hints)
                                                   : outer_cycle_override);
    return emb;
}

Embedding build_embedding(int n, const std::vector<std::vector<int>>& rotations,
                          std::pair<int, int> outer_face_hint,
                          const std::vector<std::pair<int, int>>& extra_hints) {
    if ((int)rotations.size() != n) fail(errc::parse_error, "rotation list size mismatch");
    std::unordered_map<uint64_t, int> edge_id;
    auto key = [](int a, int b) { return (uint64_t)a << 32 | (uint32_t)b; };

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; u++) {
        for (int v : rotations[u]) {
            if (v < 0 || v >= n) fail(errc::parse_error, "neighbor id out of range");
            if (v == u) fail(errc::duplicate_edge, "self-loop at vertex " + std::to_string(u));
            if (!edge_id.emplace(key(u, v), -1).second)
                fail(errc::duplicate_edge, "duplicate edge (" + std::to_string(u) + "," +
                                               std::to_string(v) + ")");
        }
    }
    for (int u = 0; u < n; u++)
        for (int v : rotations[u])
            if (!edge_id.count(key(v, u)))
                fail(errc::asymmetric_rotation, "vertex " + std::to_string(u) + " lists " +
                                                    std::to_string(v) + " but not vice versa");
    for (int u = 0; u < n; u++)
        for (int v : rotations[u])
            if (u < v) {
                edge_id[key(u, v)] = (int)edges.size();
                edges.emplace_back(u, v);
            }
    std::vector<std::vector<int>> rot_ids(n);
    for (int u = 0; u < n; u++) {
        rot_ids[u].reserve(rotations[u].size());
        for (int v : rotations[u])
            rot_ids[u].push_back(edge_id[key(std::min(u, v), std::max(u, v))]);
    }
    std::vector<std::pair<int, int>> hints;
    if (!edges.empty()) {
        hints.push_back(outer_face_hint);
        hints.insert(hints.end(), extra_hints.begin(), extra_hints.end());
    }
    return build_embedding_raw(n, std::move(edges), rot_ids, hints);
}

namespace {

// shared rebuild for edge/vertex deletion: keeps surviving rotation order and
// re-designates the outer face through a union-find over old faces
Embedding rebuild_without(const Embedding& emb, const std::vector<char>& edge_gone,
                          const std::vector<char>& vertex_gone, const std::vector<int>& new_of_old_v,
                          int new_n) {
    int m = emb.m();
    std::vector<int> new_edge_id(m, -1);
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < m; e++) {
        if (edge_gone[e]) continue;
        new_edge_id[e] = (int)edges.size();
        auto [a, b] = emb.edge_ends[e];
        edges.emplace_back(new_of_old_v[a], new_of_old_v[b]);
    }
    std::vector<std::vector<int>> rot_ids(new_n);
    for (int v = 0; v < emb.n; v++) {
        if (vertex_gone[v]) continue;
        auto& out = rot_ids[new_of_old_v[v]];
        for (int he : emb.v_rot[v])
            if (!edge_gone[he >> 1]) out.push_back(new_edge_id[he >> 1]);
    }
    Embedding res = build_embedding_raw(new_n, std::move(edges), rot_ids, {});

    // merged-region classes of the old faces
    dsu fclass(emb.n_faces);
    for (int e = 0; e < m; e++)
        if (edge_gone[e]) fclass.unite(emb.he_face[2 * e], emb.he_face[2 * e + 1]);
    for (int v = 0; v < emb.n; v++)
        if (vertex_gone[v] && !emb.v_rot[v].empty())
            for (int he : emb.v_rot[v]) fclass.unite(emb.he_face[emb.v_rot[v][0]], emb.he_face[he]);
    int outer_class = fclass.find(emb.outer_face);

    if (res.m() > 0) {
        dsu comps(res.n);
        for (auto [a, b] : res.edge_ends) comps.unite(a, b);
        // old half-edge behind a surviving new half-edge: same edge, same parity
        std::vector<int> old_edge_of_new(res.m());
        for (int e = 0; e < m; e++)
            if (new_edge_id[e] >= 0) old_edge_of_new[new_edge_id[e]] = e;
        std::unordered_map<int, int> comp_outer;
        std::vector<int> outer_cycles;
        for (int c = 0; c < (int)res.cycles.size(); c++) {
            int he = res.cycles[c][0];
            int old_he = 2 * old_edge_of_new[he >> 1] + (he & 1);
            if (fclass.find(emb.he_face[old_he]) == outer_class) {
                outer_cycles.push_back(c);
                comp_outer[comps.find(res.origin(he))] = c;
            }
        }
        // components not bordering the merged outer region keep the canonical cycle
        for (int c = 0; c < (int)res.cycles.size(); c++) {
            int root = comps.find(res.origin(res.cycles[c][0]));
            if (comp_outer.emplace(root, c).second) outer_cycles.push_back(c);
        }
        std::sort(outer_cycles.begin(), outer_cycles.end());
        assign_faces(res, outer_cycles);
    }
    return res;
}

} // namespace

Embedding delete_edges(const Embedding& emb, const std::vector<int>& edge_ids) {
    std::vector<char> edge_gone(emb.m(), 0);
    for (int e : edge_ids) {
        if (e < 0 || e >= emb.m()) fail(errc::bad_hint, "edge id out of range");
        edge_gone[e] = 1;
    }
    std::vector<char> vertex_gone(emb.n, 0);
    std::vector<int> ident(emb.n);
    for (int v = 0; v < emb.n; v++) ident[v] = v;
    return rebuild_without(emb, edge_gone, vertex_gone, ident, emb.n);
}

VertexDeleteResult delete_vertices(const Embedding& emb, const std::vector<int>& vertices) {
    std::vector<char> vertex_gone(emb.n, 0);
    for (int v : vertices) {
        if (v < 0 || v >= emb.n) fail(errc::bad_hint, "vertex id out of range");
        vertex_gone[v] = 1;
    }
    std::vector<char> edge_gone(emb.m(), 0);
    for (int e = 0; e < emb.m(); e++)
        if (vertex_gone[emb.edge_ends[e].first] || vertex_gone[emb.edge_ends[e].second])
            edge_gone[e] = 1;
    VertexDeleteResult res;
    res.new_of_old.assign(emb.n, -1);
    for (int v = 0; v < emb.n; v++)
        if (!vertex_gone[v]) {
            res.new_of_old[v] = (int)res.old_of_new.size();
            res.old_of_new.push_back(v);
        }
    res.emb = rebuild_without(emb, edge_gone, vertex_gone, res.new_of_old,
                              (int)res.old_of_new.size());
    return res;
}

} // namespace kop
