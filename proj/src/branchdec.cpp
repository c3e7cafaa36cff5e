#include "kop/branchdec.hpp"

#include <algorithm>
#include <numeric>

#include "kop/layers.hpp"
#include "kop/util.hpp"

namespace kop {

namespace {

// work representation with lazy deletion, shared by the construction and the
// minor restriction
struct MutableTree {
    struct Edge {
        int a, b;
        bool alive = true;
        std::vector<BranchTag> tags;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> inc; // node -> edge indices (may contain dead ones)
    std::vector<int> deg;
    std::vector<int> sigma_of; // node -> graph edge id, -1 when not a leaf target
    std::vector<char> node_alive;

    int add_node() {
        inc.push_back({});
        deg.push_back(0);
        sigma_of.push_back(-1);
        node_alive.push_back(1);
        return (int)deg.size() - 1;
    }

    int add_edge(int a, int b, std::vector<BranchTag> tags) {
        int id = (int)edges.size();
        edges.push_back({a, b, true, std::move(tags)});
        inc[a].push_back(id);
        inc[b].push_back(id);
        deg[a]++;
        deg[b]++;
        return id;
    }

    void kill_edge(int e) {
        edges[e].alive = false;
        deg[edges[e].a]--;
        deg[edges[e].b]--;
    }

    int live_edge_at(int v, int skip = -1) {
        for (int e : inc[v])
            if (edges[e].alive && e != skip) return e;
        return -1;
    }

    // remove degree <= 1 nodes that are no sigma target, cascading
    void prune() {
        std::vector<int> stack;
        for (int v = 0; v < (int)deg.size(); v++)
            if (node_alive[v] && deg[v] <= 1 && sigma_of[v] < 0) stack.push_back(v);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (!node_alive[v] || deg[v] > 1 || sigma_of[v] >= 0) continue;
            node_alive[v] = 0;
            int e = live_edge_at(v);
            if (e < 0) continue;
            kill_edge(e);
            int u = edges[e].a == v ? edges[e].b : edges[e].a;
            if (deg[u] <= 1 && sigma_of[u] < 0) stack.push_back(u);
        }
    }

    // splice out every degree-2 node, merging tag lists
    void suppress() {
        for (int v = 0; v < (int)deg.size(); v++) {
            while (node_alive[v] && deg[v] == 2) {
                int e1 = live_edge_at(v);
                int e2 = live_edge_at(v, e1);
                int u = edges[e1].a == v ? edges[e1].b : edges[e1].a;
                int w = edges[e2].a == v ? edges[e2].b : edges[e2].a;
                auto tags = edges[e1].tags;
                tags.insert(tags.end(), edges[e2].tags.begin(), edges[e2].tags.end());
                kill_edge(e1);
                kill_edge(e2);
                node_alive[v] = 0;
                add_edge(u, w, std::move(tags));
            }
        }
    }

    BranchBlock finish() const {
        BranchBlock blk;
        std::vector<int> remap(deg.size(), -1);
        for (int v = 0; v < (int)deg.size(); v++)
            if (node_alive[v]) {
                remap[v] = blk.n_nodes++;
                if (sigma_of[v] >= 0) blk.sigma.push_back({remap[v], sigma_of[v]});
            }
        for (const auto& e : edges)
            if (e.alive) {
                blk.tree_edges.push_back({remap[e.a], remap[e.b]});
                blk.edge_tags.push_back(e.tags);
            }
        if (blk.n_nodes > 1)
            for (int v = 0; v < (int)deg.size(); v++)
                if (node_alive[v] && deg[v] != 1 && deg[v] != 3)
                    fail(errc::fact_violation, "branch tree node of degree other than 1 or 3");
        return blk;
    }
};

BranchBlock build_component(const Embedding& emb, const SpanningForest& forest,
                            const std::vector<int>& comp_vertices,
                            const std::vector<int>& comp_edges) {
    MutableTree t;
    std::vector<int> lid(emb.n, -1);
    for (int v : comp_vertices) lid[v] = t.add_node();

    std::vector<int> forest_tree_edge; // forest edge -> MutableTree edge id
    forest_tree_edge.assign(emb.m(), -1);
    for (int e : comp_edges)
        if (forest.in_forest[e]) {
            auto [a, b] = emb.edge_ends[e];
            forest_tree_edge[e] =
                t.add_edge(lid[a], lid[b], {{BranchTag::forest_half, e}});
        }
    // step a: subdivide internal forest edges and hang the sigma leaf off the
    // middle; step b: pendant forest edges map sigma onto the pendant vertex
    for (int e : comp_edges) {
        if (!forest.in_forest[e]) continue;
        auto [u, v] = emb.edge_ends[e];
        if (emb.degree(u) >= 2 && emb.degree(v) >= 2) {
            t.kill_edge(forest_tree_edge[e]);
            int w = t.add_node();
            int x = t.add_node();
            t.add_edge(lid[u], w, {{BranchTag::forest_half, e}});
            t.add_edge(w, lid[v], {{BranchTag::forest_half, e}});
            t.add_edge(w, x, {{BranchTag::stem, e}});
            t.sigma_of[x] = e;
        } else {
            t.sigma_of[emb.degree(u) == 1 ? lid[u] : lid[v]] = e;
        }
    }
    // step c: non-forest edges become leaves at their lower endpoint
    for (int e : comp_edges) {
        if (forest.in_forest[e]) continue;
        auto [u, v] = emb.edge_ends[e];
        int x = t.add_node();
        t.add_edge(lid[std::min(u, v)], x, {{BranchTag::nonforest, e}});
        t.sigma_of[x] = e;
    }
    t.prune();    // step d
    t.suppress(); // step e
    return t.finish();
}

int block_width(const BranchBlock& blk, const std::vector<std::pair<int, int>>& edge_ends,
                int n) {
    auto ords = middle_set_orders(blk, edge_ends, n);
    return ords.empty() ? 0 : *std::max_element(ords.begin(), ords.end());
}

} // namespace

BranchDecomposition build_branch(const Embedding& emb, const SpanningForest& forest) {
    BranchDecomposition bd;
    std::vector<std::vector<int>> comp_vertices(forest.n_components);
    std::vector<std::vector<int>> comp_edges(forest.n_components);
    for (int v = 0; v < emb.n; v++) comp_vertices[forest.component[v]].push_back(v);
    for (int e = 0; e < emb.m(); e++)
        comp_edges[forest.component[emb.edge_ends[e].first]].push_back(e);

    for (int c = 0; c < forest.n_components; c++) {
        if (comp_edges[c].empty()) continue;
        if (comp_edges[c].size() == 1) {
            // too few edges for a tree with degree-3 internals: zero-width sentinel
            BranchBlock blk;
            blk.n_nodes = 1;
            blk.sigma.push_back({0, comp_edges[c][0]});
            bd.blocks.push_back(std::move(blk));
            continue;
        }
        bd.blocks.push_back(build_component(emb, forest, comp_vertices[c], comp_edges[c]));
    }
    for (const auto& blk : bd.blocks)
        bd.width = std::max(bd.width, block_width(blk, emb.edge_ends, emb.n));
    return bd;
}

BranchDecomposition restrict_to_minor(const BranchDecomposition& bd, const ExpansionRecord& rec) {
    if (rec.identity()) return bd;
    BranchDecomposition out;
    for (const auto& blk : bd.blocks) {
        MutableTree t;
        for (int v = 0; v < blk.n_nodes; v++) t.add_node();
        for (size_t i = 0; i < blk.tree_edges.size(); i++)
            t.add_edge(blk.tree_edges[i].first, blk.tree_edges[i].second, blk.edge_tags[i]);
        for (auto [node, e] : blk.sigma)
            if (e < rec.original_m) t.sigma_of[node] = e; // expansion path edges drop out
        t.prune();
        t.suppress();
        auto nb = t.finish();
        if (nb.n_nodes > 0) out.blocks.push_back(std::move(nb));
    }
    return out;
}

BranchDecomposition branch_decompose(const Embedding& emb) {
    auto la = analyze_layers(emb);
    auto [expanded, rec] = expand_high_degree(emb, la.face_layer);
    auto fr = spanning_forest(expanded);
    auto bd = build_branch(expanded, fr.forest);
    auto out = restrict_to_minor(bd, rec);
    // order counting on the original graph: expansion path endpoints collapse
    // back onto their original vertex
    std::vector<std::pair<int, int>> ends = emb.edge_ends;
    out.width = 0;
    for (const auto& blk : out.blocks)
        out.width = std::max(out.width, block_width(blk, ends, emb.n));
    return out;
}

std::vector<int> middle_set_orders(const BranchBlock& blk,
                                   const std::vector<std::pair<int, int>>& edge_ends, int n) {
    int N = blk.n_nodes;
    std::vector<int> orders(blk.tree_edges.size(), 0);
    if (N <= 1 || blk.tree_edges.empty()) return orders;

    std::vector<std::vector<std::pair<int, int>>> adj(N); // (nbr, tree edge idx)
    for (size_t i = 0; i < blk.tree_edges.size(); i++) {
        auto [a, b] = blk.tree_edges[i];
        adj[a].push_back({b, (int)i});
        adj[b].push_back({a, (int)i});
    }
    int LOG = 1;
    while ((1 << LOG) < N) LOG++;
    std::vector<std::vector<int>> up(LOG + 1, std::vector<int>(N, 0));
    std::vector<int> depth(N, 0), parent_edge(N, -1), order;
    std::vector<char> seen(N, 0);
    order.reserve(N);
    std::vector<int> stack{0}; // DFS preorder, required by the cyclic-pairs cover
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (auto [u, e] : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                up[0][u] = v;
                depth[u] = depth[v] + 1;
                parent_edge[u] = e;
                stack.push_back(u);
            }
    }
    if ((int)order.size() != N) fail(errc::fact_violation, "branch tree is disconnected");
    std::vector<int> tin(N);
    for (int i = 0; i < N; i++) tin[order[i]] = i;
    for (int l = 1; l <= LOG; l++)
        for (int v = 0; v < N; v++) up[l][v] = up[l - 1][up[l - 1][v]];
    auto lca = [&](int a, int b) {
        if (depth[a] < depth[b]) std::swap(a, b);
        int diff = depth[a] - depth[b];
        for (int l = 0; l <= LOG; l++)
            if (diff >> l & 1) a = up[l][a];
        if (a == b) return a;
        for (int l = LOG; l >= 0; l--)
            if (up[l][a] != up[l][b]) {
                a = up[l][a];
                b = up[l][b];
            }
        return up[0][a];
    };

    std::vector<std::vector<int>> leaves_of_vertex(n);
    for (auto [node, e] : blk.sigma) {
        leaves_of_vertex[edge_ends[e].first].push_back(node);
        leaves_of_vertex[edge_ends[e].second].push_back(node);
    }
    // cyclic consecutive pairs of a vertex's leaves cover its Steiner subtree
    // edges exactly twice
    std::vector<long> cnt(N, 0);
    for (int v = 0; v < n; v++) {
        auto& ls = leaves_of_vertex[v];
        if (ls.size() <= 1) continue;
        std::sort(ls.begin(), ls.end(), [&](int a, int b) { return tin[a] < tin[b]; });
        for (size_t i = 0; i < ls.size(); i++) {
            int a = ls[i], b = ls[(i + 1) % ls.size()];
            if (a == b) continue;
            cnt[a]++;
            cnt[b]++;
            cnt[lca(a, b)] -= 2;
        }
    }
    for (int i = N - 1; i >= 1; i--) cnt[up[0][order[i]]] += cnt[order[i]];
    for (int v = 0; v < N; v++)
        if (parent_edge[v] >= 0) orders[parent_edge[v]] = (int)(cnt[v] / 2);
    return orders;
}

} // namespace kop
