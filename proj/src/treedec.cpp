#include "kop/treedec.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "kop/layers.hpp"
#include "kop/util.hpp"

namespace kop {

TreeDecomposition decompose_outerplanar(const Embedding& emb) {
    if (outerplanarity_index(emb) > 1)
        fail(errc::not_outerplanar, "outerplanar decomposition needs index <= 1");
    int n = emb.n;
    TreeDecomposition td;
    td.n_graph = n;

    dsu comps(n);
    for (auto [a, b] : emb.edge_ends) comps.unite(a, b);
    std::vector<int> live_edges(n, 0);
    for (auto [a, b] : emb.edge_ends) live_edges[comps.find(a)]++;

    std::vector<std::set<int>> adj(n);
    for (auto [a, b] : emb.edge_ends) {
        adj[a].insert(b);
        adj[b].insert(a);
    }

    struct Ev {
        int v, w, x; // w = -1: isolated; x = -1: degree one
    };
    std::vector<Ev> events;
    std::vector<char> removed(n, 0);
    std::deque<int> q0, q1; // degree <= 1 before degree 2
    for (int v = 0; v < n; v++) (adj[v].size() <= 1 ? q0 : q1).push_back(v);

    auto push = [&](int v) { (adj[v].size() <= 1 ? q0 : q1).push_back(v); };
    while (!q0.empty() || !q1.empty()) {
        int v;
        if (!q0.empty()) {
            v = q0.front();
            q0.pop_front();
        } else {
            v = q1.front();
            q1.pop_front();
        }
        if (removed[v]) continue;
        int d = (int)adj[v].size();
        if (d > 2) continue; // stale entry
        int comp = comps.find(v);
        if (d > 0 && live_edges[comp] == 1) continue; // this component is down to its last edge
        removed[v] = 1;
        if (d == 0) {
            events.push_back({v, -1, -1});
        } else if (d == 1) {
            int w = *adj[v].begin();
            events.push_back({v, w, -1});
            adj[w].erase(v);
            live_edges[comp]--;
            push(w);
        } else {
            auto it = adj[v].begin();
            int w = *it++;
            int x = *it;
            events.push_back({v, w, x});
            adj[w].erase(v);
            adj[x].erase(v);
            live_edges[comp] -= 2;
            if (!adj[w].count(x)) { // reconnect the neighbors if needed
                adj[w].insert(x);
                adj[x].insert(w);
                live_edges[comp]++;
            }
            push(w);
            push(x);
        }
        adj[v].clear();
    }

    // rebuild: per-component root bags over the surviving edges, then the
    // removal events in reverse, each attached to the most recently created
    // node that still contains its neighbor (pair)
    std::unordered_map<uint64_t, int> last_pair;
    std::vector<int> last_vert(n, -1);
    auto pkey = [](int a, int b) {
        if (a > b) std::swap(a, b);
        return (uint64_t)a << 32 | (uint32_t)b;
    };
    auto new_node = [&](std::vector<int> bag, int attach) {
        int id = (int)td.bags.size();
        if (attach >= 0) td.tree_edges.push_back({attach, id});
        for (size_t i = 0; i < bag.size(); i++) {
            last_vert[bag[i]] = id;
            for (size_t j = i + 1; j < bag.size(); j++) last_pair[pkey(bag[i], bag[j])] = id;
        }
        td.bags.push_back(std::move(bag));
        return id;
    };
    for (int v = 0; v < n; v++) {
        if (removed[v] || adj[v].empty()) continue;
        int w = *adj[v].begin();
        if (w < v) continue; // emit each surviving edge once
        new_node({v, w}, -1);
    }
    for (auto it = events.rbegin(); it != events.rend(); ++it) {
        if (it->w < 0) {
            new_node({it->v}, -1);
        } else if (it->x < 0) {
            int at = last_vert[it->w];
            if (at < 0) fail(errc::fact_violation, "no node contains the removed vertex's neighbor");
            new_node({it->v, it->w}, at);
        } else {
            auto found = last_pair.find(pkey(it->w, it->x));
            if (found == last_pair.end())
                fail(errc::fact_violation, "no node contains the removed vertex's neighbor pair");
            new_node({it->v, it->w, it->x}, found->second);
        }
    }
    return td;
}

OpenFaceTree build_open_face_tree(const Embedding& emb, const SpanningForest& forest,
                                  const StrippingTrace& trace) {
    OpenFaceTree oft;
    oft.root = emb.outer_face;
    oft.parent.assign(emb.n_faces, -1);
    oft.parent_edge.assign(emb.n_faces, -1);

    auto fact = [](bool ok, const char* what) {
        if (!ok) fail(errc::fact_violation, what);
    };
    for (int e = 0; e < emb.m(); e++) {
        auto [f, g] = emb.faces_of_edge(e);
        int df = trace.strip_number[f] - trace.strip_number[g];
        fact(std::abs(df) <= 1, "adjacent faces differ in stripping number by more than one");
        if (forest.in_forest[e]) continue;
        fact(df != 0, "missing edge between faces of equal stripping number");
        int child = df > 0 ? f : g;
        int par = df > 0 ? g : f;
        fact(oft.parent_edge[child] < 0,
             "face with two missing edges toward lower stripping numbers");
        oft.parent[child] = par;
        oft.parent_edge[child] = e;
    }
    for (int f = 0; f < emb.n_faces; f++)
        fact(f == oft.root || oft.parent_edge[f] >= 0, "inner face without a missing edge");

    oft.bottom_up.resize(emb.n_faces);
    for (int f = 0; f < emb.n_faces; f++) oft.bottom_up[f] = f;
    std::stable_sort(oft.bottom_up.begin(), oft.bottom_up.end(), [&](int a, int b) {
        return trace.strip_number[a] > trace.strip_number[b];
    });
    return oft;
}

TreeDecomposition fill_bags(const Embedding& emb, const SpanningForest& forest,
                            const OpenFaceTree& oft) {
    int n = emb.n;
    TreeDecomposition td;
    td.n_graph = n;

    std::vector<int> enode(emb.m(), -1);
    int next_node = n;
    for (int e = 0; e < emb.m(); e++)
        if (forest.in_forest[e]) enode[e] = next_node++;
    td.bags.assign(next_node, {});
    for (int v = 0; v < n; v++) td.bags[v] = {v};
    for (int e = 0; e < emb.m(); e++)
        if (enode[e] >= 0) {
            auto [a, b] = emb.edge_ends[e];
            td.bags[enode[e]] = {std::min(a, b), std::max(a, b)};
            td.tree_edges.push_back({a, enode[e]});
            td.tree_edges.push_back({b, enode[e]});
        }

    // every missing edge pushes its designated (lower-id) endpoint onto its
    // fundamental cycle, children of the open-face tree first
    for (int f : oft.bottom_up) {
        int e = oft.parent_edge[f];
        if (e < 0) continue;
        auto [a, b] = emb.edge_ends[e];
        if (forest.component[a] != forest.component[b])
            fail(errc::not_spanning, "missing edge spans two forest trees");
        int d = std::min(a, b), w = std::max(a, b);
        int x = a, y = b;
        while (x != y) {
            int climb;
            if (forest.depth[x] >= forest.depth[y]) {
                climb = x;
                x = forest.parent[x];
            } else {
                climb = y;
                y = forest.parent[y];
            }
            if (climb != w) td.bags[climb].push_back(d);
            td.bags[enode[forest.parent_edge[climb]]].push_back(d);
        }
        if (x != w) td.bags[x].push_back(d);
    }
    for (auto& bag : td.bags) sort_unique(bag);
    return td;
}

TreeDecomposition shrink(const TreeDecomposition& td, const ExpansionRecord& rec) {
    TreeDecomposition out;
    out.n_graph = rec.original_n;
    out.tree_edges = td.tree_edges;
    out.bags.reserve(td.bags.size());
    for (const auto& bag : td.bags) out.bags.push_back(rec.contract(bag));
    return out;
}

TreeDecomposition decompose(const Embedding& emb) {
    auto la = analyze_layers(emb);
    if (la.index_k <= 1) return decompose_outerplanar(emb);
    auto [expanded, rec] = expand_high_degree(emb, la.face_layer);
    auto fr = spanning_forest(expanded);
    auto oft = build_open_face_tree(expanded, fr.forest, fr.trace);
    auto td = fill_bags(expanded, fr.forest, oft);
    return shrink(td, rec);
}

} // namespace kop
