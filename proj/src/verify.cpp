#include "kop/verify.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "kop/util.hpp"

namespace kop {

namespace {

CheckResult violation(std::string msg) {
    CheckResult r;
    r.ok = false;
    r.violation = std::move(msg);
    return r;
}

} // namespace

CheckResult check_td(int n, const std::vector<std::pair<int, int>>& edges,
                     const TreeDecomposition& td) {
    int nb = (int)td.bags.size();
    for (const auto& bag : td.bags)
        for (int v : bag)
            if (v < 0 || v >= n) return violation("bag vertex out of range");
    for (auto [a, b] : td.tree_edges)
        if (a < 0 || a >= nb || b < 0 || b >= nb) return violation("tree edge out of range");

    // the tree edges must form a forest
    dsu nodes(nb);
    for (auto [a, b] : td.tree_edges)
        if (!nodes.unite(a, b)) return violation("cycle among decomposition nodes");

    std::vector<std::vector<int>> sorted_bags = td.bags;
    for (auto& b : sorted_bags) std::sort(b.begin(), b.end());

    std::vector<int> occurrences(n, 0);
    for (const auto& bag : sorted_bags)
        for (int v : bag) occurrences[v]++;
    for (int v = 0; v < n; v++)
        if (occurrences[v] == 0)
            return violation("vertex " + std::to_string(v + 1) + " not covered by any bag");

    std::vector<std::vector<int>> bags_of(n);
    for (int i = 0; i < nb; i++)
        for (int v : sorted_bags[i]) bags_of[v].push_back(i);
    auto in_bag = [&](int i, int v) {
        return std::binary_search(sorted_bags[i].begin(), sorted_bags[i].end(), v);
    };
    for (auto [u, v] : edges) {
        bool found = false;
        const auto& cand = bags_of[u].size() <= bags_of[v].size() ? bags_of[u] : bags_of[v];
        int other = bags_of[u].size() <= bags_of[v].size() ? v : u;
        for (int i : cand)
            if (in_bag(i, other)) {
                found = true;
                break;
            }
        if (!found)
            return violation("edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                             ") not covered by any bag");
    }

    // connectivity: the nodes holding v must induce exactly occurrences-1 tree
    // edges (they induce a forest, so equality means one subtree)
    std::vector<int> induced(n, 0);
    std::vector<int> common;
    for (auto [a, b] : td.tree_edges) {
        common.clear();
        std::set_intersection(sorted_bags[a].begin(), sorted_bags[a].end(),
                              sorted_bags[b].begin(), sorted_bags[b].end(),
                              std::back_inserter(common));
        for (int v : common) induced[v]++;
    }
    for (int v = 0; v < n; v++)
        if (induced[v] != occurrences[v] - 1)
            return violation("bags containing vertex " + std::to_string(v + 1) +
                             " do not form a connected subtree");

    CheckResult r;
    r.width = td.width();
    return r;
}

namespace {

// explicit leaf bipartition per tree edge; quadratic but fully independent
int naive_block_width(const BranchBlock& blk, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<std::vector<int>>& incident) {
    int width = 0;
    std::vector<std::vector<int>> adj(blk.n_nodes);
    for (int i = 0; i < (int)blk.tree_edges.size(); i++) {
        adj[blk.tree_edges[i].first].push_back(i);
        adj[blk.tree_edges[i].second].push_back(i);
    }
    std::vector<int> block_verts;
    for (auto [node, e] : blk.sigma) {
        block_verts.push_back(edges[e].first);
        block_verts.push_back(edges[e].second);
    }
    sort_unique(block_verts);

    std::vector<signed char> side(edges.size(), -1); // -1: not in this block
    std::vector<char> seen(blk.n_nodes, 0);
    std::vector<int> stack;
    for (int cut = 0; cut < (int)blk.tree_edges.size(); cut++) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, blk.tree_edges[cut].first);
        seen[blk.tree_edges[cut].first] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int i : adj[v]) {
                if (i == cut) continue;
                auto [a, b] = blk.tree_edges[i];
                int u = a == v ? b : a;
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        for (auto [node, e] : blk.sigma) side[e] = seen[node];
        int order = 0;
        for (int v : block_verts) {
            bool left = false, right = false;
            for (int e : incident[v]) {
                if (side[e] < 0) continue;
                (side[e] ? left : right) = true;
            }
            if (left && right) order++;
        }
        width = std::max(width, order);
    }
    return width;
}

} // namespace

CheckResult check_bd(int n, const std::vector<std::pair<int, int>>& edges,
                     const BranchDecomposition& bd) {
    std::vector<char> covered(edges.size(), 0);
    CheckResult r;
    r.width = 0;
    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < (int)edges.size(); e++) {
        incident[edges[e].first].push_back(e);
        incident[edges[e].second].push_back(e);
    }
    for (const auto& blk : bd.blocks) {
        std::vector<int> deg(blk.n_nodes, 0);
        for (auto [a, b] : blk.tree_edges) {
            if (a < 0 || a >= blk.n_nodes || b < 0 || b >= blk.n_nodes)
                return violation("tree edge out of range");
            deg[a]++;
            deg[b]++;
        }
        dsu cc(blk.n_nodes);
        for (auto [a, b] : blk.tree_edges)
            if (!cc.unite(a, b)) return violation("cycle in branch tree");
        if (cc.n_components != 1) return violation("branch tree is disconnected");

        std::vector<char> is_leaf_target(blk.n_nodes, 0);
        for (auto [node, e] : blk.sigma) {
            if (node < 0 || node >= blk.n_nodes) return violation("sigma node out of range");
            if (e < 0 || e >= (int)edges.size()) return violation("sigma edge out of range");
            if (covered[e]) return violation("sigma maps two leaves to one edge");
            covered[e] = 1;
            if (is_leaf_target[node]) return violation("two edges mapped to one leaf");
            is_leaf_target[node] = 1;
        }
        if (blk.n_nodes == 1) {
            if (blk.sigma.size() != 1) return violation("singleton block without its edge");
            continue;
        }
        for (int v = 0; v < blk.n_nodes; v++) {
            if (deg[v] != 1 && deg[v] != 3)
                return violation("branch node of degree " + std::to_string(deg[v]));
            if (deg[v] == 1 && !is_leaf_target[v]) return violation("leaf without a sigma edge");
            if (deg[v] == 3 && is_leaf_target[v]) return violation("internal node with a sigma edge");
        }
        int w = (int)blk.sigma.size() <= 512
                    ? naive_block_width(blk, edges, incident)
                    : [&] {
                          auto ords = middle_set_orders(blk, edges, n);
                          return ords.empty() ? 0
                                              : *std::max_element(ords.begin(), ords.end());
                      }();
        r.width = std::max(r.width, w);
    }
    for (int e = 0; e < (int)edges.size(); e++)
        if (!covered[e])
            return violation("edge (" + std::to_string(edges[e].first + 1) + "," +
                             std::to_string(edges[e].second + 1) + ") has no leaf");
    return r;
}

RememberReport remember_numbers(int n, const std::vector<std::pair<int, int>>& edges,
                                const SpanningForest& forest) {
    RememberReport rep;
    rep.per_vertex.assign(n, 0);
    rep.per_edge.assign(edges.size(), 0);
    for (int e = 0; e < (int)edges.size(); e++) {
        if (forest.in_forest[e]) continue;
        auto [a, b] = edges[e];
        if (forest.component[a] != forest.component[b])
            fail(errc::not_spanning, "non-forest edge spans two trees");
        rep.per_edge[e] = 1; // its own fundamental cycle
        int x = a, y = b;
        while (x != y) {
            int& climb = forest.depth[x] >= forest.depth[y] ? x : y;
            rep.per_vertex[climb]++;
            rep.per_edge[forest.parent_edge[climb]]++;
            climb = forest.parent[climb];
        }
        rep.per_vertex[x]++;
    }
    for (int v = 0; v < n; v++) rep.vr = std::max(rep.vr, rep.per_vertex[v]);
    for (size_t e = 0; e < edges.size(); e++) rep.er = std::max(rep.er, rep.per_edge[e]);
    return rep;
}

int oracle_treewidth(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n > 10) fail(errc::too_large, "treewidth oracle is limited to 10 vertices");
    if (n == 0) return -1;
    std::array<int, 10> nb{};
    for (auto [a, b] : edges) {
        nb[a] |= 1 << b;
        nb[b] |= 1 << a;
    }
    int full = (1 << n) - 1;
    std::vector<signed char> memo(1 << n, -2);
    memo[0] = -1;
    // tw(S) = min over v in S of max(tw(S-v), #vertices outside S reachable
    // from v through S-v)
    auto rec = [&](auto&& self, int S) -> int {
        if (memo[S] != -2) return memo[S];
        int best = 127;
        for (int v = 0; v < n; v++) {
            if (!(S >> v & 1)) continue;
            int Sv = S ^ (1 << v);
            int reach = nb[v];
            for (;;) {
                int inside = reach & Sv;
                int grown = reach;
                for (int u = 0; u < n; u++)
                    if (inside >> u & 1) grown |= nb[u];
                if (grown == reach) break;
                reach = grown;
            }
            int q = __builtin_popcount(reach & ~S & full);
            best = std::min(best, std::max(self(self, Sv), q));
        }
        return memo[S] = (signed char)best;
    };
    return rec(rec, full);
}

namespace {

int component_branchwidth(const std::vector<std::pair<int, int>>& ce) {
    int L = (int)ce.size();
    if (L <= 1) return 0;
    std::vector<int> verts;
    for (auto [a, b] : ce) {
        verts.push_back(a);
        verts.push_back(b);
    }
    sort_unique(verts);

    // tree over nodes: leaves 0..L-1, internals L..; grow by subdividing
    int best = 1 << 30;
    std::vector<std::pair<int, int>> tree{{0, 1}};
    auto width_of = [&](const std::vector<std::pair<int, int>>& t) {
        int n_nodes = 0;
        for (auto [a, b] : t) n_nodes = std::max({n_nodes, a + 1, b + 1});
        int w = 0;
        std::vector<char> seen(n_nodes);
        std::vector<int> stack;
        for (int cut = 0; cut < (int)t.size(); cut++) {
            std::fill(seen.begin(), seen.end(), 0);
            stack.assign(1, t[cut].first);
            seen[t[cut].first] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int i = 0; i < (int)t.size(); i++) {
                    if (i == cut) continue;
                    auto [a, b] = t[i];
                    int u = a == v ? b : (b == v ? a : -1);
                    if (u >= 0 && !seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
                }
            }
            int order = 0;
            for (int v : verts) {
                bool l = false, r = false;
                for (int e = 0; e < L; e++)
                    if (ce[e].first == v || ce[e].second == v) (seen[e] ? l : r) = true;
                if (l && r) order++;
            }
            w = std::max(w, order);
        }
        return w;
    };
    auto grow = [&](auto&& self, std::vector<std::pair<int, int>>& t, int leaf,
                    int next_internal) -> void {
        if (leaf == L) {
            best = std::min(best, width_of(t));
            return;
        }
        size_t sz = t.size();
        for (size_t i = 0; i < sz; i++) {
            auto [a, b] = t[i];
            t[i] = {a, next_internal};
            t.push_back({next_internal, b});
            t.push_back({next_internal, leaf});
            self(self, t, leaf + 1, next_internal + 1);
            t.pop_back();
            t.pop_back();
            t[i] = {a, b};
        }
    };
    if (L == 2) return width_of(tree);
    grow(grow, tree, 2, L);
    return best;
}

} // namespace

int oracle_branchwidth(int n, const std::vector<std::pair<int, int>>& edges) {
    if (edges.size() > 8) fail(errc::too_large, "branchwidth oracle is limited to 8 edges");
    dsu comps(n);
    for (auto [a, b] : edges) comps.unite(a, b);
    int bw = 0;
    std::vector<std::vector<std::pair<int, int>>> per_comp;
    std::vector<int> comp_id(n, -1);
    for (auto [a, b] : edges) {
        int root = comps.find(a);
        if (comp_id[root] < 0) {
            comp_id[root] = (int)per_comp.size();
            per_comp.push_back({});
        }
        per_comp[comp_id[root]].push_back({a, b});
    }
    for (auto& ce : per_comp) bw = std::max(bw, component_branchwidth(ce));
    return bw;
}

} // namespace kop
