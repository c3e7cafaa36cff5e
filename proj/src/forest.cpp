#include "kop/forest.hpp"

#include <algorithm>
#include <atomic>

#include "kop/layers.hpp"
#include "kop/util.hpp"

namespace kop {

namespace {

std::atomic<long> g_fact_checks{0};

void fact_check(bool ok, const char* what) {
    g_fact_checks.fetch_add(1, std::memory_order_relaxed);
    if (!ok) fail(errc::fact_violation, what);
}

} // namespace

long fact_checks_performed() { return g_fact_checks.load(std::memory_order_relaxed); }

StrippingTrace strip(const Embedding& emb, int k_steps) {
    int m = emb.m();
    StrippingTrace tr;
    tr.step_of_edge.assign(m, 0);
    tr.strip_number.assign(emb.n_faces, -1);
    tr.wheel_edge.assign(m, 0);
    if (emb.n_faces > 0) tr.strip_number[emb.outer_face] = 0;

    std::vector<char> merged(emb.n_faces, 0);
    if (emb.n_faces > 0) merged[emb.outer_face] = 1;
    std::vector<char> queued(m, 0);
    std::vector<int> cur, next;
    if (m > 0)
        for (int c : emb.face_cycle_ids[emb.outer_face])
            for (int he : emb.cycles[c])
                if (!queued[he >> 1]) {
                    queued[he >> 1] = 1;
                    cur.push_back(he >> 1);
                }
    std::sort(cur.begin(), cur.end());

    int step = 0;
    while (!cur.empty() && step < k_steps) {
        step++;
        // evaluate the walk multiplicity against the pre-step state: a cycle
        // edge has exactly one side already merged, a bridge has both
        for (int e : cur) {
            tr.step_of_edge[e] = step;
            tr.wheel_edge[e] = merged[emb.he_face[2 * e]] != merged[emb.he_face[2 * e + 1]];
        }
        next.clear();
        for (int e : cur) {
            for (int he : {2 * e, 2 * e + 1}) {
                int f = emb.he_face[he];
                if (merged[f]) continue;
                merged[f] = 1;
                tr.strip_number[f] = step;
                for (int c : emb.face_cycle_ids[f])
                    for (int h : emb.cycles[c]) {
                        int e2 = h >> 1;
                        if (!queued[e2]) {
                            queued[e2] = 1;
                            next.push_back(e2);
                        }
                    }
            }
        }
        std::sort(next.begin(), next.end());
        cur.swap(next);
    }
    tr.k_steps = step;

    tr.r_layers.assign(step, {});
    for (int e = 0; e < m; e++) {
        if (tr.step_of_edge[e] > 0)
            tr.r_layers[step - tr.step_of_edge[e]].push_back(e);
        else
            tr.t0_edges.push_back(e);
    }
    for (int f = 0; f < emb.n_faces; f++)
        fact_check(tr.strip_number[f] >= 0, "face never merged into the outer face");
    return tr;
}

WheelBranchLabels classify(const Embedding& emb, const std::vector<int>& r_edges,
                           const std::vector<char>& wheel_edge,
                           const std::vector<char>& vertex_in_forest) {
    WheelBranchLabels lab;
    lab.kind.assign(emb.n, WheelBranchLabels::none);
    lab.wheel_of.assign(emb.n, -1);
    lab.branch_of.assign(emb.n, -1);

    std::vector<int> wheel_deg(emb.n, 0);
    std::vector<int> verts;
    for (int e : r_edges) {
        auto [a, b] = emb.edge_ends[e];
        if (emb.degree(a) > 3 || emb.degree(b) > 3)
            fail(errc::malformed_layer, "vertex of degree > 3 in a stripping layer");
        verts.push_back(a);
        verts.push_back(b);
        if (wheel_edge[e]) {
            wheel_deg[a]++;
            wheel_deg[b]++;
        }
    }
    sort_unique(verts);
    for (int v : verts)
        fact_check(wheel_deg[v] == 0 || wheel_deg[v] == 2,
                   "wheels are not vertex-disjoint simple cycles");

    // wheel cycles, traced through the per-step wheel adjacency
    std::vector<std::array<std::pair<int, int>, 2>> wadj(emb.n); // (neighbor, edge)
    std::vector<int> wfill(emb.n, 0);
    for (int e : r_edges)
        if (wheel_edge[e]) {
            auto [a, b] = emb.edge_ends[e];
            wadj[a][wfill[a]++] = {b, e};
            wadj[b][wfill[b]++] = {a, e};
        }
    std::vector<char> visited(emb.n, 0);
    for (int s : verts) {
        if (wheel_deg[s] != 2 || visited[s]) continue;
        std::vector<int> cyc_v, cyc_e;
        int prev = -1, v = s;
        do {
            visited[v] = 1;
            cyc_v.push_back(v);
            lab.wheel_of[v] = (int)lab.wheel_cycles.size();
            auto [n0, e0] = wadj[v][0];
            auto [n1, e1] = wadj[v][1];
            int nxt = (n0 == prev && (prev < 0 || true)) ? n1 : n0;
            int nxte = (nxt == n0) ? e0 : e1;
            // first step from s: no previous vertex, both directions open
            if (prev < 0) {
                nxt = n0;
                nxte = e0;
            }
            cyc_e.push_back(nxte);
            prev = v;
            v = nxt;
        } while (v != s);
        lab.wheel_cycles.push_back(std::move(cyc_v));
        lab.wheel_cycle_edges.push_back(std::move(cyc_e));
    }

    // branches: connected parts of the non-wheel edges
    dsu bd(emb.n);
    for (int e : r_edges)
        if (!wheel_edge[e]) bd.unite(emb.edge_ends[e].first, emb.edge_ends[e].second);
    std::vector<int> branch_id(emb.n, -1);
    for (int e : r_edges)
        if (!wheel_edge[e])
            for (int v : {emb.edge_ends[e].first, emb.edge_ends[e].second}) {
                int root = bd.find(v);
                if (branch_id[root] < 0) branch_id[root] = lab.n_branches++;
                lab.branch_of[v] = branch_id[root];
            }

    for (int v : verts) {
        if (lab.wheel_of[v] >= 0) {
            if (lab.branch_of[v] >= 0)
                lab.kind[v] = WheelBranchLabels::alpha;
            else if (vertex_in_forest[v])
                lab.kind[v] = WheelBranchLabels::beta;
            else
                lab.kind[v] = WheelBranchLabels::gamma;
        } else {
            lab.kind[v] = WheelBranchLabels::gamma;
            fact_check(!vertex_in_forest[v], "a tree of the partial forest touches a branch");
        }
    }

    // canonical traversal form: start at the lowest alpha (else beta, else
    // lowest vertex), oriented along the first wheel half-edge in the start
    // vertex's rotation
    for (size_t w = 0; w < lab.wheel_cycles.size(); w++) {
        auto& cv = lab.wheel_cycles[w];
        auto& ce = lab.wheel_cycle_edges[w];
        int start = -1;
        for (int pass = 0; pass < 3 && start < 0; pass++) {
            auto want = pass == 0 ? WheelBranchLabels::alpha
                                  : (pass == 1 ? WheelBranchLabels::beta : WheelBranchLabels::none);
            for (int v : cv)
                if ((pass == 2 || lab.kind[v] == want) && (start < 0 || v < start)) start = v;
        }
        int second = -1;
        for (int he : emb.v_rot[start])
            if (lab.wheel_of[emb.head(he)] == (int)w && wheel_edge[he >> 1]) {
                second = emb.head(he);
                break;
            }
        size_t pos = std::find(cv.begin(), cv.end(), start) - cv.begin();
        std::rotate(cv.begin(), cv.begin() + pos, cv.end());
        std::rotate(ce.begin(), ce.begin() + pos, ce.end());
        if (cv.size() > 2 && cv[1] != second) {
            // flip the orientation: reverse vertices past the start, and shift
            // the edge sequence so ce[i] joins cv[i] and cv[i+1]
            std::reverse(cv.begin() + 1, cv.end());
            std::reverse(ce.begin(), ce.end());
        }
    }
    return lab;
}

namespace {

struct Builder {
    const Embedding& emb;
    std::vector<char> in_forest;
    std::vector<char> vertex_in_forest;
    dsu forest_sets;
    dsu graph_sets;
    int added = 0;

    explicit Builder(const Embedding& e)
        : emb(e), in_forest(e.m(), 0), vertex_in_forest(e.n, 0), forest_sets(e.n),
          graph_sets(e.n) {}

    bool try_add(int e) {
        auto [a, b] = emb.edge_ends[e];
        if (!forest_sets.unite(a, b)) return false;
        in_forest[e] = 1;
        vertex_in_forest[a] = vertex_in_forest[b] = 1;
        added++;
        return true;
    }

    void build_step(const std::vector<int>& r_edges, const WheelBranchLabels& lab,
                    const std::vector<char>& wheel_edge) {
        // all branch edges go in; a cycle among them means the layer structure
        // was not the bridges-plus-disjoint-cycles shape the paper guarantees
        for (int e : r_edges)
            if (!wheel_edge[e] && !try_add(e))
                fail(errc::cycle_created, "branch edge closed a cycle");
        for (size_t w = 0; w < lab.wheel_cycles.size(); w++) {
            const auto& cv = lab.wheel_cycles[w];
            const auto& ce = lab.wheel_cycle_edges[w];
            bool bare = true;
            for (int v : cv)
                if (lab.kind[v] != WheelBranchLabels::gamma) bare = false;
            if (bare) {
                // isolated cycle: omit its lowest edge
                int skip = *std::min_element(ce.begin(), ce.end());
                for (int e : ce)
                    if (e != skip && !try_add(e))
                        fail(errc::cycle_created, "bare wheel closed a cycle");
            } else {
                // walk the wheel, skipping the edge into every vertex already
                // reached: drops the last edge before each later beta leaf of
                // an attached tree and the closing edge
                for (int e : ce) try_add(e);
                int root = forest_sets.find(cv[0]);
                for (int v : cv)
                    fact_check(forest_sets.find(v) == root, "wheel left disconnected");
            }
        }
        for (int e : r_edges) graph_sets.unite(emb.edge_ends[e].first, emb.edge_ends[e].second);
        fact_check(forest_sets.n_components == graph_sets.n_components,
                   "forest does not have one tree per graph component");
    }
};

} // namespace

ForestResult spanning_forest(const Embedding& emb) {
    for (int v = 0; v < emb.n; v++)
        if (emb.degree(v) > 3) fail(errc::malformed_layer, "spanning_forest needs max degree 3");

    ForestResult res;
    int k = outerplanarity_index(emb);
    res.trace = strip(emb, k);
    Builder b(emb);
    for (int e : res.trace.t0_edges)
        if (!b.try_add(e)) fail(errc::fact_violation, "residual graph after stripping has a cycle");
    for (int e : res.trace.t0_edges)
        b.graph_sets.unite(emb.edge_ends[e].first, emb.edge_ends[e].second);

    for (int j = 0; j < res.trace.k_steps; j++) {
        auto lab = classify(emb, res.trace.r_layers[j], res.trace.wheel_edge, b.vertex_in_forest);
        b.build_step(res.trace.r_layers[j], lab, res.trace.wheel_edge);
    }

    SpanningForest& f = res.forest;
    f.in_forest = std::move(b.in_forest);
    f.forest_edge_count = b.added;
    f.parent.assign(emb.n, -1);
    f.parent_edge.assign(emb.n, -1);
    f.depth.assign(emb.n, 0);
    f.component.assign(emb.n, -1);

    std::vector<std::vector<std::pair<int, int>>> adj(emb.n);
    for (int e = 0; e < emb.m(); e++)
        if (f.in_forest[e]) {
            auto [a, bb] = emb.edge_ends[e];
            adj[a].push_back({bb, e});
            adj[bb].push_back({a, e});
        }
    std::vector<int> stack;
    std::vector<char> seen(emb.n, 0);
    for (int r = 0; r < emb.n; r++) {
        if (seen[r]) continue;
        int comp = f.n_components++;
        stack.push_back(r);
        seen[r] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            f.component[v] = comp;
            for (auto [u, e] : adj[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    f.parent[u] = v;
                    f.parent_edge[u] = e;
                    f.depth[u] = f.depth[v] + 1;
                    stack.push_back(u);
                }
        }
    }
    fact_check(f.forest_edge_count == emb.n - f.n_components, "forest is not maximal");
    return res;
}

} // namespace kop
