#ifndef KOP_FOREST_HPP
#define KOP_FOREST_HPP

#include <vector>

#include "kop/embedding.hpp"
#include "kop/util.hpp"

namespace kop {

// Record of the stripping stage. Step i removes every edge on the current
// outer face; those edges form R_{k'-i} and carry step_of_edge = i. Edges
// never removed are the residual forest T_0 (step 0). strip_number[f] is the
// step at which face f merged into the outer face (0 for the outer face).
struct StrippingTrace {
    int k_steps = 0;
    std::vector<int> step_of_edge;
    std::vector<int> strip_number;
    std::vector<char> wheel_edge; // edge lay on the outer walk once (cycle edge), not twice (bridge)
    std::vector<std::vector<int>> r_layers; // r_layers[j] = R_j, ascending edge ids
    std::vector<int> t0_edges;
};

// Peels the outer face k_steps times; linear in the graph size.
StrippingTrace strip(const Embedding& emb, int k_steps);

// Vertex roles within one R_j against the forest built so far:
// alpha = wheel + branch, beta = wheel + tree of T_{j-1}, gamma = the rest.
struct WheelBranchLabels {
    enum kind_t : signed char { none = 0, alpha, beta, gamma };
    std::vector<signed char> kind;  // per vertex
    std::vector<int> wheel_of;      // per vertex, -1 outside wheels
    std::vector<int> branch_of;     // per vertex, -1 outside branches
    // traversal-ready cycles: start at the lowest alpha (else beta, else any)
    // vertex, oriented by the first wheel half-edge in its rotation
    std::vector<std::vector<int>> wheel_cycles;      // vertex sequences
    std::vector<std::vector<int>> wheel_cycle_edges; // edge ids, parallel to the above
    int n_branches = 0;
};

WheelBranchLabels classify(const Embedding& emb, const std::vector<int>& r_edges,
                           const std::vector<char>& wheel_edge,
                           const std::vector<char>& vertex_in_forest);

// Incremental construction of T_0 subset T_1 subset ... subset T. Every branch
// edge goes in; each wheel is walked from its canonical start, keeping every
// edge that does not close a cycle (this drops the last edge before each
// repeated beta leaf and the closing edge). Acyclicity, maximality and the
// one-tree-per-component invariant are asserted after every step.
struct ForestBuilder {
    explicit ForestBuilder(const Embedding& e);

    void seed_residual(const std::vector<int>& t0_edges);
    void build_step(const std::vector<int>& r_edges, const WheelBranchLabels& labels,
                    const std::vector<char>& wheel_edge);

    const std::vector<char>& in_forest() const { return in_forest_; }
    const std::vector<char>& vertex_in_forest() const { return vertex_in_forest_; }
    int edge_count() const { return added_; }

  private:
    bool try_add(int e);
    const Embedding& emb_;
    std::vector<char> in_forest_;
    std::vector<char> vertex_in_forest_;
    dsu forest_sets_;
    dsu graph_sets_;
    int added_ = 0;
};

// Rooted maximal spanning forest with per-vertex depths (roots are the lowest
// vertex ids of their trees) and graph component ids.
struct SpanningForest {
    std::vector<char> in_forest;
    std::vector<int> parent;
    std::vector<int> parent_edge;
    std::vector<int> depth;
    std::vector<int> component;
    int n_components = 0;
    int forest_edge_count = 0;
};

struct ForestResult {
    SpanningForest forest;
    StrippingTrace trace;
};

// Step iii: strip k' times, then rebuild inside out. Requires max degree <= 3.
// The result is maximal and acyclic with one tree per component at every
// intermediate step; on a k-outerplanar input vr <= 3k-1 and er <= 2k.
ForestResult spanning_forest(const Embedding& emb);

// number of structural Fact checks executed so far (acceptance reporting)
long fact_checks_performed();

} // namespace kop

#endif
