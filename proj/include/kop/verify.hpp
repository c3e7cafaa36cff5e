#ifndef KOP_VERIFY_HPP
#define KOP_VERIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include "kop/branchdec.hpp"
#include "kop/forest.hpp"
#include "kop/treedec.hpp"

namespace kop {

// Validators below re-derive everything from scratch; they share no traversal
// logic with the constructing code.

struct CheckResult {
    bool ok = true;
    int width = -1; // computed, not declared
    std::string violation;
};

// Definition of a tree decomposition: vertex coverage, edge coverage, and
// per-vertex connectivity of the nodes holding it.
CheckResult check_td(int n, const std::vector<std::pair<int, int>>& edges,
                     const TreeDecomposition& td);

// Degree-1/3 nodes, sigma a bijection onto the leaves covering every edge,
// acyclic connected blocks; width by middle-set computation (explicit leaf
// bipartition per tree edge on small inputs, LCA-based at scale).
CheckResult check_bd(int n, const std::vector<std::pair<int, int>>& edges,
                     const BranchDecomposition& bd);

struct RememberReport {
    int vr = 0;
    int er = 0;
    std::vector<int> per_vertex;
    std::vector<int> per_edge;
};

// Exact fundamental-cycle counts through every vertex and edge.
RememberReport remember_numbers(int n, const std::vector<std::pair<int, int>>& edges,
                                const SpanningForest& forest);

// Exact treewidth by elimination-order dynamic programming over vertex
// subsets; n <= 10.
int oracle_treewidth(int n, const std::vector<std::pair<int, int>>& edges);

// Exact branchwidth by enumerating all unrooted cubic leaf-labeled trees per
// component; m <= 8. Components with <= 1 edge have branchwidth 0.
int oracle_branchwidth(int n, const std::vector<std::pair<int, int>>& edges);

} // namespace kop

#endif
