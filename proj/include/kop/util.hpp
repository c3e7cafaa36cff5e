#ifndef KOP_UTIL_HPP
#define KOP_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <vector>

namespace kop {

struct dsu {
    std::vector<int> parent;
    int n_components = 0;

    explicit dsu(int n = 0) { reset(n); }

    void reset(int n) {
        parent.resize(n);
        std::iota(parent.begin(), parent.end(), 0);
        n_components = n;
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // returns false if x and y were already connected
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (x > y) std::swap(x, y); // smaller id becomes the root
        parent[y] = x;
        n_components--;
        return true;
    }

    bool same(int x, int y) { return find(x) == find(y); }
};

inline void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace kop

#endif
