#include "kop/generator.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "kop/layers.hpp"
#include "kop/util.hpp"

namespace kop {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    // inclusive; avoids std::uniform_int_distribution for cross-platform determinism
    int range(int lo, int hi) { return lo + (int)(eng() % (uint64_t)(hi - lo + 1)); }
    bool coin(double p) { return (eng() >> 11) * 0x1.0p-53 < p; }
};

struct Chord {
    int a_pos, b_pos; // window-absolute positions along the ring, b_pos - a_pos >= 2
};

// random laminar family of chords inside one spoke-free window [lo, hi]
void gen_chords(Rng& rng, double density, int lo, int hi, int depth, int ring_size,
                std::vector<Chord>& out) {
    if (hi - lo < 2 || depth > 4) return;
    if (!rng.coin(density)) return;
    int a = rng.range(lo, hi - 2);
    int b = rng.range(a + 2, hi);
    if (b - a >= 2 && b - a <= ring_size - 2) {
        out.push_back({a, b});
        gen_chords(rng, density, a, b, depth + 1, ring_size, out);
    }
    gen_chords(rng, density * 0.5, lo, a, depth + 1, ring_size, out);
    gen_chords(rng, density * 0.5, b, hi, depth + 1, ring_size, out);
}

Embedding attempt(const GenSpec& spec, uint64_t seed) {
    Rng rng(seed);
    int k = spec.k;

    // ring sizes, each >= 3, summing to roughly n_target
    std::vector<int> size(k);
    int remaining = std::max(spec.n_target, 3 * k);
    for (int i = 0; i < k; i++) {
        int left = k - i;
        if (left == 1) {
            size[i] = remaining;
            break;
        }
        int base = remaining / left;
        int lo = std::max(3, base - base / 3);
        int hi = std::max(3, std::min(base + base / 3, remaining - 3 * (left - 1)));
        size[i] = rng.range(std::min(lo, hi), hi);
        remaining -= size[i];
    }
    std::vector<int> start(k + 1, 0);
    for (int i = 0; i < k; i++) start[i + 1] = start[i] + size[i];
    int n = start[k];
    auto vid = [&](int ring, int pos) { return start[ring] + ((pos % size[ring]) + size[ring]) % size[ring]; };

    // spokes per annulus: cyclically monotone pairing => non-crossing
    std::vector<std::vector<std::pair<int, int>>> spokes(std::max(0, k - 1)); // (outer pos, inner pos)
    for (int i = 0; i + 1 < k; i++) {
        int cap = std::min(size[i], size[i + 1]);
        int cnt = std::clamp((int)(spec.spoke_density * cap + 0.5), 2, cap);
        std::vector<int> outer_pos(cnt), inner_pos(cnt);
        for (auto& p : outer_pos) p = rng.range(0, size[i] - 1);
        for (auto& p : inner_pos) p = rng.range(0, size[i + 1] - 1);
        std::sort(outer_pos.begin(), outer_pos.end());
        std::sort(inner_pos.begin(), inner_pos.end());
        int off = rng.range(0, cnt - 1);
        auto& sp = spokes[i];
        std::set<std::pair<int, int>> dedupe;
        for (int t = 0; t < cnt; t++) {
            std::pair<int, int> s{outer_pos[t], inner_pos[(t + off) % cnt]};
            if (dedupe.insert(s).second) sp.push_back(s);
        }
    }

    // chords of ring i hug it from inside; they may not span a spoke foot
    std::vector<std::vector<Chord>> chords(k);
    for (int i = 0; i < k; i++) {
        std::vector<int> feet; // inward spoke positions on ring i
        if (i + 1 < k)
            for (auto& s : spokes[i]) feet.push_back(s.first);
        sort_unique(feet);
        if (feet.empty()) {
            gen_chords(rng, spec.chord_density, 0, size[i] - 1, 0, size[i], chords[i]);
        } else {
            for (size_t t = 0; t < feet.size(); t++) {
                int lo = feet[t];
                int hi = (t + 1 < feet.size()) ? feet[t + 1] : feet[0] + size[i];
                gen_chords(rng, spec.chord_density, lo, hi, 0, size[i], chords[i]);
            }
        }
        std::sort(chords[i].begin(), chords[i].end(), [](const Chord& x, const Chord& y) {
            return std::tie(x.a_pos, x.b_pos) < std::tie(y.a_pos, y.b_pos);
        });
        // windows wrap modulo the ring size, so dedupe in vertex space
        std::set<std::pair<int, int>> taken;
        std::vector<Chord> kept;
        for (auto& ch : chords[i]) {
            int a = vid(i, ch.a_pos), b = vid(i, ch.b_pos);
            if (taken.insert({std::min(a, b), std::max(a, b)}).second) kept.push_back(ch);
        }
        chords[i] = std::move(kept);
    }

    // a vertex's spokes occupy a contiguous cyclic window of the annulus slot
    // sequence; its fan follows that window order (ascending on the inner
    // side, reversed on the outer side)
    auto window_order = [](std::vector<int> slots, int cnt, int full_start) {
        if ((int)slots.size() == cnt) {
            auto it = std::find(slots.begin(), slots.end(), full_start);
            std::rotate(slots.begin(), it, slots.end());
            return slots;
        }
        for (size_t i = 1; i < slots.size(); i++)
            if (slots[i] > slots[i - 1] + 1) {
                std::rotate(slots.begin(), slots.begin() + i, slots.end());
                break;
            }
        return slots;
    };

    std::vector<std::vector<int>> rot(n);
    std::vector<std::vector<int>> out_sl(n), in_sl(n); // slot indices per vertex
    std::vector<std::vector<std::pair<int, int>>> cw_ch(n), ccw_ch(n); // (arc len, partner)
    for (int i = 0; i + 1 < k; i++)
        for (int t = 0; t < (int)spokes[i].size(); t++) {
            in_sl[vid(i, spokes[i][t].first)].push_back(t);
            out_sl[vid(i + 1, spokes[i][t].second)].push_back(t);
        }
    // if one outer vertex carries every slot, the face holding the outer ring
    // arc sits after the descent of the inner foot sequence
    std::vector<int> outer_full_start(std::max(0, k - 1), 0);
    for (int i = 0; i + 1 < k; i++) {
        int cnt = (int)spokes[i].size();
        for (int t = 0; t < cnt; t++)
            if (spokes[i][t].second > spokes[i][(t + 1) % cnt].second)
                outer_full_start[i] = (t + 1) % cnt;
    }
    for (int i = 0; i < k; i++)
        for (auto& ch : chords[i]) {
            cw_ch[vid(i, ch.a_pos)].push_back({ch.b_pos - ch.a_pos, vid(i, ch.b_pos)});
            ccw_ch[vid(i, ch.b_pos)].push_back({ch.b_pos - ch.a_pos, vid(i, ch.a_pos)});
        }
    for (int v = 0; v < n; v++) {
        std::sort(cw_ch[v].begin(), cw_ch[v].end());
        std::sort(ccw_ch[v].begin(), ccw_ch[v].end(), std::greater<>());
    }
    for (int i = 0; i < k; i++) {
        for (int j = 0; j < size[i]; j++) {
            int v = vid(i, j);
            auto& r = rot[v];
            if (i > 0)
                for (int t : window_order(out_sl[v], (int)spokes[i - 1].size(), 0))
                    r.push_back(vid(i - 1, spokes[i - 1][t].first));
            r.push_back(vid(i, j + 1));
            for (auto& [len, u] : cw_ch[v]) r.push_back(u);
            if (i + 1 < k) {
                auto win = window_order(in_sl[v], (int)spokes[i].size(), outer_full_start[i]);
                for (auto it = win.rbegin(); it != win.rend(); ++it)
                    r.push_back(vid(i + 1, spokes[i][*it].second));
            }
            for (auto& [len, u] : ccw_ch[v]) r.push_back(u);
            r.push_back(vid(i, j - 1));
        }
    }
    return build_embedding(n, rot, {vid(0, 0), vid(0, 1)});
}

} // namespace

Embedding generate(const GenSpec& spec) {
    if (spec.k < 1) fail(errc::unsatisfiable, "k must be >= 1");
    if (spec.n_target < 3 * spec.k)
        fail(errc::unsatisfiable, "n_target below 3k, cannot nest " + std::to_string(spec.k) +
                                      " cycles");
    int achieved = -1;
    for (int retry = 0; retry < 8; retry++) {
        Embedding emb = attempt(spec, spec.seed + 0x9e3779b97f4a7c15ull * (uint64_t)retry);
        achieved = outerplanarity_index(emb);
        if (achieved == spec.k) return emb;
    }
    fail(errc::unsatisfiable,
         "could not reach index " + std::to_string(spec.k) + ", achieved " + std::to_string(achieved));
}

namespace {

Embedding make_cycle(int n) {
    std::vector<std::vector<int>> rot(n);
    for (int j = 0; j < n; j++) rot[j] = {(j + 1) % n, (j + n - 1) % n};
    return build_embedding(n, rot, {0, 1});
}

Embedding make_k4() {
    // outer triangle 0,1,2 with 3 in the center
    std::vector<std::vector<int>> rot = {{2, 3, 1}, {0, 3, 2}, {1, 3, 0}, {2, 1, 0}};
    return build_embedding(4, rot, {1, 0});
}

Embedding make_grid(int r, int c) {
    auto id = [&](int i, int j) { return i * c + j; };
    std::vector<std::vector<int>> rot(r * c);
    for (int i = 0; i < r; i++)
        for (int j = 0; j < c; j++) {
            auto& out = rot[id(i, j)];
            if (i > 0) out.push_back(id(i - 1, j));
            if (j + 1 < c) out.push_back(id(i, j + 1));
            if (i + 1 < r) out.push_back(id(i + 1, j));
            if (j > 0) out.push_back(id(i, j - 1));
        }
    std::pair<int, int> hint = c >= 2 ? std::pair{id(0, 0), id(0, 1)} : std::pair{0, r >= 2 ? c : 0};
    return build_embedding(r * c, rot, hint);
}

// ring 0..9 around a hexagon (10..15, with chord 10-13) and a square (16..19),
// joined by the branch path 12-20-19 and spokes 0-11 and 5-18
Embedding make_fig2() {
    std::vector<std::vector<int>> rot(21);
    for (int j = 0; j < 10; j++) {
        rot[j].push_back((j + 1) % 10);
        if (j == 0) rot[j].push_back(11);
        if (j == 5) rot[j].push_back(18);
        rot[j].push_back((j + 9) % 10);
    }
    rot[10] = {11, 13, 15};
    rot[11] = {0, 12, 10};
    rot[12] = {11, 20, 13};
    rot[13] = {10, 12, 14};
    rot[14] = {15, 13};
    rot[15] = {10, 14};
    rot[16] = {17, 19};
    rot[17] = {18, 16};
    rot[18] = {17, 5, 19};
    rot[19] = {16, 18, 20};
    rot[20] = {12, 19};
    return build_embedding(21, rot, {0, 1});
}

} // namespace

Embedding canned(const std::string& name) {
    if (name.size() > 1 && name[0] == 'c') {
        int n = atoi(name.c_str() + 1);
        if (n >= 3 && std::to_string(n) == name.substr(1)) return make_cycle(n);
    }
    if (name == "k4") return make_k4();
    if (name == "fig2") return make_fig2();
    if (name.rfind("grid", 0) == 0) {
        auto x = name.find('x');
        if (x != std::string::npos) {
            int r = atoi(name.substr(4, x - 4).c_str());
            int c = atoi(name.substr(x + 1).c_str());
            if (r >= 1 && c >= 1 && (long)r * c <= 4000000) return make_grid(r, c);
        }
    }
    fail(errc::unknown_name, "no canned instance named '" + name + "'");
}

} // namespace kop
