#include "kop/io.hpp"

#include <algorithm>
#include <sstream>

#include "kop/util.hpp"

namespace kop {

namespace {

[[noreturn]] void bad_line(int lineno, const std::string& what) {
    fail(errc::parse_error, "line " + std::to_string(lineno) + ": " + what);
}

std::vector<long> parse_ints(const std::string& s, size_t from, int lineno) {
    std::vector<long> out;
    std::istringstream is(s.substr(from));
    long x;
    while (is >> x) out.push_back(x);
    if (!is.eof()) bad_line(lineno, "expected integers");
    return out;
}

} // namespace

std::string write_emb(const Embedding& emb) {
    std::ostringstream os;
    os << "p emb " << emb.n << ' ' << emb.m() << '\n';
    for (int v = 0; v < emb.n; v++) {
        os << "r " << v + 1;
        for (int he : emb.v_rot[v]) os << ' ' << emb.head(he) + 1;
        os << '\n';
    }
    if (emb.m() > 0) {
        std::vector<int> reps;
        for (int c : emb.face_cycle_ids[emb.outer_face])
            reps.push_back(*std::min_element(emb.cycles[c].begin(), emb.cycles[c].end()));
        std::sort(reps.begin(), reps.end());
        for (int he : reps) os << "o " << emb.origin(he) + 1 << ' ' << emb.head(he) + 1 << '\n';
    }
    return os.str();
}

Embedding parse_emb(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<std::vector<int>> rot;
    std::vector<char> seen;
    std::vector<std::pair<int, int>> hints;
    while (std::getline(is, line)) {
        lineno++;
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            if (n >= 0) bad_line(lineno, "duplicate p line");
            std::istringstream ls(line);
            std::string p, fmt;
            ls >> p >> fmt >> n >> m;
            if (!ls || fmt != "emb" || n < 0 || m < 0) bad_line(lineno, "expected 'p emb n m'");
            rot.assign(n, {});
            seen.assign(n, 0);
        } else if (line[0] == 'r') {
            if (n < 0) bad_line(lineno, "r line before p line");
            auto xs = parse_ints(line, 1, lineno);
            if (xs.empty()) bad_line(lineno, "empty r line");
            long v = xs[0];
            if (v < 1 || v > n) bad_line(lineno, "vertex id out of range");
            if (seen[v - 1]++) bad_line(lineno, "duplicate rotation for vertex " + std::to_string(v));
            for (size_t i = 1; i < xs.size(); i++) {
                if (xs[i] < 1 || xs[i] > n) bad_line(lineno, "neighbor id out of range");
                rot[v - 1].push_back((int)xs[i] - 1);
            }
        } else if (line[0] == 'o') {
            if (n < 0) bad_line(lineno, "o line before p line");
            auto xs = parse_ints(line, 1, lineno);
            if (xs.size() != 2 || xs[0] < 1 || xs[0] > n || xs[1] < 1 || xs[1] > n)
                bad_line(lineno, "expected 'o v u'");
            hints.emplace_back((int)xs[0] - 1, (int)xs[1] - 1);
        } else {
            bad_line(lineno, "unknown line type '" + line.substr(0, 1) + "'");
        }
    }
    if (n < 0) fail(errc::parse_error, "missing p line");
    long deg_sum = 0;
    for (auto& r : rot) deg_sum += (long)r.size();
    if (deg_sum != 2 * m)
        fail(errc::parse_error, "edge count mismatch: p line declares " + std::to_string(2 * m) +
                                    " rotation entries, found " + std::to_string(deg_sum));
    if (m > 0 && hints.empty()) fail(errc::parse_error, "missing outer face designation (o line)");
    std::pair<int, int> primary = m > 0 ? hints[0] : std::pair<int, int>{0, 0};
    std::vector<std::pair<int, int>> extra(hints.begin() + (hints.empty() ? 0 : 1), hints.end());
    return build_embedding((int)n, rot, primary, extra);
}

std::string write_td(const TdFile& td) {
    std::ostringstream os;
    size_t nb = td.bags.empty() ? 1 : td.bags.size();
    size_t maxbag = 0;
    for (const auto& b : td.bags) maxbag = std::max(maxbag, b.size());
    os << "s td " << nb << ' ' << maxbag << ' ' << td.n_graph << '\n';
    if (td.bags.empty()) {
        os << "b 1\n";
        return os.str();
    }
    for (size_t i = 0; i < td.bags.size(); i++) {
        os << "b " << i + 1;
        for (int v : td.bags[i]) os << ' ' << v + 1;
        os << '\n';
    }
    // join the decomposition forest into the single tree PACE requires
    dsu comps((int)td.bags.size());
    for (auto [a, b] : td.tree_edges) {
        comps.unite(a, b);
        os << a + 1 << ' ' << b + 1 << '\n';
    }
    int prev_root = -1;
    for (int i = 0; i < (int)td.bags.size(); i++) {
        if (comps.find(i) != i) continue;
        if (prev_root >= 0) os << prev_root + 1 << ' ' << i + 1 << '\n';
        prev_root = i;
    }
    return os.str();
}

TdFile parse_td(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    TdFile td;
    long nb = -1, maxbag = -1;
    std::vector<char> seen;
    while (std::getline(is, line)) {
        lineno++;
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 's') {
            std::istringstream ls(line);
            std::string s, fmt;
            long ng;
            ls >> s >> fmt >> nb >> maxbag >> ng;
            if (!ls || fmt != "td" || nb < 0) bad_line(lineno, "expected 's td nbags width+1 n'");
            td.n_graph = (int)ng;
            td.declared_width = (int)maxbag - 1;
            td.bags.assign(nb, {});
            seen.assign(nb, 0);
        } else if (line[0] == 'b') {
            if (nb < 0) bad_line(lineno, "b line before s line");
            auto xs = parse_ints(line, 1, lineno);
            if (xs.empty()) bad_line(lineno, "empty b line");
            long i = xs[0];
            if (i < 1 || i > nb) bad_line(lineno, "bag id out of range");
            if (seen[i - 1]++) bad_line(lineno, "duplicate bag " + std::to_string(i));
            for (size_t j = 1; j < xs.size(); j++) {
                if (xs[j] < 1 || xs[j] > td.n_graph) bad_line(lineno, "bag vertex out of range");
                td.bags[i - 1].push_back((int)xs[j] - 1);
            }
        } else {
            auto xs = parse_ints(line, 0, lineno);
            if (xs.size() != 2 || xs[0] < 1 || xs[0] > nb || xs[1] < 1 || xs[1] > nb)
                bad_line(lineno, "expected tree edge 'i j'");
            td.tree_edges.emplace_back((int)xs[0] - 1, (int)xs[1] - 1);
        }
    }
    if (nb < 0) fail(errc::parse_error, "missing s line");
    return td;
}

std::string write_bd(const BdFile& bd) {
    std::ostringstream os;
    for (const auto& blk : bd.blocks) {
        os << "s bd " << blk.n_nodes << ' ' << blk.leaves.size() << ' ' << blk.leaves.size()
           << '\n';
        for (const auto& [node, uv] : blk.leaves)
            os << "l " << node + 1 << ' ' << uv.first + 1 << ' ' << uv.second + 1 << '\n';
        for (auto [a, b] : blk.tree_edges) os << "t " << a + 1 << ' ' << b + 1 << '\n';
    }
    return os.str();
}

BdFile parse_bd(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    BdFile bd;
    while (std::getline(is, line)) {
        lineno++;
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 's') {
            std::istringstream ls(line);
            std::string s, fmt;
            long nn, nl, m;
            ls >> s >> fmt >> nn >> nl >> m;
            if (!ls || fmt != "bd" || nn < 0) bad_line(lineno, "expected 's bd N L m'");
            bd.blocks.push_back({});
            bd.blocks.back().n_nodes = (int)nn;
        } else if (line[0] == 'l') {
            if (bd.blocks.empty()) bad_line(lineno, "l line before s line");
            auto xs = parse_ints(line, 1, lineno);
            if (xs.size() != 3) bad_line(lineno, "expected 'l node u v'");
            if (xs[0] < 1 || xs[0] > bd.blocks.back().n_nodes)
                bad_line(lineno, "leaf node id out of range");
            bd.blocks.back().leaves.push_back(
                {(int)xs[0] - 1, {(int)xs[1] - 1, (int)xs[2] - 1}});
        } else if (line[0] == 't') {
            if (bd.blocks.empty()) bad_line(lineno, "t line before s line");
            auto xs = parse_ints(line, 1, lineno);
            auto nn = bd.blocks.back().n_nodes;
            if (xs.size() != 2 || xs[0] < 1 || xs[0] > nn || xs[1] < 1 || xs[1] > nn)
                bad_line(lineno, "expected 't a b'");
            bd.blocks.back().tree_edges.emplace_back((int)xs[0] - 1, (int)xs[1] - 1);
        } else {
            bad_line(lineno, "unknown line type '" + line.substr(0, 1) + "'");
        }
    }
    return bd;
}

} // namespace kop
