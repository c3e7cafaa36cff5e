#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "kop/branchdec.hpp"
#include "kop/generator.hpp"
#include "kop/io.hpp"
#include "kop/layers.hpp"
#include "kop/treedec.hpp"
#include "kop/verify.hpp"

namespace kop {

namespace {

using clock_t_ = std::chrono::steady_clock;

double ms_since(clock_t_::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_t_::now() - t0).count();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream o(path, std::ios::binary);
    if (!o) fail(errc::parse_error, "cannot write " + path);
    o << text;
}

std::string swap_ext(const std::string& in, const std::string& ext) {
    auto dot = in.find_last_of('.');
    auto slash = in.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return in + ext;
    return in.substr(0, dot) + ext;
}

struct Report {
    std::vector<std::pair<std::string, std::string>> kv;
    void add(const std::string& k, const std::string& v) { kv.push_back({k, v}); }
    void add(const std::string& k, long v) { add(k, std::to_string(v)); }
    void add_ms(const std::string& k, double v) {
        char buf[32];
        snprintf(buf, sizeof buf, "%.3f", v);
        add(k, std::string(buf));
    }
    void print(std::ostream& out, bool json) const {
        if (json) {
            nlohmann::ordered_json j;
            for (auto& [k, v] : kv) {
                try {
                    size_t pos = 0;
                    if (v.find('.') == std::string::npos) {
                        long x = std::stol(v, &pos);
                        if (pos == v.size()) {
                            j[k] = x;
                            continue;
                        }
                    } else {
                        double x = std::stod(v, &pos);
                        if (pos == v.size()) {
                            j[k] = x;
                            continue;
                        }
                    }
                } catch (...) {
                }
                j[k] = v;
            }
            out << j.dump(2) << '\n';
        } else {
            for (auto& [k, v] : kv) out << k << '=' << v << '\n';
        }
    }
};

void dump_forest(const Embedding& exp, const SpanningForest& forest, const StrippingTrace& trace,
                 std::ostream& out) {
    for (int e = 0; e < exp.m(); e++)
        if (forest.in_forest[e])
            out << "f " << exp.edge_ends[e].first + 1 << ' ' << exp.edge_ends[e].second + 1 << ' '
                << trace.step_of_edge[e] << '\n';
}

struct DecompFlags {
    std::string in, out_path;
    bool verify = false, stats = false, dump = false, json = false;
};

int cmd_tree(const DecompFlags& fl, std::ostream& out) {
    auto t0 = clock_t_::now();
    auto emb = parse_emb(slurp(fl.in));
    double t_parse = ms_since(t0);

    Report rep;
    rep.add("input", fl.in);
    rep.add("n", emb.n);
    rep.add("m", emb.m());

    auto t1 = clock_t_::now();
    auto la = analyze_layers(emb);
    rep.add("k", la.index_k);
    TreeDecomposition td;
    if (la.index_k <= 1) {
        td = decompose_outerplanar(emb);
        if (fl.stats) rep.add("expansion_added", 0);
        if (fl.dump) {
            auto [exp, rec] = expand_high_degree(emb, la.face_layer);
            auto fr = spanning_forest(exp);
            dump_forest(exp, fr.forest, fr.trace, out);
        }
    } else {
        auto [exp, rec] = expand_high_degree(emb, la.face_layer);
        auto fr = spanning_forest(exp);
        auto oft = build_open_face_tree(exp, fr.forest, fr.trace);
        td = shrink(fill_bags(exp, fr.forest, oft), rec);
        if (fl.stats) {
            rep.add("expanded_n", exp.n);
            rep.add("expanded_m", exp.m());
            rep.add("expansion_added", exp.n - emb.n);
            auto rm = remember_numbers(exp.n, exp.edge_list(), fr.forest);
            rep.add("vr", rm.vr);
            rep.add("er", rm.er);
        }
        if (fl.dump) dump_forest(exp, fr.forest, fr.trace, out);
    }
    double t_pipe = ms_since(t1);

    TdFile file;
    file.bags = td.bags;
    file.tree_edges = td.tree_edges;
    file.n_graph = td.n_graph;
    auto text = write_td(file);
    std::string out_path = fl.out_path.empty() ? swap_ext(fl.in, ".td") : fl.out_path;
    spit(out_path, text, out);

    rep.add("width", td.width());
    if (fl.verify) {
        auto back = parse_td(text);
        TreeDecomposition re;
        re.bags = back.bags;
        re.tree_edges = back.tree_edges;
        re.n_graph = back.n_graph;
        auto chk = check_td(emb.n, emb.edge_list(), re);
        if (!chk.ok || chk.width != td.width()) {
            rep.add("verify", "FAIL " + chk.violation);
            rep.print(out, fl.json);
            return 1;
        }
        rep.add("verify", "pass");
    }
    rep.add_ms("time_parse_ms", t_parse);
    rep.add_ms("time_pipeline_ms", t_pipe);
    rep.add("output", out_path == "-" ? "(stdout)" : out_path);
    rep.print(out, fl.json);
    return 0;
}

int cmd_branch(const DecompFlags& fl, std::ostream& out) {
    auto t0 = clock_t_::now();
    auto emb = parse_emb(slurp(fl.in));
    double t_parse = ms_since(t0);

    Report rep;
    rep.add("input", fl.in);
    rep.add("n", emb.n);
    rep.add("m", emb.m());

    auto t1 = clock_t_::now();
    auto la = analyze_layers(emb);
    rep.add("k", la.index_k);
    auto [exp, rec] = expand_high_degree(emb, la.face_layer);
    auto fr = spanning_forest(exp);
    auto bd = restrict_to_minor(build_branch(exp, fr.forest), rec);
    bd.width = 0;
    for (const auto& blk : bd.blocks) {
        auto ords = middle_set_orders(blk, emb.edge_ends, emb.n);
        for (int o : ords) bd.width = std::max(bd.width, o);
    }
    double t_pipe = ms_since(t1);
    if (fl.stats) {
        rep.add("expanded_n", exp.n);
        rep.add("expanded_m", exp.m());
        rep.add("expansion_added", exp.n - emb.n);
        auto rm = remember_numbers(exp.n, exp.edge_list(), fr.forest);
        rep.add("vr", rm.vr);
        rep.add("er", rm.er);
    }
    if (fl.dump) dump_forest(exp, fr.forest, fr.trace, out);

    BdFile file;
    for (const auto& blk : bd.blocks) {
        BdBlock fb;
        fb.n_nodes = blk.n_nodes;
        fb.tree_edges = blk.tree_edges;
        for (auto [node, e] : blk.sigma) fb.leaves.push_back({node, emb.edge_ends[e]});
        file.blocks.push_back(std::move(fb));
    }
    auto text = write_bd(file);
    std::string out_path = fl.out_path.empty() ? swap_ext(fl.in, ".bd") : fl.out_path;
    spit(out_path, text, out);

    rep.add("blocks", (long)bd.blocks.size());
    rep.add("width", bd.width);
    if (fl.verify) {
        auto chk = check_bd(emb.n, emb.edge_list(), bd);
        if (!chk.ok || chk.width != bd.width) {
            rep.add("verify", "FAIL " + chk.violation);
            rep.print(out, fl.json);
            return 1;
        }
        rep.add("verify", "pass");
    }
    rep.add_ms("time_parse_ms", t_parse);
    rep.add_ms("time_pipeline_ms", t_pipe);
    rep.add("output", out_path == "-" ? "(stdout)" : out_path);
    rep.print(out, fl.json);
    return 0;
}

// graph-edge endpoint pairs from a parsed .bd, resolved back to edge ids
BranchDecomposition bd_from_file(const BdFile& file, const Embedding& emb, std::ostream& err,
                                 bool& ok) {
    BranchDecomposition bd;
    ok = true;
    std::map<std::pair<int, int>, int> edge_id;
    for (int e = 0; e < emb.m(); e++) {
        auto [a, b] = emb.edge_ends[e];
        edge_id[{std::min(a, b), std::max(a, b)}] = e;
    }
    for (const auto& fb : file.blocks) {
        BranchBlock blk;
        blk.n_nodes = fb.n_nodes;
        blk.tree_edges = fb.tree_edges;
        blk.edge_tags.assign(fb.tree_edges.size(), {});
        for (auto& [node, uv] : fb.leaves) {
            auto it = edge_id.find({std::min(uv.first, uv.second), std::max(uv.first, uv.second)});
            if (it == edge_id.end()) {
                err << "leaf edge (" << uv.first + 1 << "," << uv.second + 1
                    << ") is not an edge of the graph\n";
                ok = false;
                return bd;
            }
            blk.sigma.push_back({node, it->second});
        }
        bd.blocks.push_back(std::move(blk));
    }
    return bd;
}

int cmd_bench(int k, const std::vector<int>& sizes, uint64_t seed, int reps, bool branch_mode,
              std::ostream& out) {
    out << "n k median_ms width\n";
    for (int n : sizes) {
        GenSpec spec{k, n, seed + (uint64_t)n, 0.3, 0.3};
        auto emb = generate(spec);
        std::vector<double> times;
        int width = -1;
        for (int r = 0; r < reps; r++) {
            auto t0 = clock_t_::now();
            if (branch_mode) {
                auto bd = branch_decompose(emb);
                width = bd.width;
            } else {
                auto td = decompose(emb);
                width = td.width();
            }
            times.push_back(ms_since(t0));
        }
        std::sort(times.begin(), times.end());
        char buf[32];
        snprintf(buf, sizeof buf, "%.3f", times[times.size() / 2]);
        out << emb.n << ' ' << k << ' ' << buf << ' ' << width << '\n';
    }
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tree and branch decompositions of k-outerplanar graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a k-outerplanar instance (.emb)");
    GenSpec spec;
    std::string canned_name, gen_out = "-";
    gen->add_option("--k", spec.k, "outerplanarity index");
    gen->add_option("--n", spec.n_target, "approximate vertex count");
    gen->add_option("--seed", spec.seed, "rng seed");
    gen->add_option("--chords", spec.chord_density, "chord density in [0,1]");
    gen->add_option("--spokes", spec.spoke_density, "spoke density in (0,1]");
    gen->add_option("--canned", canned_name, "fixed fixture name (c6, k4, grid3x4, fig2)");
    gen->add_option("-o,--output", gen_out, "output path, - for stdout");

    // index
    auto* index = app.add_subcommand("index", "outerplanarity index of an embedding");
    std::string index_in;
    bool index_layers = false;
    index->add_option("input", index_in)->required();
    index->add_flag("--layers", index_layers, "print per-vertex layers");

    // tree / branch
    DecompFlags tf, bf;
    auto* tree = app.add_subcommand("tree", "tree decomposition of width <= 3k-1 (.td)");
    tree->add_option("input", tf.in)->required();
    tree->add_option("-o,--output", tf.out_path, "output path (default: input with .td)");
    tree->add_flag("--verify", tf.verify, "re-check the emitted file");
    tree->add_flag("--stats", tf.stats, "report expansion and remember numbers");
    tree->add_flag("--dump-forest", tf.dump, "print 'f u v step' lines for the spanning forest");
    tree->add_flag("--json", tf.json, "json report");
    auto* branch = app.add_subcommand("branch", "branch decomposition of width <= 2k+1 (.bd)");
    branch->add_option("input", bf.in)->required();
    branch->add_option("-o,--output", bf.out_path, "output path (default: input with .bd)");
    branch->add_flag("--verify", bf.verify, "re-check the emitted decomposition");
    branch->add_flag("--stats", bf.stats, "report expansion and remember numbers");
    branch->add_flag("--dump-forest", bf.dump, "print 'f u v step' lines for the spanning forest");
    branch->add_flag("--json", bf.json, "json report");

    // checkers and oracles
    std::string ctd_emb, ctd_td, cbd_emb, cbd_bd, otw_in, obw_in;
    auto* ctd = app.add_subcommand("check-td", "validate a .td against an .emb");
    ctd->add_option("embedding", ctd_emb)->required();
    ctd->add_option("decomposition", ctd_td)->required();
    auto* cbd = app.add_subcommand("check-bd", "validate a .bd against an .emb");
    cbd->add_option("embedding", cbd_emb)->required();
    cbd->add_option("decomposition", cbd_bd)->required();
    auto* otw = app.add_subcommand("oracle-tw", "exact treewidth (n <= 10)");
    otw->add_option("input", otw_in)->required();
    auto* obw = app.add_subcommand("oracle-bw", "exact branchwidth (m <= 8)");
    obw->add_option("input", obw_in)->required();

    // bench
    auto* bench = app.add_subcommand("bench", "timing table over generated instances");
    int bench_k = 3, bench_reps = 5;
    uint64_t bench_seed = 1;
    std::vector<int> bench_sizes;
    std::string bench_mode = "tree";
    bench->add_option("--k", bench_k, "outerplanarity index");
    bench->add_option("--n", bench_sizes, "vertex counts")->delimiter(',');
    bench->add_option("--seed", bench_seed, "rng seed");
    bench->add_option("--reps", bench_reps, "repetitions per size (median)");
    bench->add_option("--mode", bench_mode, "tree or branch")
        ->check(CLI::IsMember({"tree", "branch"}));

    std::reverse(args.begin(), args.end()); // CLI11 wants reversed argv-style input
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        std::ostringstream ss;
        int code = app.exit(e, ss, ss);
        (code == 0 ? out : err) << ss.str();
        return code;
    }

    try {
        if (gen->parsed()) {
            Embedding emb = canned_name.empty() ? generate(spec) : canned(canned_name);
            spit(gen_out, write_emb(emb), out);
            return 0;
        }
        if (index->parsed()) {
            auto emb = parse_emb(slurp(index_in));
            auto la = analyze_layers(emb);
            out << "k=" << la.index_k << '\n';
            if (index_layers)
                for (int v = 0; v < emb.n; v++) out << "v " << v + 1 << ' ' << la.vertex_layer[v] << '\n';
            return 0;
        }
        if (tree->parsed()) return cmd_tree(tf, out);
        if (branch->parsed()) return cmd_branch(bf, out);
        if (ctd->parsed()) {
            auto emb = parse_emb(slurp(ctd_emb));
            auto file = parse_td(slurp(ctd_td));
            if (file.n_graph != emb.n) {
                err << "vertex count mismatch: graph has " << emb.n << ", decomposition declares "
                    << file.n_graph << '\n';
                return 1;
            }
            TreeDecomposition td;
            td.bags = file.bags;
            td.tree_edges = file.tree_edges;
            td.n_graph = file.n_graph;
            auto r = check_td(emb.n, emb.edge_list(), td);
            if (!r.ok) {
                err << r.violation << '\n';
                return 1;
            }
            out << "ok width=" << r.width << '\n';
            return 0;
        }
        if (cbd->parsed()) {
            auto emb = parse_emb(slurp(cbd_emb));
            auto file = parse_bd(slurp(cbd_bd));
            bool ok = true;
            auto bd = bd_from_file(file, emb, err, ok);
            if (!ok) return 1;
            auto r = check_bd(emb.n, emb.edge_list(), bd);
            if (!r.ok) {
                err << r.violation << '\n';
                return 1;
            }
            out << "ok width=" << r.width << '\n';
            return 0;
        }
        if (otw->parsed()) {
            auto emb = parse_emb(slurp(otw_in));
            out << oracle_treewidth(emb.n, emb.edge_list()) << '\n';
            return 0;
        }
        if (obw->parsed()) {
            auto emb = parse_emb(slurp(obw_in));
            out << oracle_branchwidth(emb.n, emb.edge_list()) << '\n';
            return 0;
        }
        if (bench->parsed())
            return cmd_bench(bench_k, bench_sizes, bench_seed, bench_reps, bench_mode == "branch",
                             out);
    } catch (const error& e) {
        err << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace kop
