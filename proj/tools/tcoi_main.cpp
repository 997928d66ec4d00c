// Command line front end: exact solving, bound audits, family generation,
// the gadget reduction, and the tree characterization checks. Output is one
// JSON record per line; exit codes are 0 ok, 2 parse error, 3 infeasible,
// 4 precondition violation.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tcoi/bounds.hpp"
#include "tcoi/families.hpp"
#include "tcoi/graph.hpp"
#include "tcoi/graph_io.hpp"
#include "tcoi/reduction.hpp"
#include "tcoi/solvers.hpp"
#include "tcoi/tree_theory.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tcoi;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitPrecondition = 4;

ordered_json record(const char* kind) {
    ordered_json j;
    j["schema_version"] = 1;
    j["record"] = kind;
    return j;
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

int worker_count(size_t jobs) {
    if (const char* env = std::getenv("TCOI_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return static_cast<int>(std::min<size_t>(jobs, static_cast<size_t>(w)));
    }
    return 1;
}

// Runs fn over 0..count-1, possibly on several threads, keeping index order
// for the caller.
template <typename Fn>
void parallel_indexed(size_t count, Fn fn) {
    int workers = worker_count(count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::future<void>> futures;
    for (int w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, [&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        }));
    for (auto& f : futures) f.get();
}

ordered_json solve_record(const SolveResult& r) {
    ordered_json j;
    j["value"] = r.value;
    j["witness"] = r.witness.to_vector();
    j["nodes"] = r.nodes_explored;
    j["method"] = method_name(r.method);
    return j;
}

ordered_json bound_record(const BoundEntry& e) {
    ordered_json j;
    j["name"] = e.name;
    switch (e.relation) {
        case Relation::eq: j["relation"] = "eq"; break;
        case Relation::ge: j["relation"] = "ge"; break;
        case Relation::le: j["relation"] = "le"; break;
    }
    j["lhs"] = e.lhs;
    j["rhs_num"] = e.rhs.num;
    j["rhs_den"] = e.rhs.den;
    j["holds"] = e.holds;
    j["tight"] = e.tight;
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

struct CommandError {
    int exit_code;
    std::string message;
};

int classify(const std::exception& e) {
    if (dynamic_cast<const infeasible_error*>(&e)) return kExitInfeasible;
    if (dynamic_cast<const precondition_error*>(&e)) return kExitPrecondition;
    if (dynamic_cast<const invalid_input_error*>(&e)) return kExitParse;
    return 1;
}

ordered_json error_record(const std::exception& e) {
    ordered_json j = record("error");
    j["message"] = e.what();
    j["exit_code"] = classify(e);
    return j;
}

// ---- compute ----------------------------------------------------------------

int cmd_compute(const std::vector<std::string>& files, bool oracle) {
    std::vector<ordered_json> out(files.size());
    std::vector<int> codes(files.size(), kExitOk);
    parallel_indexed(files.size(), [&](size_t i) {
        ordered_json j = record("compute");
        j["input"] = files[i];
        try {
            Graph g = read_graph_file(files[i]);
            j["n"] = g.order();
            j["m"] = g.size();
            j["connected"] = is_connected(g);
            bool tree = is_tree(g);
            auto run = [&](Problem p) {
                if (oracle) return solve_brute_force(g, p);
                if (tree && p == Problem::gamma_t) return tree_gamma_t(g);
                if (tree && p == Problem::gamma_tcoi) return tree_gamma_tcoi(g);
                switch (p) {
                    case Problem::gamma_t: return gamma_t(g);
                    case Problem::gamma_tcoi: return gamma_tcoi(g);
                    case Problem::alpha: return alpha(g);
                    default: return beta(g);
                }
            };
            j["alpha"] = solve_record(run(Problem::alpha));
            j["beta"] = solve_record(run(Problem::beta));
            try {
                j["gamma_t"] = solve_record(run(Problem::gamma_t));
            } catch (const precondition_error& e) {
                j["gamma_t"] = {{"error", e.what()}};
                codes[i] = kExitPrecondition;
            }
            try {
                j["gamma_tcoi"] = solve_record(run(Problem::gamma_tcoi));
            } catch (const infeasible_error& e) {
                j["gamma_tcoi"] = {{"infeasible", true}, {"reason", e.what()}};
                codes[i] = kExitInfeasible;
            } catch (const precondition_error& e) {
                j["gamma_tcoi"] = {{"error", e.what()}};
                codes[i] = kExitPrecondition;
            }
        } catch (const std::exception& e) {
            j = error_record(e);
            j["input"] = files[i];
            codes[i] = classify(e);
        }
        out[i] = std::move(j);
    });
    int exit_code = kExitOk;
    for (size_t i = 0; i < files.size(); ++i) {
        emit(out[i]);
        if (codes[i] != kExitOk) exit_code = codes[i];
    }
    return exit_code;
}

// ---- bounds -----------------------------------------------------------------

int cmd_bounds(const std::vector<std::string>& files) {
    std::vector<std::vector<ordered_json>> out(files.size());
    std::vector<int> codes(files.size(), kExitOk);
    parallel_indexed(files.size(), [&](size_t i) {
        try {
            Graph g = read_graph_file(files[i]);
            BoundsReport rep = evaluate_bounds(g);
            ordered_json head = record("bounds_instance");
            head["input"] = files[i];
            head["n"] = rep.n;
            head["m"] = rep.m;
            head["min_degree"] = rep.min_degree;
            head["max_degree"] = rep.max_degree;
            head["connected"] = rep.connected;
            head["star"] = rep.star;
            head["gamma_t"] = rep.gamma_t_value;
            head["gamma_tcoi"] = rep.gamma_tcoi_value;
            head["alpha"] = rep.alpha_value;
            head["beta"] = rep.beta_value;
            head["all_hold"] = rep.all_hold;
            out[i].push_back(std::move(head));
            for (const auto& e : rep.entries) {
                ordered_json b = record("bound");
                b["input"] = files[i];
                b.update(bound_record(e));
                out[i].push_back(std::move(b));
            }
        } catch (const std::exception& e) {
            ordered_json j = error_record(e);
            j["input"] = files[i];
            out[i].push_back(std::move(j));
            codes[i] = classify(e);
        }
    });
    int exit_code = kExitOk;
    for (size_t i = 0; i < files.size(); ++i) {
        for (const auto& j : out[i]) emit(j);
        if (codes[i] != kExitOk) exit_code = codes[i];
    }
    return exit_code;
}

// ---- gen ---------------------------------------------------------------------

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        out.push_back(std::stoi(token));
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw invalid_input_error("cannot open file for writing: " + path);
    f << text;
}

void emit_generated(const char* family, const Graph& g, const std::string& graph_file,
                    const std::string& script_file) {
    ordered_json j = record("gen");
    j["family"] = family;
    j["n"] = g.order();
    j["m"] = g.size();
    j["graph_file"] = graph_file;
    if (!script_file.empty()) j["script_file"] = script_file;
    emit(j);
}

void emit_bounds_report(const char* what, const BoundsReport& rep) {
    ordered_json j = record(what);
    j["alpha"] = rep.alpha_value;
    j["gamma_tcoi"] = rep.gamma_tcoi_value;
    j["all_hold"] = rep.all_hold;
    ordered_json entries = ordered_json::array();
    for (const auto& e : rep.entries) entries.push_back(bound_record(e));
    j["entries"] = entries;
    emit(j);
}

// ---- trees -------------------------------------------------------------------

int cmd_trees_check(const std::string& file) {
    Graph t = read_graph_file(file);
    ordered_json j = record("trees_check");
    j["input"] = file;
    j["n"] = t.order();
    bool member = is_in_t_gamma_t(t);
    j["gamma_t"] = tree_gamma_t(t).value;
    j["gamma_tcoi"] = tree_gamma_tcoi(t).value;
    j["equal_numbers"] = member;
    emit(j);
    return kExitOk;
}

int cmd_trees_recognize(const std::string& file, const std::string& script_out) {
    Graph t = read_graph_file(file);
    auto seq = recognize_family_f(t);
    ordered_json j = record("trees_recognize");
    j["input"] = file;
    j["member"] = seq.has_value();
    if (seq) {
        j["operations"] = seq->steps.size();
        ordered_json steps = ordered_json::array();
        for (const auto& s : seq->steps)
            steps.push_back({{"op", tree_op_name(s.op)}, {"anchor", s.anchor}});
        j["steps"] = steps;
        if (!script_out.empty()) {
            write_text_file(script_out, seq->to_text());
            j["script_file"] = script_out;
        }
    }
    emit(j);
    return kExitOk;
}

int cmd_trees_verify(int max_n) {
    CharacterizationReport rep = verify_characterization(max_n);
    ordered_json j = record("trees_characterization");
    j["max_n"] = rep.max_n;
    j["stars_skipped"] = rep.stars_skipped;
    ordered_json counts = ordered_json::array();
    ordered_json members = ordered_json::array();
    for (int n = 4; n <= rep.max_n; ++n) {
        counts.push_back(rep.trees_per_order[static_cast<size_t>(n)]);
        members.push_back(rep.members_per_order[static_cast<size_t>(n)]);
    }
    j["trees_per_order"] = counts;
    j["members_per_order"] = members;
    j["disagreements"] = rep.disagreements.size();
    j["leaf_distance_violations"] = rep.leaf_distance_violations.size();
    j["private_neighbor_violations"] = rep.private_neighbor_violations.size();
    j["replay_failures"] = rep.replay_failures.size();
    j["ok"] = rep.ok();
    emit(j);
    for (const auto& d : rep.disagreements) {
        ordered_json dj = record("trees_disagreement");
        dj["n"] = d.n;
        dj["code"] = d.code;
        dj["equal_numbers"] = d.in_family_by_value;
        dj["recognized"] = d.recognized;
        dj["generated"] = d.generated;
        emit(dj);
    }
    return rep.ok() ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact total co-independent domination toolkit"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "solve gamma_t, gamma_tcoi, alpha, beta");
    std::vector<std::string> compute_files;
    bool oracle = false;
    compute->add_option("files", compute_files, "graph files (edge list or graph6)")->required();
    compute->add_flag("--oracle", oracle, "force the brute-force oracle");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "audit every applicable bound");
    std::vector<std::string> bounds_files;
    bounds->add_option("files", bounds_files, "graph files")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "generate family instances");
    gen->require_subcommand(1);
    std::string out_file = "graph.txt", script_file, dot_file, out_dir = ".";
    bool verify = false;

    auto* gen_f1 = gen->add_subcommand("f1", "star-rooted extremal family");
    int f1_n = 1, f1_a = 1, f1_b = 0, f1_tc = 0;
    std::string f1_k, f1_q, f1_t;
    gen_f1->add_option("--n", f1_n, "star size")->required();
    gen_f1->add_option("--a", f1_a, "subdivided edges")->required();
    gen_f1->add_option("--b", f1_b, "inflated paths");
    gen_f1->add_option("--k", f1_k, "inflation sizes, comma separated");
    gen_f1->add_option("--q", f1_q, "pendants on inflated outer leaves");
    gen_f1->add_option("--t", f1_t, "pendants on plain outer leaves");
    gen_f1->add_option("--tc", f1_tc, "pendants on the center");
    gen_f1->add_option("--out", out_file, "graph output file");
    gen_f1->add_option("--script", script_file, "build script output file");
    gen_f1->add_option("--dot", dot_file, "DOT export file");
    gen_f1->add_flag("--verify", verify, "check the family values exactly");

    auto* gen_f2 = gen->add_subcommand("f2", "C6-rooted extremal family");
    std::string f2_t = "0,0,0", f2_k = "1,1,1", f2_b;
    gen_f2->add_option("--t", f2_t, "pendant counts t1,t2,t3");
    gen_f2->add_option("--k", f2_k, "inflation sizes k1,k2,k3");
    gen_f2->add_option("--step-b", f2_b, "corner,k,next|prev");
    gen_f2->add_option("--out", out_file, "graph output file");
    gen_f2->add_option("--script", script_file, "build script output file");
    gen_f2->add_option("--dot", dot_file, "DOT export file");
    gen_f2->add_flag("--verify", verify, "check the family values exactly");

    auto* gen_qr = gen->add_subcommand("qr", "caterpillar Q_r");
    int qr_r = 2;
    gen_qr->add_option("--r", qr_r, "spine length parameter")->required();
    gen_qr->add_option("--out", out_file, "graph output file");
    gen_qr->add_option("--dot", dot_file, "DOT export file");

    auto* gen_f = gen->add_subcommand("f", "tree family closure from P4");
    int f_max_n = 7;
    gen_f->add_option("--max-n", f_max_n, "maximum order")->required();
    gen_f->add_option("--out-dir", out_dir, "directory for member files");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "build the gadget graph G_T");
    std::string reduce_file, reduce_out = "gt.txt";
    int reduce_k = -1;
    bool reduce_verify = false;
    reduce->add_option("file", reduce_file, "input graph")->required();
    reduce->add_option("--out", reduce_out, "output graph file");
    reduce->add_flag("--verify", reduce_verify, "check the identity 3n - beta");
    reduce->add_option("--k", reduce_k, "decision transfer threshold");

    // trees
    auto* trees = app.add_subcommand("trees", "tree characterization tools");
    trees->require_subcommand(1);
    auto* trees_check = trees->add_subcommand("check", "gamma_tcoi == gamma_t?");
    std::string trees_file;
    trees_check->add_option("file", trees_file, "tree file")->required();
    auto* trees_recognize = trees->add_subcommand("recognize", "emit a build sequence");
    std::string rec_file, rec_script;
    trees_recognize->add_option("file", rec_file, "tree file")->required();
    trees_recognize->add_option("--script", rec_script, "sequence output file");
    auto* trees_verify = trees->add_subcommand("verify-characterization", "exhaustive sweep");
    int trees_max_n = 10;
    trees_verify->add_option("--max-n", trees_max_n, "maximum order (<= 14)");
    auto* trees_replay = trees->add_subcommand("replay", "rebuild a tree from a sequence file");
    std::string replay_script, replay_out = "tree.txt";
    trees_replay->add_option("script", replay_script, "sequence file (base P4 + steps)")
        ->required();
    trees_replay->add_option("--out", replay_out, "output graph file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) return cmd_compute(compute_files, oracle);
        if (*bounds) return cmd_bounds(bounds_files);
        if (*gen_f1) {
            F1Params p;
            p.star_size = f1_n;
            p.subdivided = f1_a;
            p.inflated = f1_b;
            p.inflation_sizes = parse_int_list(f1_k);
            p.inflated_pendants = parse_int_list(f1_q);
            p.outer_pendants = parse_int_list(f1_t);
            p.center_pendants = f1_tc;
            validate(p);
            Graph g = build_f1(p);
            write_graph_file(out_file, g);
            if (!script_file.empty()) write_text_file(script_file, f1_script(p).to_text());
            if (!dot_file.empty()) write_text_file(dot_file, write_dot(g));
            emit_generated("f1", g, out_file, script_file);
            if (verify) emit_bounds_report("verify_f1", verify_f1(p));
            return kExitOk;
        }
        if (*gen_f2) {
            F2Params p;
            auto t = parse_int_list(f2_t);
            auto k = parse_int_list(f2_k);
            if (t.size() != 3 || k.size() != 3)
                throw precondition_error("f2 expects exactly three pendant counts and sizes");
            std::copy(t.begin(), t.end(), p.pendant_counts.begin());
            std::copy(k.begin(), k.end(), p.inflation_sizes.begin());
            if (!f2_b.empty()) {
                std::istringstream in(f2_b);
                std::string corner, size, dir;
                if (!std::getline(in, corner, ',') || !std::getline(in, size, ',') ||
                    !std::getline(in, dir, ','))
                    throw precondition_error("--step-b expects corner,k,next|prev");
                F2StepB sb;
                sb.corner = std::stoi(corner);
                sb.size = std::stoi(size);
                sb.toward_next = dir != "prev";
                p.step_b = sb;
            }
            validate(p);
            Graph g = build_f2(p);
            write_graph_file(out_file, g);
            if (!script_file.empty()) write_text_file(script_file, f2_script(p).to_text());
            if (!dot_file.empty()) write_text_file(dot_file, write_dot(g));
            emit_generated("f2", g, out_file, script_file);
            if (verify) emit_bounds_report("verify_f2", verify_f2(p));
            return kExitOk;
        }
        if (*gen_qr) {
            Graph g = build_qr(qr_r);
            write_graph_file(out_file, g);
            if (!dot_file.empty()) write_text_file(dot_file, write_dot(g));
            emit_generated("qr", g, out_file, "");
            return kExitOk;
        }
        if (*gen_f) {
            auto members = generate_family_f(f_max_n);
            int index = 0;
            for (const auto& m : members) {
                std::string graph_path =
                    out_dir + "/member_" + std::to_string(index) + ".txt";
                std::string seq_path = out_dir + "/member_" + std::to_string(index) + ".ops";
                write_graph_file(graph_path, m.tree);
                write_text_file(seq_path, m.sequence.to_text());
                emit_generated("f", m.tree, graph_path, seq_path);
                ++index;
            }
            return kExitOk;
        }
        if (*reduce) {
            Graph g = read_graph_file(reduce_file);
            GtResult gt = build_gt(g);
            write_graph_file(reduce_out, gt.graph);
            ordered_json j = record("reduce");
            j["input"] = reduce_file;
            j["n"] = g.order();
            j["gt_n"] = gt.graph.order();
            j["gt_m"] = gt.graph.size();
            j["out"] = reduce_out;
            emit(j);
            if (reduce_verify) {
                ReductionCheck check = verify_reduction(g);
                ordered_json v = record("reduce_verify");
                v["gamma_tcoi_gt"] = check.lhs;
                v["three_n_minus_beta"] = check.rhs;
                v["holds"] = check.holds;
                emit(v);
                if (!check.holds) return 1;
            }
            if (reduce_k >= 0) {
                DecisionTransfer t = decision_transfer(g, reduce_k);
                ordered_json v = record("decision_transfer");
                v["k"] = reduce_k;
                v["j"] = t.j;
                v["gamma_le_j"] = t.gamma_le_j;
                v["beta_ge_k"] = t.beta_ge_k;
                v["equivalence"] = t.equivalence;
                emit(v);
            }
            return kExitOk;
        }
        if (*trees_check) return cmd_trees_check(trees_file);
        if (*trees_recognize) return cmd_trees_recognize(rec_file, rec_script);
        if (*trees_verify) return cmd_trees_verify(trees_max_n);
        if (*trees_replay) {
            std::ifstream in(replay_script);
            if (!in) throw invalid_input_error("cannot open script: " + replay_script);
            std::stringstream buffer;
            buffer << in.rdbuf();
            TreeOpSequence seq = TreeOpSequence::from_text(buffer.str());
            Graph t = replay_sequence(seq);
            write_graph_file(replay_out, t);
            ordered_json j = record("trees_replay");
            j["script"] = replay_script;
            j["n"] = t.order();
            j["m"] = t.size();
            j["out"] = replay_out;
            emit(j);
            return kExitOk;
        }
    } catch (const std::exception& e) {
        emit(error_record(e));
        return classify(e);
    }
    return kExitOk;
}
