#include <fstream>

#include <CLI11.hpp>

#include "ctrldep/cfg_io.hpp"
#include "ctrldep/closures.hpp"
#include "ctrldep/generators.hpp"
#include "ctrldep/oracle.hpp"
#include "internal.hpp"

namespace ctrldep::cli {

namespace {

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    file << text;
    if (!file) {
        throw UsageError("cannot write '" + path + "'");
    }
}

template <typename Tuple>
void print_difference(const std::vector<Tuple> &left, const std::vector<Tuple> &right, std::ostream &out,
                      bool &differ) {
    std::vector<Tuple> only_left;
    std::vector<Tuple> only_right;
    std::set_difference(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(only_left));
    std::set_difference(right.begin(), right.end(), left.begin(), left.end(), std::back_inserter(only_right));
    auto show = [](const auto &t) {
        if constexpr (std::is_same_v<Tuple, std::string>) {
            return t;
        } else {
            return format_tuple(t);
        }
    };
    for (const auto &t : only_right) {
        out << "+" << show(t) << "\n";
    }
    for (const auto &t : only_left) {
        out << "-" << show(t) << "\n";
    }
    differ = !only_left.empty() || !only_right.empty();
}

struct InputFlags {
    std::string input;
    std::string format = "json";

    void attach(CLI::App &cmd) {
        cmd.add_option("--input", input, "graph file")->required();
        cmd.add_option("--format", format, "json or edgelist");
    }
    Cfg load() const { return load_cfg(input, parse_format(format)); }
};

void attach_algo_options(CLI::App &cmd, AlgoOptions &o, std::string &criterion) {
    cmd.add_option("--policy", o.policy, "ntscd-rang worklist: fifo, lifo or order:a,b,...");
    cmd.add_option("--criterion", criterion, "comma-separated node labels (cc)");
    cmd.add_option("--start", o.start, "start node (cc)");
    cmd.add_flag("--allow-unreachable", o.allow_unreachable, "best-effort cc when some node is unreachable");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Strong control dependence on control flow graphs", "ctrldep"};
    app.require_subcommand(1);

    // analyze
    auto *analyze = app.add_subcommand("analyze", "run one algorithm and print a JSON report");
    InputFlags analyze_in;
    analyze_in.attach(*analyze);
    std::string analyze_algo;
    std::string analyze_output = "-";
    AlgoOptions analyze_opts;
    std::string analyze_criterion;
    analyze->add_option("--algo", analyze_algo)->required();
    analyze->add_option("--output", analyze_output, "report file, - for stdout");
    attach_algo_options(*analyze, analyze_opts, analyze_criterion);

    // diff
    auto *diff = app.add_subcommand("diff", "compare the relations of two algorithms");
    InputFlags diff_in;
    diff_in.attach(*diff);
    std::vector<std::string> diff_algos;
    AlgoOptions diff_opts;
    std::string diff_criterion;
    diff->add_option("--algo", diff_algos, "give twice")->required();
    attach_algo_options(*diff, diff_opts, diff_criterion);

    // gen
    auto *gen = app.add_subcommand("gen", "generate a graph");
    std::string gen_shape;
    std::size_t gen_nodes = 0;
    std::optional<std::size_t> gen_edges;
    std::size_t gen_depth = 4;
    std::uint64_t gen_seed = 1;
    bool gen_rooted = false;
    std::string gen_format = "json";
    std::string gen_output = "-";
    gen->add_option("--shape", gen_shape, "random, reducible, cycle-fed or dod-worst")->required();
    gen->add_option("--nodes", gen_nodes);
    gen->add_option("--edges", gen_edges);
    gen->add_option("--depth", gen_depth, "nesting depth (reducible)");
    gen->add_option("--seed", gen_seed);
    gen->add_flag("--rooted", gen_rooted, "random: every node reachable from \"0\"");
    gen->add_option("--format", gen_format);
    gen->add_option("--output", gen_output);

    // check
    auto *check = app.add_subcommand("check", "differential test against the brute-force oracle");
    std::size_t check_count = 100;
    std::size_t check_max_nodes = 12;
    std::uint64_t check_seed = 1;
    std::string check_input;
    std::string check_format = "json";
    std::string check_dir = ".";
    check->add_option("--count", check_count);
    check->add_option("--max-nodes", check_max_nodes);
    check->add_option("--seed", check_seed);
    check->add_option("--input", check_input, "check one graph instead of random ones");
    check->add_option("--format", check_format);
    check->add_option("--mismatch-dir", check_dir, "where offending graphs are written");

    // bench
    auto *bench = app.add_subcommand("bench", "time algorithms over a size sweep");
    BenchConfig bench_cfg;
    std::string bench_nodes = "500";
    std::string bench_edges = "750";
    std::string bench_algos;
    std::string bench_csv = "-";
    bench->add_option("--shape", bench_cfg.shape, "random, reducible, cycle-fed or dod-worst");
    bench->add_option("--nodes", bench_nodes, "N or A..B:STEP");
    bench->add_option("--edges", bench_edges, "N or A..B:STEP");
    bench->add_option("--depth", bench_cfg.depth);
    bench->add_option("--reps", bench_cfg.reps);
    bench->add_option("--algos", bench_algos, "comma-separated algorithm ids")->required();
    bench->add_option("--seed", bench_cfg.seed);
    bench->add_option("--csv", bench_csv, "output file, - for stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) {
            analyze_opts.criterion = split_list(analyze_criterion);
            auto g = analyze_in.load();
            auto result = run_algorithm(g, analyze_algo, analyze_opts);
            if (result.best_effort) {
                err << "warning: some nodes are unreachable from start; closure may not be minimal\n";
            }
            write_output(analyze_output, report_json(g, analyze_algo, result), out);
            return 0;
        }
        if (diff->parsed()) {
            if (diff_algos.size() != 2) {
                throw UsageError("diff needs exactly two --algo options");
            }
            auto kind = relation_kind(diff_algos[0]);
            if (relation_kind(diff_algos[1]) != kind) {
                throw UsageError("'" + diff_algos[0] + "' and '" + diff_algos[1] +
                                 "' produce different relation kinds");
            }
            diff_opts.criterion = split_list(diff_criterion);
            auto g = diff_in.load();
            auto a = run_algorithm(g, diff_algos[0], diff_opts);
            auto b = run_algorithm(g, diff_algos[1], diff_opts);
            bool differ = false;
            if (kind == RelationKind::ntscd) {
                print_difference(labelled(g, *a.ntscd), labelled(g, *b.ntscd), out, differ);
            } else if (kind == RelationKind::dod) {
                print_difference(labelled(g, *a.dod), labelled(g, *b.dod), out, differ);
            } else {
                print_difference(labelled(g, *a.closure), labelled(g, *b.closure), out, differ);
            }
            return differ ? 1 : 0;
        }
        if (gen->parsed()) {
            auto format = parse_format(gen_format);
            Cfg g;
            if (gen_shape == "random") {
                if (!gen_edges) {
                    throw UsageError("random shape needs --edges");
                }
                g = gen_rooted ? random_rooted_cfg(gen_nodes, *gen_edges, gen_seed)
                               : random_cfg(gen_nodes, *gen_edges, gen_seed);
            } else if (gen_shape == "reducible") {
                g = random_reducible_cfg(gen_depth, gen_seed);
            } else if (gen_shape == "cycle-fed") {
                g = random_cycle_fed_cfg(gen_nodes, gen_seed);
            } else if (gen_shape == "dod-worst") {
                g = worst_case_dod_cfg(gen_nodes);
            } else {
                throw UsageError("unknown shape '" + gen_shape + "'");
            }
            write_output(gen_output, serialize_cfg(g, format), out);
            return 0;
        }
        if (check->parsed()) {
            return check_command(check_count, check_max_nodes, check_seed, check_input, check_format, check_dir,
                                 out, err);
        }
        bench_cfg.nodes = parse_sweep(bench_nodes);
        bench_cfg.edges = parse_sweep(bench_edges);
        bench_cfg.algos = split_list(bench_algos);
        std::string csv = bench_csv_header() + "\n";
        for (const auto &r : run_bench(bench_cfg)) {
            csv += to_csv_row(r) + "\n";
        }
        write_output(bench_csv, csv, out);
        return 0;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CfgError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const oracle::BudgetExceeded &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ClosureError &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace ctrldep::cli
