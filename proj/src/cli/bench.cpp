#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <limits>

#include "ctrldep/dod.hpp"
#include "ctrldep/generators.hpp"
#include "internal.hpp"

namespace ctrldep::cli {

namespace {

std::size_t parse_size(std::string_view text, const std::string &whole) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError("bad sweep '" + whole + "'; expected N or A..B:STEP");
    }
    return value;
}

Cfg make_graph(const BenchConfig &c, std::size_t nodes, std::size_t edges) {
    try {
        if (c.shape == "random") {
            return random_cfg(nodes, edges, c.seed);
        }
        if (c.shape == "reducible") {
            return random_reducible_cfg(c.depth, c.seed);
        }
        if (c.shape == "cycle-fed") {
            return random_cycle_fed_cfg(nodes, c.seed);
        }
        if (c.shape == "dod-worst") {
            return worst_case_dod_cfg(nodes);
        }
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown shape '" + c.shape + "'");
}

} // namespace

std::vector<std::size_t> parse_sweep(const std::string &text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        return {parse_size(text, text)};
    }
    auto colon = text.find(':', dots);
    std::string_view view(text);
    auto lo = parse_size(view.substr(0, dots), text);
    auto hi = parse_size(view.substr(dots + 2, colon == std::string::npos ? std::string::npos : colon - dots - 2),
                         text);
    std::size_t step = colon == std::string::npos ? 1 : parse_size(view.substr(colon + 1), text);
    if (step == 0 || hi < lo) {
        throw UsageError("bad sweep '" + text + "'; need A <= B and STEP > 0");
    }
    std::vector<std::size_t> out;
    for (auto v = lo; v <= hi; v += step) {
        out.push_back(v);
    }
    return out;
}

std::vector<BenchRecord> run_bench(const BenchConfig &config) {
    if (config.algos.empty()) {
        throw UsageError("--algos is empty");
    }
    if (config.reps == 0) {
        throw UsageError("--reps must be positive");
    }
    for (const auto &a : config.algos) {
        if (relation_kind(a) == RelationKind::closure) {
            throw UsageError("cc cannot be benchmarked");
        }
    }

    std::vector<BenchRecord> records;
    for (auto nodes : config.nodes) {
        for (auto edges : config.edges) {
            const auto g = make_graph(config, nodes, edges);
            for (const auto &algo : config.algos) {
                double total = 0;
                double best = std::numeric_limits<double>::infinity();
                for (std::size_t r = 0; r < config.reps; ++r) {
                    auto t = static_cast<double>(run_algorithm(g, algo, {}).time_us);
                    total += t;
                    best = std::min(best, t);
                }
                records.push_back({algo, config.shape, g.size(), g.edge_count(), config.seed, config.reps,
                                   total / static_cast<double>(config.reps), best});
            }
            if (config.shape != "random") {
                break; // edges do not parameterize the other shapes
            }
        }
        if (config.shape == "reducible") {
            break;
        }
    }
    return records;
}

std::string bench_csv_header() { return "algo,shape,nodes,edges,seed,reps,mean_us,min_us"; }

std::string to_csv_row(const BenchRecord &r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f,%.1f", r.mean_us, r.min_us);
    return r.algo + "," + r.shape + "," + std::to_string(r.nodes) + "," + std::to_string(r.edges) + "," +
           std::to_string(r.seed) + "," + std::to_string(r.reps) + "," + buf;
}

} // namespace ctrldep::cli
