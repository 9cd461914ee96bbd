#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctrldep::cli {

/// Bad flags or input. Maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs the ctrldep command line. `args` excludes the program name. Returns
/// the process exit status.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

struct BenchRecord {
    std::string algo;
    std::string shape;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::uint64_t seed = 0;
    std::size_t reps = 0;
    double mean_us = 0;
    double min_us = 0;
};

struct BenchConfig {
    std::string shape = "random";
    std::vector<std::size_t> nodes{500};
    std::vector<std::size_t> edges{750};
    std::size_t depth = 4;
    std::size_t reps = 10;
    std::vector<std::string> algos;
    std::uint64_t seed = 1;
};

/// One record per (algorithm, graph) cell. Cells iterate nodes, then edges,
/// then algorithms. Throws UsageError on an unknown shape or algorithm.
std::vector<BenchRecord> run_bench(const BenchConfig &config);

std::string bench_csv_header();
std::string to_csv_row(const BenchRecord &r);

/// Parses "a..b:step" or a single number.
std::vector<std::size_t> parse_sweep(const std::string &text);

} // namespace ctrldep::cli
