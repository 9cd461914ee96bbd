#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctrldep/cfg.hpp"
#include "ctrldep/cli.hpp"
#include "ctrldep/relations.hpp"

namespace ctrldep::cli {

enum class RelationKind { ntscd, dod, closure };

/// Throws UsageError for an unknown id.
RelationKind relation_kind(std::string_view algo);
const std::vector<std::string> &algorithm_ids();

struct AlgoOptions {
    std::string policy = "fifo";
    std::vector<std::string> criterion;
    std::string start;
    bool allow_unreachable = false;
};

struct AlgoResult {
    std::optional<NtscdRelation> ntscd;
    std::optional<DodRelation> dod;
    std::optional<NodeSet> closure;
    bool best_effort = false;
    std::int64_t time_us = 0;
};

/// Only the algorithm call itself is timed. Throws UsageError when options
/// name unknown labels; ClosureError propagates.
AlgoResult run_algorithm(const Cfg &g, std::string_view algo, const AlgoOptions &options);

std::string report_json(const Cfg &g, std::string_view algo, const AlgoResult &result);

std::vector<std::string> split_list(const std::string &text);

int check_command(std::size_t count, std::size_t max_nodes, std::uint64_t seed, const std::string &input,
                  const std::string &format, const std::string &mismatch_dir, std::ostream &out,
                  std::ostream &err);

} // namespace ctrldep::cli
