#include <chrono>
#include <sstream>

#include <json.hpp>

#include "ctrldep/closures.hpp"
#include "ctrldep/dod.hpp"
#include "ctrldep/ntscd.hpp"
#include "internal.hpp"

namespace ctrldep::cli {

namespace {

NodeIndex resolve(const Cfg &g, const std::string &label, const char *what) {
    auto n = g.find(label);
    if (!n) {
        throw UsageError(std::string(what) + ": unknown node '" + label + "'");
    }
    return *n;
}

WorklistPolicy parse_policy(const Cfg &g, const std::string &text) {
    if (text == "fifo") {
        return WorklistPolicy::fifo();
    }
    if (text == "lifo") {
        return WorklistPolicy::lifo();
    }
    if (text.starts_with("order:")) {
        std::vector<NodeIndex> order;
        for (const auto &label : split_list(text.substr(6))) {
            order.push_back(resolve(g, label, "--policy"));
        }
        return WorklistPolicy::explicit_order(std::move(order));
    }
    throw UsageError("--policy must be fifo, lifo or order:a,b,...; got '" + text + "'");
}

} // namespace

const std::vector<std::string> &algorithm_ids() {
    static const std::vector<std::string> ids{"ntscd-new",  "ntscd-vp",          "ntscd-rang",
                                              "ntscd-rang-fixed", "dod-new", "dod-formula",
                                              "dod-formula-fixed", "cc"};
    return ids;
}

RelationKind relation_kind(std::string_view algo) {
    if (algo.starts_with("ntscd-")) {
        for (const auto &id : algorithm_ids()) {
            if (id == algo) {
                return RelationKind::ntscd;
            }
        }
    }
    if (algo == "dod-new" || algo == "dod-formula" || algo == "dod-formula-fixed") {
        return RelationKind::dod;
    }
    if (algo == "cc") {
        return RelationKind::closure;
    }
    throw UsageError("unknown algorithm '" + std::string(algo) + "'");
}

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

AlgoResult run_algorithm(const Cfg &g, std::string_view algo, const AlgoOptions &options) {
    relation_kind(algo);
    AlgoResult result;
    using clock = std::chrono::steady_clock;
    auto timed = [&](auto &&fn) {
        auto t0 = clock::now();
        fn();
        result.time_us = std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0).count();
    };

    if (algo == "ntscd-new") {
        timed([&] { result.ntscd = ntscd_new(g); });
    } else if (algo == "ntscd-vp") {
        timed([&] { result.ntscd = ntscd_from_vp(g, vp_sets(g)); });
    } else if (algo == "ntscd-rang") {
        auto policy = parse_policy(g, options.policy);
        timed([&] { result.ntscd = ntscd_ranganath(g, policy); });
    } else if (algo == "ntscd-rang-fixed") {
        timed([&] { result.ntscd = ntscd_ranganath_fixed(g); });
    } else if (algo == "dod-new") {
        timed([&] { result.dod = dod_new(g); });
    } else if (algo == "dod-formula") {
        timed([&] { result.dod = dod_formula(g, FormulaVariant::original); });
    } else if (algo == "dod-formula-fixed") {
        timed([&] { result.dod = dod_formula(g, FormulaVariant::fixed); });
    } else {
        if (options.criterion.empty()) {
            throw UsageError("cc needs --criterion");
        }
        if (options.start.empty()) {
            throw UsageError("cc needs --start");
        }
        ClosureSpec spec{NodeSet(g.size()), resolve(g, options.start, "--start"), options.allow_unreachable};
        for (const auto &label : options.criterion) {
            spec.w.insert(resolve(g, label, "--criterion"));
        }
        timed([&] {
            auto closure = strong_closure(g, spec);
            result.closure = std::move(closure.nodes);
            result.best_effort = closure.best_effort;
        });
    }
    return result;
}

std::string report_json(const Cfg &g, std::string_view algo, const AlgoResult &result) {
    nlohmann::ordered_json report;
    report["graph"] = {{"nodes", g.size()}, {"edges", g.edge_count()}, {"predicates", predicates(g).size()}};
    report["algo"] = algo;
    if (result.ntscd) {
        report["ntscd"] = labelled(g, *result.ntscd);
    }
    if (result.dod) {
        report["dod"] = labelled(g, *result.dod);
    }
    if (result.closure) {
        report["closure"] = labelled(g, *result.closure);
    }
    report["time_us"] = result.time_us;
    return report.dump() + "\n";
}

} // namespace ctrldep::cli
