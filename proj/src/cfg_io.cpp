#include "ctrldep/cfg_io.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace ctrldep {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string describe(const std::string &message, std::size_t line, std::size_t column) {
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << message;
    return os.str();
}

// nlohmann reports a byte offset; translate it to line/column.
std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Cfg parse_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        auto [line, column] = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed JSON", line, column);
    }

    if (!doc.is_object()) {
        throw ParseError("top-level value must be an object", "$");
    }
    if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
        throw ParseError("missing array \"nodes\"", "$.nodes");
    }
    if (doc.contains("edges") && !doc["edges"].is_array()) {
        throw ParseError("\"edges\" must be an array", "$.edges");
    }

    CfgBuilder builder;
    const auto &nodes = doc["nodes"];
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto where = "$.nodes[" + std::to_string(i) + "]";
        if (!nodes[i].is_string()) {
            throw ParseError("node label must be a string", where);
        }
        try {
            builder.add_node(nodes[i].get<std::string>());
        } catch (const CfgError &e) {
            throw ParseError(e.what(), where);
        }
    }

    if (!doc.contains("edges")) {
        return std::move(builder).build();
    }
    const auto &edges = doc["edges"];
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto where = "$.edges[" + std::to_string(i) + "]";
        const auto &e = edges[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
            throw ParseError("edge must be a pair of node labels", where);
        }
        try {
            builder.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
        } catch (const CfgError &err) {
            throw ParseError(err.what(), where);
        }
    }
    return std::move(builder).build();
}

Cfg parse_edgelist(std::string_view text) {
    CfgBuilder builder;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }

        std::vector<std::pair<std::string_view, std::size_t>> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
            auto begin = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
            if (i > begin) {
                tokens.emplace_back(line.substr(begin, i - begin), begin + 1);
            }
        }

        try {
            if (tokens.size() == 1) {
                builder.add_node(std::string(tokens[0].first));
            } else if (tokens.size() == 2) {
                auto src = builder.node(tokens[0].first);
                auto dst = builder.node(tokens[1].first);
                builder.add_edge(src, dst);
            } else if (tokens.size() > 2) {
                throw ParseError("expected 'src dst'", line_no, tokens[2].second);
            }
        } catch (const ParseError &) {
            throw;
        } catch (const CfgError &e) {
            throw ParseError(e.what(), line_no, tokens.front().second);
        }
        if (end == text.size()) {
            break;
        }
    }
    return std::move(builder).build();
}

} // namespace

ParseError::ParseError(const std::string &message, std::size_t line, std::size_t column)
    : CfgError(describe(message, line, column)), line_(line), column_(column) {}

ParseError::ParseError(const std::string &message, std::string where)
    : CfgError(where + ": " + message), where_(std::move(where)) {}

GraphFormat parse_format(std::string_view name) {
    if (name == "json") {
        return GraphFormat::json;
    }
    if (name == "edgelist") {
        return GraphFormat::edgelist;
    }
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

Cfg parse_cfg(std::string_view text, GraphFormat format) {
    return format == GraphFormat::json ? parse_json(text) : parse_edgelist(text);
}

Cfg parse_cfg(std::istream &in, GraphFormat format) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_cfg(text, format);
}

Cfg load_cfg(const std::string &path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw CfgError("cannot open '" + path + "'");
    }
    return parse_cfg(in, format);
}

std::string serialize_cfg(const Cfg &g, GraphFormat format) {
    if (format == GraphFormat::json) {
        ordered_json doc;
        doc["nodes"] = g.labels();
        auto edges = ordered_json::array();
        for (auto [src, dst] : g.edges()) {
            edges.push_back(ordered_json::array({g.label(src), g.label(dst)}));
        }
        doc["edges"] = std::move(edges);
        return doc.dump();
    }

    // Declare every node first so that isolated nodes and node order survive.
    std::ostringstream os;
    for (const auto &label : g.labels()) {
        bool bad = label.empty() || label.find('#') != std::string::npos;
        for (char c : label) {
            bad = bad || std::isspace(static_cast<unsigned char>(c));
        }
        if (bad) {
            throw CfgError("label '" + label + "' cannot be written as an edge list");
        }
        os << label << '\n';
    }
    for (auto [src, dst] : g.edges()) {
        os << g.label(src) << ' ' << g.label(dst) << '\n';
    }
    return os.str();
}

} // namespace ctrldep
