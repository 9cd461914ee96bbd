#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>

#include "ctrldep/cfg.hpp"

namespace ctrldep {

enum class GraphFormat { json, edgelist };

/// "json" or "edgelist"; throws std::invalid_argument otherwise.
GraphFormat parse_format(std::string_view name);

/// Malformed or invalid graph text. `line` and `column` are 1-based and zero
/// when unknown; `where` names the offending JSON element when positions are
/// not available.
class ParseError : public CfgError {
public:
    ParseError(const std::string &message, std::size_t line, std::size_t column);
    ParseError(const std::string &message, std::string where);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string &where() const { return where_; }

private:
    std::size_t line_ = 0;
    std::size_t column_ = 0;
    std::string where_;
};

/*
 * JSON:      {"nodes": ["a", "b"], "edges": [["a", "b"]]}
 * Edge list: one "src dst" pair per line; a line with a single token declares
 *            a node; nodes are otherwise declared on first appearance; '#'
 *            starts a comment.
 *
 * Edge order of the text is preserved.
 */
Cfg parse_cfg(std::string_view text, GraphFormat format);
Cfg parse_cfg(std::istream &in, GraphFormat format);
Cfg load_cfg(const std::string &path, GraphFormat format);

/// parse_cfg(serialize_cfg(g, f), f) == g.
std::string serialize_cfg(const Cfg &g, GraphFormat format);

} // namespace ctrldep
